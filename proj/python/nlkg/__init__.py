from nlkg._core import *  # noqa: F401,F403

from nlkg._core import __version__  # noqa: F401
