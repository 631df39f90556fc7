#ifndef NLKG_VERSION_HPP
#define NLKG_VERSION_HPP

namespace nlkg {

inline constexpr const char* version = "0.1.0";

}

#endif
