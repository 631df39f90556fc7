#ifndef NLKG_QUADRATURE_HPP
#define NLKG_QUADRATURE_HPP

#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

namespace nlkg {

/// Composite Simpson rule over equally spaced samples with spacing h.
/// An odd panel count is handled with a 3/8 rule on the final three panels,
/// keeping the O(h^4) order. Requires at least 4 samples.
double integrate_samples(std::span<const double> f, double h);

/// Composite Simpson rule for a callable on [a, b] with the given number
/// of panels (>= 3).
template <std::invocable<double> F>
double integrate_function(F&& f, double a, double b, std::size_t panels) {
    const double h = (b - a) / static_cast<double>(panels);
    // Evaluate on nodes and reuse the sample rule.
    std::size_t n = panels + 1;
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) {
        vals[i] = f(i == panels ? b : a + h * static_cast<double>(i));
    }
    return integrate_samples(vals, h);
}

}  // namespace nlkg

#endif
