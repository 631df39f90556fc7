#include "nlkg/quadrature.hpp"

#include <stdexcept>

namespace nlkg {

double integrate_samples(std::span<const double> f, double h) {
    const std::size_t n = f.size();
    if (n < 4) throw std::invalid_argument("integrate_samples needs at least 4 samples");
    std::size_t panels = n - 1;
    double total = 0.0;
    std::size_t last = panels;
    if (panels % 2 != 0) {
        // 3/8 rule on the trailing three panels keeps fourth order.
        last = panels - 3;
        total += 3.0 * h / 8.0 *
                 (f[last] + 3.0 * f[last + 1] + 3.0 * f[last + 2] + f[last + 3]);
    }
    if (last > 0) {
        double odd = 0.0, even = 0.0;
        for (std::size_t j = 1; j < last; j += 2) odd += f[j];
        for (std::size_t j = 2; j < last; j += 2) even += f[j];
        total += h / 3.0 * (f[0] + 4.0 * odd + 2.0 * even + f[last]);
    }
    return total;
}

}  // namespace nlkg
