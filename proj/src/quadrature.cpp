#include "bergman/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bergman {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n,
                                                                   double a,
                                                                   double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
    std::vector<double> x(static_cast<std::size_t>(n));
    std::vector<double> w(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n
        double t = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                const double kk = static_cast<double>(k);
                const double p2 = ((2.0 * kk - 1.0) * t * p1 - (kk - 1.0) * p0) / kk;
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        const double weight = 2.0 / ((1.0 - t * t) * dp * dp);
        x[static_cast<std::size_t>(i)] = t;
        w[static_cast<std::size_t>(i)] = weight;
        x[static_cast<std::size_t>(n - 1 - i)] = -t;
        w[static_cast<std::size_t>(n - 1 - i)] = weight;
    }
    const double mid = 0.5 * (a + b);
    const double halfwidth = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] = mid - halfwidth * x[static_cast<std::size_t>(i)];
        w[static_cast<std::size_t>(i)] *= halfwidth;
    }
    return {std::move(x), std::move(w)};
}

}  // namespace bergman
