#pragma once

#include <utility>
#include <vector>

namespace bergman {

/// Gauss-Legendre nodes and weights on [a, b]. Exact for polynomials of
/// degree <= 2n - 1.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n,
                                                                   double a,
                                                                   double b);

}  // namespace bergman
