#pragma once

#include <complex>
#include <vector>

namespace bergman {

using Complex = std::complex<double>;

/// Dense univariate polynomial coefficients; index equals degree, so
/// index 0 is the constant term. An empty vector is the zero polynomial.
using Poly = std::vector<Complex>;

/// Cauchy product of two coefficient sequences. Empty input yields empty
/// output; otherwise the result has size p.size() + q.size() - 1.
Poly poly_mul(const Poly& p, const Poly& q);

/// Coefficients of p'.
Poly poly_derivative(const Poly& p);

/// Horner evaluation.
Complex poly_eval(const Poly& p, Complex z);

/// Coefficients multiplied by a scalar.
Poly poly_scale(const Poly& p, Complex s);

}  // namespace bergman
