#include "bergman/polynomial.hpp"

namespace bergman {

Poly poly_mul(const Poly& p, const Poly& q) {
    if (p.empty() || q.empty()) return {};
    Poly r(p.size() + q.size() - 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            r[i + j] += p[i] * q[j];
        }
    }
    return r;
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly r(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) {
        r[k - 1] = static_cast<double>(k) * p[k];
    }
    return r;
}

Complex poly_eval(const Poly& p, Complex z) {
    Complex y(0.0, 0.0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        y = y * z + *it;
    }
    return y;
}

Poly poly_scale(const Poly& p, Complex s) {
    Poly r(p);
    for (auto& c : r) c *= s;
    return r;
}

}  // namespace bergman
