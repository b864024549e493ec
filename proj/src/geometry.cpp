#include "bergman/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace bergman {

int winding_number(std::span<const Complex> polygon, Complex p) {
    const std::size_t m = polygon.size();
    int w = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const Complex a = polygon[i];
        const Complex b = polygon[(i + 1) % m];
        // half-open rule in y avoids double-counting vertices
        const bool up = a.imag() <= p.imag() && b.imag() > p.imag();
        const bool down = b.imag() <= p.imag() && a.imag() > p.imag();
        if (!up && !down) continue;
        const double t = (p.imag() - a.imag()) / (b.imag() - a.imag());
        const double xc = a.real() + t * (b.real() - a.real());
        if (xc > p.real()) w += up ? 1 : -1;
    }
    return w;
}

namespace {

int orient(Complex a, Complex b, Complex c) {
    const double v = (b.real() - a.real()) * (c.imag() - a.imag()) -
                     (b.imag() - a.imag()) * (c.real() - a.real());
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

bool on_segment(Complex a, Complex b, Complex c) {
    return std::min(a.real(), b.real()) <= c.real() &&
           c.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= c.imag() &&
           c.imag() <= std::max(a.imag(), b.imag());
}

bool segments_intersect(Complex p1, Complex p2, Complex q1, Complex q2) {
    const int o1 = orient(p1, p2, q1);
    const int o2 = orient(p1, p2, q2);
    const int o3 = orient(q1, q2, p1);
    const int o4 = orient(q1, q2, p2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

}  // namespace

bool polygon_self_intersects(std::span<const Complex> polygon) {
    const std::size_t m = polygon.size();
    if (m < 4) return false;
    for (std::size_t i = 0; i < m; ++i) {
        const Complex a1 = polygon[i];
        const Complex a2 = polygon[(i + 1) % m];
        for (std::size_t j = i + 2; j < m; ++j) {
            if (i == 0 && j == m - 1) continue;  // adjacent around the wrap
            const Complex b1 = polygon[j];
            const Complex b2 = polygon[(j + 1) % m];
            if (segments_intersect(a1, a2, b1, b2)) return true;
        }
    }
    return false;
}

}  // namespace bergman
