#pragma once

#include <span>
#include <vector>

#include "bergman/polynomial.hpp"

namespace bergman {

/// Winding number of the closed polygon (vertices in order, implicitly
/// closed) about the point p, by signed crossings of the ray x > p.x.
int winding_number(std::span<const Complex> polygon, Complex p);

/// True if any two non-adjacent edges of the closed polygon intersect.
/// O(M^2); intended for moderate vertex counts.
bool polygon_self_intersects(std::span<const Complex> polygon);

}  // namespace bergman
