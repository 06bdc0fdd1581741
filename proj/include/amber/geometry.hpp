#pragma once

#include <array>
#include <vector>

#include "amber/rng.hpp"
#include "amber/vec2.hpp"

namespace amber {

// Simple closed polygon, counter-clockwise, no holes.
struct Polygon2 {
  std::vector<Vec2> vertices;

  double signed_area() const;
  // Axis-aligned bounding box as (min, max).
  std::pair<Vec2, Vec2> bbox() const;
};

struct Mat2 {
  // Row-major: [m00 m01; m10 m11].
  double m00 = 0, m01 = 0, m10 = 0, m11 = 0;

  double det() const { return m00 * m11 - m01 * m10; }
};

// Three-component Gaussian mixture used as the load function of the Poisson
// problem. Weights are normalized, means lie strictly inside the domain, and
// covariances are rotations of diagonal matrices with entries in [1e-4, 1e-3].
struct GmmLoad {
  std::array<double, 3> weights{};
  std::array<Vec2, 3> means{};
  std::array<Mat2, 3> covariances{};
};

// L-shaped domain: the unit square minus the axis-aligned rectangle spanning
// from a corner point p0 to (1, 1). p0 components are drawn from U(0.2, 0.95).
Polygon2 sample_lshape(RngState& rng);
Polygon2 make_lshape(Vec2 p0);

GmmLoad sample_gmm_load(RngState& rng, const Polygon2& domain);

double eval_load(const GmmLoad& load, Vec2 p);

// Boundary-inclusive containment: points within 1e-12 of the boundary count
// as inside.
bool contains(const Polygon2& domain, Vec2 p);

// Distance from p to the polygon boundary.
double boundary_distance(const Polygon2& domain, Vec2 p);

}  // namespace amber
