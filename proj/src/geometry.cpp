#include "amber/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace amber {

namespace {
constexpr double kBoundaryTol = 1e-12;
}

double Polygon2::signed_area() const {
  double twice = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = vertices[i];
    const Vec2 b = vertices[(i + 1) % n];
    twice += a.cross(b);
  }
  return 0.5 * twice;
}

std::pair<Vec2, Vec2> Polygon2::bbox() const {
  Vec2 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
  Vec2 hi{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
  for (const Vec2& v : vertices) {
    lo.x = std::min(lo.x, v.x);
    lo.y = std::min(lo.y, v.y);
    hi.x = std::max(hi.x, v.x);
    hi.y = std::max(hi.y, v.y);
  }
  return {lo, hi};
}

Polygon2 make_lshape(Vec2 p0) {
  Polygon2 poly;
  poly.vertices = {{0, 0}, {1, 0}, {1, p0.y}, {p0.x, p0.y}, {p0.x, 1}, {0, 1}};
  return poly;
}

Polygon2 sample_lshape(RngState& rng) {
  const double px = rng.uniform(0.2, 0.95);
  const double py = rng.uniform(0.2, 0.95);
  return make_lshape({px, py});
}

double boundary_distance(const Polygon2& domain, Vec2 p) {
  double best = std::numeric_limits<double>::max();
  const std::size_t n = domain.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = domain.vertices[i];
    const Vec2 b = domain.vertices[(i + 1) % n];
    best = std::min(best, point_segment_dist2(p, a, b));
  }
  return std::sqrt(best);
}

bool contains(const Polygon2& domain, Vec2 p) {
  if (boundary_distance(domain, p) <= kBoundaryTol) return true;
  // Even-odd ray cast along +x.
  bool inside = false;
  const std::size_t n = domain.vertices.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = domain.vertices[i];
    const Vec2 b = domain.vertices[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

GmmLoad sample_gmm_load(RngState& rng, const Polygon2& domain) {
  GmmLoad load;
  for (int c = 0; c < 3; ++c) {
    Vec2 mean;
    bool found = false;
    for (int attempt = 0; attempt < 10000; ++attempt) {
      mean = {rng.uniform(0.1, 0.9), rng.uniform(0.1, 0.9)};
      if (contains(domain, mean) && boundary_distance(domain, mean) > kBoundaryTol) {
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("sample_gmm_load: no interior mean found (degenerate domain)");
    load.means[c] = mean;
  }
  const double log_lo = std::log(1e-4);
  const double log_hi = std::log(1e-3);
  for (int c = 0; c < 3; ++c) {
    const double a = std::exp(rng.uniform(log_lo, log_hi));
    const double b = std::exp(rng.uniform(log_lo, log_hi));
    const double theta = rng.uniform(0.0, M_PI);
    const double ct = std::cos(theta), st = std::sin(theta);
    // R diag(a,b) R^T
    load.covariances[c] = {ct * ct * a + st * st * b, ct * st * (a - b),
                           ct * st * (a - b), st * st * a + ct * ct * b};
  }
  double total = 0.0;
  for (int c = 0; c < 3; ++c) {
    load.weights[c] = std::exp(rng.normal()) + 1.0;
    total += load.weights[c];
  }
  for (int c = 0; c < 3; ++c) load.weights[c] /= total;
  return load;
}

double eval_load(const GmmLoad& load, Vec2 p) {
  double value = 0.0;
  for (int c = 0; c < 3; ++c) {
    const Mat2& cov = load.covariances[c];
    const double det = cov.det();
    const Vec2 d = p - load.means[c];
    // Inverse of a 2x2 applied to d.
    const double qx = (cov.m11 * d.x - cov.m01 * d.y) / det;
    const double qy = (-cov.m10 * d.x + cov.m00 * d.y) / det;
    const double quad = d.x * qx + d.y * qy;
    value += load.weights[c] * std::exp(-0.5 * quad) / (2.0 * M_PI * std::sqrt(det));
  }
  return value;
}

}  // namespace amber
