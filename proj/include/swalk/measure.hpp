#pragma once

// Observables of a walk: finding probability, time averages, radial variance
// and supports.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "swalk/complex.hpp"
#include "swalk/walk.hpp"

namespace swalk {

inline constexpr double kNormTolerance = 1e-9;

class NormalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// μ_m over triangles, indexed by TriangleId.
struct ProbabilityDistribution {
  std::size_t step = 0;
  std::vector<double> mu;

  double total() const {
    double s = 0.0;
    for (double x : mu) s += x;
    return s;
  }
};

/// μ(|σ|) = Σ over the six orientations of |f(σ)|^2.  Rejects states whose
/// squared norm is off by more than `tol`.
inline ProbabilityDistribution finding_probability(const StateVector& f, std::size_t step = 0,
                                                   double tol = kNormTolerance) {
  if (f.size() % 6 != 0) throw std::invalid_argument("state dimension is not a multiple of 6");
  ProbabilityDistribution p;
  p.step = step;
  p.mu.resize(f.size() / 6);
  const auto a = f.amplitudes();
  for (std::size_t t = 0; t < p.mu.size(); ++t) {
    double s = 0.0;
    for (std::size_t l = 0; l < 6; ++l) s += std::norm(a[6 * t + l]);
    p.mu[t] = s;
  }
  const double total = p.total();
  if (std::abs(total - 1.0) > tol) {
    throw NormalizationError("state is not normalized: sum of probabilities = " + std::to_string(total));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Time-averaged probability
// ---------------------------------------------------------------------------

/// Running Cesàro sums (1/T) Σ_{m<T} μ_m at a fixed set of triangles.
class TimeAverager {
 public:
  explicit TimeAverager(std::vector<TriangleId> targets)
      : targets_(std::move(targets)), sums_(targets_.size(), 0.0) {}

  void add(const ProbabilityDistribution& p) {
    for (std::size_t i = 0; i < targets_.size(); ++i) sums_[i] += p.mu.at(targets_[i]);
    ++count_;
  }

  /// Direct update from a state, skipping the full distribution.
  void add(const StateVector& f) {
    for (std::size_t i = 0; i < targets_.size(); ++i) {
      double s = 0.0;
      for (int l = 0; l < 6; ++l) s += std::norm(f[6 * targets_[i] + l]);
      sums_[i] += s;
    }
    ++count_;
  }

  std::size_t count() const { return count_; }
  const std::vector<TriangleId>& targets() const { return targets_; }

  std::vector<double> mean() const {
    if (count_ == 0) throw std::logic_error("time average over zero steps");
    std::vector<double> out(sums_.size());
    for (std::size_t i = 0; i < sums_.size(); ++i) out[i] = sums_[i] / static_cast<double>(count_);
    return out;
  }

 private:
  std::vector<TriangleId> targets_;
  std::vector<double> sums_;
  std::size_t count_ = 0;
};

struct TimeAverageSample {
  std::size_t horizon = 0;  // T
  TriangleId target = 0;
  double mu_bar = 0.0;
};

/**
 * μ̄_T at each target for every T in `horizons` (ascending, each ≥ 1).
 * Evolves up to the largest horizon; the state at m = T is never used.
 */
inline std::vector<TimeAverageSample> time_averaged_probability(const WalkOperator& u, StateVector f0,
                                                                const std::vector<TriangleId>& targets,
                                                                const std::vector<std::size_t>& horizons) {
  if (horizons.empty()) return {};
  for (std::size_t i = 0; i < horizons.size(); ++i) {
    if (horizons[i] < 1) throw std::invalid_argument("time average horizon must be >= 1");
    if (i > 0 && horizons[i] <= horizons[i - 1]) throw std::invalid_argument("horizons must be ascending");
  }
  for (TriangleId t : targets) {
    if (6 * static_cast<std::size_t>(t) >= u.dimension()) throw std::out_of_range("unknown target triangle");
  }
  TimeAverager avg(targets);
  std::vector<TimeAverageSample> out;
  Evolution ev(u, std::move(f0));
  std::size_t next = 0;
  while (next < horizons.size()) {
    avg.add(ev.state());
    if (avg.count() == horizons[next]) {
      const auto m = avg.mean();
      for (std::size_t i = 0; i < targets.size(); ++i) out.push_back({horizons[next], targets[i], m[i]});
      ++next;
      if (next == horizons.size()) break;
    }
    ev.step();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Radial variance
// ---------------------------------------------------------------------------

enum class VarianceMode {
  standard,  // Σ ‖x‖² μ − (Σ ‖x‖ μ)²
  literal,   // Σ ‖x‖² μ² − (Σ ‖x‖ μ)², as printed
};

inline std::string to_string(VarianceMode m) { return m == VarianceMode::standard ? "standard" : "literal"; }

inline VarianceMode parse_variance_mode(const std::string& s) {
  if (s == "standard") return VarianceMode::standard;
  if (s == "literal") return VarianceMode::literal;
  throw std::invalid_argument("unknown variance mode '" + s + "'");
}

/// Distance ‖x(σ) − origin‖ of every triangle's barycenter.
struct RadialFrame {
  Point2 origin;
  std::vector<double> radius;
};

inline RadialFrame radial_frame(const SimplicialComplex2D& k, Point2 origin) {
  if (!k.has_geometry()) throw std::invalid_argument("radial variance needs an embedded complex");
  RadialFrame f;
  f.origin = origin;
  f.radius.resize(k.triangle_count());
  for (TriangleId t = 0; t < k.triangle_count(); ++t) {
    const Point2 c = k.centroid(t);
    f.radius[t] = std::hypot(c.x - origin.x, c.y - origin.y);
  }
  return f;
}

/// Frame centred on the barycenter of triangle `start`.
inline RadialFrame radial_frame(const SimplicialComplex2D& k, TriangleId start) {
  if (!k.has_geometry()) throw std::invalid_argument("radial variance needs an embedded complex");
  return radial_frame(k, k.centroid(start));
}

inline double radial_variance(const RadialFrame& frame, const ProbabilityDistribution& p,
                              VarianceMode mode = VarianceMode::standard) {
  if (frame.radius.size() != p.mu.size()) throw std::invalid_argument("frame and distribution differ in size");
  double second = 0.0, first = 0.0;
  for (std::size_t t = 0; t < p.mu.size(); ++t) {
    const double r = frame.radius[t], mu = p.mu[t];
    second += r * r * (mode == VarianceMode::standard ? mu : mu * mu);
    first += r * mu;
  }
  return second - first * first;
}

struct VarianceSample {
  std::size_t n = 0;
  double vn = 0.0;
  double vn_over_n2 = 0.0;  // 0 at n = 0
};

/// V_n for n = 0, every, 2 every, ..., n_max (n_max always included).
inline std::vector<VarianceSample> radial_variance_series(const WalkOperator& u, StateVector f0, std::size_t n_max,
                                                          const RadialFrame& frame,
                                                          VarianceMode mode = VarianceMode::standard,
                                                          std::size_t every = 1,
                                                          std::optional<BoundaryGuard> guard = std::nullopt) {
  std::vector<VarianceSample> out;
  evolve(
      u, std::move(f0), n_max,
      [&](std::size_t n, const StateVector& f) {
        const double v = radial_variance(frame, finding_probability(f, n), mode);
        out.push_back({n, v, n == 0 ? 0.0 : v / (static_cast<double>(n) * static_cast<double>(n))});
      },
      every, std::move(guard));
  return out;
}

// ---------------------------------------------------------------------------
// Supports
// ---------------------------------------------------------------------------

inline std::vector<BasisIndex> support_basis(const StateVector& f, double tol = 1e-12) {
  std::vector<BasisIndex> out;
  for (BasisIndex b = 0; b < f.size(); ++b) {
    if (std::abs(f[b]) > tol) out.push_back(b);
  }
  return out;
}

inline std::vector<TriangleId> support_triangles(const StateVector& f, double tol = 1e-12) {
  std::vector<TriangleId> out;
  for (BasisIndex b : support_basis(f, tol)) {
    const TriangleId t = b / 6;
    if (out.empty() || out.back() != t) out.push_back(t);
  }
  return out;
}

inline std::vector<TriangleLabel> support_labels(const SimplicialComplex2D& k, const StateVector& f,
                                                 double tol = 1e-12) {
  std::vector<TriangleLabel> out;
  for (TriangleId t : support_triangles(f, tol)) out.push_back(k.label(t));
  return out;
}

/**
 * Extents of a triangle set along three unit normals 120 degrees apart
 * (angles 0, 120, 240 in the equilateral picture) and along their negatives.
 * An equilateral hull {x : n_k . x <= h_k} has area proportional to
 * (h_0 + h_1 + h_2)^2, so `spread_ratio` compares the two bounding triangles:
 * 1 for centrally symmetric sets, 1/2 for a triangle.
 */
struct TriangularExtents {
  std::array<double, 3> plus{};
  std::array<double, 3> minus{};

  double plus_size() const { return plus[0] + plus[1] + plus[2]; }
  double minus_size() const { return minus[0] + minus[1] + minus[2]; }
  double spread_ratio() const {
    const double a = plus_size(), b = minus_size();
    return std::max(a, b) > 0.0 ? std::min(a, b) / std::max(a, b) : 1.0;
  }
};

inline TriangularExtents triangular_extents(const SimplicialComplex2D& k, const std::vector<TriangleId>& triangles,
                                            Point2 origin) {
  TriangularExtents e;
  e.plus.fill(-std::numeric_limits<double>::infinity());
  e.minus.fill(-std::numeric_limits<double>::infinity());
  const Point2 o = to_equilateral(origin);
  for (TriangleId t : triangles) {
    const Point2 p = to_equilateral(k.centroid(t));
    for (int n = 0; n < 3; ++n) {
      const double a = 2.0 * std::acos(-1.0) * n / 3.0;
      const double d = (p.x - o.x) * std::cos(a) + (p.y - o.y) * std::sin(a);
      e.plus[n] = std::max(e.plus[n], d);
      e.minus[n] = std::max(e.minus[n], -d);
    }
  }
  return e;
}

}  // namespace swalk
