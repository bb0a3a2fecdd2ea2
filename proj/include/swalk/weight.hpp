#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "swalk/complex.hpp"

namespace swalk {

using cplx = std::complex<double>;

inline constexpr double kWeightTolerance = 1e-12;

/// One complex weight per directed 2-simplex, indexed by BasisIndex.
class WeightAssignment {
 public:
  WeightAssignment() = default;
  explicit WeightAssignment(std::vector<cplx> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  const cplx& operator[](BasisIndex b) const { return values_[b]; }
  cplx& operator[](BasisIndex b) { return values_[b]; }
  const std::vector<cplx>& values() const { return values_; }

 private:
  std::vector<cplx> values_;
};

struct WeightViolation {
  enum class Kind { zero_weight, unit_sum, size_mismatch };
  Kind kind = Kind::unit_sum;
  BasisIndex simplex = 0;          // zero_weight
  DirectedEdgeIndex facet = 0;     // unit_sum
  double sum = 0.0;                // unit_sum: Σ |w|^2 over the facet's cofaces

  std::string describe(const SimplicialComplex2D& k) const {
    std::ostringstream os;
    switch (kind) {
      case Kind::zero_weight: {
        const auto s = k.directed(simplex);
        os << "zero weight at [" << s.vertices[0] << ' ' << s.vertices[1] << ' ' << s.vertices[2] << ']';
        break;
      }
      case Kind::unit_sum: {
        const auto e = k.directed_edge(facet);
        os << "facet [" << e.vertices[0] << ' ' << e.vertices[1] << "] sum=" << sum;
        break;
      }
      case Kind::size_mismatch: os << "weight size does not match basis size"; break;
    }
    return os.str();
  }
};

struct WeightReport {
  std::vector<WeightViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Nonzero on every σ and Σ_{σ : d̃_0 σ = τ} |w(σ)|^2 = 1 for every directed edge τ.
inline WeightReport validate_weight(const SimplicialComplex2D& k, const WeightAssignment& w,
                                    double tol = kWeightTolerance) {
  WeightReport report;
  if (w.size() != k.basis_size()) {
    report.violations.push_back({WeightViolation::Kind::size_mismatch});
    return report;
  }
  for (BasisIndex b = 0; b < w.size(); ++b) {
    if (std::abs(w[b]) <= tol) {
      WeightViolation v;
      v.kind = WeightViolation::Kind::zero_weight;
      v.simplex = b;
      report.violations.push_back(v);
    }
  }
  for (DirectedEdgeIndex tau = 0; tau < k.directed_edge_count(); ++tau) {
    const auto members = k.facet_members(tau);
    if (members.empty()) continue;  // bare edge: no directed 2-simplex lands on it
    double sum = 0.0;
    for (BasisIndex b : members) sum += std::norm(w[b]);
    if (std::abs(sum - 1.0) > tol) {
      WeightViolation v;
      v.kind = WeightViolation::Kind::unit_sum;
      v.facet = tau;
      v.sum = sum;
      report.violations.push_back(v);
    }
  }
  return report;
}

class WeightError : public std::invalid_argument {
 public:
  WeightError(const std::string& what, WeightReport report)
      : std::invalid_argument(what), report_(std::move(report)) {}
  const WeightReport& report() const { return report_; }

 private:
  WeightReport report_;
};

inline WeightAssignment require_valid(const SimplicialComplex2D& k, WeightAssignment w, const char* scheme) {
  auto report = validate_weight(k, w);
  if (!report.ok()) {
    const std::string first = report.violations[0].describe(k);
    throw WeightError(std::string(scheme) + " weight is invalid on this complex: " + first, std::move(report));
  }
  return w;
}

namespace detail {

inline std::size_t facet_degree(const SimplicialComplex2D& k, BasisIndex b) {
  return k.coface_degree(k.facet_of(b) / 2);
}

}  // namespace detail

/// w ≡ 1/√2, with |w| = 1 on boundary facets.  Not validated.
inline WeightAssignment uniform_weight_values(const SimplicialComplex2D& k) {
  std::vector<cplx> w(k.basis_size());
  for (BasisIndex b = 0; b < w.size(); ++b) {
    w[b] = detail::facet_degree(k, b) == 1 ? 1.0 : 1.0 / std::sqrt(2.0);
  }
  return WeightAssignment(std::move(w));
}

/// Uniform weight; throws WeightError where a facet has three or more cofaces.
inline WeightAssignment weight_uniform(const SimplicialComplex2D& k) {
  return require_valid(k, uniform_weight_values(k), "uniform");
}

/**
 * √p on lower triangles and √(1-p) on upper ones (|w| = 1 on boundary
 * facets).  Every interior facet must join one lower and one upper triangle.
 */
inline WeightAssignment weight_lower_upper(const SimplicialComplex2D& k, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("lower/upper weight needs p in (0,1)");
  if (!k.has_labels()) throw std::invalid_argument("lower/upper weight needs grid labels");
  for (EdgeId e = 0; e < k.edge_count(); ++e) {
    const auto cf = k.cofaces(e);
    if (cf.size() == 1) continue;
    if (cf.size() != 2 || k.label(cf[0]).k + k.label(cf[1]).k != 1 ||
        k.label(cf[0]).k > 1 || k.label(cf[1]).k > 1) {
      throw std::invalid_argument("lower/upper weight needs every interior facet to join a lower and an upper triangle");
    }
  }
  const double lower = std::sqrt(p), upper = std::sqrt(1.0 - p);
  std::vector<cplx> w(k.basis_size());
  for (BasisIndex b = 0; b < w.size(); ++b) {
    if (detail::facet_degree(k, b) == 1) {
      w[b] = 1.0;
    } else {
      w[b] = k.label(b / 6).k == 0 ? lower : upper;
    }
  }
  return require_valid(k, WeightAssignment(std::move(w)), "lower/upper");
}

/// w(σ) = 1/√deg(d̃_0 σ).
inline WeightAssignment weight_grover(const SimplicialComplex2D& k) {
  std::vector<cplx> w(k.basis_size());
  for (BasisIndex b = 0; b < w.size(); ++b) {
    w[b] = 1.0 / std::sqrt(static_cast<double>(detail::facet_degree(k, b)));
  }
  return require_valid(k, WeightAssignment(std::move(w)), "grover");
}

inline WeightAssignment weight_custom(const SimplicialComplex2D& k, std::vector<cplx> values) {
  return require_valid(k, WeightAssignment(std::move(values)), "custom");
}

/// Seeded random valid weight: random complex values per facet, rescaled so
/// each facet's squared sum is 1.  Magnitudes stay in [0.2, 1] before rescaling.
inline WeightAssignment weight_random(const SimplicialComplex2D& k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.2, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::acos(-1.0));
  std::vector<cplx> w(k.basis_size());
  for (DirectedEdgeIndex tau = 0; tau < k.directed_edge_count(); ++tau) {
    const auto members = k.facet_members(tau);
    double sum = 0.0;
    for (BasisIndex b : members) {
      w[b] = std::polar(mag(rng), phase(rng));
      sum += std::norm(w[b]);
    }
    const double scale = 1.0 / std::sqrt(sum);
    for (BasisIndex b : members) w[b] *= scale;
  }
  return require_valid(k, WeightAssignment(std::move(w)), "random");
}

}  // namespace swalk
