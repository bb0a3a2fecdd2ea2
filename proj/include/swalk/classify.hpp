#pragma once

/**
 * Non-triviality classifiers.
 *
 * is_noninteractive inspects U directly.  tethered_check propagates the
 * support a walk could reach under a generic weight: from σ every
 * π σ' with d̃_0 σ' = d̃_0 σ is a successor, the reflection included.
 */

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "swalk/complex.hpp"
#include "swalk/measure.hpp"
#include "swalk/walk.hpp"

namespace swalk {

/// Every column of U has exactly one nonzero entry.
inline bool is_noninteractive(const WalkOperator& u) {
  const auto counts = u.column_counts();
  return std::all_of(counts.begin(), counts.end(), [](std::uint32_t c) { return c == 1; });
}

enum class TetherVerdict { tethered, movable, inconclusive };

inline std::string to_string(TetherVerdict v) {
  switch (v) {
    case TetherVerdict::tethered: return "tethered";
    case TetherVerdict::movable: return "movable";
    case TetherVerdict::inconclusive: break;
  }
  return "inconclusive";
}

/// Snapshot of the generic reachability after `step` applications of U.
struct ReachabilityState {
  std::size_t step = 0;
  std::vector<BasisIndex> frontier;
  std::vector<VertexId> vertex_intersection;
};

struct TetherResult {
  TetherVerdict verdict = TetherVerdict::inconclusive;
  /// Vertices common to every reached support (empty when movable).
  std::vector<VertexId> anchors;
  /// Step at which the verdict was reached (or m_max).
  std::size_t steps = 0;
  /// Union of all reached basis indices, ascending.
  std::vector<BasisIndex> reached;
  /// Per-step frontiers, when requested.
  std::vector<ReachabilityState> trace;
};

/// Generic successors of one directed simplex.
inline std::vector<BasisIndex> generic_successors(const SimplicialComplex2D& k, const PermutationSpec& pi,
                                                  BasisIndex sigma) {
  std::vector<BasisIndex> out;
  for (BasisIndex s : k.facet_members(k.facet_of(sigma))) out.push_back(permute(pi, s));
  std::sort(out.begin(), out.end());
  return out;
}

/// 4 × (dual diameter), capped at 10^4.  Above 4096 triangles the diameter
/// is replaced by the upper bound 2 × eccentricity of triangle 0.
inline std::size_t default_tether_horizon(const SimplicialComplex2D& k) {
  std::size_t diam = 0;
  if (k.triangle_count() <= 4096) {
    diam = static_cast<std::size_t>(dual_diameter(k));
  } else {
    int ecc = 0;
    for (int d : dual_distances(k, 0)) ecc = std::max(ecc, d);
    diam = 2 * static_cast<std::size_t>(ecc);
  }
  return std::min<std::size_t>(10000, std::max<std::size_t>(1, 4 * diam));
}

inline TetherResult tethered_check(const SimplicialComplex2D& k, const PermutationSpec& pi, BasisIndex sigma0,
                                   std::size_t m_max, bool record_trace = false) {
  if (m_max < 1) throw std::invalid_argument("tethered_check needs m_max >= 1");
  if (sigma0 >= k.basis_size()) throw std::out_of_range("start simplex outside the complex");

  const auto verts = [&](BasisIndex b) {
    auto v = k.canonical(b / 6);
    std::sort(v.begin(), v.end());
    return v;
  };

  std::vector<char> seen(k.basis_size(), 0);
  std::vector<BasisIndex> frontier{sigma0};
  seen[sigma0] = 1;
  std::vector<BasisIndex> reached{sigma0};
  const auto v0 = verts(sigma0);
  std::vector<VertexId> common(v0.begin(), v0.end());

  TetherResult res;
  if (record_trace) res.trace.push_back({0, frontier, common});

  for (std::size_t m = 1; m <= m_max; ++m) {
    std::vector<BasisIndex> next;
    for (BasisIndex b : frontier) {
      for (BasisIndex s : generic_successors(k, pi, b)) next.push_back(s);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());

    bool grew = false;
    for (BasisIndex b : next) {
      if (seen[b]) continue;
      seen[b] = 1;
      grew = true;
      reached.push_back(b);
      const auto v = verts(b);
      std::erase_if(common, [&](VertexId x) { return std::find(v.begin(), v.end(), x) == v.end(); });
    }
    frontier = std::move(next);
    if (record_trace) res.trace.push_back({m, frontier, common});

    if (common.empty()) {
      res.verdict = TetherVerdict::movable;
      res.steps = m;
      break;
    }
    if (!grew) {
      res.verdict = TetherVerdict::tethered;
      res.steps = m;
      break;
    }
    res.steps = m;
  }
  std::sort(reached.begin(), reached.end());
  res.reached = std::move(reached);
  res.anchors = std::move(common);
  return res;
}

inline TetherResult tethered_check(const SimplicialComplex2D& k, const PermutationSpec& pi, BasisIndex sigma0) {
  return tethered_check(k, pi, sigma0, default_tether_horizon(k));
}

/// support(U^m δ_σ0) for m = 0..m_max.
inline std::vector<std::vector<BasisIndex>> numeric_tether_probe(const WalkOperator& u, BasisIndex sigma0,
                                                                 std::size_t m_max, double tol = 1e-12) {
  if (sigma0 >= u.dimension()) throw std::out_of_range("start simplex outside the operator");
  StateVector f(u.dimension());
  f[sigma0] = 1.0;
  std::vector<std::vector<BasisIndex>> trace;
  evolve(
      u, std::move(f), m_max, [&](std::size_t, const StateVector& g) { trace.push_back(support_basis(g, tol)); },
      1);
  return trace;
}

}  // namespace swalk
