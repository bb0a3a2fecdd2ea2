#pragma once

/**
 * The simplicial quantum walk U = S_π C_0 on ℓ²(K̃_2).
 *
 * For a basis vector δ_σ the coin and shift act as
 *
 *     U δ_σ = Σ_{σ' : d̃_0 σ' = d̃_0 σ} 2 conj(w(σ)) w(σ') δ_{π σ'}  -  δ_{π σ}
 *
 * Only the sparse rows of U are stored; d_0, d_0^* and C_0 are available as
 * matrix-free maps for verification.
 */

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swalk/complex.hpp"
#include "swalk/parallel.hpp"
#include "swalk/weight.hpp"

namespace swalk {

/// Coefficients at or below this magnitude are structural zeros
/// (e.g. 2 |1/√2|^2 - 1 evaluated in floating point).
inline constexpr double kStructuralZero = 1e-14;

/// (π σ)[k] = σ[map[k]].  The cyclic choice [a0 a1 a2] -> [a1 a2 a0] is {1, 2, 0}.
class PermutationSpec {
 public:
  constexpr PermutationSpec() = default;
  explicit PermutationSpec(std::array<int, 3> map) : map_(map) {
    std::array<bool, 3> seen{};
    for (int v : map_) {
      if (v < 0 || v > 2 || seen[v]) throw std::invalid_argument("not a permutation of {0,1,2}");
      seen[v] = true;
    }
  }

  static PermutationSpec cyclic() { return PermutationSpec({1, 2, 0}); }

  /// Parses the image of [abc], e.g. "bca" (cyclic) or "acb".
  static PermutationSpec parse(const std::string& word) {
    if (word.size() != 3) throw std::invalid_argument("permutation must be a 3-letter word over a, b, c");
    std::array<int, 3> m{};
    for (int k = 0; k < 3; ++k) {
      if (word[k] < 'a' || word[k] > 'c') throw std::invalid_argument("permutation letters must be a, b, c");
      m[k] = word[k] - 'a';
    }
    return PermutationSpec(m);
  }

  const std::array<int, 3>& map() const { return map_; }

  int order() const {
    std::array<int, 3> cur = map_;
    for (int n = 1; n <= 6; ++n) {
      if (cur == std::array<int, 3>{0, 1, 2}) return n;
      std::array<int, 3> next{};
      for (int k = 0; k < 3; ++k) next[k] = cur[map_[k]];
      cur = next;
    }
    return 6;
  }

  DirectedTriangle apply(const DirectedTriangle& s) const {
    return {{s.vertices[map_[0]], s.vertices[map_[1]], s.vertices[map_[2]]}};
  }

  /// Rotation index of π σ when σ has rotation index l (same support).
  int apply_rotation(int l) const {
    std::array<int, 3> pos{};
    for (int k = 0; k < 3; ++k) pos[k] = kRotation[l][map_[k]];
    return rotation_of_positions(pos);
  }

  PermutationSpec inverse() const {
    std::array<int, 3> inv{};
    for (int k = 0; k < 3; ++k) inv[map_[k]] = k;
    return PermutationSpec(inv);
  }

  std::string word() const {
    std::string s(3, 'a');
    for (int k = 0; k < 3; ++k) s[k] = static_cast<char>('a' + map_[k]);
    return s;
  }

 private:
  std::array<int, 3> map_{1, 2, 0};
};

inline BasisIndex permute(const PermutationSpec& pi, BasisIndex b) {
  return 6 * (b / 6) + static_cast<BasisIndex>(pi.apply_rotation(static_cast<int>(b % 6)));
}

/// Complex amplitude per directed 2-simplex.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t dim) : amp_(dim, cplx{0.0, 0.0}) {}
  explicit StateVector(std::vector<cplx> amp) : amp_(std::move(amp)) {}

  std::size_t size() const { return amp_.size(); }
  const cplx& operator[](BasisIndex b) const { return amp_[b]; }
  cplx& operator[](BasisIndex b) { return amp_[b]; }
  std::span<const cplx> amplitudes() const { return amp_; }
  std::span<cplx> amplitudes() { return amp_; }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return s;
  }
  double norm() const { return std::sqrt(norm_squared()); }

  friend cplx inner(const StateVector& f, const StateVector& g) {
    if (f.size() != g.size()) throw std::invalid_argument("inner product of vectors of different size");
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < f.size(); ++i) s += std::conj(f.amp_[i]) * g.amp_[i];
    return s;
  }

 private:
  std::vector<cplx> amp_;
};

/// Row-sparse (CSR) unitary over the directed 2-simplices.
class WalkOperator {
 public:
  struct Entry {
    BasisIndex col;
    cplx value;
  };

  std::size_t dimension() const { return row_offsets_.empty() ? 0 : row_offsets_.size() - 1; }
  std::size_t nonzeros() const { return entries_.size(); }

  std::span<const Entry> row(BasisIndex r) const {
    return {entries_.data() + row_offsets_[r], entries_.data() + row_offsets_[r + 1]};
  }

  /// Coefficient <δ_row, U δ_col>.
  cplx at(BasisIndex r, BasisIndex c) const {
    for (const auto& e : row(r)) {
      if (e.col == c) return e.value;
    }
    return {0.0, 0.0};
  }

  std::vector<std::uint32_t> column_counts() const {
    std::vector<std::uint32_t> n(dimension(), 0);
    for (const auto& e : entries_) ++n[e.col];
    return n;
  }

  /// out = U in.  Each output row is summed in ascending column order.
  void apply_into(std::span<const cplx> in, std::span<cplx> out, unsigned workers = worker_count()) const {
    if (in.size() != dimension() || out.size() != dimension())
      throw std::invalid_argument("WalkOperator::apply: dimension mismatch");
    parallel_for_ranges(
        dimension(),
        [&](std::size_t begin, std::size_t end) {
          const Entry* e = entries_.data() + row_offsets_[begin];
          for (std::size_t r = begin; r < end; ++r) {
            const Entry* stop = entries_.data() + row_offsets_[r + 1];
            double re = 0.0, im = 0.0;
            for (; e != stop; ++e) {
              const double ar = e->value.real(), ai = e->value.imag();
              const double xr = in[e->col].real(), xi = in[e->col].imag();
              re += ar * xr - ai * xi;
              im += ar * xi + ai * xr;
            }
            out[r] = {re, im};
          }
        },
        workers);
  }

 private:
  friend WalkOperator build_walk_operator(const SimplicialComplex2D&, const WeightAssignment&,
                                          const PermutationSpec&);
  std::vector<std::uint64_t> row_offsets_;
  std::vector<Entry> entries_;
};

/**
 * Assembles U = S_π (2 d_0^* d_0 - I).  Throws WeightError when w violates
 * the unit-sum or nonzero rule.
 */
inline WalkOperator build_walk_operator(const SimplicialComplex2D& k, const WeightAssignment& w,
                                        const PermutationSpec& pi = PermutationSpec::cyclic()) {
  require_valid(k, w, "walk");
  const std::size_t n = k.basis_size();
  const PermutationSpec inv = pi.inverse();

  // Row π s collects, for every σ on the facet of s, the coefficient
  // 2 conj(w(σ)) w(s) - [σ = s] of δ_σ.
  WalkOperator u;
  std::size_t bound = 0;
  for (BasisIndex b = 0; b < n; ++b) bound += k.facet_members(k.facet_of(b)).size();
  u.entries_.reserve(bound);
  u.row_offsets_.resize(n + 1);
  u.row_offsets_[0] = 0;
  for (BasisIndex r = 0; r < n; ++r) {
    const BasisIndex s = permute(inv, r);
    const auto members = k.facet_members(k.facet_of(s));
    for (BasisIndex col : members) {
      cplx c = 2.0 * std::conj(w[col]) * w[s];
      if (col == s) c -= 1.0;
      if (std::abs(c) > kStructuralZero) u.entries_.push_back({col, c});
    }
    u.row_offsets_[r + 1] = u.entries_.size();
  }
  return u;
}

inline StateVector apply(const WalkOperator& u, const StateVector& f) {
  if (f.size() != u.dimension()) throw std::invalid_argument("apply: state dimension does not match operator");
  StateVector g(f.size());
  u.apply_into(f.amplitudes(), g.amplitudes());
  return g;
}

// ---------------------------------------------------------------------------
// Matrix-free d_0, d_0^*, C_0 and S_π.
// ---------------------------------------------------------------------------

/// d_0 δ_σ = conj(w(σ)) δ_{d̃_0 σ}; result lives on the directed edges.
inline std::vector<cplx> apply_d0(const SimplicialComplex2D& k, const WeightAssignment& w,
                                  std::span<const cplx> f) {
  std::vector<cplx> g(k.directed_edge_count(), cplx{0.0, 0.0});
  for (BasisIndex b = 0; b < f.size(); ++b) g[k.facet_of(b)] += std::conj(w[b]) * f[b];
  return g;
}

/// d_0^* δ_τ = Σ_{σ : d̃_0 σ = τ} w(σ) δ_σ.
inline std::vector<cplx> apply_d0_adjoint(const SimplicialComplex2D& k, const WeightAssignment& w,
                                          std::span<const cplx> g) {
  std::vector<cplx> f(k.basis_size(), cplx{0.0, 0.0});
  for (BasisIndex b = 0; b < f.size(); ++b) f[b] = w[b] * g[k.facet_of(b)];
  return f;
}

inline std::vector<cplx> apply_coin(const SimplicialComplex2D& k, const WeightAssignment& w,
                                    std::span<const cplx> f) {
  auto out = apply_d0_adjoint(k, w, apply_d0(k, w, f));
  for (std::size_t b = 0; b < out.size(); ++b) out[b] = 2.0 * out[b] - f[b];
  return out;
}

inline std::vector<cplx> apply_shift(const PermutationSpec& pi, std::span<const cplx> f) {
  std::vector<cplx> out(f.size(), cplx{0.0, 0.0});
  for (BasisIndex b = 0; b < f.size(); ++b) out[permute(pi, b)] = f[b];
  return out;
}

// ---------------------------------------------------------------------------
// Initial states
// ---------------------------------------------------------------------------

inline StateVector initial_state_symmetric(const SimplicialComplex2D& k, TriangleId t) {
  StateVector f(k.basis_size());
  const double a = 1.0 / std::sqrt(6.0);
  for (int l = 0; l < 6; ++l) f[DirectedBasis{t, l}.flat()] = a;
  return f;
}

inline StateVector initial_state_single(const SimplicialComplex2D& k, TriangleId t, int rotation = 0) {
  StateVector f(k.basis_size());
  f[DirectedBasis{t, rotation}.flat()] = 1.0;
  return f;
}

/// (δ_[abc] + δ_[bca]) / √2
inline StateVector initial_state_pair_cyclic(const SimplicialComplex2D& k, TriangleId t) {
  StateVector f(k.basis_size());
  f[DirectedBasis{t, 0}.flat()] = 1.0 / std::sqrt(2.0);
  f[DirectedBasis{t, 1}.flat()] = 1.0 / std::sqrt(2.0);
  return f;
}

/// (δ_[abc] + δ_[acb]) / √2
inline StateVector initial_state_pair_swap(const SimplicialComplex2D& k, TriangleId t) {
  StateVector f(k.basis_size());
  f[DirectedBasis{t, 0}.flat()] = 1.0 / std::sqrt(2.0);
  f[DirectedBasis{t, 3}.flat()] = 1.0 / std::sqrt(2.0);
  return f;
}

/// Seeded random unit vector (Gaussian components, normalized).
inline StateVector random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> a(dim);
  double s = 0.0;
  for (auto& x : a) {
    x = {g(rng), g(rng)};
    s += std::norm(x);
  }
  const double inv = 1.0 / std::sqrt(s);
  for (auto& x : a) x *= inv;
  return StateVector(std::move(a));
}

// ---------------------------------------------------------------------------
// Evolution
// ---------------------------------------------------------------------------

/// Raised when amplitude reaches a guarded (boundary) triangle.
class BoundaryReached : public std::runtime_error {
 public:
  BoundaryReached(std::size_t step, TriangleId triangle)
      : std::runtime_error("wavefront reached boundary triangle " + std::to_string(triangle) + " at step " +
                           std::to_string(step)),
        step_(step),
        triangle_(triangle) {}
  std::size_t step() const { return step_; }
  TriangleId triangle() const { return triangle_; }

 private:
  std::size_t step_;
  TriangleId triangle_;
};

struct BoundaryGuard {
  std::vector<TriangleId> triangles;
  double tolerance = 0.0;

  static BoundaryGuard for_complex(const SimplicialComplex2D& k, double tol = 0.0) {
    return {k.boundary_triangles(), tol};
  }

  void check(const StateVector& f, std::size_t step) const {
    for (TriangleId t : triangles) {
      for (int l = 0; l < 6; ++l) {
        if (std::abs(f[6 * t + l]) > tolerance) throw BoundaryReached(step, t);
      }
    }
  }
};

/**
 * Stepwise evolution f_m = U^m f_0 with double buffering.
 */
class Evolution {
 public:
  Evolution(const WalkOperator& u, StateVector f0, std::optional<BoundaryGuard> guard = std::nullopt)
      : u_(&u), cur_(std::move(f0)), next_(cur_.size()), guard_(std::move(guard)) {
    if (cur_.size() != u.dimension()) throw std::invalid_argument("Evolution: state dimension does not match operator");
    if (guard_) guard_->check(cur_, 0);
  }

  void step() {
    u_->apply_into(cur_.amplitudes(), next_.amplitudes());
    std::swap(cur_, next_);
    ++m_;
    if (guard_) guard_->check(cur_, m_);
  }

  std::size_t time() const { return m_; }
  const StateVector& state() const { return cur_; }

 private:
  const WalkOperator* u_;
  StateVector cur_;
  StateVector next_;
  std::size_t m_ = 0;
  std::optional<BoundaryGuard> guard_;
};

/**
 * U^m f_0.  When `observer` is set it is called with (step, state) for
 * step = 0 and every `snapshot_every`-th step, and always for the last step.
 */
inline StateVector evolve(const WalkOperator& u, StateVector f0, std::size_t m,
                          const std::function<void(std::size_t, const StateVector&)>& observer = {},
                          std::size_t snapshot_every = 1, std::optional<BoundaryGuard> guard = std::nullopt) {
  Evolution ev(u, std::move(f0), std::move(guard));
  if (snapshot_every == 0) snapshot_every = m == 0 ? 1 : m;
  if (observer) observer(0, ev.state());
  for (std::size_t s = 1; s <= m; ++s) {
    ev.step();
    if (observer && (s % snapshot_every == 0 || s == m)) observer(s, ev.state());
  }
  return ev.state();
}

}  // namespace swalk
