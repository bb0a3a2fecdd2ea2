#pragma once

// Shared test helpers: a dense operator oracle assembled straight from the
// definitions, plus small random-state utilities.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "swalk/swalk.hpp"

namespace swalk::test {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/**
 * Dense d_i, d_i^*, C_0, S_π and U built from vertex tuples.  The only thing
 * taken from the library is the numbering of basis elements (k.directed(b))
 * and the undirected edge list, so that entries can be compared index by index.
 */
struct DenseOracle {
  std::vector<DirectedTriangle> basis;
  std::vector<DirectedEdge> edges;
  std::map<std::array<VertexId, 3>, int> basis_index;
  std::map<std::array<VertexId, 2>, int> edge_index;
  std::array<Mat, 3> d;       // d_i : ℓ²(K̃_2) -> ℓ²(K̃_1)
  std::array<Mat, 3> d_star;  // d_i^* as defined (not as adjoint)
  Mat coin;
  Mat shift;
  Mat u;

  DenseOracle(const SimplicialComplex2D& k, const WeightAssignment& w, std::array<int, 3> pi) {
    const int nb = static_cast<int>(k.basis_size());
    for (int b = 0; b < nb; ++b) {
      basis.push_back(k.directed(static_cast<BasisIndex>(b)));
      basis_index[basis.back().vertices] = b;
    }
    for (const auto& e : k.edges()) {
      for (const auto& pair : {std::array<VertexId, 2>{e.vertices[0], e.vertices[1]},
                               std::array<VertexId, 2>{e.vertices[1], e.vertices[0]}}) {
        edge_index[pair] = static_cast<int>(edges.size());
        edges.push_back({pair});
      }
    }
    const int ne = static_cast<int>(edges.size());

    auto rotate = [](const std::array<VertexId, 3>& s, int times) {
      std::array<VertexId, 3> out = s;
      for (int t = 0; t < times; ++t) out = {out[1], out[2], out[0]};
      return out;
    };
    // d̃_i [a0 a1 a2] = [a_{i+1} a_{i+2}] (indices mod 3)
    auto face = [](const std::array<VertexId, 3>& s, int i) {
      return std::array<VertexId, 2>{s[(i + 1) % 3], s[(i + 2) % 3]};
    };

    for (int i = 0; i < 3; ++i) {
      d[i] = Mat::Zero(ne, nb);
      d_star[i] = Mat::Zero(nb, ne);
      for (int b = 0; b < nb; ++b) {
        const auto& s = basis[b].vertices;
        const int tau = edge_index.at(face(s, i));
        const cplx wpi = w[static_cast<BasisIndex>(basis_index.at(rotate(s, i)))];
        d[i](tau, b) = std::conj(wpi);
        d_star[i](b, tau) = wpi;
      }
    }
    coin = 2.0 * d_star[0] * d[0] - Mat::Identity(nb, nb);
    shift = Mat::Zero(nb, nb);
    for (int b = 0; b < nb; ++b) {
      const auto& s = basis[b].vertices;
      const std::array<VertexId, 3> image{s[pi[0]], s[pi[1]], s[pi[2]]};
      shift(basis_index.at(image), b) = 1.0;
    }
    u = shift * coin;
  }
};

inline Mat to_dense(const WalkOperator& u) {
  const auto n = static_cast<Eigen::Index>(u.dimension());
  Mat m = Mat::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (const auto& e : u.row(static_cast<BasisIndex>(r))) m(r, e.col) = e.value;
  }
  return m;
}

inline Vec to_eigen(const StateVector& f) {
  Vec v(static_cast<Eigen::Index>(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i) v(static_cast<Eigen::Index>(i)) = f[static_cast<BasisIndex>(i)];
  return v;
}

inline std::vector<cplx> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

inline cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace swalk::test
