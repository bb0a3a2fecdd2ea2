#pragma once

// Simplicial homology of a 2-complex over the rationals, with exact integer
// arithmetic throughout.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "swalk/complex.hpp"

namespace swalk {

/**
 * Sparse integer matrix of the boundary map ∂_k : C_k -> C_{k-1}.
 *
 * Simplices are oriented by increasing vertex id.  Rows are (k-1)-simplices
 * (vertex ids for k = 1, edge ids for k = 2), columns are k-simplices (edge
 * ids for k = 1, triangle ids for k = 2).  Column entries are sorted by row.
 */
struct BoundaryMatrix {
  int k = 0;
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::uint32_t, int>>> columns;

  std::size_t cols() const { return columns.size(); }

  int at(std::size_t row, std::size_t col) const {
    for (const auto& [r, v] : columns.at(col)) {
      if (r == row) return v;
    }
    return 0;
  }
};

inline BoundaryMatrix boundary_matrix(const SimplicialComplex2D& cx, int k) {
  BoundaryMatrix m;
  m.k = k;
  if (k == 1) {
    m.rows = cx.vertex_count();
    m.columns.resize(cx.edge_count());
    for (EdgeId e = 0; e < cx.edge_count(); ++e) {
      const auto& v = cx.edge(e).vertices;
      // ∂[v0 v1] = v1 - v0
      m.columns[e] = {{v[0], -1}, {v[1], +1}};
    }
  } else if (k == 2) {
    m.rows = cx.edge_count();
    m.columns.resize(cx.triangle_count());
    for (TriangleId t = 0; t < cx.triangle_count(); ++t) {
      const auto s = Triangle::from_unsorted(cx.canonical(t)).vertices;
      // ∂[v0 v1 v2] = [v1 v2] - [v0 v2] + [v0 v1]
      auto& col = m.columns[t];
      col = {{*cx.find_edge(s[1], s[2]), +1}, {*cx.find_edge(s[0], s[2]), -1},
             {*cx.find_edge(s[0], s[1]), +1}};
      std::sort(col.begin(), col.end());
    }
  } else {
    throw std::out_of_range("boundary_matrix: k must be 1 or 2");
  }
  return m;
}

/// Product ∂_1 ∂_2 as a sparse integer matrix (rows: vertices, cols: triangles).
inline std::vector<std::map<std::uint32_t, long long>> compose_boundaries(const BoundaryMatrix& d1,
                                                                          const BoundaryMatrix& d2) {
  if (d1.k != 1 || d2.k != 2 || d2.rows != d1.cols())
    throw std::invalid_argument("compose_boundaries: incompatible matrices");
  std::vector<std::map<std::uint32_t, long long>> out(d2.cols());
  for (std::size_t t = 0; t < d2.cols(); ++t) {
    for (const auto& [e, a] : d2.columns[t]) {
      for (const auto& [v, b] : d1.columns[e]) out[t][v] += static_cast<long long>(a) * b;
    }
    std::erase_if(out[t], [](const auto& kv) { return kv.second == 0; });
  }
  return out;
}

namespace detail {

using BigInt = boost::multiprecision::cpp_int;
using SparseRow = std::vector<std::pair<std::uint32_t, BigInt>>;

inline void normalize_content(SparseRow& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (const auto& [c, v] : row) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) v /= g;
  }
}

// row <- p * row - a * pivot, where a is row's leading entry and p the pivot's.
inline SparseRow eliminate(const SparseRow& row, const SparseRow& pivot) {
  const BigInt a = row.front().second;
  const BigInt p = pivot.front().second;
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, p * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -a * pivot[j].second);
      ++j;
    } else {
      BigInt v = p * row[i].second - a * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  normalize_content(out);
  return out;
}

}  // namespace detail

/**
 * Rank over Q by fraction-free integer row reduction.  Each column of the
 * boundary matrix is treated as a row of the transpose (rank is unchanged);
 * rows are reduced against pivots keyed by their leading index.
 */
inline std::size_t exact_rank(const BoundaryMatrix& m) {
  std::map<std::uint32_t, detail::SparseRow> pivots;
  for (const auto& col : m.columns) {
    detail::SparseRow row;
    row.reserve(col.size());
    for (const auto& [r, v] : col) row.emplace_back(r, detail::BigInt(v));
    detail::normalize_content(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const auto lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      row = detail::eliminate(row, it->second);
    }
  }
  return pivots.size();
}

struct BettiVector {
  long b0 = 0;
  long b1 = 0;
  long b2 = 0;

  long euler_characteristic() const { return b0 - b1 + b2; }
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

inline BettiVector betti_numbers(const SimplicialComplex2D& cx) {
  const auto r1 = static_cast<long>(exact_rank(boundary_matrix(cx, 1)));
  const auto r2 = static_cast<long>(exact_rank(boundary_matrix(cx, 2)));
  const auto v = static_cast<long>(cx.vertex_count());
  const auto e = static_cast<long>(cx.edge_count());
  const auto f = static_cast<long>(cx.triangle_count());
  return {v - r1, (e - r1) - r2, f - r2};
}

inline long euler_characteristic(const SimplicialComplex2D& cx) {
  return static_cast<long>(cx.vertex_count()) - static_cast<long>(cx.edge_count()) +
         static_cast<long>(cx.triangle_count());
}

}  // namespace swalk
