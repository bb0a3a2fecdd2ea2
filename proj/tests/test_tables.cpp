// Column-by-column transition tables of U on the plane grid and around the
// tetrahedron glued onto the cylinder, checked entry by entry.
//
// A row (source, l) with hops {(target, l', l_w)} states
//
//   U δ_{source,l} = (2 |w_{source,l}|^2 - 1) δ_{source,π l}
//                    + Σ 2 conj(w_{source,l}) w_{target,l_w} δ_{target,l'}
//
// with π the cyclic permutation (l: 0->1->2->0, 3->4->5->3).

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>

#include "swalk/swalk.hpp"

using namespace swalk;

namespace {

struct Hop {
  std::string target;
  int l;
  int lw;
  bool check_value = true;
};

struct Row {
  std::string source;
  int l;
  std::vector<Hop> hops;
  bool check_source_factor = true;
};

int next_rotation(int l) { return l < 3 ? (l + 1) % 3 : 3 + (l - 2) % 3; }

std::map<BasisIndex, cplx> column(const WalkOperator& u, BasisIndex c) {
  std::map<BasisIndex, cplx> out;
  for (BasisIndex r = 0; r < u.dimension(); ++r) {
    for (const auto& e : u.row(r)) {
      if (e.col == c) out[r] = e.value;
    }
  }
  return out;
}

void check_rows(const SimplicialComplex2D& k, const WeightAssignment& w, const std::vector<Row>& rows,
                const std::function<TriangleId(const std::string&)>& resolve) {
  const auto u = build_walk_operator(k, w);
  for (const auto& row : rows) {
    SCOPED_TRACE(row.source + " l=" + std::to_string(row.l));
    const BasisIndex src = DirectedBasis{resolve(row.source), row.l}.flat();
    const auto col = column(u, src);

    std::map<BasisIndex, std::pair<cplx, bool>> expected;
    const cplx reflection = 2.0 * std::norm(w[src]) - 1.0;
    expected[DirectedBasis{resolve(row.source), next_rotation(row.l)}.flat()] = {reflection, true};
    for (const auto& hop : row.hops) {
      ASSERT_EQ(hop.l, next_rotation(hop.lw));
      const TriangleId t = resolve(hop.target);
      const cplx value = 2.0 * std::conj(w[src]) * w[DirectedBasis{t, hop.lw}.flat()];
      expected[DirectedBasis{t, hop.l}.flat()] = {value, hop.check_value && row.check_source_factor};
    }

    for (const auto& [b, ev] : expected) {
      const auto [value, check] = ev;
      const auto it = col.find(b);
      if (std::abs(value) <= kStructuralZero) {
        EXPECT_EQ(it, col.end()) << "unexpected entry at basis " << b;
        continue;
      }
      ASSERT_NE(it, col.end()) << "missing entry at basis " << b;
      if (check) {
        EXPECT_NEAR(std::abs(it->second - value), 0.0, 1e-14) << "basis " << b;
      }
    }
    for (const auto& [b, v] : col) EXPECT_TRUE(expected.contains(b)) << "extra entry at basis " << b;
  }
}

// -- plane grid -------------------------------------------------------------

struct GridHop {
  int di, dj, k, l, lw;
};

const std::array<std::vector<GridHop>, 2> kGridHops = {{
    // lower (i, j)
    {{0, 0, 1, 3, 5}, {-1, 0, 1, 5, 4}, {0, -1, 1, 4, 3}, {0, 0, 1, 2, 1}, {0, -1, 1, 1, 0}, {-1, 0, 1, 0, 2}},
    // upper (i, j)
    {{0, 1, 0, 5, 4}, {0, 0, 0, 4, 3}, {1, 0, 0, 3, 5}, {0, 1, 0, 0, 2}, {1, 0, 0, 2, 1}, {0, 0, 0, 1, 0}},
}};

std::vector<Row> grid_rows(int i, int j, int wrap) {
  auto name = [&](int a, int b, int k) {
    if (wrap > 0) a = ((a % wrap) + wrap) % wrap;
    return std::to_string(a) + ":" + std::to_string(b) + ":" + std::to_string(k);
  };
  std::vector<Row> rows;
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 6; ++l) {
      const auto& h = kGridHops[k][l];
      rows.push_back({name(i, j, k), l, {{name(i + h.di, j + h.dj, h.k), h.l, h.lw}}});
    }
  }
  return rows;
}

std::function<TriangleId(const std::string&)> by_label(const SimplicialComplex2D& k) {
  return [&k](const std::string& s) { return k.require_label(io::parse_label(s)); };
}

// -- tetrahedron on the cylinder ----------------------------------------------

// Neighbours of the attachment lower triangle A = (i, j, 0).
TriangleLabel neighbour(const std::string& name, int i, int j) {
  static const std::map<std::string, std::array<int, 3>> offsets = {
      {"a", {0, -1, 1}},  {"a'", {0, -1, 0}}, {"a''", {1, -1, 0}}, {"b", {0, 0, 1}},  {"b'", {1, 0, 0}},
      {"b''", {0, 1, 0}}, {"c", {-1, 0, 1}},  {"c'", {-1, 1, 0}},  {"c''", {-1, 0, 0}}, {"A", {0, 0, 0}},
      {"B", {0, 0, 2}},   {"C", {0, 0, 3}},   {"D", {0, 0, 4}},
  };
  const auto& o = offsets.at(name);
  return {i + o[0], j + o[1], o[2]};
}

std::vector<Row> tetra_rows() {
  std::vector<Row> r = {
      {"a", 0, {{"A", 5, 4}, {"B", 5, 4}}},
      {"a", 1, {{"a'", 4, 3}}},
      {"a", 2, {{"a''", 3, 5}}},
      {"a", 3, {{"A", 0, 2}, {"B", 0, 2}}},
      {"a", 4, {{"a''", 2, 1}}},
      {"a", 5, {{"a'", 1, 0}}},

      {"b", 0, {{"b''", 5, 4}}},
      {"b", 1, {{"A", 4, 3}, {"C", 5, 4}}},
      {"b", 2, {{"b'", 3, 5}}},
      {"b", 3, {{"b''", 0, 2}}},
      {"b", 4, {{"b'", 2, 1}}},
      {"b", 5, {{"A", 1, 0}, {"C", 0, 2}}},

      {"c", 0, {{"c'", 5, 4}}},
      {"c", 1, {{"c''", 4, 3}}},
      {"c", 2, {{"A", 3, 5}, {"D", 5, 4}}},
      {"c", 3, {{"c'", 0, 2}}},
      {"c", 4, {{"A", 2, 1}, {"D", 0, 2}}},
      {"c", 5, {{"c''", 1, 0}}},

      {"A", 0, {{"b", 3, 5}, {"C", 0, 2}}},
      {"A", 1, {{"c", 5, 4}, {"D", 0, 2}}},
      {"A", 2, {{"a", 4, 3}, {"B", 0, 2}}},
      {"A", 3, {{"b", 2, 1}, {"C", 5, 4}}},
      {"A", 4, {{"a", 1, 0}, {"B", 5, 4}}},
      {"A", 5, {{"c", 0, 2}, {"D", 5, 4}}},

      {"B", 0, {{"C", 3, 5}}},
      {"B", 1, {{"D", 4, 3}}},
      // the printed weight index for the hop into a is 6, which does not exist
      {"B", 2, {{"a", 4, 3, false}, {"A", 0, 2}}},
      {"B", 3, {{"C", 2, 1}}},
      {"B", 4, {{"a", 1, 0}, {"A", 5, 4}}},
      {"B", 5, {{"D", 1, 0}}},

      {"C", 0, {{"D", 3, 5}}},
      {"C", 1, {{"B", 4, 3}}},
      {"C", 2, {{"b", 3, 5}, {"A", 1, 0}}},
      {"C", 3, {{"D", 2, 1}}},
      {"C", 4, {{"b", 2, 1}, {"A", 4, 3}}},
      {"C", 5, {{"B", 1, 0}}},

      {"D", 0, {{"B", 3, 5}}},
      {"D", 1, {{"C", 4, 3}}},
      {"D", 2, {{"c", 5, 4}, {"A", 2, 1}}},
      {"D", 3, {{"B", 2, 1}}},
      {"D", 5, {{"C", 1, 0}}},
  };
  // printed with conj(w_{D,2}) as the source factor
  r.push_back({"D", 4, {{"c", 0, 2}, {"A", 3, 5}}, false});
  return r;
}

}  // namespace

TEST(GridTable, LowerAndUpperRandomWeight) {
  const auto k = build_grid_patch(8);
  std::mt19937_64 rng(21);
  const auto w = weight_random(k, rng);
  for (auto [i, j] : {std::pair{3, 3}, std::pair{1, 5}, std::pair{6, 2}}) check_rows(k, w, grid_rows(i, j, 0), by_label(k));
}

TEST(GridTable, LowerUpperWeightOnCylinderSeam) {
  const auto k = build_cylinder(6, 5);
  const auto w = weight_lower_upper(k, 1.0 / 3.0);
  for (auto [i, j] : {std::pair{0, 2}, std::pair{5, 2}, std::pair{3, 1}}) check_rows(k, w, grid_rows(i, j, 6), by_label(k));
}

TEST(TetraTable, RandomWeight) {
  const int i = 3, j = 3;
  const auto k = build_cylinder_with_tetrahedron(6, 6, {i, j});
  std::mt19937_64 rng(22);
  const auto w = weight_random(k, rng);
  check_rows(k, w, tetra_rows(), [&](const std::string& n) { return k.require_label(neighbour(n, i, j)); });
}

TEST(TetraTable, GroverWeight) {
  const int i = 2, j = 3;
  const auto k = build_cylinder_with_tetrahedron(5, 6, {i, j});
  const auto w = weight_grover(k);
  check_rows(k, w, tetra_rows(), [&](const std::string& n) { return k.require_label(neighbour(n, i, j)); });

  // Grover on a degree-3 facet: reflection -1/3, transmissions 2/3.
  const auto u = build_walk_operator(k, w);
  const BasisIndex a0 = DirectedBasis{k.require_label({i, j, 0}), 0}.flat();
  const auto col = column(u, a0);
  ASSERT_EQ(col.size(), 3u);
  EXPECT_NEAR(col.at(DirectedBasis{k.require_label({i, j, 0}), 1}.flat()).real(), -1.0 / 3.0, 1e-15);
  EXPECT_NEAR(col.at(DirectedBasis{k.require_label({i, j, 1}), 3}.flat()).real(), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(col.at(DirectedBasis{k.require_label({i, j, 3}), 0}.flat()).real(), 2.0 / 3.0, 1e-15);
}
