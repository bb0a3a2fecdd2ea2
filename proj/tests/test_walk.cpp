#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace swalk;
using swalk::test::DenseOracle;
using swalk::test::Mat;

namespace {

std::vector<SimplicialComplex2D> oracle_complexes() {
  std::vector<SimplicialComplex2D> out;
  out.push_back(build_single_triangle());
  out.push_back(build_two_triangles());
  out.push_back(build_tether_example());
  out.push_back(build_grid_patch(2));
  out.push_back(build_cylinder(3, 2));
  out.push_back(build_cylinder_with_tetrahedron(3, 2, {1, 0}));
  out.push_back(build_moebius(3, 3));
  return out;
}

const std::array<std::string, 6> kWords = {"abc", "bca", "cab", "acb", "cba", "bac"};

}  // namespace

TEST(Permutation, ParseAndCompose) {
  const auto c = PermutationSpec::cyclic();
  EXPECT_EQ(c.word(), "bca");
  EXPECT_EQ(c.order(), 3);
  EXPECT_EQ(PermutationSpec::parse("acb").order(), 2);
  EXPECT_EQ(PermutationSpec::parse("abc").order(), 1);
  EXPECT_THROW(PermutationSpec::parse("abb"), std::invalid_argument);
  EXPECT_THROW(PermutationSpec::parse("ab"), std::invalid_argument);
  for (const auto& w : kWords) {
    const auto p = PermutationSpec::parse(w);
    EXPECT_EQ(p.word(), w);
    for (int l = 0; l < 6; ++l) EXPECT_EQ(p.inverse().apply_rotation(p.apply_rotation(l)), l);
  }
  const DirectedTriangle s{{4, 5, 6}};
  EXPECT_EQ(c.apply(s).vertices, (std::array<VertexId, 3>{5, 6, 4}));
  EXPECT_EQ(PermutationSpec::parse("acb").apply(s).vertices, (std::array<VertexId, 3>{4, 6, 5}));
}

TEST(Permutation, PermuteMatchesTupleAction) {
  const auto k = build_cylinder(3, 2);
  for (const auto& w : kWords) {
    const auto p = PermutationSpec::parse(w);
    for (BasisIndex b = 0; b < k.basis_size(); ++b) {
      EXPECT_EQ(k.directed(permute(p, b)), p.apply(k.directed(b)));
    }
  }
}

TEST(WalkOperator, MatchesDenseOracle) {
  std::mt19937_64 rng(1);
  for (const auto& k : oracle_complexes()) {
    for (const auto& word : kWords) {
      const auto pi = PermutationSpec::parse(word);
      const auto w = weight_random(k, rng);
      const auto u = build_walk_operator(k, w, pi);
      const DenseOracle o(k, w, pi.map());
      EXPECT_LE((swalk::test::to_dense(u) - o.u).cwiseAbs().maxCoeff(), 1e-14) << word;
    }
  }
}

TEST(WalkOperator, TwoTrianglesColumn) {
  // U δ_[abc] = (2|w[abc]|^2 - 1) δ_[bca] + 2 conj(w[abc]) w[dbc] δ_[bcd]
  const auto k = build_two_triangles();
  std::mt19937_64 rng(2);
  const auto w = weight_random(k, rng);
  const auto u = build_walk_operator(k, w);
  const BasisIndex abc = *k.basis_index({{0, 1, 2}}), bca = *k.basis_index({{1, 2, 0}});
  const BasisIndex dbc = *k.basis_index({{3, 1, 2}}), bcd = *k.basis_index({{1, 2, 3}});
  EXPECT_NEAR(std::abs(u.at(bca, abc) - (2.0 * std::norm(w[abc]) - 1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u.at(bcd, abc) - 2.0 * std::conj(w[abc]) * w[dbc]), 0.0, 1e-15);
  EXPECT_EQ(u.column_counts()[abc], 2u);
}

TEST(WalkOperator, UniformTwoTrianglesIsPureTransmission) {
  const auto k = build_two_triangles();
  const auto u = build_walk_operator(k, weight_uniform(k));
  const BasisIndex abc = *k.basis_index({{0, 1, 2}}), bcd = *k.basis_index({{1, 2, 3}});
  EXPECT_NEAR(std::abs(u.at(bcd, abc) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(u.column_counts()[abc], 1u);
}

TEST(WalkOperator, BoundaryFacetActsAsShift) {
  // |w| = 1 on a degree-1 facet, so U δ_σ = δ_{πσ}
  const auto k = build_single_triangle();
  const auto u = build_walk_operator(k, weight_uniform(k));
  for (BasisIndex b = 0; b < 6; ++b) {
    const BasisIndex target = permute(PermutationSpec::cyclic(), b);
    EXPECT_NEAR(std::abs(u.at(target, b) - 1.0), 0.0, 1e-15);
    EXPECT_EQ(u.column_counts()[b], 1u);
  }
}

TEST(WalkOperator, ApplyChecksDimension) {
  const auto k = build_two_triangles();
  const auto u = build_walk_operator(k, weight_uniform(k));
  EXPECT_THROW(apply(u, StateVector(6)), std::invalid_argument);
  EXPECT_THROW(Evolution(u, StateVector(18)), std::invalid_argument);
}

TEST(WalkOperator, RejectsInvalidWeight) {
  const auto k = build_cylinder_with_tetrahedron(3, 2, {0, 0});
  EXPECT_THROW(build_walk_operator(k, uniform_weight_values(k)), WeightError);
}

TEST(WalkOperator, WorkerCountDoesNotChangeBits) {
  const auto k = build_cylinder(6, 60);
  std::mt19937_64 rng(3);
  const auto u = build_walk_operator(k, weight_random(k, rng));
  const auto f = random_state(k.basis_size(), rng);
  StateVector a(f.size()), b(f.size());
  u.apply_into(f.amplitudes(), a.amplitudes(), 1);
  u.apply_into(f.amplitudes(), b.amplitudes(), 4);
  for (BasisIndex i = 0; i < f.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

// -- operator identities ------------------------------------------------

TEST(Identities, FaceAdjointness) {
  std::mt19937_64 rng(4);
  for (const auto& k : oracle_complexes()) {
    const auto w = weight_random(k, rng);
    const DenseOracle o(k, w, {1, 2, 0});
    for (int i = 0; i < 3; ++i) EXPECT_LE((o.d_star[i] - o.d[i].adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    // matrix-free d_0 against <d_0 f, g> = <f, d_0^* g>
    const auto f = swalk::test::random_vector(k.basis_size(), rng);
    const auto g = swalk::test::random_vector(k.directed_edge_count(), rng);
    const auto lhs = swalk::test::dot(apply_d0(k, w, f), g);
    const auto rhs = swalk::test::dot(f, apply_d0_adjoint(k, w, g));
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
  }
}

TEST(Identities, CoisometryOnFacetsWithCofaces) {
  std::mt19937_64 rng(5);
  for (const auto& k : oracle_complexes()) {
    const auto w = weight_random(k, rng);
    const DenseOracle o(k, w, {1, 2, 0});
    for (int i = 0; i < 3; ++i) {
      const Mat p = o.d[i] * o.d_star[i];
      EXPECT_LE((p - Mat::Identity(p.rows(), p.cols())).cwiseAbs().maxCoeff(), 1e-14);
    }
  }
}

TEST(Identities, CoinIsAnInvolution) {
  std::mt19937_64 rng(6);
  for (const auto& k : oracle_complexes()) {
    const auto w = weight_random(k, rng);
    const auto f = swalk::test::random_vector(k.basis_size(), rng);
    const auto twice = apply_coin(k, w, apply_coin(k, w, f));
    for (std::size_t b = 0; b < f.size(); ++b) EXPECT_NEAR(std::abs(twice[b] - f[b]), 0.0, 1e-13);
  }
}

TEST(Identities, ShiftCyclesTheFaceAdjoints) {
  // S_π d_1^* = d_0^*,  S_π d_2^* = d_1^*,  S_π d_0^* = d_2^*  for the cyclic π
  std::mt19937_64 rng(7);
  for (const auto& k : oracle_complexes()) {
    const auto w = weight_random(k, rng);
    const DenseOracle o(k, w, {1, 2, 0});
    EXPECT_LE((o.shift * o.d_star[1] - o.d_star[0]).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LE((o.shift * o.d_star[2] - o.d_star[1]).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LE((o.shift * o.d_star[0] - o.d_star[2]).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(Identities, OperatorFactorsAsShiftTimesCoin) {
  std::mt19937_64 rng(8);
  const auto k = build_cylinder_with_tetrahedron(3, 3, {1, 1});
  const auto w = weight_random(k, rng);
  for (const auto& word : kWords) {
    const auto pi = PermutationSpec::parse(word);
    const auto u = build_walk_operator(k, w, pi);
    const auto f = random_state(k.basis_size(), rng);
    const auto direct = apply(u, f);
    const auto split = apply_shift(pi, apply_coin(k, w, f.amplitudes()));
    for (BasisIndex b = 0; b < f.size(); ++b) EXPECT_NEAR(std::abs(direct[b] - split[b]), 0.0, 1e-14);
  }
}

TEST(Identities, Unitarity) {
  std::mt19937_64 rng(9);
  for (const auto& k : oracle_complexes()) {
    const auto w = weight_random(k, rng);
    const Mat u = swalk::test::to_dense(build_walk_operator(k, w));
    const Mat id = Mat::Identity(u.rows(), u.cols());
    EXPECT_LE((u.adjoint() * u - id).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LE((u * u.adjoint() - id).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(Identities, InnerProductsPreserved) {
  std::mt19937_64 rng(10);
  const auto k = build_grid_patch(4);
  const auto u = build_walk_operator(k, weight_lower_upper(k, 1.0 / 3.0));
  for (int rep = 0; rep < 20; ++rep) {
    const auto f = random_state(k.basis_size(), rng), g = random_state(k.basis_size(), rng);
    EXPECT_NEAR(std::abs(inner(apply(u, f), apply(u, g)) - inner(f, g)), 0.0, 1e-12);
  }
}

// -- evolution -------------------------------------------------------------

TEST(Evolution, NormConservedOverLongRun) {
  const auto k = build_cylinder(3, 50);
  std::mt19937_64 rng(11);
  const auto u = build_walk_operator(k, weight_random(k, rng));
  double worst = 0.0;
  evolve(u, random_state(k.basis_size(), rng), 2000,
         [&](std::size_t, const StateVector& f) { worst = std::max(worst, std::abs(f.norm() - 1.0)); });
  EXPECT_LE(worst, 1e-9);
}

TEST(Evolution, ZeroStepsReturnsInitialState) {
  const auto k = build_two_triangles();
  const auto u = build_walk_operator(k, weight_uniform(k));
  const auto f0 = initial_state_symmetric(k, 0);
  const auto f = evolve(u, f0, 0);
  for (BasisIndex b = 0; b < f.size(); ++b) EXPECT_EQ(f[b], f0[b]);
}

TEST(Evolution, ObserverCadence) {
  const auto k = build_grid_patch(3);
  const auto u = build_walk_operator(k, weight_uniform(k));
  std::vector<std::size_t> seen;
  evolve(u, initial_state_single(k, 0), 10, [&](std::size_t m, const StateVector&) { seen.push_back(m); }, 4);
  EXPECT_EQ(seen, (std::vector<std::size_t>{0, 4, 8, 10}));
}

TEST(Evolution, MatchesRepeatedDenseProduct) {
  std::mt19937_64 rng(12);
  const auto k = build_cylinder(3, 2);
  const auto w = weight_random(k, rng);
  const auto u = build_walk_operator(k, w);
  const DenseOracle o(k, w, {1, 2, 0});
  const auto f0 = random_state(k.basis_size(), rng);
  swalk::test::Vec v = swalk::test::to_eigen(f0);
  for (int m = 0; m < 25; ++m) v = o.u * v;
  const auto f = evolve(u, f0, 25);
  EXPECT_LE((swalk::test::to_eigen(f) - v).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Evolution, BoundaryGuard) {
  const auto k = build_grid_patch(8);
  const auto u = build_walk_operator(k, weight_lower_upper(k, 1.0 / 3.0));
  const TriangleId start = k.require_label({4, 4, 0});
  const auto guard = BoundaryGuard::for_complex(k);
  EXPECT_NO_THROW(evolve(u, initial_state_symmetric(k, start), 2, {}, 1, guard));
  try {
    evolve(u, initial_state_symmetric(k, start), 50, {}, 1, guard);
    FAIL() << "guard did not fire";
  } catch (const BoundaryReached& e) {
    EXPECT_GT(e.step(), 2u);
    const auto& b = k.boundary_triangles();
    EXPECT_NE(std::find(b.begin(), b.end(), e.triangle()), b.end());
  }
  EXPECT_THROW(Evolution(u, initial_state_single(k, 0), guard), BoundaryReached);
}

TEST(InitialStates, AreUnitVectors) {
  const auto k = build_grid_patch(2);
  for (const auto& f : {initial_state_symmetric(k, 3), initial_state_single(k, 3, 4), initial_state_pair_cyclic(k, 3),
                        initial_state_pair_swap(k, 3)}) {
    EXPECT_NEAR(f.norm(), 1.0, 1e-15);
    for (BasisIndex b = 0; b < f.size(); ++b) {
      if (b / 6 != 3) {
        EXPECT_EQ(f[b], cplx(0.0, 0.0));
      }
    }
  }
  EXPECT_EQ(initial_state_single(k, 1, 2)[8], cplx(1.0, 0.0));
  EXPECT_NEAR(initial_state_pair_swap(k, 0)[3].real(), 1.0 / std::sqrt(2.0), 1e-16);
}
