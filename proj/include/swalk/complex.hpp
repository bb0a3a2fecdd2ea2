#pragma once

/**
 * Admissible 2-dimensional simplicial complexes and the directed-simplex
 * basis the walk operates on.
 *
 * A complex stores its triangles in a canonical vertex order (a, b, c).  The
 * six directed 2-simplices over a triangle are addressed by a rotation index
 * l in [0, 6):
 *
 *     l = 0 [abc]   l = 1 [bca]   l = 2 [cab]
 *     l = 3 [acb]   l = 4 [cba]   l = 5 [bac]
 *
 * so l = 0..2 are the cyclic rotations of the canonical order and l = 3..5
 * the cyclic rotations of the reversed one.  The flat basis index of
 * (triangle t, rotation l) is 6 t + l.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace swalk {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using TriangleId = std::uint32_t;
using BasisIndex = std::uint32_t;
using DirectedEdgeIndex = std::uint32_t;

class ComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unoriented simplex: strictly increasing vertex ids.
template <std::size_t N>
struct Simplex {
  static_assert(N >= 1 && N <= 3, "dimension 0..2 only");
  std::array<VertexId, N> vertices{};

  static constexpr std::size_t dim = N - 1;

  static Simplex from_unsorted(std::array<VertexId, N> v) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < N; ++i) {
      if (v[i - 1] == v[i]) throw ComplexError("simplex with repeated vertex");
    }
    return Simplex{v};
  }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

using Edge = Simplex<2>;
using Triangle = Simplex<3>;

/// Ordered vertex tuple.  Its support is the sorted vertex set.
template <std::size_t N>
struct DirectedSimplex {
  std::array<VertexId, N> vertices{};

  Simplex<N> support() const { return Simplex<N>::from_unsorted(vertices); }

  friend bool operator==(const DirectedSimplex&, const DirectedSimplex&) = default;
};

using DirectedTriangle = DirectedSimplex<3>;
using DirectedEdge = DirectedSimplex<2>;

/// d̃_i [a_0 ... a_n] = [a_{i+1} ... a_n a_0 ... a_{i-1}].
template <std::size_t N>
DirectedSimplex<N - 1> face_map(const DirectedSimplex<N>& sigma, std::size_t i) {
  static_assert(N >= 2);
  if (i >= N) throw ComplexError("face index out of range");
  DirectedSimplex<N - 1> out;
  for (std::size_t k = 0; k + 1 < N; ++k) out.vertices[k] = sigma.vertices[(i + 1 + k) % N];
  return out;
}

/// Positions of the canonical order picked by rotation index l.
inline constexpr std::array<std::array<int, 3>, 6> kRotation = {{
    {0, 1, 2},
    {1, 2, 0},
    {2, 0, 1},
    {0, 2, 1},
    {2, 1, 0},
    {1, 0, 2},
}};

inline int rotation_of_positions(const std::array<int, 3>& pos) {
  for (int l = 0; l < 6; ++l) {
    if (kRotation[l] == pos) return l;
  }
  throw ComplexError("not a permutation of {0,1,2}");
}

struct DirectedBasis {
  TriangleId triangle = 0;
  int rotation = 0;

  BasisIndex flat() const { return 6 * triangle + static_cast<BasisIndex>(rotation); }
  static DirectedBasis from_flat(BasisIndex b) { return {b / 6, static_cast<int>(b % 6)}; }

  friend bool operator==(const DirectedBasis&, const DirectedBasis&) = default;
};

/// Grid label (i, j, k).  k = 0 lower, k = 1 upper; builders that attach
/// extra faces use k >= 2.
struct TriangleLabel {
  int i = 0;
  int j = 0;
  int k = 0;

  friend bool operator==(const TriangleLabel&, const TriangleLabel&) = default;
  friend auto operator<=>(const TriangleLabel&, const TriangleLabel&) = default;

  std::string to_string() const {
    return std::to_string(i) + ":" + std::to_string(j) + ":" + std::to_string(k);
  }
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 barycenter(const std::array<Point2, 3>& p) {
  return {(p[0].x + p[1].x + p[2].x) / 3.0, (p[0].y + p[1].y + p[2].y) / 3.0};
}

enum class ComplexKind { custom, grid, cylinder, cylinder_tetra, moebius };

inline std::string to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::grid: return "grid";
    case ComplexKind::cylinder: return "cylinder";
    case ComplexKind::cylinder_tetra: return "cylinder_tetra";
    case ComplexKind::moebius: return "moebius";
    case ComplexKind::custom: break;
  }
  return "custom";
}

/// Everything a builder hands to SimplicialComplex2D.
struct ComplexDescription {
  std::size_t vertex_count = 0;
  /// Canonical vertex orders; these fix what rotation index 0 means.
  std::vector<std::array<VertexId, 3>> triangles;
  /// Edges that are not faces of any triangle (allowed for homology work).
  std::vector<std::array<VertexId, 2>> extra_edges;
  std::vector<TriangleLabel> labels;             // empty, or one per triangle
  std::vector<Point2> vertex_coords;             // empty, or one per vertex
  std::vector<std::array<Point2, 3>> geometry;   // empty, or one per triangle
  ComplexKind kind = ComplexKind::custom;
  int columns = 0;  // R (or N for the grid patch)
  int rows = 0;     // N
};

/**
 * Immutable 2-dimensional simplicial complex with edge/triangle incidence,
 * the directed-simplex basis, and optional grid labels and planar geometry.
 *
 * Safe for concurrent read access after construction.
 */
class SimplicialComplex2D {
 public:
  explicit SimplicialComplex2D(ComplexDescription desc) : desc_(std::move(desc)) {
    const auto nt = desc_.triangles.size();
    if (!desc_.labels.empty() && desc_.labels.size() != nt)
      throw ComplexError("label count does not match triangle count");
    if (!desc_.geometry.empty() && desc_.geometry.size() != nt)
      throw ComplexError("geometry count does not match triangle count");
    if (!desc_.vertex_coords.empty() && desc_.vertex_coords.size() != desc_.vertex_count)
      throw ComplexError("embedding size does not match vertex count");

    triangle_lookup_.reserve(nt);
    triangle_edges_.resize(nt);
    for (TriangleId t = 0; t < nt; ++t) {
      const auto& tri = desc_.triangles[t];
      for (VertexId v : tri) {
        if (v >= desc_.vertex_count) throw ComplexError("vertex id out of range");
      }
      const auto key = Triangle::from_unsorted(tri);
      if (!triangle_lookup_.emplace(triangle_key(key), t).second)
        throw ComplexError("duplicate triangle");
      // Edge of the facet d̃_0 of rotation 0 is |bc|, then |ca|, |ab|.
      triangle_edges_[t] = {intern_edge(tri[1], tri[2]), intern_edge(tri[2], tri[0]),
                            intern_edge(tri[0], tri[1])};
    }
    for (const auto& e : desc_.extra_edges) {
      if (e[0] >= desc_.vertex_count || e[1] >= desc_.vertex_count)
        throw ComplexError("vertex id out of range");
      intern_edge(e[0], e[1]);
    }

    coface_offsets_.assign(edges_.size() + 1, 0);
    for (TriangleId t = 0; t < nt; ++t) {
      for (EdgeId e : triangle_edges_[t]) ++coface_offsets_[e + 1];
    }
    std::partial_sum(coface_offsets_.begin(), coface_offsets_.end(), coface_offsets_.begin());
    coface_list_.resize(coface_offsets_.back());
    {
      auto fill = coface_offsets_;
      for (TriangleId t = 0; t < nt; ++t) {
        for (EdgeId e : triangle_edges_[t]) coface_list_[fill[e]++] = t;
      }
    }

    if (!desc_.labels.empty()) {
      for (TriangleId t = 0; t < nt; ++t) {
        if (!label_lookup_.emplace(desc_.labels[t], t).second)
          throw ComplexError("duplicate triangle label");
      }
    }

    build_facet_members();
  }

  // -- sizes -------------------------------------------------------------
  std::size_t vertex_count() const { return desc_.vertex_count; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t triangle_count() const { return desc_.triangles.size(); }
  std::size_t basis_size() const { return 6 * triangle_count(); }
  std::size_t directed_edge_count() const { return 2 * edges_.size(); }

  ComplexKind kind() const { return desc_.kind; }
  int columns() const { return desc_.columns; }
  int rows() const { return desc_.rows; }
  const ComplexDescription& description() const { return desc_; }

  // -- simplices ---------------------------------------------------------
  const std::array<VertexId, 3>& canonical(TriangleId t) const { return desc_.triangles.at(t); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::array<EdgeId, 3>& triangle_edges(TriangleId t) const { return triangle_edges_.at(t); }

  /// Triangles having edge e as a face, ascending.
  std::span<const TriangleId> cofaces(EdgeId e) const {
    return {coface_list_.data() + coface_offsets_.at(e), coface_list_.data() + coface_offsets_.at(e + 1)};
  }
  std::size_t coface_degree(EdgeId e) const { return coface_offsets_.at(e + 1) - coface_offsets_[e]; }

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const {
    if (u == v) return std::nullopt;
    auto it = edge_lookup_.find(edge_key(std::min(u, v), std::max(u, v)));
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<TriangleId> find_triangle(std::array<VertexId, 3> v) const {
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2]) return std::nullopt;
    auto it = triangle_lookup_.find(triangle_key(Triangle{v}));
    if (it == triangle_lookup_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<EdgeId> boundary_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      if (coface_degree(e) == 1) out.push_back(e);
    }
    return out;
  }

  /// Triangles with at least one degree-1 edge.
  std::vector<TriangleId> boundary_triangles() const {
    std::vector<TriangleId> out;
    for (TriangleId t = 0; t < triangle_count(); ++t) {
      for (EdgeId e : triangle_edges_[t]) {
        if (coface_degree(e) == 1) {
          out.push_back(t);
          break;
        }
      }
    }
    return out;
  }

  std::size_t max_coface_degree() const {
    std::size_t m = 0;
    for (EdgeId e = 0; e < edges_.size(); ++e) m = std::max(m, coface_degree(e));
    return m;
  }

  // -- directed basis ----------------------------------------------------
  DirectedTriangle directed(BasisIndex b) const {
    const auto [t, l] = DirectedBasis::from_flat(b);
    const auto& c = desc_.triangles.at(t);
    const auto& pos = kRotation[l];
    return {{c[pos[0]], c[pos[1]], c[pos[2]]}};
  }

  std::optional<BasisIndex> basis_index(const DirectedTriangle& sigma) const {
    auto t = find_triangle(sigma.vertices);
    if (!t) return std::nullopt;
    const auto& c = desc_.triangles[*t];
    std::array<int, 3> pos{};
    for (int k = 0; k < 3; ++k) {
      pos[k] = static_cast<int>(std::find(c.begin(), c.end(), sigma.vertices[k]) - c.begin());
    }
    return DirectedBasis{*t, rotation_of_positions(pos)}.flat();
  }

  /// Directed edges are numbered 2 e + 0 for [u v] with u < v, 2 e + 1 for [v u].
  DirectedEdge directed_edge(DirectedEdgeIndex d) const {
    const auto& e = edges_.at(d / 2);
    if (d % 2 == 0) return {{e.vertices[0], e.vertices[1]}};
    return {{e.vertices[1], e.vertices[0]}};
  }

  std::optional<DirectedEdgeIndex> directed_edge_index(const DirectedEdge& tau) const {
    auto e = find_edge(tau.vertices[0], tau.vertices[1]);
    if (!e) return std::nullopt;
    return 2 * *e + (tau.vertices[0] < tau.vertices[1] ? 0u : 1u);
  }

  /// Index of the directed edge d̃_0 σ.
  DirectedEdgeIndex facet_of(BasisIndex b) const { return facet_.at(b); }

  /// All σ with d̃_0 σ = τ, ascending.
  std::span<const BasisIndex> facet_members(DirectedEdgeIndex tau) const {
    return {facet_members_.data() + facet_offsets_.at(tau),
            facet_members_.data() + facet_offsets_.at(tau + 1)};
  }

  // -- labels and geometry -----------------------------------------------
  bool has_labels() const { return !desc_.labels.empty(); }
  const TriangleLabel& label(TriangleId t) const { return desc_.labels.at(t); }

  std::optional<TriangleId> triangle_by_label(const TriangleLabel& label) const {
    auto it = label_lookup_.find(label);
    if (it == label_lookup_.end()) return std::nullopt;
    return it->second;
  }

  TriangleId require_label(const TriangleLabel& label) const {
    auto t = triangle_by_label(label);
    if (!t) throw ComplexError("unknown triangle label " + label.to_string());
    return *t;
  }

  bool has_embedding() const { return !desc_.vertex_coords.empty(); }
  bool has_geometry() const { return !desc_.geometry.empty() || has_embedding(); }
  const Point2& vertex_coord(VertexId v) const { return desc_.vertex_coords.at(v); }

  /// Planar corners of triangle t, in canonical order.
  std::array<Point2, 3> corners(TriangleId t) const {
    if (!desc_.geometry.empty()) return desc_.geometry.at(t);
    if (!has_embedding()) throw ComplexError("complex has no embedding");
    const auto& c = desc_.triangles.at(t);
    return {desc_.vertex_coords[c[0]], desc_.vertex_coords[c[1]], desc_.vertex_coords[c[2]]};
  }

  Point2 centroid(TriangleId t) const { return barycenter(corners(t)); }

 private:
  static std::uint64_t edge_key(VertexId u, VertexId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  static std::uint64_t triangle_key(const Triangle& t) {
    // 21 bits per vertex covers two million vertices.
    return (static_cast<std::uint64_t>(t.vertices[0]) << 42) |
           (static_cast<std::uint64_t>(t.vertices[1]) << 21) | t.vertices[2];
  }

  EdgeId intern_edge(VertexId u, VertexId v) {
    if (u == v) throw ComplexError("degenerate edge");
    if (u > v) std::swap(u, v);
    auto [it, inserted] = edge_lookup_.emplace(edge_key(u, v), static_cast<EdgeId>(edges_.size()));
    if (inserted) edges_.push_back(Edge{{u, v}});
    return it->second;
  }

  void build_facet_members() {
    const auto n = basis_size();
    facet_.resize(n);
    std::vector<std::uint32_t> counts(directed_edge_count() + 1, 0);
    for (BasisIndex b = 0; b < n; ++b) {
      const auto sigma = directed(b);
      const auto e = triangle_edges_[b / 6][position_of_edge(b)];
      const DirectedEdgeIndex d = 2 * e + (sigma.vertices[1] < sigma.vertices[2] ? 0u : 1u);
      facet_[b] = d;
      ++counts[d + 1];
    }
    facet_offsets_.assign(counts.begin(), counts.end());
    std::partial_sum(facet_offsets_.begin(), facet_offsets_.end(), facet_offsets_.begin());
    facet_members_.resize(n);
    auto fill = facet_offsets_;
    for (BasisIndex b = 0; b < n; ++b) facet_members_[fill[facet_[b]]++] = b;
  }

  // Which of the triangle's stored edges (|bc|, |ca|, |ab|) is d̃_0 of rotation l.
  static int position_of_edge(BasisIndex b) {
    // d̃_0 drops the first vertex; the first vertex is canonical position kRotation[l][0].
    // Edge slot s is opposite canonical vertex s.
    return kRotation[b % 6][0];
  }

  ComplexDescription desc_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, EdgeId> edge_lookup_;
  std::unordered_map<std::uint64_t, TriangleId> triangle_lookup_;
  std::map<TriangleLabel, TriangleId> label_lookup_;
  std::vector<std::array<EdgeId, 3>> triangle_edges_;
  std::vector<std::uint32_t> coface_offsets_;
  std::vector<TriangleId> coface_list_;
  std::vector<DirectedEdgeIndex> facet_;
  std::vector<std::uint32_t> facet_offsets_;
  std::vector<BasisIndex> facet_members_;
};

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

namespace detail {

enum class Wrap { none, periodic, twisted };

// R x N strip of unit squares, each split into lower (k = 0) and upper (k = 1)
// triangles.  Triangle id of label (i, j, k) is 2 (i N + j) + k.
inline ComplexDescription grid_strip(int cols, int rows, Wrap wrap) {
  ComplexDescription d;
  d.columns = cols;
  d.rows = rows;
  const int vcols = wrap == Wrap::none ? cols + 1 : cols;
  d.vertex_count = static_cast<std::size_t>(vcols) * (rows + 1);
  auto vid = [&](int i, int j) -> VertexId {
    if (i == cols && wrap == Wrap::periodic) i = 0;
    if (i == cols && wrap == Wrap::twisted) {
      i = 0;
      j = rows - j;
    }
    return static_cast<VertexId>(i * (rows + 1) + j);
  };
  d.vertex_coords.resize(d.vertex_count);
  for (int i = 0; i < vcols; ++i) {
    for (int j = 0; j <= rows; ++j) {
      d.vertex_coords[vid(i, j)] = {static_cast<double>(i), static_cast<double>(j)};
    }
  }
  const auto n = static_cast<std::size_t>(2) * cols * rows;
  d.triangles.reserve(n);
  d.labels.reserve(n);
  d.geometry.reserve(n);
  for (int i = 0; i < cols; ++i) {
    for (int j = 0; j < rows; ++j) {
      const double x = i, y = j;
      d.triangles.push_back({vid(i, j), vid(i + 1, j), vid(i, j + 1)});
      d.labels.push_back({i, j, 0});
      d.geometry.push_back({Point2{x, y}, Point2{x + 1, y}, Point2{x, y + 1}});
      d.triangles.push_back({vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)});
      d.labels.push_back({i, j, 1});
      d.geometry.push_back({Point2{x + 1, y}, Point2{x + 1, y + 1}, Point2{x, y + 1}});
    }
  }
  return d;
}

}  // namespace detail

/// N x N patch of the uniform triangulation of the plane; 2 N^2 triangles.
inline SimplicialComplex2D build_grid_patch(int n) {
  if (n < 1) throw ComplexError("grid patch needs N >= 1");
  auto d = detail::grid_strip(n, n, detail::Wrap::none);
  d.kind = ComplexKind::grid;
  return SimplicialComplex2D(std::move(d));
}

/// R x N strip with x-periodic identification.
inline SimplicialComplex2D build_cylinder(int r, int n) {
  if (r < 3) throw ComplexError("cylinder needs R >= 3");
  if (n < 1) throw ComplexError("cylinder needs N >= 1");
  auto d = detail::grid_strip(r, n, detail::Wrap::periodic);
  d.kind = ComplexKind::cylinder;
  return SimplicialComplex2D(std::move(d));
}

/**
 * Cylinder with the boundary of a tetrahedron glued onto the lower triangle
 * A = |abc| at grid position attach = (i, j).  The apex d is a new vertex;
 * faces B = |abd|, C = |bcd|, D = |cad| are appended with labels
 * (i, j, 2), (i, j, 3), (i, j, 4).
 */
inline SimplicialComplex2D build_cylinder_with_tetrahedron(int r, int n, std::pair<int, int> attach) {
  if (r < 3) throw ComplexError("cylinder needs R >= 3");
  if (n < 1) throw ComplexError("cylinder needs N >= 1");
  const auto [ai, aj] = attach;
  if (ai < 0 || ai >= r || aj < 0 || aj >= n) throw ComplexError("attach label out of range");
  auto d = detail::grid_strip(r, n, detail::Wrap::periodic);
  d.kind = ComplexKind::cylinder_tetra;
  const auto a_id = static_cast<std::size_t>(2 * (ai * n + aj));
  const auto abc = d.triangles[a_id];
  const auto geo = d.geometry[a_id];
  const auto apex = static_cast<VertexId>(d.vertex_count++);
  const Point2 apex_pos = barycenter(geo);
  d.vertex_coords.push_back(apex_pos);
  const VertexId a = abc[0], b = abc[1], c = abc[2];
  d.triangles.push_back({a, b, apex});
  d.triangles.push_back({b, c, apex});
  d.triangles.push_back({c, a, apex});
  d.labels.push_back({ai, aj, 2});
  d.labels.push_back({ai, aj, 3});
  d.labels.push_back({ai, aj, 4});
  d.geometry.push_back({geo[0], geo[1], apex_pos});
  d.geometry.push_back({geo[1], geo[2], apex_pos});
  d.geometry.push_back({geo[2], geo[0], apex_pos});
  return SimplicialComplex2D(std::move(d));
}

/**
 * R x N strip with the twisted identification (R, y) ~ (0, N - y).
 * Row j of the last column is glued to row N - 1 - j of column 0, which
 * reverses the rotation direction of states crossing the seam.
 */
inline SimplicialComplex2D build_moebius(int r, int n) {
  if (r < 3) throw ComplexError("Moebius band needs R >= 3");
  if (n < 3) throw ComplexError("Moebius band needs N >= 3");
  auto d = detail::grid_strip(r, n, detail::Wrap::twisted);
  d.kind = ComplexKind::moebius;
  return SimplicialComplex2D(std::move(d));
}

/// Complex of Fig. 1: |abc| and |dbc| sharing |bc|.  Vertices a=0, b=1, c=2, d=3.
inline SimplicialComplex2D build_two_triangles() {
  ComplexDescription d;
  d.vertex_count = 4;
  d.triangles = {{0, 1, 2}, {3, 1, 2}};
  d.vertex_coords = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  return SimplicialComplex2D(std::move(d));
}

/// Two triangles sharing |bc| plus |abd'| and |abd''|.
/// Vertices a=0, b=1, c=2, d=3, d'=4, d''=5.
inline SimplicialComplex2D build_tether_example() {
  ComplexDescription d;
  d.vertex_count = 6;
  d.triangles = {{0, 1, 2}, {3, 1, 2}, {0, 1, 4}, {0, 1, 5}};
  d.vertex_coords = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0.5, -1}, {0.5, -0.6}};
  return SimplicialComplex2D(std::move(d));
}

inline SimplicialComplex2D build_single_triangle() {
  ComplexDescription d;
  d.vertex_count = 3;
  d.triangles = {{0, 1, 2}};
  d.vertex_coords = {{0, 0}, {1, 0}, {0, 1}};
  return SimplicialComplex2D(std::move(d));
}

/// Shears unit-square grid coordinates onto the equilateral triangular lattice.
inline Point2 to_equilateral(Point2 p) { return {p.x + 0.5 * p.y, 0.5 * std::sqrt(3.0) * p.y}; }

/**
 * Order-3 label symmetry of the plane triangulation about the lower triangle
 * at `center`: rotates the equilateral picture by 120 degrees and permutes
 * the centre's vertices cyclically.  Lower triangles map to lower ones.
 */
inline TriangleLabel rotate_label_120(const TriangleLabel& l, std::pair<int, int> center) {
  const auto [ci, cj] = center;
  const int dx = l.i - ci, dy = l.j - cj;
  // Grid point p -> (ci + 1, cj) + L (p - (ci, cj)) with L = [[-1, -1], [1, 0]].
  const int qx = ci + 1 - dx - dy, qy = cj + dx;
  if (l.k == 0) return {qx - 1, qy, 0};
  if (l.k == 1) return {qx - 2, qy, 1};
  throw ComplexError("rotate_label_120 applies to grid labels only");
}

// ---------------------------------------------------------------------------
// Structural checks
// ---------------------------------------------------------------------------

struct AdmissibilityReport {
  bool strongly_connected = false;
  bool every_facet_has_coface = false;
  std::size_t max_coface_degree = 0;

  bool admissible() const { return strongly_connected && every_facet_has_coface; }
};

inline AdmissibilityReport check_admissible(const SimplicialComplex2D& k) {
  AdmissibilityReport r;
  r.max_coface_degree = k.max_coface_degree();

  r.every_facet_has_coface = k.triangle_count() > 0;
  std::vector<bool> vertex_used(k.vertex_count(), false);
  for (EdgeId e = 0; e < k.edge_count(); ++e) {
    if (k.coface_degree(e) == 0) r.every_facet_has_coface = false;
    for (VertexId v : k.edge(e).vertices) vertex_used[v] = true;
  }
  if (std::find(vertex_used.begin(), vertex_used.end(), false) != vertex_used.end())
    r.every_facet_has_coface = false;

  // Union-find over triangles glued along edges.
  std::vector<TriangleId> parent(k.triangle_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](TriangleId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e = 0; e < k.edge_count(); ++e) {
    const auto cf = k.cofaces(e);
    for (std::size_t i = 1; i < cf.size(); ++i) parent[find(cf[i])] = find(cf[0]);
  }
  std::size_t components = 0;
  for (TriangleId t = 0; t < k.triangle_count(); ++t) components += (find(t) == t);
  r.strongly_connected = components == 1;
  return r;
}

struct OrientabilityReport {
  bool orientable = true;
  /// Edges with three or more cofaces; ignored by the parity check.
  std::vector<EdgeId> skipped_edges;
  /// +1 / -1 per triangle relative to its canonical order, when orientable.
  std::vector<int> orientation;
};

/**
 * Two-colouring of the dual graph over degree-2 edges.  Triangle t with sign
 * s_t induces direction s_t * dir_t(e) on its edge e; a consistent
 * orientation needs opposite induced directions on every shared edge.
 */
inline OrientabilityReport orientability_report(const SimplicialComplex2D& k) {
  OrientabilityReport r;
  const auto nt = k.triangle_count();
  r.orientation.assign(nt, 0);

  // +1 when the canonical cycle a->b->c->a traverses e from lower to higher id.
  auto induced = [&](TriangleId t, EdgeId e) {
    const auto& c = k.canonical(t);
    for (int s = 0; s < 3; ++s) {
      const VertexId u = c[s], v = c[(s + 1) % 3];
      const auto& ev = k.edge(e).vertices;
      if ((u == ev[0] && v == ev[1])) return 1;
      if ((u == ev[1] && v == ev[0])) return -1;
    }
    throw ComplexError("edge is not a face of triangle");
  };

  for (EdgeId e = 0; e < k.edge_count(); ++e) {
    if (k.coface_degree(e) >= 3) r.skipped_edges.push_back(e);
  }

  for (TriangleId seed = 0; seed < nt; ++seed) {
    if (r.orientation[seed] != 0) continue;
    r.orientation[seed] = 1;
    std::queue<TriangleId> q;
    q.push(seed);
    while (!q.empty()) {
      const TriangleId t = q.front();
      q.pop();
      for (EdgeId e : k.triangle_edges(t)) {
        const auto cf = k.cofaces(e);
        if (cf.size() != 2) continue;
        const TriangleId u = cf[0] == t ? cf[1] : cf[0];
        const int want = -r.orientation[t] * induced(t, e) * induced(u, e);
        if (r.orientation[u] == 0) {
          r.orientation[u] = want;
          q.push(u);
        } else if (r.orientation[u] != want) {
          r.orientable = false;
        }
      }
    }
  }
  if (!r.orientable) r.orientation.clear();
  return r;
}

inline bool check_orientability(const SimplicialComplex2D& k) { return orientability_report(k).orientable; }

/// BFS distance in the triangle adjacency graph from `from` to every triangle.
inline std::vector<int> dual_distances(const SimplicialComplex2D& k, TriangleId from) {
  std::vector<int> dist(k.triangle_count(), -1);
  std::queue<TriangleId> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    const TriangleId t = q.front();
    q.pop();
    for (EdgeId e : k.triangle_edges(t)) {
      for (TriangleId u : k.cofaces(e)) {
        if (dist[u] < 0) {
          dist[u] = dist[t] + 1;
          q.push(u);
        }
      }
    }
  }
  return dist;
}

/// Smallest dual distance from `from` to a triangle carrying a boundary edge;
/// -1 when the complex has no boundary reachable from `from`.
inline int dual_distance_to_boundary(const SimplicialComplex2D& k, TriangleId from) {
  const auto dist = dual_distances(k, from);
  int best = -1;
  for (TriangleId t : k.boundary_triangles()) {
    if (dist[t] >= 0 && (best < 0 || dist[t] < best)) best = dist[t];
  }
  return best;
}

/// Diameter of the triangle adjacency graph (exact; BFS from every triangle
/// is quadratic, so callers keep this to small complexes).
inline int dual_diameter(const SimplicialComplex2D& k) {
  int diam = 0;
  for (TriangleId t = 0; t < k.triangle_count(); ++t) {
    for (int d : dual_distances(k, t)) diam = std::max(diam, d);
  }
  return diam;
}

}  // namespace swalk
