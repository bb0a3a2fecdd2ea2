#pragma once

// CSV, SVG and JSON writers.  Numbers are printed with %.17g so output bytes
// depend only on the computed values.

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "swalk/complex.hpp"
#include "swalk/measure.hpp"
#include "swalk/walk.hpp"
#include "swalk/weight.hpp"

namespace swalk::io {

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Label columns "i,j,k"; unlabeled complexes use "t,0,0" with t the triangle id.
inline std::string label_columns(const SimplicialComplex2D& k, TriangleId t) {
  if (!k.has_labels()) return std::to_string(t) + ",0,0";
  const auto& l = k.label(t);
  return std::to_string(l.i) + "," + std::to_string(l.j) + "," + std::to_string(l.k);
}

inline std::string label_text(const SimplicialComplex2D& k, TriangleId t) {
  return k.has_labels() ? k.label(t).to_string() : std::to_string(t);
}

/// Parses "i:j:k" (or "i,j,k").
inline TriangleLabel parse_label(const std::string& s) {
  TriangleLabel l;
  char sep1 = 0, sep2 = 0;
  std::istringstream is(s);
  if (!(is >> l.i >> sep1 >> l.j >> sep2 >> l.k) || (sep1 != ':' && sep1 != ',') || sep1 != sep2 ||
      is.peek() != std::char_traits<char>::eof()) {
    throw std::invalid_argument("bad triangle label '" + s + "' (expected i:j:k)");
  }
  return l;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

inline void write_probability_header(std::ostream& os) { os << "m,i,j,k,mu\n"; }

/// Rows for triangles with nonzero probability.
inline void write_probability_rows(std::ostream& os, const SimplicialComplex2D& k, const ProbabilityDistribution& p) {
  for (TriangleId t = 0; t < p.mu.size(); ++t) {
    if (p.mu[t] == 0.0) continue;
    os << p.step << ',' << label_columns(k, t) << ',' << fmt(p.mu[t]) << '\n';
  }
}

inline void write_variance_csv(std::ostream& os, const std::vector<VarianceSample>& v) {
  os << "n,Vn,Vn_over_n2\n";
  for (const auto& s : v) os << s.n << ',' << fmt(s.vn) << ',' << fmt(s.vn_over_n2) << '\n';
}

inline void write_timeavg_csv(std::ostream& os, const SimplicialComplex2D& k,
                              const std::vector<TimeAverageSample>& samples) {
  os << "T,label,mu_bar\n";
  for (const auto& s : samples) os << s.horizon << ',' << label_text(k, s.target) << ',' << fmt(s.mu_bar) << '\n';
}

inline void write_state_header(std::ostream& os) { os << "m,i,j,k,l,re,im\n"; }

inline void write_state_rows(std::ostream& os, const SimplicialComplex2D& k, std::size_t m, const StateVector& f) {
  for (BasisIndex b = 0; b < f.size(); ++b) {
    if (f[b] == cplx{0.0, 0.0}) continue;
    os << m << ',' << label_columns(k, b / 6) << ',' << b % 6 << ',' << fmt(f[b].real()) << ','
       << fmt(f[b].imag()) << '\n';
  }
}

/// Reads a weight table with header `i,j,k,l,re,im`; every basis element
/// must be listed.  Unlabeled complexes use i = triangle id, j = k = 0.
inline WeightAssignment read_weight_csv(std::istream& is, const SimplicialComplex2D& k) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("i,j,k,l,re,im", 0) != 0)
    throw std::invalid_argument("weight file must start with header i,j,k,l,re,im");
  std::vector<cplx> w(k.basis_size(), cplx{0.0, 0.0});
  std::vector<char> seen(k.basis_size(), 0);
  std::size_t row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    TriangleLabel lab;
    int l = 0;
    double re = 0.0, im = 0.0;
    if (!(ls >> lab.i >> lab.j >> lab.k >> l >> re >> im) || l < 0 || l > 5)
      throw std::invalid_argument("weight file: malformed row " + std::to_string(row));
    TriangleId t = 0;
    if (k.has_labels()) {
      t = k.require_label(lab);
    } else {
      if (lab.i < 0 || static_cast<std::size_t>(lab.i) >= k.triangle_count())
        throw std::invalid_argument("weight file: triangle id out of range on row " + std::to_string(row));
      t = static_cast<TriangleId>(lab.i);
    }
    const BasisIndex b = DirectedBasis{t, l}.flat();
    w[b] = {re, im};
    seen[b] = 1;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw std::invalid_argument("weight file does not cover every directed simplex");
  return WeightAssignment(std::move(w));
}

// ---------------------------------------------------------------------------
// SVG heatmap
// ---------------------------------------------------------------------------

inline constexpr double kHeatmapFloor = 1e-12;

/// Triangles filled by log10(μ) on a floor of 1e-12; triangles at or below
/// the floor are left to the background.
inline void write_heatmap_svg(std::ostream& os, const SimplicialComplex2D& k, const ProbabilityDistribution& p) {
  if (!k.has_geometry()) throw std::invalid_argument("heatmap needs an embedded complex");
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (TriangleId t = 0; t < k.triangle_count(); ++t) {
    for (const auto& c : k.corners(t)) {
      const Point2 q = to_equilateral(c);
      xmin = std::min(xmin, q.x);
      xmax = std::max(xmax, q.x);
      ymin = std::min(ymin, q.y);
      ymax = std::max(ymax, q.y);
    }
  }
  const double lo = std::log10(kHeatmapFloor);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(xmin) << ' ' << fmt(-ymax) << ' '
     << fmt(xmax - xmin) << ' ' << fmt(ymax - ymin) << "\">\n";
  os << "<!-- step " << p.step << ", fill = log10(mu) on [-12, 0] -->\n";
  os << "<rect x=\"" << fmt(xmin) << "\" y=\"" << fmt(-ymax) << "\" width=\"" << fmt(xmax - xmin) << "\" height=\""
     << fmt(ymax - ymin) << "\" fill=\"#000000\"/>\n";
  for (TriangleId t = 0; t < k.triangle_count(); ++t) {
    if (p.mu[t] <= kHeatmapFloor) continue;
    const double s = std::clamp((std::log10(p.mu[t]) - lo) / -lo, 0.0, 1.0);
    // black -> red -> yellow -> white
    const int r = static_cast<int>(std::lround(255 * std::min(1.0, 3 * s)));
    const int g = static_cast<int>(std::lround(255 * std::clamp(3 * s - 1, 0.0, 1.0)));
    const int b = static_cast<int>(std::lround(255 * std::clamp(3 * s - 2, 0.0, 1.0)));
    char color[8];
    std::snprintf(color, sizeof color, "#%02x%02x%02x", r, g, b);
    os << "<polygon points=\"";
    const auto c = k.corners(t);
    for (int v = 0; v < 3; ++v) {
      const Point2 q = to_equilateral(c[v]);
      os << (v ? " " : "") << fmt(q.x) << ',' << fmt(-q.y);
    }
    os << "\" fill=\"" << color << "\"/>\n";
  }
  os << "</svg>\n";
}

// ---------------------------------------------------------------------------
// Complex export
// ---------------------------------------------------------------------------

/// {vertices, triangles, labels, embedding, boundary_edges}
inline nlohmann::json complex_to_json(const SimplicialComplex2D& k) {
  nlohmann::json j;
  auto vertices = nlohmann::json::array();
  for (VertexId v = 0; v < k.vertex_count(); ++v) vertices.push_back(v);
  j["vertices"] = std::move(vertices);
  auto tris = nlohmann::json::array();
  for (TriangleId t = 0; t < k.triangle_count(); ++t) {
    const auto& c = k.canonical(t);
    tris.push_back({c[0], c[1], c[2]});
  }
  j["triangles"] = std::move(tris);
  auto labels = nlohmann::json::array();
  if (k.has_labels()) {
    for (TriangleId t = 0; t < k.triangle_count(); ++t) {
      const auto& l = k.label(t);
      labels.push_back({l.i, l.j, l.k});
    }
  }
  j["labels"] = std::move(labels);
  auto emb = nlohmann::json::array();
  if (k.has_embedding()) {
    for (VertexId v = 0; v < k.vertex_count(); ++v) emb.push_back({k.vertex_coord(v).x, k.vertex_coord(v).y});
  }
  j["embedding"] = std::move(emb);
  auto bd = nlohmann::json::array();
  for (EdgeId e : k.boundary_edges()) bd.push_back({k.edge(e).vertices[0], k.edge(e).vertices[1]});
  j["boundary_edges"] = std::move(bd);
  return j;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  return os;
}

}  // namespace swalk::io
