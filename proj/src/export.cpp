#include "helix/export.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace helix {
namespace {

Json pair_json(int a, int b) { return Json::array({a, b}); }

Json class_detail(const LoopClass& c) {
  struct {
    Json operator()(const VertexLink& v) const { return Json{{"vertex", v.vertex}}; }
    Json operator()(const EdgePairQuad& q) const {
      Json edges = Json::array();
      for (const EdgeId e : q.edges) {
        const auto [a, b] = tet::edge_vertices(e);
        edges.push_back(pair_json(a, b));
      }
      return Json{{"separated_edges", edges}};
    }
    Json operator()(const Spiral& s) const { return Json{{"k", s.k}}; }
  } visitor;
  return std::visit(visitor, c);
}

Json trace_json(const CollapseTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(pair_json(s.removed, s.witness));
  return steps;
}

Json core_json(const CompatibilityGraph& core, const std::vector<std::pair<int, int>>& antipodes) {
  Json out = graph_json(core);
  const auto n = recognize_cross_polytope(core);
  out["cross_polytope"] = n ? Json(*n) : Json(nullptr);
  Json pairs = Json::array();
  for (const auto& [a, b] : antipodes) pairs.push_back(pair_json(a, b));
  out["antipodes"] = pairs;
  return out;
}

std::string fmt(double x) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << x;
  return s.str();
}

}  // namespace

Json loop_json(const NormalLoop& loop, int id) {
  Json out;
  out["schema"] = kSchemaVersion;
  out["id"] = id;
  out["coords"] = loop.coords;
  out["length"] = loop.length();
  const LoopClass cls = classify_loop(loop);
  out["class"] = class_name(cls);
  out["class_detail"] = class_detail(cls);
  out["edge_weights"] = loop.weights();
  out["orbit_size"] = orbit_size(loop.coords);
  Json traversal = Json::array();
  for (const auto& c : loop.traversal) traversal.push_back(pair_json(c.edge.value, c.position));
  out["traversal"] = traversal;
  return out;
}

Json chord_diagram_json(const ChordFamilies& f) {
  const OffsetInfo info = offset_info(f);
  Json out;
  out["schema"] = kSchemaVersion;
  out["k"] = f.k;
  out["offset"] = info.offset;
  if (info.degenerate) out["degenerate"] = true;
  for (const Side side : {Side::V, Side::W}) {
    Json chords = Json::array();
    for (const auto& c : f.family(side)) chords.push_back(pair_json(c.a, c.b));
    out[side == Side::V ? "V" : "W"] = chords;
  }
  out["central_points"] = {{"V", info.v_central}, {"W", info.w_central}};
  if (!f.labeling.edge_of.empty()) {
    Json edges = Json::array();
    for (const EdgeId e : f.labeling.edge_of) edges.push_back(e.value);
    out["edge_of"] = edges;
  }
  return out;
}

Json homology_json(const HomologyProfile& h) {
  Json out;
  if (h.empty) out["empty"] = true;
  out["betti"] = h.betti;
  Json torsion = Json::array();
  for (const auto& level : h.torsion) {
    Json t = Json::array();
    for (const auto& d : level) t.push_back(to_string(d));
    torsion.push_back(t);
  }
  out["torsion"] = torsion;
  return out;
}

Json graph_json(const CompatibilityGraph& g) {
  Json out;
  out["vertices"] = g.ids();
  Json edges = Json::array();
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      if (g.adjacent(i, j)) edges.push_back(pair_json(g.id(i), g.id(j)));
    }
  }
  out["edges"] = edges;
  return out;
}

Json complex_json(const FlagComplex& c) {
  Json out;
  out["schema"] = kSchemaVersion;
  out["empty"] = c.empty();
  Json chords = Json::array();
  for (const auto& ch : c.chords) {
    chords.push_back(Json{{"side", ch.side == Side::V ? "V" : "W"}, {"endpoints", pair_json(ch.a, ch.b)}});
  }
  out["chords"] = chords;
  out["graph"] = graph_json(c.graph);
  return out;
}

Json simplices_json(const std::vector<Simplex>& simplices) {
  Json out = Json::array();
  for (const auto& s : simplices) out.push_back(s);
  return out;
}

Json certificate_json(const IndexResult& r) {
  Json out;
  out["schema"] = kSchemaVersion;
  out["result"] = result_name(r);
  struct Visitor {
    Json& out;
    void operator()(const IndexZero&) const {
      out["n"] = 0;
      out["empty"] = true;
      out["collapse"] = Json::array();
      out["core"] = nullptr;
      out["homology"] = homology_json(reduced_homology({}));
    }
    void operator()(const IndexCertified& c) const {
      out["n"] = c.n;
      out["collapse"] = trace_json(c.certificate.trace);
      out["core"] = core_json(c.certificate.trace.core, c.certificate.antipodes);
      out["homology"] = homology_json(c.certificate.homology);
    }
    void operator()(const NotMinimal& c) const {
      out["n"] = nullptr;
      out["collapse"] = trace_json(c.trace);
      out["core"] = core_json(c.trace.core, {});
      out["homology"] = homology_json(homology(c.trace.core));
    }
    void operator()(const Indeterminate& c) const {
      out["n"] = nullptr;
      out["collapse"] = trace_json(c.trace);
      out["core"] = core_json(c.trace.core, {});
      out["homology"] = homology_json(c.core_homology);
      out["lowest_nonzero"] = c.lowest_nonzero ? Json(*c.lowest_nonzero) : Json(nullptr);
    }
  };
  std::visit(Visitor{out}, r);
  return out;
}

Json oracle_report_json(const oracle::OracleReport& r) {
  Json out;
  out["subject"] = r.subject;
  out["oracle"] = r.oracle_value;
  out["engine"] = r.engine_value;
  out["agree"] = r.agree;
  return out;
}

std::string chord_svg(const ChordFamilies& f) {
  const int n = f.labeling.n_points;
  const double cx = 200, cy = 200, radius = 150, label_radius = 172;
  auto at = [&](int label, double r) {
    const double theta = -std::numbers::pi / 2 + 2 * std::numbers::pi * (label - 1) / n;
    return std::pair(cx + r * std::cos(theta), cy + r * std::sin(theta));
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  svg << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(radius)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (const Side side : {Side::V, Side::W}) {
    const char* style = side == Side::V ? "stroke=\"#1f4e9c\" stroke-width=\"1.5\""
                                        : "stroke=\"#b22222\" stroke-width=\"1.5\" stroke-dasharray=\"5,3\"";
    for (const auto& c : f.family(side)) {
      const auto [x1, y1] = at(c.a, radius);
      const auto [x2, y2] = at(c.b, radius);
      svg << "  <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\""
          << fmt(y2) << "\" " << style << "/>\n";
    }
  }
  for (int label = 1; label <= n; ++label) {
    const auto [x, y] = at(label, radius);
    const auto [lx, ly] = at(label, label_radius);
    svg << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3\" fill=\"black\"/>\n";
    svg << "  <text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
        << "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << label
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string graph_dot(const FlagComplex& c) {
  std::ostringstream dot;
  dot << "graph disk_complex {\n";
  for (int i = 0; i < c.graph.size(); ++i) {
    const Chord& ch = c.chords.at(c.graph.id(i));
    dot << "  " << c.graph.id(i) << " [label=\"" << (ch.side == Side::V ? "V" : "W") << " " << ch.a
        << "-" << ch.b << "\"];\n";
  }
  for (int i = 0; i < c.graph.size(); ++i) {
    for (int j = i + 1; j < c.graph.size(); ++j) {
      if (c.graph.adjacent(i, j)) dot << "  " << c.graph.id(i) << " -- " << c.graph.id(j) << ";\n";
    }
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace helix
