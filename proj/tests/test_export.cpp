#include <string>

#include "doctest.h"
#include "helix/export.hpp"

using namespace helix;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("loop records") {
  const auto loops = enumerate_loops(12);
  const Json tri = loop_json(loops[0], 0);
  CHECK(tri["schema"] == 1);
  CHECK(tri["class"] == "vertex_link");
  CHECK(tri["length"] == 3);
  CHECK(tri["orbit_size"] == 4);
  CHECK(tri["traversal"].size() == 3);

  const Json twelve = loop_json(loops[3], 3);
  CHECK(twelve["class"] == "spiral");
  CHECK(twelve["class_detail"]["k"] == 3);
}

TEST_CASE("chord diagrams") {
  const Json j = chord_diagram_json(synthetic_chords(3, 2));
  CHECK(j["offset"] == 2);
  CHECK(j["V"].size() == 3);
  CHECK(j["W"].size() == 3);
  CHECK_FALSE(j.contains("edge_of"));
  CHECK(chord_diagram_json(synthetic_chords(2, 2))["degenerate"] == true);
}

TEST_CASE("certificates") {
  const Json helicoid = certificate_json(determine_index(build_complex(synthetic_chords(4, 2))));
  CHECK(helicoid["result"] == "index");
  CHECK(helicoid["n"] == 3);
  CHECK(helicoid["core"]["vertices"].size() == 6);
  CHECK(helicoid["core"]["cross_polytope"] == 3);
  CHECK(helicoid["core"]["antipodes"].size() == 3);
  CHECK(helicoid["homology"]["betti"] == Json::array({0, 0, 1}));

  const Json cone = certificate_json(determine_index(build_complex(synthetic_chords(5, 4))));
  CHECK(cone["result"] == "not_minimal");
  CHECK(cone["n"].is_null());
  CHECK(cone["core"]["vertices"].size() == 1);

  const Json zero = certificate_json(IndexZero{});
  CHECK(zero["n"] == 0);
  CHECK(zero["empty"] == true);
}

TEST_CASE("output is reproducible") {
  const auto f = synthetic_chords(6, 2);
  CHECK(certificate_json(determine_index(build_complex(f))).dump() ==
        certificate_json(determine_index(build_complex(f))).dump());
  CHECK(chord_svg(f) == chord_svg(f));
}

TEST_CASE("drawings") {
  const auto f = synthetic_chords(3, 2);
  const std::string svg = chord_svg(f);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "<line") == 6);
  CHECK(count(svg, "stroke-dasharray") == 3);
  CHECK(count(svg, "<text") == 12);

  const std::string dot = graph_dot(build_complex(f));
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(count(dot, " -- ") == build_complex(f).graph.edge_count());
}

TEST_CASE("complex and simplex lists") {
  const auto c = build_complex(synthetic_chords(3, 2));
  const Json j = complex_json(c);
  CHECK(j["chords"].size() == 6);
  CHECK(j["graph"]["edges"].size() == c.graph.edge_count());
  CHECK(simplices_json(enumerate_simplices(c.graph)).size() == enumerate_simplices(c.graph).size());
}
