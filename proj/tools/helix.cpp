// Command-line front end: enumerate, classify, chords, complex, index,
// verify, render. JSON goes to stdout unless --out names a directory.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "helix/errors.hpp"
#include "helix/verify.hpp"

namespace fs = std::filesystem;
using namespace helix;

namespace {

struct SubjectArgs {
  std::optional<int> loop_id;
  std::vector<int> synthetic;
  std::vector<int> coords;
  int catalog_length = 40;
};

void add_subject_options(CLI::App* cmd, SubjectArgs& args) {
  auto* group = cmd->add_option_group("subject", "what to operate on");
  group->add_option("--loop", args.loop_id, "loop id from `enumerate`");
  group->add_option("--synthetic", args.synthetic, "model diagram: K OFFSET")->expected(2);
  group->add_option("--coords", args.coords, "12 normal arc coordinates")->expected(12);
  group->require_option(1);
  cmd->add_option("--catalog-length", args.catalog_length, "length bound of the loop catalog")
      ->check(CLI::Range(3, 400));
}

struct Subject {
  std::string label;
  std::optional<NormalLoop> loop;
  int loop_id = -1;
  std::optional<ChordFamilies> families;
};

Subject resolve(const SubjectArgs& args) {
  Subject s;
  if (!args.synthetic.empty()) {
    s.families = synthetic_chords(args.synthetic[0], args.synthetic[1]);
    s.label = "synthetic";
    return s;
  }
  if (args.loop_id) {
    auto loops = enumerate_loops(args.catalog_length);
    if (*args.loop_id < 0 || *args.loop_id >= static_cast<int>(loops.size())) {
      throw BadParameters("no loop with id " + std::to_string(*args.loop_id) + " up to length " +
                          std::to_string(args.catalog_length));
    }
    s.loop_id = *args.loop_id;
    s.loop = std::move(loops[*args.loop_id]);
  } else {
    ArcCoordinates coords{};
    std::copy(args.coords.begin(), args.coords.end(), coords.begin());
    if (!satisfies_matching(coords)) throw MalformedLoop("coordinates fail the edge matching equations");
    s.loop = realize_loop(coords);
    if (!s.loop) throw MalformedLoop("coordinates do not describe a single connected loop");
  }
  s.label = "loop";
  if (s.loop->length() > 4) s.families = chords_from_loop(*s.loop);
  return s;
}

FlagComplex complex_of(const Subject& s) {
  return s.families ? build_complex(*s.families) : build_complex(*s.loop);
}

const ChordFamilies& require_families(const Subject& s) {
  if (!s.families) throw NotSpiral("loops of length 3 or 4 carry no chord diagram");
  return *s.families;
}

class Output {
 public:
  explicit Output(std::string dir) : dir_(std::move(dir)) {}

  void write(const std::string& name, const std::string& text) const {
    if (dir_.empty()) {
      std::cout << text;
      return;
    }
    fs::create_directories(dir_);
    const fs::path path = fs::path(dir_) / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.close();
    if (!out) throw std::runtime_error("cannot write " + path.string());
  }

  void write(const std::string& name, const Json& j) const { write(name, j.dump(2) + "\n"); }

 private:
  std::string dir_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal loops on the tetrahedron, their disk complexes and topological index"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_dir;
  app.add_option("--out", out_dir, "write files into this directory instead of stdout");

  int enum_length = 40;
  bool labeled = false;
  auto* enumerate = app.add_subcommand("enumerate", "catalog of normal loops, one record per orbit");
  enumerate->add_option("--max-length", enum_length, "length bound")->check(CLI::PositiveNumber);
  enumerate->add_flag("--labeled", labeled, "list every labelled loop instead of orbits");

  SubjectArgs classify_args, chords_args, complex_args, index_args, render_args;
  auto* classify = app.add_subcommand("classify", "class and hemisphere structure of a loop");
  add_subject_options(classify, classify_args);

  auto* chords = app.add_subcommand("chords", "flat-disk chord diagram and offset");
  add_subject_options(chords, chords_args);

  bool with_simplices = false;
  auto* complex = app.add_subcommand("complex", "disk complex and its homology");
  add_subject_options(complex, complex_args);
  complex->add_flag("--simplices", with_simplices, "include the simplex list");

  std::string svg_path;
  auto* index = app.add_subcommand("index", "topological index with certificate");
  add_subject_options(index, index_args);
  index->add_option("--svg", svg_path, "also write the chord diagram as SVG to this file");

  SweepConfig config;
  auto* verify = app.add_subcommand("verify", "full verification sweep");
  verify->add_option("--max-length", config.max_length, "length bound")->check(CLI::Range(3, 400));
  verify->add_option("--oracle-max-length", config.oracle_max_length, "oracle overlap bound")
      ->check(CLI::Range(3, 24));
  verify->add_option("--seed", config.seed, "seed for randomized collapse orders");

  std::string format = "svg";
  auto* render = app.add_subcommand("render", "chord diagram (svg) or complex graph (dot)");
  add_subject_options(render, render_args);
  render->add_option("--format", format, "svg or dot")->check(CLI::IsMember({"svg", "dot"}));

  CLI11_PARSE(app, argc, argv);
  const Output out(out_dir);

  try {
    if (*enumerate) {
      const auto loops = labeled ? enumerate_labeled_loops(enum_length) : enumerate_loops(enum_length);
      Json records = Json::array();
      for (std::size_t i = 0; i < loops.size(); ++i) {
        Json r = loop_json(loops[i], static_cast<int>(i));
        if (labeled) r.erase("orbit_size");
        records.push_back(r);
      }
      Json doc;
      doc["schema"] = kSchemaVersion;
      doc["max_length"] = enum_length;
      doc["labeled"] = labeled;
      doc["count"] = records.size();
      doc["loops"] = records;
      out.write("enumerate.json", doc);
    } else if (*classify) {
      const Subject s = resolve(classify_args);
      if (!s.loop) throw BadParameters("classify needs --loop or --coords");
      Json doc = loop_json(*s.loop, s.loop_id);
      Json sides = Json::array();
      for (const auto& h : hemispheres(*s.loop)) {
        Json sub = Json::array();
        for (const auto& e : h.sub_edges) {
          sub.push_back(Json{{"edge", e.edge.value}, {"index", e.index}, {"interior", e.interior()}});
        }
        sides.push_back(Json{{"side", h.side == 0 ? "V" : "W"},
                             {"vertices", h.vertices},
                             {"interior_sub_edges", h.interior_sub_edge_count()},
                             {"sub_edges", sub}});
      }
      doc["hemispheres"] = sides;
      out.write("classify.json", doc);
    } else if (*chords) {
      out.write("chords.json", chord_diagram_json(require_families(resolve(chords_args))));
    } else if (*complex) {
      const FlagComplex c = complex_of(resolve(complex_args));
      const auto simplices = enumerate_simplices(c.graph, config.capacity);
      Json doc = complex_json(c);
      doc["simplex_count"] = simplices.size();
      doc["homology"] = homology_json(reduced_homology(simplices));
      if (with_simplices) doc["simplices"] = simplices_json(simplices);
      out.write("complex.json", doc);
    } else if (*index) {
      const Subject s = resolve(index_args);
      const IndexResult result = determine_index(complex_of(s), config.capacity);
      Json doc = certificate_json(result);
      if (s.families) doc["offset"] = offset_of(*s.families);
      if (s.loop_id >= 0) doc["loop"] = s.loop_id;
      out.write("index.json", doc);
      if (!svg_path.empty()) {
        std::ofstream svg(svg_path, std::ios::binary);
        svg << chord_svg(require_families(s));
        if (!svg) throw std::runtime_error("cannot write " + svg_path);
      }
    } else if (*verify) {
      const VerificationBundle bundle = run_verify(config);
      out.write("verify.json", bundle.report);
      for (const auto& check : bundle.report["checks"]) {
        std::cerr << (check["pass"].get<bool>() ? "PASS " : "FAIL ") << check["id"].get<int>() << " "
                  << check["name"].get<std::string>() << "\n";
      }
      return bundle.pass ? 0 : 1;
    } else if (*render) {
      const Subject s = resolve(render_args);
      if (format == "svg") {
        out.write("diagram.svg", chord_svg(require_families(s)));
      } else {
        out.write("complex.dot", graph_dot(complex_of(s)));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
