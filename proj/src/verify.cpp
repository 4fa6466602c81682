#include "helix/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "helix/errors.hpp"

namespace helix {
namespace {

struct Instance {
  std::string subject;
  FlagComplex complex;
  IndexResult result;
};

struct Check {
  Check(int id, std::string name) : id(id), name(std::move(name)) {}

  int id;
  std::string name;
  bool pass = true;
  std::vector<std::string> failures;
  Json facts = Json::object();

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 20) failures.push_back(what);
    }
  }

  Json json() const {
    Json out;
    out["id"] = id;
    out["name"] = name;
    out["pass"] = pass;
    out["facts"] = facts;
    out["failures"] = failures;
    return out;
  }
};

std::string join(const std::vector<long long>& xs) {
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? "," : "") << xs[i];
  return s.str();
}

std::vector<long long> trim_zeros(std::vector<long long> xs) {
  while (xs.size() > 1 && xs.back() == 0) xs.pop_back();
  return xs;
}

std::vector<int> edge_word(const NormalLoop& loop) {
  std::vector<int> word;
  for (const auto& c : loop.traversal) word.push_back(c.edge.value);
  return word;
}

const CompatibilityGraph* core_of(const IndexResult& r) {
  if (const auto* c = std::get_if<IndexCertified>(&r)) return &c->certificate.trace.core;
  if (const auto* c = std::get_if<NotMinimal>(&r)) return &c->trace.core;
  if (const auto* c = std::get_if<Indeterminate>(&r)) return &c->trace.core;
  return nullptr;
}

}  // namespace

VerificationBundle run_verify(const SweepConfig& config) {
  if (config.max_length < 3) throw BadParameters("max_length must be at least 3");
  const int max_k = config.max_length / 4;
  const int oracle_length = std::min(config.max_length, config.oracle_max_length);

  const auto loops = enumerate_loops(config.max_length);
  const auto labeled = enumerate_labeled_loops(config.max_length);

  Json loop_records = Json::array();
  std::vector<Instance> instances;  // every complex checked under 2-6
  std::vector<std::optional<int>> offsets(loops.size());
  std::vector<std::optional<ChordFamilies>> families(loops.size());
  std::vector<bool> classified(loops.size(), false);

  Check trichotomy{1, "trichotomy"};
  for (std::size_t i = 0; i < loops.size(); ++i) {
    const NormalLoop& loop = loops[i];
    Json record = loop_json(loop, static_cast<int>(i));
    try {
      classify_loop(loop);
      classified[i] = true;
    } catch (const MalformedLoop& e) {
      trichotomy.expect(false, "loop " + std::to_string(i) + ": " + e.what());
    }
    if (classified[i] && loop.length() > 4) {
      families[i] = chords_from_loop(loop);
      offsets[i] = offset_of(*families[i]);
      record["offset"] = *offsets[i];
      record["chords"] = chord_diagram_json(*families[i]);
    }
    if (classified[i]) {
      FlagComplex complex = families[i] ? build_complex(*families[i]) : FlagComplex{};
      IndexResult result = determine_index(complex, config.capacity);
      record["certificate"] = certificate_json(result);
      instances.push_back({"loop " + std::to_string(i), std::move(complex), std::move(result)});
    }
    loop_records.push_back(record);
  }

  // 1. Lengths are 3, 4 or 4k, and the oracle agrees on the overlap range.
  std::map<int, int> orbits_by_length, labeled_by_length;
  for (const auto& l : loops) {
    const int len = l.length();
    trichotomy.expect(len == 3 || len == 4 || (len % 4 == 0 && len >= 8),
                      "loop of length " + std::to_string(len));
    ++orbits_by_length[len];
  }
  for (const auto& l : labeled) ++labeled_by_length[l.length()];
  for (int k = 2; k <= max_k; ++k) {
    trichotomy.expect(orbits_by_length.count(4 * k) == 1, "no loop of length " + std::to_string(4 * k));
  }

  const auto oracle = oracle::oracle_loops(oracle_length);
  std::vector<oracle::OracleReport> reports;
  std::map<int, int> oracle_orbits, oracle_labeled;
  std::set<std::vector<int>> oracle_words, engine_words;
  for (const auto& o : oracle) {
    ++oracle_orbits[o.length()];
    oracle_labeled[o.length()] += o.labeled_count;
    oracle_words.insert(o.word);
  }
  for (const auto& l : loops) {
    if (l.length() <= oracle_length) engine_words.insert(oracle::canonical_word(edge_word(l)));
  }
  for (int len = 3; len <= oracle_length; ++len) {
    const int eo = orbits_by_length.count(len) ? orbits_by_length.at(len) : 0;
    const int el = labeled_by_length.count(len) ? labeled_by_length.at(len) : 0;
    const int oo = oracle_orbits.count(len) ? oracle_orbits.at(len) : 0;
    const int ol = oracle_labeled.count(len) ? oracle_labeled.at(len) : 0;
    if (eo == 0 && oo == 0) continue;
    reports.push_back(oracle::make_report("orbits of length " + std::to_string(len),
                                          std::to_string(oo), std::to_string(eo)));
    reports.push_back(oracle::make_report("labelled loops of length " + std::to_string(len),
                                          std::to_string(ol), std::to_string(el)));
  }
  reports.push_back(oracle::make_report("loop orbit words up to length " + std::to_string(oracle_length),
                                        std::to_string(oracle_words.size()),
                                        engine_words == oracle_words
                                            ? std::to_string(oracle_words.size())
                                            : "mismatch"));
  for (const auto& r : reports) trichotomy.expect(r.agree, r.subject);
  Json counts = Json::array();
  for (const auto& [len, n] : orbits_by_length) {
    counts.push_back(Json{{"length", len}, {"orbits", n}, {"labelled", labeled_by_length[len]}});
  }
  trichotomy.facts["counts"] = counts;

  // 2. Index-0 cases.
  Check index_zero{2, "index_zero"};
  for (std::size_t i = 0; i < loops.size(); ++i) {
    if (loops[i].length() > 4 || !classified[i]) continue;
    const auto& inst = std::find_if(instances.begin(), instances.end(), [&](const Instance& x) {
      return x.subject == "loop " + std::to_string(i);
    });
    index_zero.expect(inst->complex.empty() && std::holds_alternative<IndexZero>(inst->result),
                      "loop " + std::to_string(i) + " is not index 0");
  }
  index_zero.expect(labeled_by_length[3] == 4, "labelled triangles != 4");
  index_zero.expect(labeled_by_length[4] == 3, "labelled quads != 3");
  index_zero.expect(oracle_labeled[3] == 4 && oracle_labeled[4] == 3, "oracle labelled counts");
  index_zero.expect(orbits_by_length[3] == 1 && orbits_by_length[4] == 1, "orbit counts != 1");
  index_zero.facts["labelled_triangles"] = labeled_by_length[3];
  index_zero.facts["labelled_quads"] = labeled_by_length[4];
  index_zero.facts["triangle_orbits"] = orbits_by_length[3];
  index_zero.facts["quad_orbits"] = orbits_by_length[4];

  // 3-6 over the spiral loops.
  Check helicoid_law{3, "helicoid_law"};
  Check helicoid_structure{4, "helicoid_structure"};
  Check impossible_offsets{5, "impossible_offsets"};
  Check contractible{6, "contractible"};
  Json index_table = Json::array();
  std::map<int, std::set<int>> realized_offsets;
  std::set<int> helicoid_ks;
  bool saw_offset4_20gon = false;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    if (!offsets[i]) continue;
    const int k = loops[i].length() / 4;
    const int offset = *offsets[i];
    const std::string who = "loop " + std::to_string(i);
    realized_offsets[k].insert(offset);
    const IndexResult& result =
        std::find_if(instances.begin(), instances.end(), [&](const Instance& x) { return x.subject == who; })
            ->result;

    impossible_offsets.expect(offset != 0 && offset != 1 && offset != 3,
                              who + " has offset " + std::to_string(offset));
    if (offset == 2) {
      helicoid_ks.insert(k);
      const auto* cert = std::get_if<IndexCertified>(&result);
      const bool ok = cert && cert->n == k - 1 &&
                      cert->certificate.trace.core.size() == 2 * (k - 1) &&
                      static_cast<int>(cert->certificate.antipodes.size()) == k - 1 &&
                      cert->certificate.homology.is_sphere_of_dimension(k - 2);
      helicoid_law.expect(ok, who + " is not a certified index " + std::to_string(k - 1));
      index_table.push_back(Json{{"k", k}, {"loop", i}, {"n", cert ? Json(cert->n) : Json(nullptr)}});
      if (k >= 3) {
        const auto free = chord_free_points(*families[i]);
        const auto& edge_of = families[i]->labeling.edge_of;
        helicoid_structure.expect(
            free.size() == 2 &&
                tet::opposite_edge(edge_of[free[0] - 1]) == edge_of[free[1] - 1],
            who + " lacks two chord-free points on opposite edges");
      }
    } else if (offset >= 4) {
      contractible.expect(std::holds_alternative<NotMinimal>(result), who + " does not collapse");
      saw_offset4_20gon = saw_offset4_20gon || (k == 5 && offset == 4);
    }
  }
  for (int k = 2; k <= max_k; ++k) {
    helicoid_law.expect(helicoid_ks.count(k) == 1, "no offset-2 loop with k = " + std::to_string(k));
  }
  if (max_k >= 5) contractible.expect(saw_offset4_20gon, "no length-20 loop with offset 4");

  Json synthetic = Json::array();
  for (int k = 5; k <= std::min(max_k, 10); ++k) {
    for (int o = 4; o <= k - 1; ++o) {
      const std::string who = "synthetic k=" + std::to_string(k) + " offset=" + std::to_string(o);
      FlagComplex complex = build_complex(synthetic_chords(k, o));
      IndexResult result = determine_index(complex, config.capacity);
      contractible.expect(std::holds_alternative<NotMinimal>(result), who + " does not collapse");
      synthetic.push_back(Json{{"k", k}, {"offset", o}, {"result", result_name(result)}});
      instances.push_back({who, std::move(complex), std::move(result)});
    }
  }
  Json offsets_json = Json::array();
  for (const auto& [k, os] : realized_offsets) offsets_json.push_back(Json{{"k", k}, {"offsets", os}});
  impossible_offsets.facts["realized_offsets"] = offsets_json;
  helicoid_law.facts["index_table"] = index_table;
  contractible.facts["synthetic"] = synthetic;

  // 7. Engine cross-validation.
  Check cross{7, "engine_cross_validation"};
  Json homology_tables = Json::array();
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const Instance& inst = instances[idx];
    const auto& g = inst.complex.graph;
    if (!inst.complex.empty() && g.size() <= config.full_check_vertices) {
      const auto simplices = enumerate_simplices(g, config.capacity);
      const HomologyProfile h = reduced_homology(simplices);
      const auto f2 = oracle::oracle_betti_f2(simplices, config.capacity);
      cross.expect(h.torsion_free(), inst.subject + ": torsion");
      reports.push_back(oracle::make_report(inst.subject + " betti", join(trim_zeros(f2)),
                                            join(trim_zeros(h.betti))));
      long long alternating = 0;
      for (std::size_t d = 0; d < h.betti.size(); ++d) alternating += (d % 2 ? -1 : 1) * h.betti[d];
      cross.expect(alternating == reduced_euler_characteristic(simplices), inst.subject + ": Euler");
      const CompatibilityGraph* core = core_of(inst.result);
      cross.expect(core && homology(*core, config.capacity) == h,
                   inst.subject + ": homology changed under collapse");
    }
    if (const CompatibilityGraph* core = core_of(inst.result)) {
      const auto simplices = enumerate_simplices(*core, config.capacity);
      const HomologyProfile h = reduced_homology(simplices);
      const auto f2 = oracle::oracle_betti_f2(simplices, config.capacity);
      reports.push_back(oracle::make_report(inst.subject + " core betti", join(trim_zeros(f2)),
                                            join(trim_zeros(h.betti))));
      homology_tables.push_back(Json{{"subject", inst.subject}, {"core_vertices", core->size()},
                                     {"betti", h.betti}, {"betti_f2", f2}});

      std::mt19937_64 rng(config.seed + idx);
      for (int trial = 0; trial < config.collapse_orders; ++trial) {
        const CollapseTrace t = strong_collapse(g, rng);
        cross.expect(audit_collapse(g, t), inst.subject + ": randomized collapse fails audit");
        cross.expect(isomorphic(t.core, *core), inst.subject + ": core depends on removal order");
      }
    }
  }
  for (const auto& inst : instances) {
    const auto& chords = inst.complex.chords;
    const int n = chords.empty() ? 0 : std::max_element(chords.begin(), chords.end(), [](const Chord& a, const Chord& b) {
                                         return a.b < b.b;
                                       })->b;
    std::size_t pairs = 0, agree = 0;
    for (std::size_t i = 0; i < chords.size(); ++i) {
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        ++pairs;
        agree += t1_disjoint(chords[i], chords[j]) ==
                 oracle::oracle_disjoint({chords[i].a, chords[i].b}, {chords[j].a, chords[j].b}, n);
      }
    }
    if (pairs) {
      reports.push_back(oracle::make_report(inst.subject + " disjointness", std::to_string(pairs),
                                            std::to_string(agree)));
    }
  }
  for (const auto& r : reports) cross.expect(r.agree, r.subject);
  cross.facts["core_homology"] = homology_tables;

  // 8. Round trips.
  Check round_trips{8, "round_trips"};
  for (int k = 2; k <= 10; ++k) {
    for (int o = (k == 2 ? 2 : 0); o <= (k == 2 ? 2 : k - 1); ++o) {
      round_trips.expect(offset_of(synthetic_chords(k, o)) == o,
                         "offset_of(synthetic(" + std::to_string(k) + "," + std::to_string(o) + "))");
    }
  }
  for (std::size_t i = 0; i < loops.size(); ++i) {
    if (!families[i] || loops[i].length() / 4 > 10) continue;
    const auto model = synthetic_chords(families[i]->k, *offsets[i]);
    round_trips.expect(find_relabeling(*families[i], model).has_value(),
                       "loop " + std::to_string(i) + " does not match its model diagram");
  }

  VerificationBundle bundle;
  Json& out = bundle.report;
  out["schema"] = kSchemaVersion;
  out["config"] = Json{{"max_length", config.max_length},
                       {"oracle_max_length", oracle_length},
                       {"capacity", config.capacity},
                       {"full_check_vertices", config.full_check_vertices},
                       {"collapse_orders", config.collapse_orders},
                       {"seed", config.seed}};
  Json checks = Json::array();
  bundle.pass = true;
  for (const Check* c : {&trichotomy, &index_zero, &helicoid_law, &helicoid_structure,
                         &impossible_offsets, &contractible, &cross, &round_trips}) {
    checks.push_back(c->json());
    bundle.pass = bundle.pass && c->pass;
  }
  out["pass"] = bundle.pass;
  out["checks"] = checks;
  out["loops"] = loop_records;
  Json report_json = Json::array();
  for (const auto& r : reports) report_json.push_back(oracle_report_json(r));
  out["oracle_reports"] = report_json;
  return bundle;
}

}  // namespace helix
