#pragma once

// Serialization of loops, chord diagrams, complexes and index certificates.
// All JSON uses insertion-ordered objects so output is byte-for-byte
// reproducible; top-level records carry "schema": 1.

#include <string>
#include <vector>

#include "json.hpp"

#include "helix/chords.hpp"
#include "helix/flag_complex.hpp"
#include "helix/homology.hpp"
#include "helix/normal_curves.hpp"
#include "helix/oracle.hpp"
#include "helix/topology.hpp"

namespace helix {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json loop_json(const NormalLoop& loop, int id);
Json chord_diagram_json(const ChordFamilies& f);
Json homology_json(const HomologyProfile& h);
Json graph_json(const CompatibilityGraph& g);
Json complex_json(const FlagComplex& c);
Json simplices_json(const std::vector<Simplex>& simplices);
Json certificate_json(const IndexResult& r);
Json oracle_report_json(const oracle::OracleReport& r);

/// Flat-disk picture: boundary circle, numbered points, V chords solid and
/// W chords dashed.
std::string chord_svg(const ChordFamilies& f);

std::string graph_dot(const FlagComplex& c);

}  // namespace helix
