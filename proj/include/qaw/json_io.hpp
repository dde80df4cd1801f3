/// @file json_io.hpp
/// @brief JSON serialization for algebra specs, isomorphism certificates,
///        chain reports, confluence reports, and dimension tables.
///
/// All rationals travel as strings ("-3/7") so files stay exact and
/// diff-friendly.  Spec parsing is strict: unknown fields and missing
/// required fields raise std::invalid_argument with the offending field
/// named.  A spec emitted by presentation_to_json re-parses to an equal
/// presentation.

#pragma once

#include "qaw/iso.hpp"
#include "qaw/normal.hpp"
#include "qaw/presentation.hpp"
#include "qaw/rewrite.hpp"

#include <json.hpp>

#include <string>

namespace qaw {

/// Parses an algebra-spec document:
///   {"family": "quantum_affine",    "n": 2, "p": [["1","2"],["1/2","1"]]}
///   {"family": "homogenized_weyl",  "n": 1, "p": [["1"]], "gamma": ["3"]}
///   {"family": "quantum_matrix",    "n": 2, "lambda": "2", "p": [[...]]}
///   {"family": "custom", "generators": [...], "rules": [{"lhs": ["b","a"],
///       "rhs": [{"coeff": "1/2", "word": ["a","b"]}]}]}
/// @throws std::invalid_argument naming the bad or unknown field.
Presentation presentation_from_json(const nlohmann::json& doc);

/// Inverse of presentation_from_json (custom presentations round-trip too).
nlohmann::json presentation_to_json(const Presentation& pres);

/// Reads and parses a spec file.
/// @throws std::invalid_argument on I/O, JSON, or schema errors.
Presentation load_presentation(const std::string& path);

/// {"isomorphic": bool, "witness": {"kind", "sigma"/"epsilon"/"case",
///  "scalars", "matrix", "inverse_matrix"}, "obstructions": [{kind, detail}],
///  "note"}.  Permutations are serialized 1-based; matrices as rational
///  strings.  Absent optional parts are omitted.
nlohmann::json certificate_to_json(const IsoCertificate& cert);

/// {"steps": [{"step", "killed": [poly strings], "quotient_generators"}],
///  "final": {"generators", "plane_parameter", ...}}.
/// Polynomials print in the generators of the presentation being quotiented.
nlohmann::json chain_to_json(const Presentation& start, const ChainReport& report);

/// {"trials", "seed", "counterexamples": [poly strings]}.
nlohmann::json falsification_to_json(const Presentation& pres, const FalsificationReport& report);

/// {"overlaps": total, "resolved": count, "unresolved": [{c,b,a words}]}.
nlohmann::json confluence_to_json(const Presentation& pres, const ConfluenceReport& report);

}  // namespace qaw
