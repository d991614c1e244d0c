#pragma once

// Serialization: verification reports and Lax matrices to JSON, solution
// fields to CSV, and parameter-file parsing. All output is deterministic:
// ordered JSON objects, canonical symbolic strings, 17-significant-digit
// floats.

#include "vmkdv/hierarchy.hpp"
#include "vmkdv/numerics.hpp"
#include "vmkdv/solutions.hpp"
#include "vmkdv/verify.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>

namespace vmkdv::io {

using Json = nlohmann::ordered_json;

/// %.17g, enough digits to round-trip a double exactly.
std::string format_double(double v);

Json to_json(const VerificationReport& report);
Json to_json(const verify::Criterion& criterion);

/// Block-matrix schema {degree: {a, v1, v2, W}} in the canonical text grammar.
Json lax_to_json(const LaxMatrix& m);

/// CSV with columns x, t, u_1..u_N; t is the value of the principal flow time
/// t3 (0 when inactive).
void write_field_csv(std::ostream& os, const SolutionField& field, double t_value);

/// {"t1": ..., "t3": ..., ...} with odd keys; t1 defaults to 0.
TimeVector times_from_json(const Json& j);
Json times_to_json(const TimeVector& times);

/// {"mu": m, "c0": c, "c": [...], "times": {...}}
SolitonParams soliton_params_from_json(const Json& j);

/// {"mu": [re, im], "s": k, "C": [[re,im],...] | [[[re,im],...],...], "times": {...}}
BreatherParams breather_params_from_json(const Json& j);

Json error_json(const std::string& type, const std::string& message);

} // namespace vmkdv::io
