#ifndef CLC_SERIALIZE_HPP
#define CLC_SERIALIZE_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "clc/curve.hpp"
#include "clc/field.hpp"
#include "clc/lifted.hpp"
#include "clc/repair.hpp"

namespace clc {

using Json = nlohmann::ordered_json;

// Field spec: {"p": int, "m": int, "tower": [s, r] | null, "modulus": [c0, c1, ...]}
Json field_to_json(const FieldCtx& F);
Field field_from_json(const Json& j);

// Curve spec: {"kind": "norm-trace", "q": int, "r": int}
//          or {"kind": "custom", "field": {...}, "terms": [{"a","b","coeff"}...]}
Json curve_to_json(const PlaneCurve& curve);
PlaneCurve curve_from_json(const Json& j);

// Family: {"selector": "all" | "trace-nonzero" | "trace-zero" | "explicit",
//          "lines": [[alpha, beta], ...]}  (lines present for explicit only)
Json family_to_json(const LineFamily& family);
LineFamily family_from_json(const Json& j);

// Code artifact; byte-identical for identical inputs.
Json code_to_json(const LiftedCode& code);
LiftedCode code_from_json(const Json& j);

Json drill_to_json(const DrillReport& report);

std::string intersection_table_csv(const std::vector<IntersectionRecord>& table);
std::string spectrum_csv(const std::map<uint64_t, uint64_t>& spectrum);
/// Rows (point_x, point_y, size, num_lines) for the given per-point profiles.
std::string profile_csv(const std::vector<std::pair<Point, std::map<uint64_t, uint64_t>>>& profiles);
std::string bounds_csv(uint64_t q, int rmax);

/// One header row, then the symbols as element integers with `?` for erased.
std::string codeword_csv(const Codeword& cw);
Codeword codeword_from_csv(const LiftedCode& code, const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// q = p^s for prime p, or BadSpec.
std::pair<int, int> factor_prime_power(uint64_t q);

}  // namespace clc

#endif
