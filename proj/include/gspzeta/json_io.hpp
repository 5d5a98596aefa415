#pragma once

#include <string>

#include <json.hpp>

#include "gspzeta/arch_zeta.hpp"
#include "gspzeta/cosets.hpp"
#include "gspzeta/global.hpp"
#include "gspzeta/zeta_local.hpp"

namespace gspzeta::io {

using Json = nlohmann::json;

// Decoders throw ParseError naming the offending field path, e.g.
// "$.gl2.beta: not a rational literal".

/// {"rat": "p/r", "sqrt": "p/r"}; a bare string or integer is read as the rational part.
Json to_json(const QScalar& x);
QScalar qscalar_from_json(const Json& j, std::int64_t q, const std::string& path = "$");

Json to_json(const SeriesT& s);
Json to_json(const PolyT& p);
Json to_json(const RatFnT& f);
Json to_json(const SeriesComparison& c);

Json to_json(const Gl2Local& rep);
Gl2Local gl2_from_json(const Json& j, std::int64_t q, const std::string& path = "$");

/// {"q", "order"?, "satake": [4 x QScalar], "bessel": {...}, "gl2": {...}}
Json to_json(const LocalInstance& inst);
LocalInstance instance_from_json(const Json& j, const std::string& path = "$");

Json to_json(const VerificationReport& r);
Json to_json(const cosets::CosetPartitionReport& r);

/// Complex values: a number, a rational string such as "7/6", or {"re", "im"}.
Json to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& path = "$");

/// {"l", "l1", "D", "q_exp"?, "ir"?, "a_plus"?, "s"}; missing ir / a_plus
/// select the holomorphic discrete-series values.
Json to_json(const ArchSpec& spec);
ArchSpec arch_spec_from_json(const Json& j, const std::string& path = "$");

/// {"l", "D", "a_lambda"? | "classes"?, "bad_primes"?}. A bad prime carries
/// either "y" (complex), "y_exact" (QScalar with "q"), or a local "instance"
/// whose Y(s) is evaluated at the special point.
GlobalSpec global_spec_from_json(const Json& j, const std::string& path = "$");
Json to_json(const SpecialValueConstant& c);

/// Reads and parses a JSON file; syntax errors become ParseError with the byte position.
Json read_file(const std::string& path);

}  // namespace gspzeta::io
