#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "symedge/monomial_ideal.hpp"

namespace symedge {

struct CoverPrimeSystem;

/// Text format:
///   n=<int>
///   x1^2 x3
///   x2 x4
/// One generator per line as whitespace-separated "x<i>^<e>" tokens
/// (exponent 1 may omit "^1"); a single line "0" denotes the zero ideal.
MonomialIdeal read_ideal_text(std::istream& in);
MonomialIdeal read_ideal_text(const std::string& text);
std::string write_ideal_text(const MonomialIdeal& i);

std::string monomial_to_string(const Monomial& m);

/// JSON: {"n": <int>, "gens": [[e1,...,en], ...]} with exponent vectors
/// emitted bit-exactly as integer arrays.
nlohmann::json ideal_to_json(const MonomialIdeal& i);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

/// JSON array of {"cover": [vertices], "k": <int>} entries.
nlohmann::json system_to_json(const CoverPrimeSystem& sys);
CoverPrimeSystem system_from_json(const nlohmann::json& j, int nvars);

}  // namespace symedge
