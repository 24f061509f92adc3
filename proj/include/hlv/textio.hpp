// Canonical text and JSON forms. Printing follows the fixed monomial order,
// so output is byte-identical across runs.
#pragma once

#include <string>

#include <json.hpp>

#include "hlv/series.hpp"

namespace hlv {

std::string to_text(const MultiPoly& p);
std::string to_text(const Scalar& s);
std::string to_text(const Partition& p);
std::string to_text(const SymFunc& f);
std::string to_text(const TensorSym& t);
std::string to_text(const MultiSymSeries& s);

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const SymFunc& f);
nlohmann::json to_json(const MultiSymSeries& s);

// "3,1" or "-" for the empty partition.
Partition parse_partition(const std::string& text);
// "1,1;2" -> rows of multiplicities.
std::vector<std::vector<int>> parse_mults(const std::string& text);

} // namespace hlv
