#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "c4ex/bounds.hpp"
#include "c4ex/certify.hpp"
#include "c4ex/exact.hpp"
#include "c4ex/graph.hpp"
#include "c4ex/lemmas.hpp"

namespace c4ex {

// Rationals are written as "num/den" strings throughout.
nlohmann::json to_json(const LemmaVerdict& v);
nlohmann::json to_json(const TwoPathVerdict& v);
nlohmann::json to_json(const DeficiencyProfile& p);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const ThresholdResult& t);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const ExpansionCheck& c);
nlohmann::json to_json(const LeadingTermCheck& c);

// Fixed header; no trailing newline.
std::string bounds_csv_header();
// Integers stay integers, other rationals become "num/den", inapplicable
// bounds are empty cells and erdos_conj (irrational) is a decimal.
std::string bounds_csv_row(const BoundReport& report, const BigRational& eps);

}  // namespace c4ex
