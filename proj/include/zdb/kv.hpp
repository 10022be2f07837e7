#pragma once

#include <map>
#include <string>

#include "zdb/inputs.hpp"

// "name = value" parameter files: one key per line, '#' starts a comment.

namespace zdb {

std::map<std::string, double> parse_key_values(const std::string& text);

// Applies entries onto p.  Valid keys: sigma, T, k, alpha, delta, d, eta,
// mu, H.  Unknown keys raise std::invalid_argument listing the valid set.
void apply_params(ParameterSet& p, const std::map<std::string, double>& kv);

// 17 significant digits, bit-exact through parse_key_values + apply_params.
std::string params_to_key_value(const ParameterSet& p);

}  // namespace zdb
