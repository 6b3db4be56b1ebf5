#pragma once

#include "pseudotri/cluster.hpp"
#include "pseudotri/json_io.hpp"

#include <string>
#include <vector>

namespace ptri::tools {

// "1,2,0" -> {1, 2, 0}, checked as a Coxeter element of D_n.
std::vector<int> parse_coxeter(int n, const std::string& text);

// {"n": .., "pairs": [...], "names": {...} or [...]}. Names given as an object are keyed by
// chord name; as an array they follow the sorted pair order.
Seed seed_from_json(const Dn& d, const json& j);

// star-left, star-right, central:<p>, zc:<c>, or a path to a JSON seed file.
Seed seed_from_spec(const Dn& d, const std::string& spec);

} // namespace ptri::tools
