#pragma once

#include "pseudotri/cluster.hpp"
#include "pseudotri/geometry.hpp"
#include "pseudotri/laurent.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace ptri {

using json = nlohmann::json;

json to_json(const Dn& d, const Chord& c);
json pair_to_json(const Dn& d, int pair);
json pt_to_json(const Dn& d, const PT& t);
json to_json(const LaurentPoly& f, const std::vector<std::string>& names);
json quiver_to_json(const Dn& d, const Quiver& q);
json seed_to_json(const Dn& d, const Seed& s);
json flipgraph_to_json(const Dn& d, const FlipGraph& g);

// A chord object, a pair object (its rep), or a name such as "[0,2]" or "1^L".
Chord chord_from_json(const Dn& d, const json& j);
int pair_from_json(const Dn& d, const json& j);
// {"n": .., "pairs": [...]}; the pairs are validated and sorted.
PT pt_from_json(const Dn& d, const json& j);
LaurentPoly laurent_from_json(const json& j, const std::vector<std::string>& names);

std::string flipgraph_to_dot(const Dn& d, const FlipGraph& g);
std::string quiver_to_dot(const Dn& d, const Quiver& q);

} // namespace ptri
