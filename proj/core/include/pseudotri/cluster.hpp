#pragma once

#include "pseudotri/geometry.hpp"
#include "pseudotri/laurent.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ptri {

// Chord-level quiver before folding. Node ids index `nodes`; arcs may repeat.
struct DoubleQuiver {
    std::vector<Chord> nodes;
    std::vector<std::pair<int, int>> arcs;
};

DoubleQuiver double_quiver(const Dn& d, const PT& t);

// Skew-symmetric exchange matrix. The first `mutable_count` nodes are the pairs of T in
// sorted order (labels = pair indices); any further nodes are frozen boundary classes
// (labels = j for the boundary edges j and j+n).
struct Quiver {
    int mutable_count = 0;
    std::vector<int> labels;
    std::vector<std::vector<int>> b;

    int size() const { return static_cast<int>(labels.size()); }
    int local(int label) const; // index of a mutable node, -1 if absent
    std::vector<std::pair<int, int>> arcs() const; // (i, j) for each unit of b[i][j] > 0
    bool operator==(const Quiver&) const = default;
};

Quiver fold(const Dn& d, const PT& t, const DoubleQuiver& dq);
// With `frozen`, boundary edges join the sides as frozen nodes.
Quiver quiver_of(const Dn& d, const PT& t, bool frozen = false);
// Standard matrix mutation at local node k (labels untouched).
Quiver quiver_mutate(const Quiver& q, int k);

struct Seed {
    PT t;
    std::vector<LaurentPoly> vars;   // parallel to t
    std::vector<LaurentPoly> frozen; // one per boundary class when coefficients are on
    Quiver quiver;
    std::vector<std::string> names;  // initial variables, then frozen ones

    const LaurentPoly& var_of(int pair) const;
    bool operator==(const Seed&) const = default;
};

// Formal variables follow the sorted pair order of t0. With `coefficients`, the boundary
// classes get frozen variables b0..b(n-1).
Seed initial_seed(const Dn& d, const PT& t0, std::vector<std::string> names = {},
                  bool coefficients = false);

struct Mutation {
    Seed seed;
    int added = -1;
};
Mutation mutate(const Dn& d, const Seed& s, int pair);

// Every seed reachable by flips, sorted by pseudotriangulation.
std::vector<Seed> all_seeds(const Dn& d, const Seed& s0, int jobs = 1);

struct VariableTable {
    std::vector<LaurentPoly> vars; // indexed by pair
    std::vector<std::string> names;
    int seeds = 0;
};
// Throws ModelInconsistency if two seeds disagree on a pair.
VariableTable all_cluster_variables(const Dn& d, const Seed& s0, int jobs = 1);

// Crossing numbers against the initial pairs, checked against the denominator of x_delta.
std::vector<int> d_vector(const Dn& d, const Seed& s0, const VariableTable& table, int delta);

// Exchange relation read off the pseudoquadrangle left by removing `pair` from t.
struct ExchangeTemplate {
    std::vector<std::vector<int>> sides; // pair indices per side, boundary edges dropped
    std::map<int, int> first;            // sides 1 and 3, after cancelling the common part
    std::map<int, int> second;           // sides 2 and 4
    bool cancelled = false;
    int added = -1;
};
ExchangeTemplate exchange_template(const Dn& d, const PT& t, int pair);
bool template_holds(const ExchangeTemplate& e, int removed,
                    const std::vector<LaurentPoly>& vars_by_pair);

} // namespace ptri
