#pragma once

#include "pseudotri/cluster.hpp"
#include "pseudotri/geometry.hpp"
#include "pseudotri/laurent.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ptri {

// T cut open at a central pseudotriangle σ: a triangulated convex polygon whose vertices
// are a centre c (id 0) and the lifted polygon labels lo..hi (id 1 + label - lo).
struct Opening {
    Side type = Side::A;  // the central chords kept as the fan around c
    bool central = false; // T is central and σ is its degenerate face at `a`
    int a = 0, b = 0;     // polygon corners of σ (a == b for central T)
    int lo = 0, hi = 0;
    Face sigma;
    std::vector<std::array<int, 3>> triangles;
    std::map<std::pair<int, int>, LaurentPoly> weights; // keyed by (smaller id, larger id)
    std::vector<std::pair<int, int>> internal;          // internal diagonals
    LaurentPoly diagonal_product;

    int vertex_count() const { return hi - lo + 2; }
    int id(int label) const { return 1 + label - lo; }
    std::string vertex_name(int id) const;
    std::string key() const;
};

// One opening per centrally symmetric pair of central pseudotriangles; a central T gives
// the two openings along its L and R chords. Edge weights come from the seed variables
// (and its frozen variables on boundary edges when present).
std::vector<Opening> openings(const Dn& d, const Seed& s);

// Vertex-triangle incidence graph: black = polygon vertices, white = triangles.
struct MatchingGraph {
    struct Edge {
        int black;
        int white;
        LaurentPoly weight;
    };
    int blacks = 0;
    int whites = 0;
    std::vector<Edge> edges;
};
MatchingGraph incidence_graph(const Opening& o);

// Sum over perfect matchings of G minus the black vertices u and v.
LaurentPoly matching_sum(const MatchingGraph& g, int u, int v);

// Black vertices to delete for chord delta, or nothing if delta has no lift in o.
std::optional<std::pair<int, int>> lift(const Dn& d, const Opening& o, const Chord& delta);
// As lift(), but throws InvalidOpening when delta crosses σ or has no lift.
std::pair<int, int> deletion_vertices(const Dn& d, const Opening& o, const Chord& delta);

// w / (product of internal diagonal weights) for the lift of delta.
LaurentPoly m_value(const Dn& d, const Opening& o, const Chord& delta);

struct MatchingValue {
    int opening = -1;
    Chord rep;
    std::pair<int, int> deleted;
    LaurentPoly w;
    LaurentPoly m;
    LaurentPoly x;
};
// x_delta for the pair delta, from the first opening whose σ some representative avoids.
MatchingValue variable_via_matching(const Dn& d, const Seed& s, const std::vector<Opening>& os,
                                    int delta);
MatchingValue variable_via_matching(const Dn& d, const Seed& s, int delta);

// w(p,r) w(q,s) == w(p,q) w(r,s) + w(p,s) w(q,r) for p < q < r < s.
bool kuo_holds(const MatchingGraph& g, int p, int q, int r, int s);

std::string to_dot(const Opening& o, const MatchingGraph& g, const std::vector<std::string>& names);

} // namespace ptri
