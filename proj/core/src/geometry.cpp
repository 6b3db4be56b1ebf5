#include "pseudotri/geometry.hpp"

#include "pseudotri/errors.hpp"
#include "pseudotri/parallel.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

namespace ptri {

Dn::Dn(int n) : n_(n)
{
    if (n < 3)
        throw InvalidInput("n must be at least 3 (D_2 is reducible), got " + std::to_string(n));
    if (n > 60)
        throw InvalidInput("n too large: " + std::to_string(n));
    std::set<CsPair> all;
    for (const Chord& c : all_chords()) {
        Chord b = partner(c);
        all.insert(c < b ? CsPair{c, b} : CsPair{b, c});
    }
    pairs_.assign(all.begin(), all.end());
    int m = pair_count();
    pair_cross_.assign(m * m, false);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const CsPair& a = pairs_[i];
            const CsPair& b = pairs_[j];
            pair_cross_[i * m + j] = crosses(a.rep, b.rep) || crosses(a.rep, b.partner) ||
                                     crosses(a.partner, b.rep) || crosses(a.partner, b.partner);
        }
}

Chord Dn::straight(int p, int q) const
{
    p = mod(p);
    q = mod(q);
    Chord c;
    c.kind = Chord::Kind::Straight;
    c.p = std::min(p, q);
    c.q = std::max(p, q);
    return c;
}

Chord Dn::central(int p, Side s) const
{
    Chord c;
    c.kind = Chord::Kind::Central;
    c.p = mod(p);
    c.side = s;
    return c;
}

bool Dn::valid(const Chord& c) const
{
    int N = vertices();
    if (c.p < 0 || c.p >= N)
        return false;
    if (c.central())
        return c.q == 0;
    if (c.side != Side::A || c.q <= c.p || c.q >= N)
        return false;
    int d = c.q - c.p;
    return d != 1 && d != N - 1 && d != n_;
}

Chord Dn::partner(const Chord& c) const
{
    if (c.central())
        return central(c.p + n_, c.side);
    return straight(c.p + n_, c.q + n_);
}

std::vector<Chord> Dn::all_chords() const
{
    std::vector<Chord> out;
    int N = vertices();
    for (int p = 0; p < N; ++p)
        for (int q = p + 2; q < N; ++q) {
            Chord c = straight(p, q);
            if (valid(c))
                out.push_back(c);
        }
    for (int p = 0; p < N; ++p) {
        out.push_back(central(p, Side::A));
        out.push_back(central(p, Side::B));
    }
    return out;
}

int Dn::pair_index(const Chord& c) const
{
    if (!valid(c))
        throw InvalidInput("not a chord of D_" + std::to_string(n_) + ": " + name(c));
    Chord b = partner(c);
    CsPair key = c < b ? CsPair{c, b} : CsPair{b, c};
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), key);
    return static_cast<int>(it - pairs_.begin());
}

bool Dn::strictly_inside_short_arc(int p, int q, int r) const
{
    int N = vertices();
    int d = mod(q - p);
    if (d > n_)
        std::swap(p, q), d = N - d;
    int k = mod(r - p);
    return k > 0 && k < d;
}

bool Dn::crosses(const Chord& a, const Chord& b) const
{
    if (a == b)
        return false;
    if (!a.central() && !b.central()) {
        if (a.p == b.p || a.p == b.q || a.q == b.p || a.q == b.q)
            return false;
        bool r_in = a.p < b.p && b.p < a.q;
        bool s_in = a.p < b.q && b.q < a.q;
        return r_in != s_in;
    }
    if (!a.central())
        return strictly_inside_short_arc(a.p, a.q, b.p);
    if (!b.central())
        return strictly_inside_short_arc(b.p, b.q, a.p);
    if (a.side == b.side)
        return false;
    const Chord& ca = a.side == Side::A ? a : b;
    const Chord& cb = a.side == Side::A ? b : a;
    int d = mod(cb.p - ca.p);
    return d >= 1 && d <= n_ - 1;
}

int Dn::crossing_number(int theta, int delta) const
{
    const CsPair& t = pairs_.at(theta);
    const Chord& r = pairs_.at(delta).rep;
    return int(crosses(r, t.rep)) + int(crosses(r, t.partner));
}

int Dn::touch_key(const Chord& c) const
{
    int nominal = c.side == Side::A ? 2 * c.p + n_ : 2 * c.p - n_;
    nominal = ((nominal % (4 * n_)) + 4 * n_) % (4 * n_);
    return 2 * nominal + (c.side == Side::A ? 0 : 1);
}

int Dn::end_key(int v, const Chord& c) const
{
    if (c.central())
        return c.side == Side::A ? 2 * n_ - 1 : 2 * n_ + 1;
    int o = c.p == v ? c.q : c.p;
    return 2 * mod(o - v);
}

std::string Dn::name(const Chord& c) const
{
    if (c.central())
        return std::to_string(c.p) + "^" + side_letter(c.side);
    return "[" + std::to_string(c.p) + "," + std::to_string(c.q) + "]";
}

std::optional<Chord> Dn::parse_chord(const std::string& s) const
{
    static const std::regex straight_re(R"(\s*\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*)");
    static const std::regex central_re(R"(\s*(\d+)\s*\^?\s*([LRAB])\s*)");
    std::smatch m;
    Chord c;
    if (std::regex_match(s, m, straight_re)) {
        int p = std::stoi(m[1]);
        int q = std::stoi(m[2]);
        if (p >= vertices() || q >= vertices())
            return std::nullopt;
        c = straight(p, q);
    } else if (std::regex_match(s, m, central_re)) {
        int p = std::stoi(m[1]);
        if (p >= vertices())
            return std::nullopt;
        char k = m[2].str()[0];
        c = central(p, (k == 'L' || k == 'A') ? Side::A : Side::B);
    } else {
        return std::nullopt;
    }
    if (!valid(c))
        return std::nullopt;
    return c;
}

std::string class_name(PTClass c)
{
    switch (c) {
    case PTClass::Central: return "central";
    case PTClass::TypeLeft: return "type-left";
    case PTClass::TypeRight: return "type-right";
    }
    return "?";
}

bool noncrossing(const Dn& d, const std::vector<int>& pairs)
{
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (pairs[i] == pairs[j] || d.pairs_cross(pairs[i], pairs[j]))
                return false;
    return true;
}

bool is_pseudotriangulation(const Dn& d, const std::vector<int>& pairs)
{
    return static_cast<int>(pairs.size()) == d.n() && noncrossing(d, pairs);
}

PTClass classify(const Dn& d, const PT& t)
{
    bool a = false, b = false;
    for (int i : t) {
        const Chord& c = d.pair(i).rep;
        if (c.central())
            (c.side == Side::A ? a : b) = true;
    }
    if (a && b)
        return PTClass::Central;
    if (a)
        return PTClass::TypeLeft;
    if (b)
        return PTClass::TypeRight;
    throw ModelInconsistency("pseudotriangulation without central chords");
}

int central_vertex(const Dn& d, const PT& t)
{
    for (int i : t) {
        const Chord& c = d.pair(i).rep;
        if (c.central() && c.side == Side::B)
            for (int j : t)
                if (d.pair(j).rep == d.central(c.p, Side::A))
                    return c.p;
    }
    throw InvalidInput("pseudotriangulation is not central");
}

FlipResult flip(const Dn& d, const PT& t, int pair)
{
    auto pos = std::find(t.begin(), t.end(), pair);
    if (pos == t.end())
        throw InvalidInput("pair " + d.pair_name(pair) + " is not in the pseudotriangulation");
    std::vector<int> rest;
    for (int i : t)
        if (i != pair)
            rest.push_back(i);
    int found = -1;
    for (int cand = 0; cand < d.pair_count(); ++cand) {
        if (std::binary_search(t.begin(), t.end(), cand))
            continue;
        bool ok = true;
        for (int r : rest)
            if (d.pairs_cross(cand, r)) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        if (found >= 0)
            throw ModelInconsistency("flip of " + d.pair_name(pair) + " is not unique");
        found = cand;
    }
    if (found < 0)
        throw ModelInconsistency("flip of " + d.pair_name(pair) + " has no replacement");
    rest.push_back(found);
    std::sort(rest.begin(), rest.end());
    return {rest, found};
}

PT star(const Dn& d, Side s)
{
    PT t;
    for (int p = 0; p < d.n(); ++p)
        t.push_back(d.pair_index(d.central(p, s)));
    std::sort(t.begin(), t.end());
    return t;
}

PT central_seed(const Dn& d, int p)
{
    if (p < 0 || p >= d.vertices())
        throw InvalidInput("vertex out of range: " + std::to_string(p));
    PT t{d.pair_index(d.central(p, Side::A)), d.pair_index(d.central(p, Side::B))};
    for (int k = 2; k <= d.n() - 1; ++k)
        t.push_back(d.pair_index(d.straight(p, p + k)));
    std::sort(t.begin(), t.end());
    return t;
}

int FlipGraph::index_of(const PT& t) const
{
    auto it = std::lower_bound(nodes.begin(), nodes.end(), t);
    if (it == nodes.end() || *it != t)
        return -1;
    return static_cast<int>(it - nodes.begin());
}

FlipGraph enumerate(const Dn& d, int jobs)
{
    std::map<PT, std::vector<FlipResult>> seen;
    std::vector<PT> frontier{star(d, Side::A)};
    seen[frontier[0]];
    while (!frontier.empty()) {
        std::vector<std::vector<FlipResult>> out(frontier.size());
        parallel_for(frontier.size(), jobs, [&](std::size_t i) {
            for (int p : frontier[i])
                out[i].push_back(flip(d, frontier[i], p));
        });
        std::vector<PT> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (const FlipResult& f : out[i])
                if (seen.emplace(f.t, std::vector<FlipResult>{}).second)
                    next.push_back(f.t);
            seen[frontier[i]] = std::move(out[i]);
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    FlipGraph g;
    for (const auto& [t, fl] : seen)
        g.nodes.push_back(t);
    g.adj.resize(g.nodes.size());
    std::size_t i = 0;
    for (const auto& [t, fl] : seen) {
        for (std::size_t k = 0; k < t.size(); ++k)
            g.adj[i].push_back({t[k], fl[k].added, g.index_of(fl[k].t)});
        ++i;
    }
    return g;
}

// ---------------------------------------------------------------------------
// Faces from a rotation system.
//
// Nodes are polygon vertices and tangency points. At a polygon vertex the incident
// edges are ordered counterclockwise by end_key; at a tangency point the order is
// (chord, arc counterclockwise, arc clockwise). Tracing a dart (e, u -> v) continues
// with the edge just clockwise of e at v.

namespace {

struct Edge {
    EdgeKind kind;
    MapNode a;
    MapNode b;
    Chord chord;
    int bedge = 0;
};

bool between(int a, int x, int b)
{
    if (a < b)
        return a < x && x < b;
    return x > a || x < b;
}

} // namespace

std::string face_kind_name(FaceKind k)
{
    switch (k) {
    case FaceKind::DegenerateCentral: return "degenerate-central";
    case FaceKind::Central: return "central";
    case FaceKind::Internal: return "internal";
    case FaceKind::Ordinary: return "ordinary";
    }
    return "?";
}

std::vector<Chord> Face::chords() const
{
    std::vector<Chord> out;
    for (const Dart& x : darts)
        if (x.kind == EdgeKind::Chord)
            out.push_back(x.chord);
    return out;
}

bool Face::has_corner(const MapNode& m) const
{
    return std::find(corners.begin(), corners.end(), m) != corners.end();
}

std::vector<Face> faces(const Dn& d, const std::vector<int>& pairs)
{
    if (!noncrossing(d, pairs))
        throw InvalidInput("faces: chord set is not noncrossing");
    const int N = d.vertices();
    std::vector<Chord> chords;
    for (int i : pairs) {
        chords.push_back(d.pair(i).rep);
        chords.push_back(d.pair(i).partner);
    }

    std::vector<Edge> edges;
    auto vertex = [](int p) { return MapNode{false, p, Chord{}}; };
    auto touch = [](const Chord& c) { return MapNode{true, 0, c}; };
    for (int p = 0; p < N; ++p)
        edges.push_back({EdgeKind::Boundary, vertex(p), vertex(d.mod(p + 1)), Chord{}, p});
    std::vector<Chord> tps;
    for (const Chord& c : chords) {
        if (c.central()) {
            edges.push_back({EdgeKind::Chord, vertex(c.p), touch(c), c, 0});
            tps.push_back(c);
        } else {
            edges.push_back({EdgeKind::Chord, vertex(c.p), vertex(c.q), c, 0});
        }
    }
    std::sort(tps.begin(), tps.end(),
              [&](const Chord& x, const Chord& y) { return d.touch_key(x) < d.touch_key(y); });
    std::map<Chord, int> arc_ccw, arc_cw;
    for (std::size_t i = 0; i < tps.size(); ++i) {
        const Chord& a = tps[i];
        const Chord& b = tps[(i + 1) % tps.size()];
        arc_ccw[a] = static_cast<int>(edges.size());
        arc_cw[b] = static_cast<int>(edges.size());
        edges.push_back({EdgeKind::Arc, touch(a), touch(b), Chord{}, 0});
    }

    std::map<MapNode, std::vector<int>> rot;
    for (int p = 0; p < N; ++p) {
        std::vector<std::pair<int, int>> inc;
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            const Edge& E = edges[e];
            if (E.kind == EdgeKind::Arc)
                continue;
            if (!(E.a == vertex(p) || E.b == vertex(p)))
                continue;
            int key;
            if (E.kind == EdgeKind::Boundary) {
                int o = E.a.vertex == p ? E.b.vertex : E.a.vertex;
                key = 2 * d.mod(o - p);
            } else {
                key = d.end_key(p, E.chord);
            }
            inc.emplace_back(key, e);
        }
        std::sort(inc.begin(), inc.end());
        for (auto& [k, e] : inc)
            rot[vertex(p)].push_back(e);
    }
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (edges[e].kind == EdgeKind::Chord && edges[e].chord.central()) {
            const Chord& c = edges[e].chord;
            rot[touch(c)] = {e, arc_ccw[c], arc_cw[c]};
        }

    auto other_end = [&](int e, const MapNode& u) {
        return edges[e].a == u ? edges[e].b : edges[e].a;
    };

    std::set<std::pair<int, MapNode>> used;
    std::vector<Face> out;
    for (int e0 = 0; e0 < static_cast<int>(edges.size()); ++e0) {
        for (int dir = 0; dir < 2; ++dir) {
            MapNode u0 = dir == 0 ? edges[e0].a : edges[e0].b;
            if (used.count({e0, u0}))
                continue;
            struct Step {
                int e;
                MapNode u;
                MapNode v;
                int next;
            };
            std::vector<Step> walk;
            int e = e0;
            MapNode u = u0;
            while (!used.count({e, u})) {
                used.insert({e, u});
                MapNode v = other_end(e, u);
                const auto& r = rot.at(v);
                auto it = std::find(r.begin(), r.end(), e);
                int i = static_cast<int>(it - r.begin());
                int e2 = r[(i + r.size() - 1) % r.size()];
                walk.push_back({e, u, v, e2});
                e = e2;
                u = v;
            }
            bool all_boundary = true, all_arc = true;
            for (const Step& s : walk) {
                all_boundary = all_boundary && edges[s.e].kind == EdgeKind::Boundary;
                all_arc = all_arc && edges[s.e].kind == EdgeKind::Arc;
            }
            if (all_arc)
                continue;
            if (all_boundary && static_cast<int>(walk.size()) == N && walk[0].u == edges[walk[0].e].b)
                continue;

            Face f;
            std::vector<bool> corner(walk.size());
            for (std::size_t i = 0; i < walk.size(); ++i) {
                const Step& s = walk[i];
                const Edge& E = edges[s.e];
                Dart dart{E.kind, s.u, s.v, E.chord, E.bedge, s.u == E.a};
                f.darts.push_back(dart);
                if (!s.v.touch) {
                    corner[i] = true;
                } else {
                    EdgeKind in = E.kind, out_kind = edges[s.next].kind;
                    if (s.v.chord.side == Side::A)
                        corner[i] = out_kind == EdgeKind::Arc && in == EdgeKind::Chord;
                    else
                        corner[i] = out_kind == EdgeKind::Chord && in == EdgeKind::Arc;
                }
            }
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < walk.size(); ++i)
                if (corner[i]) {
                    idx.push_back(i);
                    f.corners.push_back(walk[i].v);
                }
            for (std::size_t j = 0; j < idx.size(); ++j) {
                std::size_t a = idx[j], b = idx[(j + 1) % idx.size()];
                std::vector<SideItem> side;
                std::size_t i = (a + 1) % walk.size();
                for (;;) {
                    const Edge& E = edges[walk[i].e];
                    if (E.kind == EdgeKind::Chord)
                        side.push_back({false, 0, E.chord});
                    else if (E.kind == EdgeKind::Boundary)
                        side.push_back({true, E.bedge, Chord{}});
                    if (i == b)
                        break;
                    i = (i + 1) % walk.size();
                }
                f.sides.push_back(std::move(side));
            }
            std::vector<Chord> cs = f.chords();
            bool boundary = false, disk_corner = false;
            for (const Dart& x : f.darts)
                boundary = boundary || x.kind == EdgeKind::Boundary;
            for (const MapNode& m : f.corners)
                disk_corner = disk_corner || m.touch;
            if (f.darts.size() == 3 && cs.size() == 2 && cs[0].central() && cs[1].central() &&
                cs[0].p == cs[1].p)
                f.kind = FaceKind::DegenerateCentral;
            else if (disk_corner)
                f.kind = FaceKind::Central;
            else if (!boundary)
                f.kind = FaceKind::Internal;
            else
                f.kind = FaceKind::Ordinary;
            out.push_back(std::move(f));
        }
    }
    return out;
}

bool crosses_face(const Dn& d, const Face& f, const Chord& c)
{
    std::vector<Chord> cs = f.chords();
    if (std::find(cs.begin(), cs.end(), c) != cs.end())
        return false;
    for (const Chord& x : cs)
        if (d.crosses(c, x))
            return true;
    auto key_of = [&](const Dart& x, int v) {
        if (x.kind == EdgeKind::Boundary) {
            int o = x.from.vertex == v ? x.to.vertex : x.from.vertex;
            return 2 * d.mod(o - v);
        }
        return d.end_key(v, x.chord);
    };
    for (std::size_t i = 0; i < f.darts.size(); ++i) {
        const Dart& in = f.darts[i];
        const Dart& out = f.darts[(i + 1) % f.darts.size()];
        if (in.to.touch)
            continue;
        int v = in.to.vertex;
        bool endpoint = c.p == v || (!c.central() && c.q == v);
        if (endpoint && between(key_of(out, v), d.end_key(v, c), key_of(in, v)))
            return true;
    }
    if (c.central()) {
        int k = d.touch_key(c);
        for (const Dart& x : f.darts) {
            if (x.kind != EdgeKind::Arc)
                continue;
            const Chord& lo = x.forward ? x.from.chord : x.to.chord;
            const Chord& hi = x.forward ? x.to.chord : x.from.chord;
            if (between(d.touch_key(lo), k, d.touch_key(hi)))
                return true;
        }
    }
    return false;
}

} // namespace ptri
