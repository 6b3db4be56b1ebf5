#include "pseudotri/matchings.hpp"

#include "pseudotri/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>

namespace ptri {

std::string Opening::vertex_name(int v) const
{
    return v == 0 ? "c" : std::to_string(lo + v - 1);
}

std::string Opening::key() const
{
    if (central)
        return "central:" + std::to_string(a) + side_letter(type);
    return "side:" + std::to_string(a) + "," + std::to_string(b) + side_letter(type);
}

namespace {

struct Builder {
    const Dn& d;
    const Seed& s;
    Opening& o;
    std::set<Chord> straight;

    const LaurentPoly& var(const Chord& c) const { return s.var_of(d.pair_index(c)); }

    void set_weight(int u, int v, const LaurentPoly& w)
    {
        o.weights[{std::min(u, v), std::max(u, v)}] = w;
    }

    bool in_t(int a, int k) const
    {
        Chord c = d.straight(a, k);
        return d.valid(c) && straight.count(c);
    }

    // Triangulates the cap between lifted labels a and b with the straight chords of T.
    void cap(int a, int b)
    {
        if (b - a < 2)
            return;
        for (int k = a + 1; k < b; ++k) {
            bool left = k - a == 1 || in_t(a, k);
            bool right = b - k == 1 || in_t(k, b);
            if (!left || !right)
                continue;
            if (k - a > 1)
                set_weight(o.id(a), o.id(k), var(d.straight(a, k)));
            if (b - k > 1)
                set_weight(o.id(k), o.id(b), var(d.straight(k, b)));
            o.triangles.push_back({o.id(a), o.id(k), o.id(b)});
            cap(a, k);
            cap(k, b);
            return;
        }
        throw ModelInconsistency("opening: no apex over [" + std::to_string(a) + "," +
                                 std::to_string(b) + "]");
    }

    void build(const std::vector<int>& fan, const std::map<std::pair<int, int>, LaurentPoly>& base)
    {
        const int n = d.n();
        int nv = s.vars.at(0).nvars();
        for (int j = o.lo; j < o.hi; ++j)
            set_weight(o.id(j), o.id(j + 1),
                       s.frozen.empty() ? LaurentPoly::constant(nv, 1) : s.frozen.at(d.mod(j) % n));
        for (int f : fan)
            set_weight(0, o.id(f), var(d.central(f, o.type)));
        for (std::size_t j = 0; j + 1 < fan.size(); ++j) {
            int u = fan[j], w = fan[j + 1];
            o.triangles.push_back({0, o.id(u), o.id(w)});
            if (w - u > 1)
                set_weight(o.id(u), o.id(w), base.at({u, w}));
            cap(u, w);
        }
        if (static_cast<int>(o.triangles.size()) != o.vertex_count() - 2)
            throw ModelInconsistency("opening " + o.key() + " is not a polygon triangulation");
        o.diagonal_product = LaurentPoly::constant(nv, 1);
        for (const auto& [e, w] : o.weights) {
            auto [u, v] = e;
            bool outer = (u == 0 && (v == o.id(o.lo) || v == o.id(o.hi))) || (u > 0 && v - u == 1);
            if (outer)
                continue;
            o.internal.push_back(e);
            o.diagonal_product = o.diagonal_product * w;
        }
    }
};

const Face& find_sigma(const std::vector<Face>& fs, const Opening& o)
{
    const Face* hit = nullptr;
    for (const Face& f : fs) {
        bool ok;
        if (o.central) {
            ok = f.kind == FaceKind::DegenerateCentral && f.has_corner(MapNode{false, o.a, Chord{}});
        } else {
            bool touch = std::any_of(f.corners.begin(), f.corners.end(),
                                     [](const MapNode& m) { return m.touch; });
            ok = f.corners.size() == 3 && touch && f.has_corner(MapNode{false, o.a, Chord{}}) &&
                 f.has_corner(MapNode{false, o.b, Chord{}});
        }
        if (!ok)
            continue;
        if (hit)
            throw ModelInconsistency("opening " + o.key() + ": σ is ambiguous");
        hit = &f;
    }
    if (!hit)
        throw ModelInconsistency("opening " + o.key() + ": σ not found");
    return *hit;
}

} // namespace

std::vector<Opening> openings(const Dn& d, const Seed& s)
{
    const int n = d.n(), N = d.vertices();
    const PT& t = s.t;
    PTClass cls = classify(d, t);
    std::vector<Face> fs = faces(d, t);
    std::set<Chord> straight;
    std::vector<int> centres;
    for (int i : t) {
        const CsPair& p = d.pair(i);
        if (p.rep.central()) {
            centres.push_back(p.rep.p);
            centres.push_back(p.partner.p);
        } else {
            straight.insert(p.rep);
            straight.insert(p.partner);
        }
    }
    std::sort(centres.begin(), centres.end());
    centres.erase(std::unique(centres.begin(), centres.end()), centres.end());

    std::vector<Opening> out;
    if (cls == PTClass::Central) {
        int p = central_vertex(d, t);
        if (p >= n)
            p -= n;
        LaurentPoly both = s.var_of(d.pair_index(d.central(p, Side::A))) *
                           s.var_of(d.pair_index(d.central(p, Side::B)));
        for (Side k : {Side::A, Side::B}) {
            Opening o;
            o.type = k;
            o.central = true;
            o.a = o.b = p;
            o.lo = p;
            o.hi = p + N;
            Builder bld{d, s, o, straight};
            bld.build({p, p + n, p + N}, {{{p, p + n}, both}, {{p + n, p + N}, both}});
            o.sigma = find_sigma(fs, o);
            out.push_back(std::move(o));
        }
        return out;
    }
    Side kappa = cls == PTClass::TypeLeft ? Side::A : Side::B;
    const int m = static_cast<int>(centres.size());
    for (int i = 0; i < m; ++i) {
        int a = centres[i], b = centres[(i + 1) % m];
        if (b <= a)
            b += N;
        if (a >= n)
            continue;
        Opening o;
        o.type = kappa;
        o.a = a;
        o.b = b % N;
        o.lo = b;
        o.hi = a + N;
        std::vector<int> fan;
        for (int f = o.lo; f <= o.hi; ++f)
            if (std::binary_search(centres.begin(), centres.end(), f % N))
                fan.push_back(f);
        std::map<std::pair<int, int>, LaurentPoly> base;
        for (std::size_t j = 0; j + 1 < fan.size(); ++j)
            if (fan[j + 1] - fan[j] > 1)
                base[{fan[j], fan[j + 1]}] = s.var_of(d.pair_index(d.straight(fan[j], fan[j + 1])));
        Builder bld{d, s, o, straight};
        bld.build(fan, base);
        o.sigma = find_sigma(fs, o);
        out.push_back(std::move(o));
    }
    if (out.empty())
        throw ModelInconsistency("pseudotriangulation without central pseudotriangles");
    return out;
}

MatchingGraph incidence_graph(const Opening& o)
{
    MatchingGraph g;
    g.blacks = o.vertex_count();
    g.whites = static_cast<int>(o.triangles.size());
    for (int w = 0; w < g.whites; ++w) {
        const auto& tr = o.triangles[w];
        for (int i = 0; i < 3; ++i) {
            int u = tr[(i + 1) % 3], v = tr[(i + 2) % 3];
            g.edges.push_back({tr[i], w, o.weights.at({std::min(u, v), std::max(u, v)})});
        }
    }
    if (g.blacks != g.whites + 2)
        throw ModelInconsistency("incidence graph needs two more black than white vertices");
    return g;
}

LaurentPoly matching_sum(const MatchingGraph& g, int u, int v)
{
    if (u == v || u < 0 || v < 0 || u >= g.blacks || v >= g.blacks)
        throw InvalidInput("matching_sum: need two distinct black vertices");
    if (g.blacks > 64 || g.whites > 64)
        throw InvalidInput("matching_sum: graph too large");
    int nv = g.edges.empty() ? 0 : g.edges[0].weight.nvars();
    std::vector<std::vector<const MatchingGraph::Edge*>> at(g.blacks);
    for (const auto& e : g.edges)
        at[e.black].push_back(&e);
    using Mask = std::uint64_t;
    Mask blacks = 0, whites = 0;
    for (int b = 0; b < g.blacks; ++b)
        if (b != u && b != v)
            blacks |= Mask{1} << b;
    for (int w = 0; w < g.whites; ++w)
        whites |= Mask{1} << w;
    std::map<std::pair<Mask, Mask>, LaurentPoly> memo;
    std::function<LaurentPoly(Mask, Mask)> rec = [&](Mask bs, Mask ws) -> LaurentPoly {
        if (bs == 0)
            return LaurentPoly::constant(nv, 1);
        auto it = memo.find({bs, ws});
        if (it != memo.end())
            return it->second;
        int best = -1, best_deg = 1 << 30;
        for (int b = 0; b < g.blacks; ++b) {
            if (!(bs >> b & 1))
                continue;
            int deg = 0;
            for (const auto* e : at[b])
                deg += ws >> e->white & 1;
            if (deg < best_deg)
                best = b, best_deg = deg;
        }
        LaurentPoly sum(nv);
        for (const auto* e : at[best])
            if (ws >> e->white & 1)
                sum += e->weight * rec(bs & ~(Mask{1} << best), ws & ~(Mask{1} << e->white));
        memo.emplace(std::make_pair(bs, ws), sum);
        return sum;
    };
    return rec(blacks, whites);
}

std::optional<std::pair<int, int>> lift(const Dn& d, const Opening& o, const Chord& delta)
{
    const int n = d.n();
    if (!delta.central()) {
        int u = delta.p, v = delta.q;
        for (auto [a, len] : {std::pair{u, d.mod(v - u)}, std::pair{v, d.mod(u - v)}}) {
            if (len >= n)
                continue;
            for (int x = o.lo; x <= o.hi; ++x)
                if (d.mod(x) == a && x + len <= o.hi)
                    return std::pair{o.id(x), o.id(x + len)};
        }
        return std::nullopt;
    }
    if (delta.side == o.type) {
        for (int x = o.lo; x <= o.hi; ++x)
            if (d.mod(x) == delta.p)
                return std::pair{0, o.id(x)};
        return std::nullopt;
    }
    for (int x = o.lo; x <= o.hi; ++x)
        if (x % n == delta.p % n && x + n <= o.hi)
            return std::pair{o.id(x), o.id(x + n)};
    return std::nullopt;
}

std::pair<int, int> deletion_vertices(const Dn& d, const Opening& o, const Chord& delta)
{
    if (crosses_face(d, o.sigma, delta))
        throw InvalidOpening(d.name(delta) + " crosses σ of opening " + o.key());
    auto dv = lift(d, o, delta);
    if (!dv)
        throw InvalidOpening(d.name(delta) + " has no lift in opening " + o.key());
    return *dv;
}

namespace {

LaurentPoly m_of(const Opening& o, const MatchingGraph& g, std::pair<int, int> dv, LaurentPoly* w_out)
{
    LaurentPoly w = matching_sum(g, dv.first, dv.second);
    if (w_out)
        *w_out = w;
    try {
        return div_exact(w, o.diagonal_product);
    } catch (const NotDivisible&) {
        throw ModelInconsistency("matching sum not divisible by a monomial");
    }
}

} // namespace

LaurentPoly m_value(const Dn& d, const Opening& o, const Chord& delta)
{
    auto dv = lift(d, o, delta);
    if (!dv)
        throw InvalidOpening(d.name(delta) + " has no lift in opening " + o.key());
    return m_of(o, incidence_graph(o), *dv, nullptr);
}

MatchingValue variable_via_matching(const Dn& d, const Seed&, const std::vector<Opening>& os,
                                    int delta)
{
    const CsPair& pr = d.pair(delta);
    for (std::size_t i = 0; i < os.size(); ++i) {
        const Opening& o = os[i];
        if (crosses_face(d, o.sigma, pr.rep) && crosses_face(d, o.sigma, pr.partner))
            continue;
        for (const Chord& rep : {pr.rep, pr.partner}) {
            auto dv = lift(d, o, rep);
            if (!dv)
                continue;
            MatchingGraph g = incidence_graph(o);
            MatchingValue r;
            r.opening = static_cast<int>(i);
            r.rep = rep;
            r.deleted = *dv;
            r.m = m_of(o, g, *dv, &r.w);
            if (rep.central() && rep.side != o.type) {
                auto same = lift(d, o, d.central(rep.p, o.type));
                if (!same)
                    throw ModelInconsistency("no same-type central chord to divide by");
                try {
                    r.x = div_exact(r.m, m_of(o, g, *same, nullptr));
                } catch (const NotDivisible&) {
                    throw ModelInconsistency("m is not divisible by the same-type central variable");
                }
            } else {
                r.x = r.m;
            }
            return r;
        }
    }
    throw NoValidOpening("no opening of the pseudotriangulation admits " + d.pair_name(delta));
}

MatchingValue variable_via_matching(const Dn& d, const Seed& s, int delta)
{
    return variable_via_matching(d, s, openings(d, s), delta);
}

bool kuo_holds(const MatchingGraph& g, int p, int q, int r, int s)
{
    auto w = [&](int a, int b) { return matching_sum(g, a, b); };
    return w(p, r) * w(q, s) == w(p, q) * w(r, s) + w(p, s) * w(q, r);
}

std::string to_dot(const Opening& o, const MatchingGraph& g, const std::vector<std::string>& names)
{
    std::ostringstream os;
    os << "graph G_sigma {\n";
    os << "  label=\"opening " << o.key() << "\";\n";
    for (int b = 0; b < g.blacks; ++b)
        os << "  b" << b << " [label=\"" << o.vertex_name(b) << "\", style=filled, fillcolor=black, fontcolor=white];\n";
    for (int w = 0; w < g.whites; ++w) {
        const auto& t = o.triangles[w];
        os << "  w" << w << " [label=\"" << o.vertex_name(t[0]) << " " << o.vertex_name(t[1]) << " "
           << o.vertex_name(t[2]) << "\", shape=box];\n";
    }
    for (const auto& e : g.edges)
        os << "  b" << e.black << " -- w" << e.white << " [label=\"" << e.weight.to_string(names) << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace ptri
