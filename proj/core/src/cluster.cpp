#include "pseudotri/cluster.hpp"

#include "pseudotri/errors.hpp"
#include "pseudotri/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace ptri {

namespace {

int sign(int x) { return (x > 0) - (x < 0); }

// An endpoint of a quiver arc before folding: a chord, or a boundary edge (frozen).
struct Item {
    bool boundary;
    int edge;
    Chord chord;
};

template <class Emit>
void face_arcs(const Dn& d, const PT& t, bool with_boundary, Emit&& emit)
{
    std::vector<Face> fs = faces(d, t);
    int degenerate = 0;
    for (const Face& f : fs) {
        if (f.kind == FaceKind::DegenerateCentral) {
            ++degenerate;
            continue;
        }
        int k = static_cast<int>(f.sides.size());
        for (int i = 0; i < k; ++i)
            for (const SideItem& a : f.sides[i])
                for (const SideItem& b : f.sides[(i + k - 1) % k]) {
                    if (a.boundary && b.boundary)
                        continue;
                    if (!with_boundary && (a.boundary || b.boundary))
                        continue;
                    emit(Item{a.boundary, a.edge, a.chord}, Item{b.boundary, b.edge, b.chord});
                }
    }
    if (degenerate == 2) {
        // clockwise 4-cycle around the disk on the four central chords
        std::vector<Chord> cs;
        for (int i : t) {
            const CsPair& p = d.pair(i);
            if (p.rep.central()) {
                cs.push_back(p.rep);
                cs.push_back(p.partner);
            }
        }
        std::sort(cs.begin(), cs.end(),
                  [&](const Chord& x, const Chord& y) { return d.touch_key(x) > d.touch_key(y); });
        for (int i = 0; i < 4; ++i)
            emit(Item{false, 0, cs[i]}, Item{false, 0, cs[(i + 1) % 4]});
    } else if (degenerate != 0) {
        throw ModelInconsistency("pseudotriangulation with " + std::to_string(degenerate) +
                                 " degenerate central faces");
    }
}

Quiver from_counts(const PT& t, int frozen, const std::vector<std::vector<int>>& cnt)
{
    Quiver q;
    q.mutable_count = static_cast<int>(t.size());
    q.labels = t;
    for (int j = 0; j < frozen; ++j)
        q.labels.push_back(j);
    int m = q.size();
    q.b.assign(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) {
        if (cnt[i][i] != 0)
            throw ModelInconsistency("quiver has a loop");
        for (int j = 0; j < m; ++j)
            if (i != j)
                q.b[i][j] = sign(cnt[i][j] - cnt[j][i]);
    }
    return q;
}

} // namespace

DoubleQuiver double_quiver(const Dn& d, const PT& t)
{
    DoubleQuiver dq;
    for (int i : t) {
        dq.nodes.push_back(d.pair(i).rep);
        dq.nodes.push_back(d.pair(i).partner);
    }
    auto id = [&](const Chord& c) {
        return static_cast<int>(std::find(dq.nodes.begin(), dq.nodes.end(), c) - dq.nodes.begin());
    };
    face_arcs(d, t, false, [&](const Item& a, const Item& b) {
        dq.arcs.emplace_back(id(a.chord), id(b.chord));
    });
    return dq;
}

int Quiver::local(int label) const
{
    for (int i = 0; i < mutable_count; ++i)
        if (labels[i] == label)
            return i;
    return -1;
}

std::vector<std::pair<int, int>> Quiver::arcs() const
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            for (int k = 0; k < b[i][j]; ++k)
                out.emplace_back(i, j);
    return out;
}

Quiver fold(const Dn& d, const PT& t, const DoubleQuiver& dq)
{
    int m = static_cast<int>(t.size());
    std::vector<std::vector<int>> cnt(m, std::vector<int>(m, 0));
    auto node = [&](int c) {
        int p = d.pair_index(dq.nodes.at(c));
        return static_cast<int>(std::lower_bound(t.begin(), t.end(), p) - t.begin());
    };
    for (auto [a, b] : dq.arcs)
        ++cnt[node(a)][node(b)];
    return from_counts(t, 0, cnt);
}

Quiver quiver_of(const Dn& d, const PT& t, bool frozen)
{
    if (!frozen)
        return fold(d, t, double_quiver(d, t));
    int m = static_cast<int>(t.size()) + d.n();
    std::vector<std::vector<int>> cnt(m, std::vector<int>(m, 0));
    auto node = [&](const Item& x) {
        if (x.boundary)
            return static_cast<int>(t.size()) + x.edge % d.n();
        int p = d.pair_index(x.chord);
        return static_cast<int>(std::lower_bound(t.begin(), t.end(), p) - t.begin());
    };
    face_arcs(d, t, true, [&](const Item& a, const Item& b) { ++cnt[node(a)][node(b)]; });
    return from_counts(t, d.n(), cnt);
}

Quiver quiver_mutate(const Quiver& q, int k)
{
    if (k < 0 || k >= q.mutable_count)
        throw InvalidInput("cannot mutate at node " + std::to_string(k));
    Quiver r = q;
    for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j) {
            if (i == k || j == k)
                r.b[i][j] = -q.b[i][j];
            else
                r.b[i][j] = q.b[i][j] + (std::abs(q.b[i][k]) * q.b[k][j] + q.b[i][k] * std::abs(q.b[k][j])) / 2;
        }
    return r;
}

const LaurentPoly& Seed::var_of(int pair) const
{
    auto it = std::lower_bound(t.begin(), t.end(), pair);
    if (it == t.end() || *it != pair)
        throw InvalidInput("pair is not in the seed");
    return vars[it - t.begin()];
}

Seed initial_seed(const Dn& d, const PT& t0, std::vector<std::string> names, bool coefficients)
{
    if (!is_pseudotriangulation(d, t0))
        throw InvalidInput("initial seed is not a pseudotriangulation");
    if (!std::is_sorted(t0.begin(), t0.end()))
        throw InvalidInput("pseudotriangulation pairs must be sorted");
    int n = d.n();
    int nv = coefficients ? 2 * n : n;
    if (names.empty())
        names = default_names(n);
    if (static_cast<int>(names.size()) != n)
        throw InvalidInput("need exactly " + std::to_string(n) + " variable names");
    if (coefficients)
        for (int j = 0; j < n; ++j)
            names.push_back("b" + std::to_string(j));
    Seed s;
    s.t = t0;
    s.names = names;
    for (int i = 0; i < n; ++i)
        s.vars.push_back(LaurentPoly::variable(nv, i));
    if (coefficients)
        for (int j = 0; j < n; ++j)
            s.frozen.push_back(LaurentPoly::variable(nv, n + j));
    s.quiver = quiver_of(d, t0, coefficients);
    return s;
}

Mutation mutate(const Dn& d, const Seed& s, int pair)
{
    int k = s.quiver.local(pair);
    if (k < 0)
        throw InvalidInput("pair " + d.pair_name(pair) + " is not in the cluster");
    FlipResult fr = flip(d, s.t, pair);
    int nv = s.vars[0].nvars();
    const int mc = s.quiver.mutable_count;
    auto value = [&](int i) -> const LaurentPoly& { return i < mc ? s.vars[i] : s.frozen[i - mc]; };
    LaurentPoly in = LaurentPoly::constant(nv, 1), out = LaurentPoly::constant(nv, 1);
    for (int i = 0; i < s.quiver.size(); ++i) {
        if (s.quiver.b[i][k] > 0)
            in = in * value(i).pow(s.quiver.b[i][k]);
        if (s.quiver.b[k][i] > 0)
            out = out * value(i).pow(s.quiver.b[k][i]);
    }
    LaurentPoly fresh;
    try {
        fresh = div_exact(in + out, s.vars[k]);
    } catch (const NotDivisible& e) {
        throw ModelInconsistency("exchange binomial for " + d.pair_name(pair) +
                                 " is not divisible: " + e.what());
    }
    Quiver q = quiver_mutate(s.quiver, k);
    q.labels[k] = fr.added;

    // reorder mutable nodes to the sorted pair order of the new T
    std::vector<int> order(q.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.begin() + mc,
              [&](int a, int b) { return q.labels[a] < q.labels[b]; });
    Mutation r;
    Seed& ns = r.seed;
    ns.t = fr.t;
    ns.names = s.names;
    ns.frozen = s.frozen;
    ns.quiver.mutable_count = mc;
    ns.quiver.labels.resize(q.size());
    ns.quiver.b.assign(q.size(), std::vector<int>(q.size()));
    for (int i = 0; i < q.size(); ++i) {
        ns.quiver.labels[i] = q.labels[order[i]];
        for (int j = 0; j < q.size(); ++j)
            ns.quiver.b[i][j] = q.b[order[i]][order[j]];
    }
    for (int i = 0; i < mc; ++i)
        ns.vars.push_back(order[i] == k ? fresh : s.vars[order[i]]);
    r.added = fr.added;
    return r;
}

std::vector<Seed> all_seeds(const Dn& d, const Seed& s0, int jobs)
{
    std::map<PT, Seed> seen;
    seen.emplace(s0.t, s0);
    std::vector<const Seed*> frontier{&seen.begin()->second};
    while (!frontier.empty()) {
        std::vector<std::vector<Mutation>> out(frontier.size());
        parallel_for(frontier.size(), jobs, [&](std::size_t i) {
            for (int p : frontier[i]->t)
                out[i].push_back(mutate(d, *frontier[i], p));
        });
        std::vector<const Seed*> next;
        for (auto& ms : out)
            for (Mutation& m : ms) {
                auto it = seen.find(m.seed.t);
                if (it == seen.end()) {
                    auto ins = seen.emplace(m.seed.t, std::move(m.seed)).first;
                    next.push_back(&ins->second);
                } else if (!(it->second == m.seed)) {
                    throw ModelInconsistency("two flip paths give different seeds");
                }
            }
        frontier = std::move(next);
    }
    std::vector<Seed> res;
    res.reserve(seen.size());
    for (auto& [t, s] : seen)
        res.push_back(std::move(s));
    return res;
}

VariableTable all_cluster_variables(const Dn& d, const Seed& s0, int jobs)
{
    std::vector<Seed> seeds = all_seeds(d, s0, jobs);
    VariableTable tab;
    tab.names = s0.names;
    tab.seeds = static_cast<int>(seeds.size());
    tab.vars.assign(d.pair_count(), LaurentPoly());
    std::vector<bool> set(d.pair_count(), false);
    for (const Seed& s : seeds)
        for (std::size_t i = 0; i < s.t.size(); ++i) {
            int p = s.t[i];
            if (!set[p]) {
                tab.vars[p] = s.vars[i];
                set[p] = true;
            } else if (!(tab.vars[p] == s.vars[i])) {
                throw ModelInconsistency("seeds disagree on the variable of " + d.pair_name(p));
            }
        }
    for (int p = 0; p < d.pair_count(); ++p)
        if (!set[p])
            throw ModelInconsistency("pair " + d.pair_name(p) + " never reached");
    return tab;
}

std::vector<int> d_vector(const Dn& d, const Seed& s0, const VariableTable& table, int delta)
{
    std::vector<int> den = table.vars.at(delta).denominator_vector();
    std::vector<int> out;
    for (std::size_t i = 0; i < s0.t.size(); ++i) {
        int c = d.crossing_number(s0.t[i], delta);
        if (c != den[i])
            throw ModelInconsistency("d-vector of " + d.pair_name(delta) + " disagrees with crossings of " +
                                     d.pair_name(s0.t[i]));
        out.push_back(c);
    }
    return out;
}

ExchangeTemplate exchange_template(const Dn& d, const PT& t, int pair)
{
    ExchangeTemplate e;
    e.added = flip(d, t, pair).added;
    PT rest;
    for (int i : t)
        if (i != pair)
            rest.push_back(i);
    const Chord& chi = d.pair(pair).rep;
    const Face* quad = nullptr;
    std::vector<Face> fs = faces(d, rest);
    for (const Face& f : fs)
        if (crosses_face(d, f, chi)) {
            if (quad)
                throw ModelInconsistency("flipped chord meets two faces");
            quad = &f;
        }
    if (!quad || quad->sides.size() != 4)
        throw ModelInconsistency("flip of " + d.pair_name(pair) + " has no pseudoquadrangle");
    std::vector<std::map<int, int>> cnt(4);
    for (int i = 0; i < 4; ++i) {
        std::vector<int> side;
        for (const SideItem& s : quad->sides[i])
            if (!s.boundary) {
                int p = d.pair_index(s.chord);
                side.push_back(p);
                ++cnt[i][p];
            }
        e.sides.push_back(side);
    }
    auto merge = [](std::map<int, int> a, const std::map<int, int>& b) {
        for (auto [k, v] : b)
            a[k] += v;
        return a;
    };
    std::map<int, int> m1 = merge(cnt[0], cnt[2]), m2 = merge(cnt[1], cnt[3]);
    for (auto& [k, v] : m1) {
        auto it = m2.find(k);
        if (it == m2.end())
            continue;
        int g = std::min(v, it->second);
        if (g > 0)
            e.cancelled = true;
        v -= g;
        it->second -= g;
    }
    for (auto [k, v] : m1)
        if (v)
            e.first[k] = v;
    for (auto [k, v] : m2)
        if (v)
            e.second[k] = v;
    return e;
}

bool template_holds(const ExchangeTemplate& e, int removed, const std::vector<LaurentPoly>& vars)
{
    int nv = vars.at(removed).nvars();
    auto prod = [&](const std::map<int, int>& m) {
        LaurentPoly r = LaurentPoly::constant(nv, 1);
        for (auto [k, v] : m)
            r = r * vars.at(k).pow(v);
        return r;
    };
    return vars.at(removed) * vars.at(e.added) == prod(e.first) + prod(e.second);
}

} // namespace ptri
