#include "pseudotri/json_io.hpp"

#include "pseudotri/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ptri {

json to_json(const Dn& d, const Chord& c)
{
    (void)d;
    if (c.central())
        return {{"kind", "central"}, {"p", c.p}, {"side", std::string(1, side_letter(c.side))}};
    return {{"kind", "straight"}, {"p", c.p}, {"q", c.q}};
}

json pair_to_json(const Dn& d, int pair)
{
    const CsPair& p = d.pair(pair);
    return {{"rep", to_json(d, p.rep)}, {"partner", to_json(d, p.partner)}, {"name", d.pair_name(pair)}};
}

json pt_to_json(const Dn& d, const PT& t)
{
    json pairs = json::array();
    for (int i : t)
        pairs.push_back(pair_to_json(d, i));
    return {{"n", d.n()}, {"pairs", pairs}, {"class", class_name(classify(d, t))}};
}

json to_json(const LaurentPoly& f, const std::vector<std::string>& names)
{
    json terms = json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        terms.push_back({{"coeff", it->second.get_str()}, {"exps", it->first}});
    std::vector<std::string> vars(names.begin(), names.begin() + f.nvars());
    return {{"vars", vars}, {"terms", terms}};
}

json quiver_to_json(const Dn& d, const Quiver& q)
{
    json nodes = json::array();
    for (int i = 0; i < q.size(); ++i) {
        if (i < q.mutable_count)
            nodes.push_back(d.pair_name(q.labels[i]));
        else
            nodes.push_back("b" + std::to_string(q.labels[i]));
    }
    json arcs = json::array();
    for (auto [i, j] : q.arcs())
        arcs.push_back({i, j});
    return {{"nodes", nodes}, {"arcs", arcs}, {"mutable", q.mutable_count}};
}

json seed_to_json(const Dn& d, const Seed& s)
{
    json vars = json::array();
    for (std::size_t i = 0; i < s.t.size(); ++i)
        vars.push_back({{"pair", d.pair_name(s.t[i])},
                        {"text", s.vars[i].to_fraction(s.names)},
                        {"poly", to_json(s.vars[i], s.names)}});
    return {{"pseudotriangulation", pt_to_json(d, s.t)}, {"vars", vars}, {"quiver", quiver_to_json(d, s.quiver)}};
}

json flipgraph_to_json(const Dn& d, const FlipGraph& g)
{
    json nodes = json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        json pairs = json::array();
        for (int p : g.nodes[i])
            pairs.push_back(d.pair_name(p));
        json edges = json::array();
        for (const FlipEdge& e : g.adj[i])
            edges.push_back({{"removed", d.pair_name(e.removed)},
                             {"added", d.pair_name(e.added)},
                             {"target", e.target}});
        nodes.push_back({{"id", i}, {"pairs", pairs}, {"class", class_name(classify(d, g.nodes[i]))}, {"flips", edges}});
    }
    return {{"n", d.n()}, {"nodes", nodes}};
}

Chord chord_from_json(const Dn& d, const json& j)
{
    if (j.is_string()) {
        auto c = d.parse_chord(j.get<std::string>());
        if (!c)
            throw InvalidInput("malformed chord: " + j.get<std::string>());
        return *c;
    }
    if (!j.is_object())
        throw InvalidInput("malformed chord: " + j.dump());
    if (j.contains("rep"))
        return chord_from_json(d, j.at("rep"));
    try {
        std::string kind = j.at("kind").get<std::string>();
        Chord c;
        if (kind == "straight") {
            int p = j.at("p").get<int>(), q = j.at("q").get<int>();
            if (p < 0 || q < 0 || p >= d.vertices() || q >= d.vertices())
                throw InvalidInput("chord endpoint out of range: " + j.dump());
            c = d.straight(p, q);
        } else if (kind == "central") {
            int p = j.at("p").get<int>();
            if (p < 0 || p >= d.vertices())
                throw InvalidInput("chord endpoint out of range: " + j.dump());
            std::string s = j.at("side").get<std::string>();
            if (s == "L" || s == "A")
                c = d.central(p, Side::A);
            else if (s == "R" || s == "B")
                c = d.central(p, Side::B);
            else
                throw InvalidInput("central chord side must be L or R: " + j.dump());
        } else {
            throw InvalidInput("unknown chord kind: " + kind);
        }
        if (!d.valid(c))
            throw InvalidInput("not a chord of D_" + std::to_string(d.n()) + ": " + j.dump());
        return c;
    } catch (const json::exception& e) {
        throw InvalidInput("malformed chord " + j.dump() + ": " + e.what());
    }
}

int pair_from_json(const Dn& d, const json& j)
{
    return d.pair_index(chord_from_json(d, j));
}

PT pt_from_json(const Dn& d, const json& j)
{
    if (!j.is_object() || !j.contains("pairs") || !j.at("pairs").is_array())
        throw InvalidInput("pseudotriangulation needs a \"pairs\" array");
    if (j.contains("n") && j.at("n") != d.n())
        throw InvalidInput("pseudotriangulation is for n = " + j.at("n").dump());
    PT t;
    for (const json& p : j.at("pairs"))
        t.push_back(pair_from_json(d, p));
    std::sort(t.begin(), t.end());
    if (!is_pseudotriangulation(d, t))
        throw InvalidInput("pairs do not form a centrally symmetric pseudotriangulation");
    return t;
}

LaurentPoly laurent_from_json(const json& j, const std::vector<std::string>& names)
{
    try {
        auto vars = j.at("vars").get<std::vector<std::string>>();
        if (vars.size() > names.size() || !std::equal(vars.begin(), vars.end(), names.begin()))
            throw InvalidInput("variable names do not match");
        LaurentPoly f(static_cast<int>(vars.size()));
        for (const json& t : j.at("terms"))
            f.add_term(t.at("exps").get<Exps>(), mpz_class(t.at("coeff").get<std::string>()));
        return f;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed polynomial: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(std::string("malformed coefficient: ") + e.what());
    }
}

std::string flipgraph_to_dot(const Dn& d, const FlipGraph& g)
{
    std::ostringstream os;
    os << "graph flips_D" << d.n() << " {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        os << "  " << i << " [label=\"";
        for (std::size_t k = 0; k < g.nodes[i].size(); ++k)
            os << (k ? " " : "") << d.pair_name(g.nodes[i][k]);
        os << "\"];\n";
    }
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (const FlipEdge& e : g.adj[i])
            if (static_cast<int>(i) < e.target)
                os << "  " << i << " -- " << e.target << " [label=\"" << d.pair_name(e.removed) << "/"
                   << d.pair_name(e.added) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string quiver_to_dot(const Dn& d, const Quiver& q)
{
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (int i = 0; i < q.size(); ++i) {
        if (i < q.mutable_count)
            os << "  " << i << " [label=\"" << d.pair_name(q.labels[i]) << "\"];\n";
        else
            os << "  " << i << " [label=\"b" << q.labels[i] << "\", shape=box];\n";
    }
    for (auto [i, j] : q.arcs())
        os << "  " << i << " -> " << j << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace ptri
