#include "pseudotri/cluster.hpp"
#include "pseudotri/coxeter.hpp"
#include "pseudotri/errors.hpp"
#include "pseudotri/json_io.hpp"
#include "pseudotri/matchings.hpp"
#include "pseudotri/tools/seeds.hpp"
#include "pseudotri/tools/service.hpp"

#include <CLI11.hpp>
#include <httplib.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

using namespace ptri;

namespace {

struct Common {
    int n = 0;
    std::string seed = "star-left";
    std::string format = "json";
    std::string out;
    int jobs = 1;
};

struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Common& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    f << text;
    if (!f)
        throw InvalidInput("cannot write " + o.out);
    spdlog::info("wrote {}", o.out);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string pair_list(const Dn& d, const PT& t)
{
    std::string s;
    for (int p : t)
        s += (s.empty() ? "" : " ") + d.pair_name(p);
    return s;
}

std::string run_enumerate(const Common& o)
{
    Dn d(o.n);
    FlipGraph g = enumerate(d, o.jobs);
    spdlog::info("D_{}: {} pseudotriangulations", o.n, g.nodes.size());
    if (o.format == "dot")
        return flipgraph_to_dot(d, g);
    if (o.format == "json")
        return dump(flipgraph_to_json(d, g));
    std::ostringstream os;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        os << std::setw(5) << i << "  " << std::left << std::setw(8) << class_name(classify(d, g.nodes[i]))
           << std::right << "  " << pair_list(d, g.nodes[i]) << "\n";
    return os.str();
}

std::string run_variables(const Common& o)
{
    Dn d(o.n);
    Seed s = tools::seed_from_spec(d, o.seed);
    VariableTable tab = all_cluster_variables(d, s, o.jobs);
    if (o.format == "json") {
        json rows = json::array();
        for (int p = 0; p < d.pair_count(); ++p)
            rows.push_back({{"pair", d.pair_name(p)},
                            {"text", tab.vars[p].to_fraction(tab.names)},
                            {"poly", to_json(tab.vars[p], tab.names)},
                            {"dVector", d_vector(d, s, tab, p)}});
        return dump({{"n", o.n}, {"seed", seed_to_json(d, s)}, {"seeds", tab.seeds}, {"variables", rows}});
    }
    std::ostringstream os;
    os << "# seed:";
    for (std::size_t i = 0; i < s.t.size(); ++i)
        os << " " << d.pair_name(s.t[i]) << "=" << s.names[i];
    os << "\n";
    for (int p = 0; p < d.pair_count(); ++p)
        os << std::left << std::setw(8) << d.pair_name(p) << " " << tab.vars[p].to_fraction(tab.names) << "\n";
    return os.str();
}

std::string run_flip(const Common& o, const std::vector<std::string>& pairs)
{
    Dn d(o.n);
    Seed s = tools::seed_from_spec(d, o.seed);
    json steps = json::array();
    for (const std::string& name : pairs) {
        int p = pair_from_json(d, json(name));
        if (!std::binary_search(s.t.begin(), s.t.end(), p))
            throw InvalidInput(d.pair_name(p) + " is not in the current cluster");
        Mutation m = mutate(d, s, p);
        steps.push_back({{"removed", d.pair_name(p)}, {"added", d.pair_name(m.added)},
                         {"variable", m.seed.var_of(m.added).to_fraction(s.names)}});
        s = std::move(m.seed);
    }
    if (o.format == "json")
        return dump({{"flips", steps}, {"seed", seed_to_json(d, s)}});
    std::ostringstream os;
    for (const json& st : steps)
        os << st["removed"].get<std::string>() << " -> " << st["added"].get<std::string>() << "  "
           << st["variable"].get<std::string>() << "\n";
    os << "T = {" << pair_list(d, s.t) << "} (" << class_name(classify(d, s.t)) << ")\n";
    return os.str();
}

std::string run_quiver(const Common& o, bool frozen)
{
    Dn d(o.n);
    Seed s = tools::seed_from_spec(d, o.seed);
    Quiver q = quiver_of(d, s.t, frozen);
    if (o.format == "dot")
        return quiver_to_dot(d, q);
    if (o.format == "json")
        return dump(quiver_to_json(d, q));
    json j = quiver_to_json(d, q);
    std::ostringstream os;
    for (const json& a : j["arcs"])
        os << j["nodes"][a[0].get<int>()].get<std::string>() << " -> " << j["nodes"][a[1].get<int>()].get<std::string>()
           << "\n";
    return os.str();
}

std::string run_matching(const Common& o, const std::string& pair, int opening)
{
    Dn d(o.n);
    Seed s = tools::seed_from_spec(d, o.seed);
    auto os = openings(d, s);
    if (o.format == "dot") {
        if (opening < 0 || opening >= static_cast<int>(os.size()))
            throw InvalidInput("opening index must be in 0.." + std::to_string(os.size() - 1));
        return to_dot(os[opening], incidence_graph(os[opening]), s.names);
    }
    std::vector<int> which;
    if (pair.empty()) {
        which.resize(d.pair_count());
        std::iota(which.begin(), which.end(), 0);
    } else {
        which.push_back(pair_from_json(d, json(pair)));
    }
    json rows = json::array();
    std::ostringstream text;
    for (int p : which) {
        MatchingValue mv = variable_via_matching(d, s, os, p);
        const Opening& op = os[mv.opening];
        std::string del = op.vertex_name(mv.deleted.first) + "," + op.vertex_name(mv.deleted.second);
        rows.push_back({{"pair", d.pair_name(p)},
                        {"opening", op.key()},
                        {"chord", d.name(mv.rep)},
                        {"deleted", {op.vertex_name(mv.deleted.first), op.vertex_name(mv.deleted.second)}},
                        {"w", mv.w.to_string(s.names)},
                        {"m", mv.m.to_fraction(s.names)},
                        {"x", mv.x.to_fraction(s.names)}});
        text << std::left << std::setw(8) << d.pair_name(p) << " " << std::setw(12) << op.key() << " del "
             << std::setw(6) << del << " w = " << mv.w.to_string(s.names) << "   x = " << mv.x.to_fraction(s.names)
             << "\n";
    }
    if (o.format == "json") {
        json ops = json::array();
        for (const Opening& op : os)
            ops.push_back({{"key", op.key()}, {"lo", op.lo}, {"hi", op.hi},
                           {"diagonalProduct", op.diagonal_product.to_string(s.names)}});
        return dump({{"openings", ops}, {"values", rows}});
    }
    return text.str();
}

std::string run_subword(const Common& o, const std::string& ctext, const std::string& facet)
{
    Dn d(o.n);
    SubwordComplex sc(d, tools::parse_coxeter(o.n, ctext));
    std::vector<int> positions;
    if (!facet.empty()) {
        std::istringstream is(facet);
        std::string item;
        while (std::getline(is, item, ',')) {
            int k;
            try {
                k = std::stoi(item);
            } catch (const std::exception&) {
                throw InvalidInput("malformed position list: " + facet);
            }
            if (k < 1 || k > sc.size())
                throw InvalidInput("positions must be in 1.." + std::to_string(sc.size()));
            positions.push_back(k);
        }
    }
    auto root_text = [&](const std::vector<int>& r) {
        std::string s = "(";
        for (std::size_t i = 0; i < r.size(); ++i)
            s += (i ? "," : "") + std::to_string(r[i]);
        return s + ")";
    };
    if (o.format == "json") {
        json rows = json::array();
        for (int i = 1; i <= sc.size(); ++i)
            rows.push_back({{"position", i}, {"letter", sc.letter(i)}, {"pair", d.pair_name(sc.pair_at(i))},
                            {"rotation", sc.rotation(i)}, {"root", sc.root_of(sc.pair_at(i))}});
        json j{{"n", o.n}, {"c", sc.c()}, {"word", sc.word()}, {"rows", rows}};
        if (!positions.empty())
            j["facet"] = sc.facet_check(positions);
        return dump(j);
    }
    std::ostringstream os;
    os << "pos letter pair    rot  root\n";
    for (int i = 1; i <= sc.size(); ++i)
        os << std::setw(3) << i << " " << std::setw(6) << sc.letter(i) << " " << std::left << std::setw(7)
           << d.pair_name(sc.pair_at(i)) << std::right << " " << std::setw(3) << sc.rotation(i) << "  "
           << root_text(sc.root_of(sc.pair_at(i))) << "\n";
    if (!positions.empty())
        os << "facet: " << (sc.facet_check(positions) ? "yes" : "no") << "\n";
    return os.str();
}

// Each suite returns a one-line summary and throws VerificationFailed on a violated identity.
std::string suite_commutation(const Dn& d, int jobs)
{
    int n = d.n();
    FlipGraph g = enumerate(d, jobs);
    long flips = 0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        Quiver q = quiver_of(d, g.nodes[i]);
        Seed s;
        s.t = g.nodes[i];
        s.quiver = q;
        for (int k = 0; k < n; ++k)
            s.vars.push_back(LaurentPoly::variable(n, k));
        for (const FlipEdge& e : g.adj[i]) {
            if (!(mutate(d, s, e.removed).seed.quiver == quiver_of(d, g.nodes[e.target])))
                throw VerificationFailed("quiver mismatch after flipping " + d.pair_name(e.removed));
            ++flips;
        }
    }
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    long accordions = 0;
    do {
        SubwordComplex sc(d, c);
        Quiver q = quiver_of(d, sc.zc());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                long ca = std::find(c.begin(), c.end(), a) - c.begin(), cb = std::find(c.begin(), c.end(), b) - c.begin();
                int want = dynkin_adjacent(n, a, b) ? (ca < cb ? 1 : -1) : 0;
                if (q.b[q.local(sc.zc_pair(a))][q.local(sc.zc_pair(b))] != want)
                    throw VerificationFailed("accordion quiver is not the oriented Dynkin diagram");
            }
        ++accordions;
    } while (std::next_permutation(c.begin(), c.end()));
    return std::to_string(flips) + " flips, " + std::to_string(accordions) + " Coxeter elements";
}

std::string suite_laurent(const Dn& d, const Seed& s, int jobs)
{
    VariableTable tab = all_cluster_variables(d, s, jobs);
    for (int p = 0; p < d.pair_count(); ++p) {
        if (!tab.vars[p].positive())
            throw VerificationFailed("negative coefficient in x_" + d.pair_name(p));
        d_vector(d, s, tab, p);
    }
    return std::to_string(tab.seeds) + " seeds, " + std::to_string(d.pair_count()) + " variables";
}

std::string suite_matching(const Dn& d, const Seed& s0, int jobs)
{
    long checks = 0;
    for (const Seed& s : all_seeds(d, s0, jobs)) {
        Seed fresh = initial_seed(d, s.t);
        VariableTable tab = all_cluster_variables(d, fresh, jobs);
        auto os = openings(d, fresh);
        for (int p = 0; p < d.pair_count(); ++p) {
            if (!(variable_via_matching(d, fresh, os, p).x == tab.vars[p]))
                throw VerificationFailed("matching value of " + d.pair_name(p) + " disagrees");
            ++checks;
        }
    }
    return std::to_string(checks) + " (T, delta) values";
}

std::string suite_subword(const Dn& d, int jobs)
{
    int n = d.n();
    FlipGraph g = enumerate(d, jobs);
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    long elements = 0;
    std::set<std::vector<int>> almost = positive_roots(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = -1;
        almost.insert(e);
    }
    do {
        SubwordComplex sc(d, c);
        for (const PT& t : g.nodes) {
            std::vector<int> pos;
            for (int p : t)
                pos.push_back(sc.position_of(p));
            std::sort(pos.begin(), pos.end());
            if (!sc.facet_check(pos))
                throw VerificationFailed("pseudotriangulation is not a facet");
        }
        std::set<std::vector<int>> img;
        for (int p = 0; p < d.pair_count(); ++p)
            img.insert(sc.root_of(p));
        if (img != almost)
            throw VerificationFailed("root_of is not a bijection onto almost positive roots");
        ++elements;
    } while (std::next_permutation(c.begin(), c.end()));
    return std::to_string(elements) + " Coxeter elements, " + std::to_string(g.nodes.size()) + " facets each";
}

std::string run_verify(const Common& o, const std::string& suite)
{
    Dn d(o.n);
    Seed s = tools::seed_from_spec(d, o.seed);
    std::vector<std::pair<std::string, std::function<std::string()>>> suites{
        {"commutation", [&] { return suite_commutation(d, o.jobs); }},
        {"laurent", [&] { return suite_laurent(d, s, o.jobs); }},
        {"matching", [&] { return suite_matching(d, s, o.jobs); }},
        {"subword", [&] { return suite_subword(d, o.jobs); }},
    };
    std::ostringstream os;
    bool failed = false;
    for (auto& [name, f] : suites) {
        if (suite != "all" && suite != name)
            continue;
        try {
            os << name << ": ok (" << f() << ")\n";
        } catch (const VerificationFailed& e) {
            os << name << ": failed (" << e.what() << ")\n";
            failed = true;
        } catch (const ModelInconsistency& e) {
            os << name << ": failed (" << e.what() << ")\n";
            failed = true;
        }
    }
    if (failed) {
        emit(o, os.str());
        throw VerificationFailed("verification failed");
    }
    return os.str();
}

int run_serve(int port, const std::string& host, const std::string& persist)
{
    service::Store store(persist);
    httplib::Server srv;
    service::mount(srv, store);
    spdlog::info("listening on {}:{}", host, port);
    if (!srv.listen(host, port)) {
        spdlog::error("cannot listen on {}:{}", host, port);
        return 1;
    }
    return 0;
}

void setup_logging()
{
    auto logger = spdlog::stderr_color_mt("pseudotri");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* lvl = std::getenv("PSEUDOTRI_LOG"))
        spdlog::set_level(spdlog::level::from_str(lvl));
}

} // namespace

int main(int argc, char** argv)
{
    setup_logging();
    CLI::App app{"Centrally symmetric pseudotriangulations and type D cluster algebras"};
    app.require_subcommand(1);

    std::map<std::string, Common> opts; // one set per subcommand, so defaults do not leak
    auto add_common = [&](CLI::App* sub, std::vector<std::string> formats, bool seed) {
        Common& o = opts[sub->get_name()];
        sub->add_option("--n", o.n, "rank n >= 3")->required();
        if (seed)
            sub->add_option("--seed", o.seed, "seed: star-left, star-right, central:<p>, zc:<c> or a JSON file");
        o.format = formats.front();
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", o.out, "write output to this file");
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* enumerate_cmd = app.add_subcommand("enumerate", "flip graph of all pseudotriangulations");
    add_common(enumerate_cmd, {"json", "dot", "text"}, false);

    auto* variables_cmd = app.add_subcommand("variables", "all cluster variables over a seed");
    add_common(variables_cmd, {"json", "text"}, true);

    std::vector<std::string> flip_pairs;
    auto* flip_cmd = app.add_subcommand("flip", "flip pairs in sequence");
    add_common(flip_cmd, {"json", "text"}, true);
    flip_cmd->add_option("--pair", flip_pairs, "pair to flip, by chord name; repeatable")->required();

    bool frozen = false;
    auto* quiver_cmd = app.add_subcommand("quiver", "quiver of a seed");
    add_common(quiver_cmd, {"json", "dot", "text"}, true);
    quiver_cmd->add_flag("--frozen", frozen, "add boundary classes as frozen nodes");

    std::string match_pair;
    int opening = 0;
    auto* matching_cmd = app.add_subcommand("matching", "cluster variables from perfect matchings");
    add_common(matching_cmd, {"json", "text", "dot"}, true);
    matching_cmd->add_option("--pair", match_pair, "only this pair");
    matching_cmd->add_option("--opening", opening, "opening to draw with --format dot");

    std::string ctext, facet;
    auto* subword_cmd = app.add_subcommand("subword", "Q_c table, facets and c-cluster roots");
    add_common(subword_cmd, {"json", "text"}, false);
    subword_cmd->add_option("--c", ctext, "Coxeter element as a generator list, e.g. 1,2,0")->required();
    subword_cmd->add_option("--facet", facet, "test a set of positions, e.g. 1,7,8");

    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "check identities exhaustively");
    add_common(verify_cmd, {"text"}, true);
    verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"all", "commutation", "laurent", "matching", "subword"}));

    int port = 8080;
    std::string host = "127.0.0.1", persist;
    auto* serve_cmd = app.add_subcommand("serve", "HTTP JSON API for the explorer");
    serve_cmd->add_option("--port", port)->check(CLI::Range(1, 65535));
    serve_cmd->add_option("--host", host);
    serve_cmd->add_option("--persist", persist, "keep sessions in this JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Common& o = opts[app.get_subcommands().front()->get_name()];
    try {
        if (serve_cmd->parsed())
            return run_serve(port, host, persist);
        std::string text;
        if (enumerate_cmd->parsed())
            text = run_enumerate(o);
        else if (variables_cmd->parsed())
            text = run_variables(o);
        else if (flip_cmd->parsed())
            text = run_flip(o, flip_pairs);
        else if (quiver_cmd->parsed())
            text = run_quiver(o, frozen);
        else if (matching_cmd->parsed())
            text = run_matching(o, match_pair, opening);
        else if (subword_cmd->parsed())
            text = run_subword(o, ctext, facet);
        else if (verify_cmd->parsed())
            text = run_verify(o, suite);
        emit(o, text);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
