#include "pseudotri/tools/service.hpp"

#include "pseudotri/errors.hpp"
#include "pseudotri/tools/seeds.hpp"

#include <httplib.h>
#include <spdlog/spdlog.h>

#include <cstdio>
#include <fstream>

namespace ptri::service {

namespace {

struct HttpError : std::runtime_error {
    int status;
    HttpError(int status, const std::string& what) : std::runtime_error(what), status(status) {}
};

template <class F>
Response guarded(F&& f)
{
    try {
        return f();
    } catch (const HttpError& e) {
        return {e.status, {{"error", e.what()}}};
    } catch (const InvalidInput& e) {
        return {400, {{"error", e.what()}}};
    } catch (const std::exception& e) {
        spdlog::error("internal error: {}", e.what());
        return {500, {{"error", e.what()}}};
    }
}

int pair_in_request(const Dn& d, const json& body)
{
    if (!body.is_object() || !body.contains("pair"))
        throw InvalidInput("request needs a \"pair\"");
    return pair_from_json(d, body.at("pair"));
}

void check_version(const Session& s, const json& body)
{
    if (body.is_object() && body.contains("version")) {
        if (!body.at("version").is_number_integer())
            throw InvalidInput("\"version\" must be an integer");
        if (body.at("version").get<long>() != s.version)
            throw HttpError(409, "stale version " + body.at("version").dump() + ", session is at " +
                                     std::to_string(s.version));
    }
}

json variable_json(const LaurentPoly& f, const std::vector<std::string>& names)
{
    return {{"text", f.to_fraction(names)}, {"poly", to_json(f, names)}};
}

const VariableTable& table_of(Session& s)
{
    if (!s.table)
        s.table = all_cluster_variables(s.d, s.initial);
    return *s.table;
}

} // namespace

json state_of(Session& s)
{
    const Dn& d = s.d;
    json vars = json::array();
    for (std::size_t i = 0; i < s.current.t.size(); ++i) {
        json v = variable_json(s.current.vars[i], s.current.names);
        v["pair"] = d.pair_name(s.current.t[i]);
        vars.push_back(v);
    }
    json flips = json::array();
    for (int p : s.current.t) {
        Mutation m = mutate(d, s.current, p);
        flips.push_back({{"pair", d.pair_name(p)},
                         {"replacement", pair_to_json(d, m.added)},
                         {"variable", variable_json(m.seed.var_of(m.added), s.current.names)}});
    }
    json history = json::array();
    for (auto [removed, added] : s.history)
        history.push_back({{"removed", d.pair_name(removed)}, {"added", d.pair_name(added)}});
    return {{"sessionId", s.id},
            {"version", s.version},
            {"n", d.n()},
            {"class", class_name(classify(d, s.current.t))},
            {"pseudotriangulation", pt_to_json(d, s.current.t)},
            {"names", s.current.names},
            {"variables", vars},
            {"quiver", quiver_to_json(d, s.current.quiver)},
            {"flips", flips},
            {"history", history}};
}

Store::Store(std::string persist_path) : persist_path_(std::move(persist_path))
{
    if (!persist_path_.empty())
        load();
}

std::shared_ptr<Session> Store::find(const std::string& id)
{
    std::lock_guard g(lock_);
    auto it = sessions_.find(id);
    if (it == sessions_.end())
        throw HttpError(404, "unknown session " + id);
    return it->second;
}

Response Store::create(const json& body)
{
    return guarded([&]() -> Response {
        if (!body.is_object() || !body.contains("n") || !body.at("n").is_number_integer())
            throw InvalidInput("request needs an integer \"n\"");
        Dn d(body.at("n").get<int>());
        Seed seed = initial_seed(d, central_seed(d, 0));
        if (body.contains("seed")) {
            const json& sj = body.at("seed");
            if (sj.is_string()) {
                std::string spec = sj.get<std::string>();
                if (spec != "star-left" && spec != "star-right" && spec.rfind("central:", 0) != 0 &&
                    spec.rfind("zc:", 0) != 0)
                    throw InvalidInput("unknown seed name " + spec); // no file access over HTTP
                seed = tools::seed_from_spec(d, spec);
            } else {
                seed = tools::seed_from_json(d, sj);
            }
        }
        std::shared_ptr<Session> s;
        {
            std::lock_guard g(lock_);
            std::string id = "s" + std::to_string(next_id_++);
            s = std::make_shared<Session>(id, d, seed);
            sessions_[id] = s;
        }
        spdlog::info("session {} created, n = {}", s->id, d.n());
        json st;
        {
            std::lock_guard g(s->lock);
            st = state_of(*s);
        }
        save();
        return {201, {{"sessionId", s->id}, {"state", st}}};
    });
}

Response Store::get(const std::string& id)
{
    return guarded([&]() -> Response {
        auto s = find(id);
        std::lock_guard g(s->lock);
        return {200, state_of(*s)};
    });
}

Response Store::flip(const std::string& id, const json& body)
{
    return guarded([&]() -> Response {
        auto s = find(id);
        json st;
        {
            std::lock_guard g(s->lock);
            int p = pair_in_request(s->d, body);
            check_version(*s, body);
            if (!std::binary_search(s->current.t.begin(), s->current.t.end(), p))
                throw HttpError(422, s->d.pair_name(p) + " is not in the current cluster");
            Mutation m = mutate(s->d, s->current, p);
            s->current = std::move(m.seed);
            s->history.emplace_back(p, m.added);
            ++s->version;
            spdlog::debug("session {}: flipped {} -> {}", id, s->d.pair_name(p), s->d.pair_name(m.added));
            st = state_of(*s);
        }
        save();
        return {200, st};
    });
}

Response Store::undo(const std::string& id, const json& body)
{
    return guarded([&]() -> Response {
        auto s = find(id);
        json st;
        {
            std::lock_guard g(s->lock);
            check_version(*s, body);
            if (s->history.empty())
                throw HttpError(422, "nothing to undo");
            auto [removed, added] = s->history.back();
            Mutation m = mutate(s->d, s->current, added);
            if (m.added != removed)
                throw ModelInconsistency("undo did not restore " + s->d.pair_name(removed));
            s->current = std::move(m.seed);
            s->history.pop_back();
            ++s->version;
            st = state_of(*s);
        }
        save();
        return {200, st};
    });
}

Response Store::variables(const std::string& id)
{
    return guarded([&]() -> Response {
        auto s = find(id);
        std::lock_guard g(s->lock);
        const VariableTable& tab = table_of(*s);
        json rows = json::array();
        for (int p = 0; p < s->d.pair_count(); ++p) {
            json v = variable_json(tab.vars[p], tab.names);
            v["pair"] = s->d.pair_name(p);
            v["inCluster"] = std::binary_search(s->current.t.begin(), s->current.t.end(), p);
            rows.push_back(v);
        }
        return {200, {{"n", s->d.n()}, {"names", tab.names}, {"seeds", tab.seeds}, {"variables", rows}}};
    });
}

Response Store::quiver(const std::string& id)
{
    return guarded([&]() -> Response {
        auto s = find(id);
        std::lock_guard g(s->lock);
        return {200, quiver_to_json(s->d, s->current.quiver)};
    });
}

Response Store::flipgraph(const std::string& n)
{
    return guarded([&]() -> Response {
        int k;
        try {
            std::size_t used = 0;
            k = std::stoi(n, &used);
            if (used != n.size())
                throw InvalidInput("");
        } catch (const std::exception&) {
            throw InvalidInput("query parameter n must be an integer");
        }
        if (k > 9)
            throw InvalidInput("flip graphs are served for n <= 9");
        Dn d(k);
        return {200, flipgraph_to_json(d, enumerate(d))};
    });
}

void Store::save()
{
    if (persist_path_.empty())
        return;
    std::lock_guard g(lock_);
    json all = json::array();
    for (auto& [id, s] : sessions_) {
        std::lock_guard sg(s->lock);
        json pairs = json::array();
        for (int p : s->initial.t)
            pairs.push_back(s->d.pair_name(p));
        json history = json::array();
        for (auto [removed, added] : s->history)
            history.push_back({s->d.pair_name(removed), s->d.pair_name(added)});
        all.push_back({{"id", id},
                       {"version", s->version},
                       {"seed", {{"n", s->d.n()}, {"pairs", pairs}, {"names", s->initial.names}}},
                       {"history", history}});
    }
    std::string tmp = persist_path_ + ".tmp";
    {
        std::ofstream out(tmp);
        out << json{{"next", next_id_}, {"sessions", all}}.dump(2) << "\n";
        if (!out) {
            spdlog::error("cannot write {}", tmp);
            return;
        }
    }
    std::rename(tmp.c_str(), persist_path_.c_str());
}

void Store::load()
{
    std::ifstream in(persist_path_);
    if (!in)
        return;
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded())
        throw InvalidInput("session file is not valid JSON: " + persist_path_);
    next_id_ = j.value("next", 1L);
    for (const json& sj : j.value("sessions", json::array())) {
        Dn d(sj.at("seed").at("n").get<int>());
        auto s = std::make_shared<Session>(sj.at("id").get<std::string>(), d,
                                           tools::seed_from_json(d, sj.at("seed")));
        // replaying the history must land on the recorded replacements
        for (const json& h : sj.at("history")) {
            int removed = pair_from_json(d, h.at(0)), added = pair_from_json(d, h.at(1));
            Mutation m = mutate(d, s->current, removed);
            if (m.added != added)
                throw ModelInconsistency("session " + s->id + " does not replay");
            s->current = std::move(m.seed);
            s->history.emplace_back(removed, added);
        }
        s->version = sj.value("version", 0L);
        sessions_[s->id] = s;
    }
    spdlog::info("loaded {} sessions from {}", sessions_.size(), persist_path_);
}

void mount(httplib::Server& srv, Store& store)
{
    srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                             {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                             {"Access-Control-Allow-Headers", "Content-Type"}});
    auto reply = [](httplib::Response& res, const Response& r) {
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };
    auto parse = [](const httplib::Request& req, json& out) {
        if (req.body.empty()) {
            out = json::object();
            return true;
        }
        out = json::parse(req.body, nullptr, false);
        return !out.is_discarded();
    };
    auto bad_json = Response{400, {{"error", "request body is not valid JSON"}}};

    srv.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    srv.Post("/sessions", [=, &store](const httplib::Request& req, httplib::Response& res) {
        json body;
        reply(res, parse(req, body) ? store.create(body) : bad_json);
    });
    srv.Get(R"(/sessions/([^/]+))", [=, &store](const httplib::Request& req, httplib::Response& res) {
        reply(res, store.get(req.matches[1]));
    });
    srv.Post(R"(/sessions/([^/]+)/flip)", [=, &store](const httplib::Request& req, httplib::Response& res) {
        json body;
        reply(res, parse(req, body) ? store.flip(req.matches[1], body) : bad_json);
    });
    srv.Post(R"(/sessions/([^/]+)/undo)", [=, &store](const httplib::Request& req, httplib::Response& res) {
        json body;
        reply(res, parse(req, body) ? store.undo(req.matches[1], body) : bad_json);
    });
    srv.Get(R"(/sessions/([^/]+)/variables)", [=, &store](const httplib::Request& req, httplib::Response& res) {
        reply(res, store.variables(req.matches[1]));
    });
    srv.Get(R"(/sessions/([^/]+)/quiver)", [=, &store](const httplib::Request& req, httplib::Response& res) {
        reply(res, store.quiver(req.matches[1]));
    });
    srv.Get("/meta/flipgraph", [=, &store](const httplib::Request& req, httplib::Response& res) {
        if (!req.has_param("n"))
            reply(res, {400, {{"error", "query parameter n is required"}}});
        else
            reply(res, store.flipgraph(req.get_param_value("n")));
    });
    srv.set_logger([](const httplib::Request& req, const httplib::Response& res) {
        spdlog::debug("{} {} -> {}", req.method, req.path, res.status);
    });
}

} // namespace ptri::service
