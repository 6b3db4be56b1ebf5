#pragma once

#include "pseudotri/cluster.hpp"
#include "pseudotri/json_io.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace httplib {
class Server;
}

namespace ptri::service {

struct Response {
    int status = 200;
    json body;
};

struct Session {
    std::string id;
    Dn d;
    Seed initial;
    Seed current;
    std::vector<std::pair<int, int>> history; // (flipped pair, replacing pair)
    long version = 0;
    std::optional<VariableTable> table; // all variables over the initial seed, built on demand
    std::mutex lock;

    Session(std::string id, Dn d, Seed s) : id(std::move(id)), d(std::move(d)), initial(s), current(std::move(s)) {}
};

// Session store behind the HTTP routes. Every call returns a status and a JSON body; errors
// come back as {"error": message} with 400, 404, 409 or 422.
class Store {
public:
    // With a non-empty path, sessions are reloaded from and saved to that JSON file.
    explicit Store(std::string persist_path = {});

    Response create(const json& body);
    Response get(const std::string& id);
    Response flip(const std::string& id, const json& body);
    Response undo(const std::string& id, const json& body);
    Response variables(const std::string& id);
    Response quiver(const std::string& id);
    Response flipgraph(const std::string& n);

private:
    std::mutex lock_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    long next_id_ = 1;
    std::string persist_path_;

    std::shared_ptr<Session> find(const std::string& id);
    void save();
    void load();
};

json state_of(Session& s);

// Registers the routes and CORS headers on srv.
void mount(httplib::Server& srv, Store& store);

} // namespace ptri::service
