#include "pseudotri/tools/seeds.hpp"

#include "pseudotri/coxeter.hpp"
#include "pseudotri/errors.hpp"

#include <fstream>
#include <sstream>

namespace ptri::tools {

std::vector<int> parse_coxeter(int n, const std::string& text)
{
    std::vector<int> c;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            std::size_t used = 0;
            c.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw InvalidInput("");
        } catch (const std::exception&) {
            throw InvalidInput("malformed Coxeter element: " + text);
        }
    }
    check_coxeter_element(n, c);
    return c;
}

Seed seed_from_json(const Dn& d, const json& j)
{
    PT t = pt_from_json(d, j);
    std::vector<std::string> names;
    if (j.contains("names")) {
        const json& nm = j.at("names");
        if (nm.is_array()) {
            for (const json& s : nm) {
                if (!s.is_string())
                    throw InvalidInput("variable names must be strings");
                names.push_back(s.get<std::string>());
            }
        } else if (nm.is_object()) {
            std::map<int, std::string> by_pair;
            for (auto it = nm.begin(); it != nm.end(); ++it) {
                if (!it.value().is_string())
                    throw InvalidInput("variable names must be strings");
                by_pair[pair_from_json(d, json(it.key()))] = it.value().get<std::string>();
            }
            for (int p : t) {
                if (!by_pair.count(p))
                    throw InvalidInput("no name given for " + d.pair_name(p));
                names.push_back(by_pair[p]);
            }
        } else {
            throw InvalidInput("\"names\" must be an array or an object");
        }
    }
    return initial_seed(d, t, names);
}

Seed seed_from_spec(const Dn& d, const std::string& spec)
{
    if (spec == "star-left")
        return initial_seed(d, star(d, Side::A));
    if (spec == "star-right")
        return initial_seed(d, star(d, Side::B));
    if (spec.rfind("central:", 0) == 0) {
        int p;
        try {
            p = std::stoi(spec.substr(8));
        } catch (const std::exception&) {
            throw InvalidInput("malformed seed: " + spec);
        }
        if (p < 0 || p >= d.n())
            throw InvalidInput("central seed vertex must be in 0.." + std::to_string(d.n() - 1));
        return initial_seed(d, central_seed(d, p));
    }
    if (spec.rfind("zc:", 0) == 0)
        return initial_seed(d, SubwordComplex(d, parse_coxeter(d.n(), spec.substr(3))).zc());
    std::ifstream in(spec);
    if (!in)
        throw InvalidInput("unknown seed or unreadable file: " + spec);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded())
        throw InvalidInput("seed file is not valid JSON: " + spec);
    return seed_from_json(d, j);
}

} // namespace ptri::tools
