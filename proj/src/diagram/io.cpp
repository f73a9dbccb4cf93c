#include "annularkh/diagram.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace annularkh {
namespace {

using json = nlohmann::json;
using Kind = DiagramError::Kind;

const json& require(const json& obj, const char* key, const std::string& loc) {
    if (!obj.is_object() || !obj.contains(key))
        throw DiagramError(Kind::syntax, loc, std::string("missing field '") + key + "'");
    return obj.at(key);
}

std::string require_string(const json& obj, const char* key, const std::string& loc) {
    const json& v = require(obj, key, loc);
    if (!v.is_string()) throw DiagramError(Kind::syntax, loc, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

int require_int(const json& v, const std::string& loc, const char* what) {
    if (!v.is_number_integer()) throw DiagramError(Kind::syntax, loc, std::string(what) + " must be an integer");
    return v.get<int>();
}

std::vector<int> optional_lambda(const json& obj, const std::string& loc) {
    std::vector<int> out;
    if (!obj.contains("lambda")) return out;
    const json& arr = obj.at("lambda");
    if (!arr.is_array()) throw DiagramError(Kind::syntax, loc, "field 'lambda' must be an array");
    for (const json& v : arr) out.push_back(require_int(v, loc, "lambda entry"));
    return out;
}

bool is_loop_marker(const json& v) { return v.is_string() && v.get<std::string>() == "loop"; }

}  // namespace

AnnularDiagram parse_diagram(std::string_view json_text, std::string_view fallback_name) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw DiagramError(Kind::syntax, "", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw DiagramError(Kind::syntax, "", "top level must be an object");

    std::string name(fallback_name);
    if (doc.contains("name")) name = require_string(doc, "name", "diagram");

    std::vector<Crossing> crossings;
    std::unordered_map<std::string, std::size_t> crossing_index;
    std::vector<std::array<std::string, 4>> slot_names;
    if (doc.contains("crossings")) {
        const json& arr = doc.at("crossings");
        if (!arr.is_array()) throw DiagramError(Kind::syntax, "diagram", "'crossings' must be an array");
        for (std::size_t x = 0; x < arr.size(); ++x) {
            const std::string loc = "crossings[" + std::to_string(x) + "]";
            Crossing c;
            c.id = require_string(arr[x], "id", loc);
            const json& slots = require(arr[x], "slots", "crossing '" + c.id + "'");
            if (!slots.is_array() || slots.size() != 4)
                throw DiagramError(Kind::syntax, "crossing '" + c.id + "'", "'slots' must list four edge ids");
            std::array<std::string, 4> names;
            for (std::size_t s = 0; s < 4; ++s) {
                if (!slots[s].is_string())
                    throw DiagramError(Kind::syntax, "crossing '" + c.id + "'", "slot entries must be edge ids");
                names[s] = slots[s].get<std::string>();
            }
            if (arr[x].contains("on_lambda")) {
                if (!arr[x].at("on_lambda").is_boolean())
                    throw DiagramError(Kind::syntax, "crossing '" + c.id + "'", "'on_lambda' must be a boolean");
                c.on_lambda = arr[x].at("on_lambda").get<bool>();
            }
            if (!crossing_index.emplace(c.id, x).second)
                throw DiagramError(Kind::duplicate, "crossing '" + c.id + "'", "id used twice");
            crossings.push_back(std::move(c));
            slot_names.push_back(std::move(names));
        }
    }

    std::vector<Edge> edges;
    std::vector<FreeLoop> loops;
    std::unordered_map<std::string, std::size_t> edge_index;

    auto parse_end = [&](const json& v, const std::string& loc, const char* key) {
        if (!v.is_object()) throw DiagramError(Kind::syntax, loc, std::string("'") + key + "' must be an object or \"loop\"");
        const std::string cid = require_string(v, "crossing", loc);
        auto it = crossing_index.find(cid);
        if (it == crossing_index.end()) throw DiagramError(Kind::reference, loc, "unknown crossing '" + cid + "'");
        const int slot = require_int(require(v, "slot", loc), loc, "slot");
        if (slot < 0 || slot > 3) throw DiagramError(Kind::syntax, loc, "slot must be 0..3");
        return SlotRef{it->second, slot};
    };

    if (doc.contains("edges")) {
        const json& arr = doc.at("edges");
        if (!arr.is_array()) throw DiagramError(Kind::syntax, "diagram", "'edges' must be an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string id = require_string(arr[i], "id", "edges[" + std::to_string(i) + "]");
            const std::string loc = "edge '" + id + "'";
            const json& from = require(arr[i], "from", loc);
            const json& to = require(arr[i], "to", loc);
            const int winding = require_int(require(arr[i], "winding", loc), loc, "winding");
            std::vector<int> lambda = optional_lambda(arr[i], loc);
            if (is_loop_marker(from) || is_loop_marker(to)) {
                if (!(is_loop_marker(from) && is_loop_marker(to)))
                    throw DiagramError(Kind::syntax, loc, "a free loop needs both ends marked \"loop\"");
                loops.push_back(FreeLoop{id, winding, std::move(lambda)});
                continue;
            }
            if (!edge_index.emplace(id, edges.size()).second) throw DiagramError(Kind::duplicate, loc, "id used twice");
            edges.push_back(Edge{id, parse_end(from, loc, "from"), parse_end(to, loc, "to"), winding, std::move(lambda)});
        }
    }
    if (doc.contains("free_loops")) {
        const json& arr = doc.at("free_loops");
        if (!arr.is_array()) throw DiagramError(Kind::syntax, "diagram", "'free_loops' must be an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string id = require_string(arr[i], "id", "free_loops[" + std::to_string(i) + "]");
            const std::string loc = "edge '" + id + "'";
            const int winding = require_int(require(arr[i], "winding", loc), loc, "winding");
            loops.push_back(FreeLoop{id, winding, optional_lambda(arr[i], loc)});
        }
    }

    for (std::size_t x = 0; x < crossings.size(); ++x)
        for (std::size_t s = 0; s < 4; ++s) {
            auto it = edge_index.find(slot_names[x][s]);
            if (it == edge_index.end())
                throw DiagramError(Kind::reference, "crossing '" + crossings[x].id + "' slot " + std::to_string(s),
                                   "unknown edge '" + slot_names[x][s] + "'");
            crossings[x].edges[s] = it->second;
        }

    AnnularDiagram d(std::move(name), std::move(crossings), std::move(edges), std::move(loops));
    if (doc.contains("isotopic_to")) d.set_isotopic_to(require_string(doc, "isotopic_to", "diagram"));
    return d;
}

AnnularDiagram load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DiagramError(Kind::syntax, path, "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_diagram(buf.str(), std::filesystem::path(path).stem().string());
    } catch (const DiagramError& e) {
        throw DiagramError(e.kind(), path + (e.location().empty() ? "" : ": " + e.location()), e.message());
    }
}

std::string to_json(const AnnularDiagram& d, int indent) {
    nlohmann::ordered_json doc;
    doc["name"] = d.name();
    if (!d.isotopic_to().empty()) doc["isotopic_to"] = d.isotopic_to();
    auto crossings = nlohmann::ordered_json::array();
    for (const auto& c : d.crossings()) {
        nlohmann::ordered_json x;
        x["id"] = c.id;
        auto slots = nlohmann::ordered_json::array();
        for (std::size_t e : c.edges) slots.push_back(d.edges()[e].id);
        x["slots"] = slots;
        if (c.on_lambda) x["on_lambda"] = true;
        crossings.push_back(x);
    }
    doc["crossings"] = crossings;

    auto lambda_needed = [](int winding, const std::vector<int>& lambda) {
        return lambda.size() != static_cast<std::size_t>(std::abs(winding));
    };
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : d.edges()) {
        nlohmann::ordered_json x;
        x["id"] = e.id;
        x["from"] = {{"crossing", d.crossings()[e.from.crossing].id}, {"slot", e.from.slot}};
        x["to"] = {{"crossing", d.crossings()[e.to.crossing].id}, {"slot", e.to.slot}};
        x["winding"] = e.winding;
        if (lambda_needed(e.winding, e.lambda)) x["lambda"] = e.lambda;
        edges.push_back(x);
    }
    doc["edges"] = edges;
    if (!d.free_loops().empty()) {
        auto loops = nlohmann::ordered_json::array();
        for (const auto& l : d.free_loops()) {
            nlohmann::ordered_json x;
            x["id"] = l.id;
            x["winding"] = l.winding;
            if (lambda_needed(l.winding, l.lambda)) x["lambda"] = l.lambda;
            loops.push_back(x);
        }
        doc["free_loops"] = loops;
    }
    return doc.dump(indent) + "\n";
}

}  // namespace annularkh
