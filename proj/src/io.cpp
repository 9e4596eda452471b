#include "coboundary/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "coboundary/errors.hpp"

namespace coboundary {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing field \"" + key + "\"");
    return *it;
}

int integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
    auto x = v.get<long long>();
    if (x < -(1LL << 30) || x > (1LL << 30)) throw ParseError(where + ": integer out of range");
    return static_cast<int>(x);
}

}  // namespace

CrystalGraph crystal_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    const json& dname = field(doc, "datum", "header");
    if (!dname.is_string()) throw ParseError("header.datum: expected a string such as \"GL3\"");
    RootDatum datum = RootDatum::parse(dname.get<std::string>());
    const std::string mode = datum.coordinate_mode() == CoordinateMode::Epsilon ? "epsilon" : "fundamental";
    if (auto it = doc.find("coords"); it != doc.end()) {
        if (!it->is_string() || it->get<std::string>() != mode)
            throw ParseError("header.coords: datum " + datum.name() + " uses " + mode + " coordinates");
    }

    CrystalGraph::Builder builder(datum);
    std::map<long long, Vertex> ids;
    const json& vertices = field(doc, "vertices", "header");
    if (!vertices.is_array()) throw ParseError("vertices: expected an array");
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        const std::string where = "vertices[" + std::to_string(k) + "]";
        const json& v = vertices[k];
        int id = integer(field(v, "id", where), where + ".id");
        const json& wt = field(v, "wt", where);
        if (!wt.is_array() || wt.size() != datum.coord_dim())
            throw ParseError(where + ".wt: expected " + std::to_string(datum.coord_dim()) + " integers");
        std::vector<int> coords;
        for (std::size_t c = 0; c < wt.size(); ++c) coords.push_back(integer(wt[c], where + ".wt[" + std::to_string(c) + "]"));
        std::string label;
        if (auto it = v.find("label"); it != v.end()) {
            if (!it->is_string()) throw ParseError(where + ".label: expected a string");
            label = it->get<std::string>();
        }
        if (!ids.emplace(id, static_cast<Vertex>(k)).second) throw ParseError(where + ".id: duplicate id " + std::to_string(id));
        builder.add_vertex(Weight(std::move(coords)), std::move(label));
    }

    const json& edges = field(doc, "edges", "header");
    if (!edges.is_array()) throw ParseError("edges: expected an array");
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string where = "edges[" + std::to_string(k) + "]";
        const json& e = edges[k];
        auto vertex = [&](const char* key) {
            int id = integer(field(e, key, where), where + "." + key);
            auto it = ids.find(id);
            if (it == ids.end()) throw ParseError(where + "." + key + ": unknown vertex id " + std::to_string(id));
            return it->second;
        };
        Vertex from = vertex("from"), to = vertex("to");
        int i = integer(field(e, "i", where), where + ".i");
        if (i < 1 || i > datum.num_nodes())
            throw ParseError(where + ".i: label " + std::to_string(i) + " not in 1.." + std::to_string(datum.num_nodes()));
        builder.add_edge(from, to, i);
    }

    if (auto it = doc.find("factors"); it != doc.end()) {
        if (!it->is_array()) throw ParseError("factors: expected an array of sizes");
        std::vector<std::size_t> sizes;
        std::size_t product = 1;
        for (std::size_t k = 0; k < it->size(); ++k) {
            int s = integer((*it)[k], "factors[" + std::to_string(k) + "]");
            if (s < 1) throw ParseError("factors[" + std::to_string(k) + "]: sizes must be positive");
            sizes.push_back(static_cast<std::size_t>(s));
            product *= static_cast<std::size_t>(s);
        }
        if (product != vertices.size()) throw ParseError("factors: sizes do not multiply to the vertex count");
        builder.set_factor_sizes(std::move(sizes));
    }
    return std::move(builder).build();
}

std::string crystal_to_json(const CrystalGraph& b) {
    ordered_json doc;
    doc["datum"] = b.datum().name();
    doc["coords"] = b.datum().coordinate_mode() == CoordinateMode::Epsilon ? "epsilon" : "fundamental";
    if (b.arity() > 1) doc["factors"] = b.factor_sizes();
    ordered_json vertices = ordered_json::array();
    for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) {
        ordered_json x;
        x["id"] = v;
        x["wt"] = b.wt(v).coords;
        if (!b.label(v).empty()) x["label"] = b.label(v);
        vertices.push_back(std::move(x));
    }
    ordered_json edges = ordered_json::array();
    for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v)
        for (int i = 1; i <= b.num_nodes(); ++i)
            if (Vertex w = b.f(v, i); w != kNone) edges.push_back({{"from", v}, {"to", w}, {"i", i}});
    doc["vertices"] = std::move(vertices);
    doc["edges"] = std::move(edges);
    return doc.dump(1) + "\n";
}

CrystalGraph read_crystal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return crystal_from_json(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string crystal_to_dot(const CrystalGraph& b) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) {
        const std::string text = b.label(v).empty() ? b.wt(v).to_string() : b.label(v);
        os << "  " << v << " [label=\"" << dot_escape(text) << "\"];\n";
    }
    for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v)
        for (int i = 1; i <= b.num_nodes(); ++i)
            if (Vertex w = b.f(v, i); w != kNone) os << "  " << v << " -> " << w << " [label=\"" << i << "\"];\n";
    os << "}\n";
    return os.str();
}

bool round_trip(std::string_view text) {
    CrystalGraph first = crystal_from_json(text);
    CrystalGraph second = crystal_from_json(crystal_to_json(first));
    return canonical_form(first) == canonical_form(second);
}

std::string vertex_map_to_json(const CrystalGraph& source, const CrystalGraph& target, const VertexMap& map) {
    ordered_json doc;
    doc["source_size"] = source.size();
    doc["target_size"] = target.size();
    doc["image"] = map.image;
    if (source.has_labels() && target.has_labels()) {
        ordered_json pairs = ordered_json::array();
        for (Vertex v = 0; v < static_cast<Vertex>(map.size()); ++v)
            pairs.push_back({source.label(v), target.label(map(v))});
        doc["labels"] = std::move(pairs);
    }
    return doc.dump(1) + "\n";
}

}  // namespace coboundary
