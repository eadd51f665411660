#include "hbasis/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hbasis/errors.hpp"

namespace hbasis {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

void require_keys(const json& doc, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional)
{
    for (const char* key : required)
        if (!doc.contains(key))
            fail(std::string("missing field '") + key + "'");
    for (const auto& [key, value] : doc.items()) {
        const auto known = [&](std::initializer_list<const char*> list) {
            for (const char* k : list)
                if (key == k)
                    return true;
            return false;
        };
        if (!known(required) && !known(optional))
            fail("unknown field '" + key + "'");
    }
}

VertexId parse_vertex(const json& v)
{
    if (!v.is_number_integer())
        fail("vertex id must be an integer");
    return v.get<VertexId>();
}

} // namespace

SimplicialComplex parse_complex(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        fail("document must be an object");
    require_keys(doc, {"vertices", "edges", "triangles"}, {"simplices_d", "vertex_function"});

    if (!doc["vertices"].is_number_integer() || doc["vertices"].get<std::int64_t>() < 0)
        fail("'vertices' must be a nonnegative integer");
    const auto n_vertices = doc["vertices"].get<std::size_t>();

    std::vector<std::tuple<VertexId, VertexId, double>> edges;
    if (!doc["edges"].is_array())
        fail("'edges' must be an array");
    for (const json& entry : doc["edges"]) {
        if (!entry.is_array() || entry.size() != 3)
            fail("each edge must be [u, v, w]");
        if (!entry[2].is_number())
            fail("edge weight must be a number");
        edges.emplace_back(parse_vertex(entry[0]), parse_vertex(entry[1]),
                           entry[2].get<double>());
    }

    std::vector<std::array<VertexId, 3>> triangles;
    if (!doc["triangles"].is_array())
        fail("'triangles' must be an array");
    for (const json& entry : doc["triangles"]) {
        if (!entry.is_array() || entry.size() != 3)
            fail("each triangle must be [a, b, c]");
        triangles.push_back(
            {parse_vertex(entry[0]), parse_vertex(entry[1]), parse_vertex(entry[2])});
    }

    std::map<int, std::vector<std::vector<VertexId>>> higher;
    if (doc.contains("simplices_d")) {
        if (!doc["simplices_d"].is_object())
            fail("'simplices_d' must map dimensions to simplex lists");
        for (const auto& [key, list] : doc["simplices_d"].items()) {
            int dim = 0;
            try {
                dim = std::stoi(key);
            } catch (...) {
                fail("simplices_d key '" + key + "' is not a dimension");
            }
            if (dim < 3)
                fail("simplices_d dimensions start at 3");
            if (!list.is_array())
                fail("simplices_d values must be arrays");
            std::vector<std::vector<VertexId>> simplices;
            for (const json& entry : list) {
                if (!entry.is_array() || entry.size() != static_cast<std::size_t>(dim) + 1)
                    fail("dimension " + key + " simplex has wrong arity");
                std::vector<VertexId> verts;
                for (const json& v : entry)
                    verts.push_back(parse_vertex(v));
                simplices.push_back(std::move(verts));
            }
            higher.emplace(dim, std::move(simplices));
        }
    }

    std::optional<std::vector<std::vector<double>>> vertex_function;
    if (doc.contains("vertex_function")) {
        if (!doc["vertex_function"].is_array())
            fail("'vertex_function' must be an array of vectors");
        std::vector<std::vector<double>> rows;
        for (const json& entry : doc["vertex_function"]) {
            if (!entry.is_array())
                fail("vertex_function rows must be arrays");
            std::vector<double> row;
            for (const json& v : entry) {
                if (!v.is_number())
                    fail("vertex_function values must be numbers");
                row.push_back(v.get<double>());
            }
            rows.push_back(std::move(row));
        }
        vertex_function = std::move(rows);
    }

    return SimplicialComplex::create(n_vertices, edges, triangles, std::move(higher),
                                     std::move(vertex_function));
}

SimplicialComplex parse_complex_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_complex(buffer.str());
}

std::string write_complex(const SimplicialComplex& k)
{
    using ojson = nlohmann::ordered_json;
    ojson doc;
    doc["vertices"] = k.n_vertices();
    auto& edges = doc["edges"] = ojson::array();
    for (const Edge& e : k.edges())
        edges.push_back({e.u, e.v, e.weight});
    auto& triangles = doc["triangles"] = ojson::array();
    for (const Triangle& t : k.triangles())
        triangles.push_back({t.v[0], t.v[1], t.v[2]});
    if (!k.higher_simplices().empty()) {
        auto& hs = doc["simplices_d"] = ojson::object();
        for (const auto& [dim, list] : k.higher_simplices())
            hs[std::to_string(dim)] = list;
    }
    if (k.vertex_function())
        doc["vertex_function"] = *k.vertex_function();
    return doc.dump(2) + "\n";
}

} // namespace hbasis
