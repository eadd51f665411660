#include "hbasis/simplicial_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace hbasis {

SimplicialComplex
SimplicialComplex::create(std::size_t n_vertices,
                          const std::vector<std::tuple<VertexId, VertexId, double>>& edges,
                          const std::vector<std::array<VertexId, 3>>& triangles,
                          std::map<int, std::vector<std::vector<VertexId>>> higher,
                          std::optional<std::vector<std::vector<double>>> vertex_function)
{
    SimplicialComplex k;
    k.n_vertices_ = n_vertices;

    k.edges_.reserve(edges.size());
    for (const auto& [u, v, w] : edges) {
        Edge e{std::min(u, v), std::max(u, v), w};
        k.edges_.push_back(e);
    }
    std::sort(k.edges_.begin(), k.edges_.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });

    k.triangles_.reserve(triangles.size());
    for (auto t : triangles) {
        std::sort(t.begin(), t.end());
        k.triangles_.push_back(Triangle{t});
    }
    std::sort(k.triangles_.begin(), k.triangles_.end(),
              [](const Triangle& a, const Triangle& b) { return a.v < b.v; });

    for (auto& [d, list] : higher) {
        for (auto& tuple : list)
            std::sort(tuple.begin(), tuple.end());
        std::sort(list.begin(), list.end());
    }
    k.higher_ = std::move(higher);
    k.vertex_function_ = std::move(vertex_function);
    k.build_lookups();
    return k;
}

void SimplicialComplex::build_lookups()
{
    adjacency_.assign(n_vertices_, {});
    edge_lookup_.clear();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        edge_lookup_.emplace(std::make_pair(e.u, e.v), i);
        if (e.u >= 0 && static_cast<std::size_t>(e.u) < n_vertices_ && e.v >= 0 &&
            static_cast<std::size_t>(e.v) < n_vertices_) {
            adjacency_[static_cast<std::size_t>(e.u)].emplace_back(e.v, i);
            adjacency_[static_cast<std::size_t>(e.v)].emplace_back(e.u, i);
        }
    }
    for (auto& nbrs : adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
}

int SimplicialComplex::dimension() const noexcept
{
    if (!higher_.empty())
        return higher_.rbegin()->first;
    if (!triangles_.empty())
        return 2;
    if (!edges_.empty())
        return 1;
    return 0;
}

std::size_t SimplicialComplex::simplex_count(int d) const noexcept
{
    switch (d) {
    case 0:
        return n_vertices_;
    case 1:
        return edges_.size();
    case 2:
        return triangles_.size();
    default: {
        auto it = higher_.find(d);
        return it == higher_.end() ? 0 : it->second.size();
    }
    }
}

std::vector<VertexId> SimplicialComplex::simplex_vertices(int d, std::size_t index) const
{
    switch (d) {
    case 0:
        return {static_cast<VertexId>(index)};
    case 1:
        return {edges_[index].u, edges_[index].v};
    case 2:
        return {triangles_[index].v[0], triangles_[index].v[1], triangles_[index].v[2]};
    default:
        return higher_.at(d)[index];
    }
}

std::size_t SimplicialComplex::total_simplices() const noexcept
{
    std::size_t total = n_vertices_ + edges_.size() + triangles_.size();
    for (const auto& [d, list] : higher_)
        total += list.size();
    return total;
}

std::optional<std::size_t> SimplicialComplex::edge_index(VertexId u, VertexId v) const
{
    if (u > v)
        std::swap(u, v);
    auto it = edge_lookup_.find({u, v});
    if (it == edge_lookup_.end())
        return std::nullopt;
    return it->second;
}

BitMatrix SimplicialComplex::boundary_matrix(int d) const
{
    const std::size_t n_rows = simplex_count(d - 1);
    const std::size_t n_cols = simplex_count(d);
    BitMatrix m(n_rows, n_cols);
    if (d == 1) {
        for (std::size_t j = 0; j < edges_.size(); ++j) {
            m.flip(static_cast<std::size_t>(edges_[j].u), j);
            m.flip(static_cast<std::size_t>(edges_[j].v), j);
        }
        return m;
    }
    // Face lookup by vertex tuple in the (d-1)-level canonical order.
    std::map<std::vector<VertexId>, std::size_t> face_index;
    for (std::size_t i = 0; i < n_rows; ++i)
        face_index.emplace(simplex_vertices(d - 1, i), i);
    for (std::size_t j = 0; j < n_cols; ++j) {
        const std::vector<VertexId> verts = simplex_vertices(d, j);
        for (std::size_t omit = 0; omit < verts.size(); ++omit) {
            std::vector<VertexId> face;
            face.reserve(verts.size() - 1);
            for (std::size_t i = 0; i < verts.size(); ++i)
                if (i != omit)
                    face.push_back(verts[i]);
            auto it = face_index.find(face);
            if (it != face_index.end())
                m.flip(it->second, j);
        }
    }
    return m;
}

std::size_t SimplicialComplex::betti_1() const
{
    const std::size_t cycle_rank = edges_.size() - n_vertices_ + 1;
    return cycle_rank - rank(boundary_matrix(2));
}

std::size_t SimplicialComplex::betti(int d) const
{
    if (d == 1)
        return betti_1();
    const std::size_t n_d = simplex_count(d);
    const std::size_t rank_bd = rank(boundary_matrix(d));
    const std::size_t rank_z = n_d - rank_bd;
    return rank_z - rank(boundary_matrix(d + 1));
}

bool SimplicialComplex::is_connected() const
{
    if (n_vertices_ == 0)
        return true;
    std::vector<char> seen(n_vertices_, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const VertexId u = stack.back();
        stack.pop_back();
        for (const auto& [v, e] : adjacency_[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n_vertices_;
}

std::vector<std::string> SimplicialComplex::validate() const
{
    std::vector<std::string> violations;
    auto in_range = [&](VertexId v) {
        return v >= 0 && static_cast<std::size_t>(v) < n_vertices_;
    };
    auto tuple_str = [](const std::vector<VertexId>& verts) {
        std::string s = "(";
        for (std::size_t i = 0; i < verts.size(); ++i)
            s += (i ? "," : "") + std::to_string(verts[i]);
        return s + ")";
    };

    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (!in_range(e.u) || !in_range(e.v))
            violations.push_back("edge " + tuple_str({e.u, e.v}) + ": vertex out of range");
        if (e.u == e.v)
            violations.push_back("edge " + tuple_str({e.u, e.v}) + ": degenerate");
        if (e.weight < 0)
            violations.push_back("edge " + tuple_str({e.u, e.v}) + ": negative weight");
        if (i > 0 && edges_[i - 1].u == e.u && edges_[i - 1].v == e.v)
            violations.push_back("duplicate edge " + tuple_str({e.u, e.v}));
    }

    for (std::size_t i = 0; i < triangles_.size(); ++i) {
        const auto& t = triangles_[i].v;
        std::vector<VertexId> verts(t.begin(), t.end());
        if (!in_range(t[0]) || !in_range(t[1]) || !in_range(t[2]))
            violations.push_back("triangle " + tuple_str(verts) + ": vertex out of range");
        if (t[0] == t[1] || t[1] == t[2])
            violations.push_back("triangle " + tuple_str(verts) + ": degenerate");
        if (i > 0 && triangles_[i - 1].v == t)
            violations.push_back("duplicate triangle " + tuple_str(verts));
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (!edge_index(t[a], t[b]))
                    violations.push_back("triangle " + tuple_str(verts) + ": missing face " +
                                         tuple_str({t[a], t[b]}));
    }

    for (const auto& [d, list] : higher_) {
        if (d < 3) {
            violations.push_back("higher simplex dimension " + std::to_string(d) + " below 3");
            continue;
        }
        std::set<std::vector<VertexId>> level_index;
        for (const auto& verts : list)
            level_index.insert(verts);
        auto face_exists = [&](const std::vector<VertexId>& face) -> bool {
            const int fd = static_cast<int>(face.size()) - 1;
            if (fd == 2)
                return std::binary_search(
                    triangles_.begin(), triangles_.end(),
                    Triangle{{face[0], face[1], face[2]}},
                    [](const Triangle& a, const Triangle& b) { return a.v < b.v; });
            auto it = higher_.find(fd);
            if (it == higher_.end())
                return false;
            return std::binary_search(it->second.begin(), it->second.end(), face);
        };
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto& verts = list[i];
            if (static_cast<int>(verts.size()) != d + 1) {
                violations.push_back("simplex " + tuple_str(verts) + ": wrong arity for dim " +
                                     std::to_string(d));
                continue;
            }
            for (VertexId v : verts)
                if (!in_range(v))
                    violations.push_back("simplex " + tuple_str(verts) + ": vertex out of range");
            if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
                violations.push_back("simplex " + tuple_str(verts) + ": degenerate");
            if (i > 0 && list[i - 1] == verts)
                violations.push_back("duplicate simplex " + tuple_str(verts));
            for (std::size_t omit = 0; omit < verts.size(); ++omit) {
                std::vector<VertexId> face;
                for (std::size_t j = 0; j < verts.size(); ++j)
                    if (j != omit)
                        face.push_back(verts[j]);
                if (!face_exists(face))
                    violations.push_back("simplex " + tuple_str(verts) + ": missing face " +
                                         tuple_str(face));
            }
        }
    }

    if (vertex_function_) {
        if (vertex_function_->size() != n_vertices_)
            violations.push_back("vertex_function: row count differs from vertex count");
        else if (!vertex_function_->empty()) {
            const std::size_t width = vertex_function_->front().size();
            for (const auto& row : *vertex_function_)
                if (row.size() != width) {
                    violations.push_back("vertex_function: rows of unequal length");
                    break;
                }
        }
    }

    if (!is_connected())
        violations.push_back("disconnected 1-skeleton");

    return violations;
}

double SimplicialComplex::chain_weight(const BitVector& edge_bits) const
{
    double total = 0;
    for (std::size_t e : edge_bits.set_bits())
        total += edges_[e].weight;
    return total;
}

std::vector<VertexId> SimplicialComplex::chain_vertices(const BitVector& edge_bits) const
{
    std::set<VertexId> verts;
    for (std::size_t e : edge_bits.set_bits()) {
        verts.insert(edges_[e].u);
        verts.insert(edges_[e].v);
    }
    return {verts.begin(), verts.end()};
}

bool SimplicialComplex::is_cycle(const BitVector& edge_bits) const
{
    std::vector<int> degree(n_vertices_, 0);
    for (std::size_t e : edge_bits.set_bits()) {
        ++degree[static_cast<std::size_t>(edges_[e].u)];
        ++degree[static_cast<std::size_t>(edges_[e].v)];
    }
    for (int d : degree)
        if (d % 2 != 0)
            return false;
    return true;
}

} // namespace hbasis
