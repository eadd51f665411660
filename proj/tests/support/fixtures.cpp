#include "fixtures.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace hbasis::fixtures {

namespace {

std::vector<std::tuple<VertexId, VertexId, double>>
unit_edges(const std::vector<std::pair<VertexId, VertexId>>& pairs)
{
    std::vector<std::tuple<VertexId, VertexId, double>> out;
    out.reserve(pairs.size());
    for (auto [u, v] : pairs)
        out.emplace_back(u, v, 1.0);
    return out;
}

} // namespace

SimplicialComplex octahedron()
{
    // Opposite pairs (0,1), (2,3), (4,5); edges between non-opposite
    // vertices; one triangle per choice of one vertex from each pair.
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId a : {0, 1})
        for (VertexId b : {2, 3})
            edges.push_back({a, b});
    for (VertexId a : {0, 1})
        for (VertexId c : {4, 5})
            edges.push_back({a, c});
    for (VertexId b : {2, 3})
        for (VertexId c : {4, 5})
            edges.push_back({b, c});
    std::vector<std::array<VertexId, 3>> triangles;
    for (VertexId a : {0, 1})
        for (VertexId b : {2, 3})
            for (VertexId c : {4, 5})
                triangles.push_back({a, b, c});
    return SimplicialComplex::create(6, unit_edges(edges), triangles);
}

SimplicialComplex four_cycle()
{
    return SimplicialComplex::create(4, unit_edges({{0, 1}, {1, 2}, {2, 3}, {0, 3}}), {});
}

SimplicialComplex theta()
{
    return SimplicialComplex::create(4, unit_edges({{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}), {});
}

SimplicialComplex csaszar_torus()
{
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < 7; ++u)
        for (VertexId v = u + 1; v < 7; ++v)
            edges.push_back({u, v});
    std::vector<std::array<VertexId, 3>> triangles;
    for (VertexId i = 0; i < 7; ++i) {
        triangles.push_back({i, static_cast<VertexId>((i + 1) % 7),
                             static_cast<VertexId>((i + 3) % 7)});
        triangles.push_back({i, static_cast<VertexId>((i + 2) % 7),
                             static_cast<VertexId>((i + 3) % 7)});
    }
    return SimplicialComplex::create(7, unit_edges(edges), triangles);
}

SimplicialComplex tetrahedron_boundary()
{
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = u + 1; v < 4; ++v)
            edges.push_back({u, v});
    return SimplicialComplex::create(
        4, unit_edges(edges), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex solid_tetrahedron()
{
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = u + 1; v < 4; ++v)
            edges.push_back({u, v});
    return SimplicialComplex::create(4, unit_edges(edges),
                                     {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}},
                                     {{3, {{0, 1, 2, 3}}}});
}

SimplicialComplex single_triangle()
{
    return SimplicialComplex::create(3, unit_edges({{0, 1}, {1, 2}, {0, 2}}), {{0, 1, 2}});
}

SimplicialComplex fig1_pattern()
{
    // Vertices a..h = 0..7.
    const std::vector<std::tuple<VertexId, VertexId, double>> edges = {
        {0, 1, 10.0}, // ab
        {1, 2, 10.0}, // bc
        {2, 3, 10.0}, // cd
        {3, 4, 8.0},  // de
        {4, 5, 9.0},  // ef
        {5, 6, 9.0},  // fg
        {6, 7, 7.0},  // gh
        {0, 7, 10.0}, // ha
        {1, 7, 1.0},  // bh
        {3, 7, 1.0},  // dh
        {4, 6, 7.0},  // eg
    };
    return SimplicialComplex::create(8, edges, {{4, 5, 6}});
}

namespace {

std::vector<std::size_t> edge_ids(const SimplicialComplex& k,
                                  const std::vector<std::pair<VertexId, VertexId>>& pairs)
{
    std::vector<std::size_t> out;
    for (auto [u, v] : pairs) {
        const auto idx = k.edge_index(u, v);
        if (!idx)
            throw std::logic_error("fig1 cycle references a missing edge");
        out.push_back(*idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Fig1Cycles fig1_cycles(const SimplicialComplex& k)
{
    Fig1Cycles c;
    c.c1 = edge_ids(k, {{0, 1}, {1, 7}, {0, 7}});
    c.c2 = edge_ids(k, {{1, 2}, {2, 3}, {3, 7}, {1, 7}});
    c.c3 = edge_ids(k, {{3, 4}, {4, 6}, {6, 7}, {3, 7}});
    c.c4 = edge_ids(k, {{4, 5}, {5, 6}, {4, 6}});
    c.c4_prime = edge_ids(k, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 6}, {6, 7}, {0, 7}});
    return c;
}

namespace {

SimplicialComplex random_complex_impl(std::uint64_t seed, bool unit_weights)
{
    std::mt19937_64 rng(seed);
    const std::size_t n0 = std::uniform_int_distribution<std::size_t>(4, 12)(rng);
    const std::size_t max_edges = std::min<std::size_t>(20, n0 * (n0 - 1) / 2);
    const std::size_t n1 =
        std::uniform_int_distribution<std::size_t>(n0 - 1, max_edges)(rng);

    auto weight = [&]() {
        const int w = std::uniform_int_distribution<int>(1, 9)(rng);
        return unit_weights ? 1.0 : static_cast<double>(w);
    };

    std::set<std::pair<VertexId, VertexId>> present;
    std::vector<std::tuple<VertexId, VertexId, double>> edges;
    // Random spanning tree keeps the 1-skeleton connected.
    for (std::size_t v = 1; v < n0; ++v) {
        const auto u = static_cast<VertexId>(
            std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
        present.insert({std::min<VertexId>(u, static_cast<VertexId>(v)),
                        std::max<VertexId>(u, static_cast<VertexId>(v))});
        edges.emplace_back(u, static_cast<VertexId>(v), weight());
    }
    while (edges.size() < n1) {
        const auto u = static_cast<VertexId>(
            std::uniform_int_distribution<std::size_t>(0, n0 - 1)(rng));
        const auto v = static_cast<VertexId>(
            std::uniform_int_distribution<std::size_t>(0, n0 - 1)(rng));
        if (u == v)
            continue;
        const std::pair<VertexId, VertexId> key{std::min(u, v), std::max(u, v)};
        if (present.count(key))
            continue;
        present.insert(key);
        edges.emplace_back(key.first, key.second, weight());
    }

    // Fill each 3-clique with probability 1/2.
    std::vector<std::array<VertexId, 3>> triangles;
    std::bernoulli_distribution fill(0.5);
    for (VertexId a = 0; a < static_cast<VertexId>(n0); ++a)
        for (VertexId b = a + 1; b < static_cast<VertexId>(n0); ++b)
            for (VertexId c = b + 1; c < static_cast<VertexId>(n0); ++c)
                if (present.count({a, b}) && present.count({a, c}) && present.count({b, c}) &&
                    fill(rng))
                    triangles.push_back({a, b, c});

    // Random scalar vertex function for d_F runs.
    std::vector<std::vector<double>> f;
    f.reserve(n0);
    std::uniform_real_distribution<double> value(0.0, 10.0);
    for (std::size_t v = 0; v < n0; ++v)
        f.push_back({value(rng)});

    return SimplicialComplex::create(n0, edges, triangles, {}, f);
}

} // namespace

SimplicialComplex random_complex(std::uint64_t seed)
{
    return random_complex_impl(seed, false);
}

SimplicialComplex random_unit_complex(std::uint64_t seed)
{
    return random_complex_impl(seed, true);
}

} // namespace hbasis::fixtures
