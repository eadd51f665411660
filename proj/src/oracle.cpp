#include "hbasis/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "hbasis/errors.hpp"

namespace hbasis {

namespace {

// Fundamental cycles of the canonical spanning tree: XOR-combining all
// subsets enumerates Z_1 exactly once.
std::vector<BitVector> fundamental_cycles(const SimplicialComplex& k)
{
    std::vector<int> parent(k.n_vertices(), -1);
    std::vector<int> parent_edge(k.n_vertices(), -1);
    std::vector<char> seen(k.n_vertices(), 0);
    std::vector<char> tree_edge(k.n_edges(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const VertexId u = stack.back();
        stack.pop_back();
        for (const auto& [v, e] : k.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                parent[static_cast<std::size_t>(v)] = u;
                parent_edge[static_cast<std::size_t>(v)] = static_cast<int>(e);
                tree_edge[e] = 1;
                stack.push_back(v);
            }
        }
    }
    std::vector<BitVector> cycles;
    for (std::size_t e = 0; e < k.n_edges(); ++e) {
        if (tree_edge[e])
            continue;
        BitVector chain(k.n_edges());
        chain.set(e);
        // XOR the two root paths; the shared prefix cancels.
        for (VertexId x : {k.edges()[e].u, k.edges()[e].v})
            for (VertexId v = x; parent[static_cast<std::size_t>(v)] != -1;
                 v = parent[static_cast<std::size_t>(v)])
                chain.flip(static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(v)]));
        cycles.push_back(std::move(chain));
    }
    return cycles;
}

double true_radius_size(const BitVector& chain, const SimplicialComplex& k,
                        const std::vector<std::vector<double>>& dist,
                        std::vector<std::size_t>& vertex_scratch)
{
    if (chain.none())
        return 0;
    vertex_scratch.clear();
    {
        std::vector<char> mark(k.n_vertices(), 0);
        for (std::size_t e : chain.set_bits()) {
            mark[static_cast<std::size_t>(k.edges()[e].u)] = 1;
            mark[static_cast<std::size_t>(k.edges()[e].v)] = 1;
        }
        for (std::size_t v = 0; v < mark.size(); ++v)
            if (mark[v])
                vertex_scratch.push_back(v);
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < k.n_vertices(); ++p) {
        double radius = 0;
        for (std::size_t v : vertex_scratch)
            radius = std::max(radius, dist[p][v]);
        best = std::min(best, radius);
    }
    return best;
}

} // namespace

FullCycleSpace enumerate_cycle_space(const SimplicialComplex& k, const DistanceEvaluator& d,
                                     SizeMeasure s, const AnnotationTable& ann)
{
    const std::vector<BitVector> fundamentals = fundamental_cycles(k);
    const std::size_t cycle_rank = fundamentals.size();
    if (cycle_rank > kOracleMaxCycleRank)
        throw GuardError("oracle refused: cycle rank " + std::to_string(cycle_rank) +
                         " exceeds the guard of " + std::to_string(kOracleMaxCycleRank));

    std::vector<std::vector<double>> dist;
    if (s.kind == SizeKind::Radius)
        dist = all_pairs_distances(d);

    FullCycleSpace space;
    const std::size_t count = std::size_t{1} << cycle_rank;
    space.chains.reserve(count);
    space.sizes.reserve(count);
    space.annotations.reserve(count);
    std::vector<std::size_t> scratch;
    for (std::size_t mask = 0; mask < count; ++mask) {
        BitVector chain(k.n_edges());
        for (std::size_t b = 0; b < cycle_rank; ++b)
            if ((mask >> b) & 1u)
                chain ^= fundamentals[b];
        const double size = s.kind == SizeKind::SumOfWeights
                                ? k.chain_weight(chain)
                                : true_radius_size(chain, k, dist, scratch);
        space.annotations.push_back(ann.annotate_chain(chain));
        space.sizes.push_back(size);
        space.chains.push_back(std::move(chain));
    }
    return space;
}

BasisResult oracle_min_basis(const SimplicialComplex& k, const DistanceEvaluator& d,
                             SizeMeasure s)
{
    const AnnotationTable ann = annotate_edges(k);
    const FullCycleSpace space = enumerate_cycle_space(k, d, s, ann);

    std::vector<std::size_t> order(space.chains.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (space.sizes[a] != space.sizes[b])
            return space.sizes[a] < space.sizes[b];
        return BitVector::lex_less(space.chains[a], space.chains[b]);
    });

    Echelon span(ann.g());
    BasisResult result;
    for (std::size_t idx : order) {
        if (result.cycles.size() == ann.g())
            break;
        if (space.chains[idx].none())
            continue;
        if (!span.insert(space.annotations[idx]))
            continue;
        CycleRepr repr;
        repr.dim = 1;
        for (std::size_t e : space.chains[idx].set_bits())
            repr.simplices.push_back(e);
        repr.size = space.sizes[idx];
        repr.annotation = space.annotations[idx];
        result.cycles.push_back(std::move(repr));
    }
    if (result.cycles.size() != ann.g())
        throw InternalInvariantError("oracle failed to reach full homology rank");
    result.finalize();
    return result;
}

std::vector<std::vector<OraclePath>>
oracle_all_paths_from(const SimplicialComplex& k, const DistanceEvaluator& d, VertexId x)
{
    if (k.n_vertices() > kOraclePathMaxVertices)
        throw GuardError("oracle refused: path enumeration limited to " +
                         std::to_string(kOraclePathMaxVertices) + " vertices");

    std::vector<std::vector<OraclePath>> out(k.n_vertices());
    std::vector<VertexId> current{x};
    std::vector<char> used(k.n_vertices(), 0);
    used[static_cast<std::size_t>(x)] = 1;
    out[static_cast<std::size_t>(x)].push_back({current, 0.0, 0, true});

    auto dfs = [&](auto&& self, VertexId at, double label) -> void {
        for (const auto& [w, e] : k.neighbors(at)) {
            if (used[static_cast<std::size_t>(w)])
                continue;
            used[static_cast<std::size_t>(w)] = 1;
            current.push_back(w);
            const double extended = d.extend(x, label, e, w);
            out[static_cast<std::size_t>(w)].push_back(
                {current, extended, static_cast<int>(current.size()) - 1, false});
            self(self, w, extended);
            current.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    dfs(dfs, x, 0.0);

    // True distances fall out of the enumeration; a path is realizing
    // when every prefix attains them.
    std::vector<double> true_dist(k.n_vertices(), std::numeric_limits<double>::infinity());
    true_dist[static_cast<std::size_t>(x)] = 0;
    for (const auto& paths : out)
        for (const OraclePath& p : paths) {
            auto& best = true_dist[static_cast<std::size_t>(p.vertices.back())];
            best = std::min(best, p.value);
        }
    for (auto& paths : out)
        for (OraclePath& p : paths) {
            double label = 0;
            p.realizing = true;
            for (std::size_t i = 1; i < p.vertices.size() && p.realizing; ++i) {
                const auto e = k.edge_index(p.vertices[i - 1], p.vertices[i]);
                label = d.extend(x, label, *e, p.vertices[i]);
                if (label != true_dist[static_cast<std::size_t>(p.vertices[i])])
                    p.realizing = false;
            }
        }

    for (auto& paths : out)
        std::sort(paths.begin(), paths.end(), [](const OraclePath& a, const OraclePath& b) {
            if (a.value != b.value)
                return a.value < b.value;
            return a.len < b.len;
        });
    return out;
}

std::vector<OraclePath> oracle_all_paths(const SimplicialComplex& k, const DistanceEvaluator& d,
                                         VertexId x, VertexId y)
{
    return oracle_all_paths_from(k, d, x)[static_cast<std::size_t>(y)];
}

bool oracle_path_less(const OraclePath& a, const OraclePath& b)
{
    if (a.value != b.value)
        return a.value < b.value;
    if (a.len != b.len)
        return a.len < b.len;
    std::vector<VertexId> va = a.vertices, vb = b.vertices;
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    std::size_t i = 0, j = 0;
    while (i < va.size() && j < vb.size()) {
        if (va[i] == vb[j]) {
            ++i;
            ++j;
        } else {
            return va[i] < vb[j];
        }
    }
    return i < va.size();
}

} // namespace hbasis
