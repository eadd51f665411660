#include "hbasis/candidates.hpp"

#include <algorithm>

#include "hbasis/errors.hpp"

namespace hbasis {

double cycle_size(const std::vector<std::size_t>& edges, SizeMeasure s, VertexId root,
                  const SimplicialComplex& k, const ShortestPathTree* tree)
{
    if (s.kind == SizeKind::SumOfWeights) {
        double total = 0;
        for (std::size_t e : edges)
            total += k.edges()[e].weight;
        return total;
    }
    if (!tree || tree->root != root)
        throw InternalInvariantError("cycle_size: radius measure needs the root's tree");
    double radius = 0;
    for (std::size_t e : edges) {
        radius = std::max(radius, tree->dist[static_cast<std::size_t>(k.edges()[e].u)]);
        radius = std::max(radius, tree->dist[static_cast<std::size_t>(k.edges()[e].v)]);
    }
    return radius;
}

HortonCandidates HortonCandidates::build(const SimplicialComplex& k, const DistanceEvaluator& d,
                                         SizeMeasure s)
{
    HortonCandidates out;
    out.complex_ = &k;
    out.measure_ = s;
    out.trees_.reserve(k.n_vertices());
    for (std::size_t p = 0; p < k.n_vertices(); ++p)
        out.trees_.push_back(build_spt(d, static_cast<VertexId>(p)));

    for (std::size_t p = 0; p < k.n_vertices(); ++p) {
        const ShortestPathTree& tree = out.trees_[p];
        std::vector<char> is_tree_edge(k.n_edges(), 0);
        for (std::size_t v = 0; v < k.n_vertices(); ++v)
            if (tree.parent_edge[v] >= 0)
                is_tree_edge[static_cast<std::size_t>(tree.parent_edge[v])] = 1;
        for (std::size_t e = 0; e < k.n_edges(); ++e) {
            if (is_tree_edge[e])
                continue;
            const Edge& edge = k.edges()[e];
            double size;
            if (s.kind == SizeKind::SumOfWeights) {
                // Weight of the cancelled edge set: both tree paths down
                // to the meet, plus the edge itself.
                const VertexId m = tree.meet(edge.u, edge.v);
                size = tree.depth[static_cast<std::size_t>(edge.u)] +
                       tree.depth[static_cast<std::size_t>(edge.v)] -
                       2 * tree.depth[static_cast<std::size_t>(m)] + edge.weight;
            } else {
                // Distances are nondecreasing along tree paths, so the
                // cycle's farthest vertex is one of the edge endpoints.
                size = std::max(tree.dist[static_cast<std::size_t>(edge.u)],
                                tree.dist[static_cast<std::size_t>(edge.v)]);
            }
            out.sorted_.push_back({static_cast<VertexId>(p), e, size});
        }
    }

    std::sort(out.sorted_.begin(), out.sorted_.end(),
              [](const CandidateRef& a, const CandidateRef& b) {
                  if (a.size != b.size)
                      return a.size < b.size;
                  if (a.root != b.root)
                      return a.root < b.root;
                  return a.nontree_edge < b.nontree_edge;
              });
    return out;
}

CandidateCycle HortonCandidates::materialize(const CandidateRef& ref) const
{
    const ShortestPathTree& t = trees_[static_cast<std::size_t>(ref.root)];
    const Edge& e = complex_->edges()[ref.nontree_edge];
    std::vector<std::size_t> edges = t.path_between(e.u, e.v);
    edges.push_back(ref.nontree_edge);
    std::sort(edges.begin(), edges.end());
    return {ref.root, ref.nontree_edge, std::move(edges), ref.size};
}

std::vector<CandidateCycle> horton_set(const SimplicialComplex& k, const DistanceEvaluator& d,
                                       SizeMeasure s)
{
    const HortonCandidates cands = HortonCandidates::build(k, d, s);
    std::vector<CandidateCycle> out;
    out.reserve(cands.sorted().size());
    for (const CandidateRef& ref : cands.sorted())
        out.push_back(cands.materialize(ref));
    return out;
}

bool edge_short_witness(const CandidateCycle& c, const SimplicialComplex& k,
                        const ShortestPathTree& tree)
{
    if (tree.root != c.root)
        throw InternalInvariantError("edge_short_witness: tree root differs from candidate root");
    // The two root-to-endpoint tree paths are edge-disjoint exactly when
    // they only meet at the root.
    const Edge& e = k.edges()[c.nontree_edge];
    return tree.meet(e.u, e.v) == tree.root;
}

} // namespace hbasis
