/**
 * Path-dominated distance functions and shortest path trees.
 *
 * Two built-in evaluators: the weighted shortest-path distance of the
 * 1-skeleton, and the function-induced distance
 *     d_F(x, y) = min over paths of max_u d_Z(F(x), F(u)),
 * which is generally asymmetric. Trees are built label-setting style with
 * the deterministic path order (distance, hop count, smallest differing
 * vertex), so two runs over permuted input produce identical trees.
 */

#ifndef HBASIS_METRIC_HPP
#define HBASIS_METRIC_HPP

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "hbasis/simplicial_complex.hpp"

namespace hbasis {

enum class DistanceKind { Graph, Function };

/// Metric on the codomain of a vertex function.
using PointMetric = std::function<double(std::span<const double>, std::span<const double>)>;

double euclidean_metric(std::span<const double> a, std::span<const double> b);
double linf_metric(std::span<const double> a, std::span<const double> b);

class DistanceEvaluator {
public:
    static DistanceEvaluator graph_distance(const SimplicialComplex& k);
    static DistanceEvaluator function_distance(const SimplicialComplex& k,
                                               PointMetric metric = euclidean_metric);

    DistanceKind kind() const noexcept { return kind_; }
    const SimplicialComplex& complex() const noexcept { return *complex_; }

    /// d_Z(F(root), F(v)); only meaningful for the function kind.
    double vertex_term(VertexId root, VertexId v) const;

    /// Label of the path extended by one step. Sum of weights for the
    /// graph kind, running max of vertex terms for the function kind.
    double extend(VertexId root, double label, std::size_t edge, VertexId to) const;

private:
    DistanceEvaluator(DistanceKind kind, const SimplicialComplex& k, PointMetric metric)
        : kind_(kind), complex_(&k), metric_(std::move(metric))
    {
    }

    DistanceKind kind_;
    const SimplicialComplex* complex_;
    PointMetric metric_;
};

struct ShortestPathTree {
    VertexId root = 0;
    std::vector<VertexId> parent;   // -1 at the root
    std::vector<int> parent_edge;   // edge index, -1 at the root
    std::vector<double> dist;       // d(root, v)
    std::vector<int> hop_len;       // edge count of the chosen path
    std::vector<double> depth;      // summed edge weight along the tree path
    std::vector<VertexId> order;    // deletion order from the priority queue

    /// Edge indices of the tree path root -> v, leaf first.
    std::vector<std::size_t> path_edges(VertexId v) const;

    /// Vertices of the tree path root -> v including both endpoints.
    std::vector<VertexId> path_vertices(VertexId v) const;

    /// Deepest common vertex of the tree paths to u and v.
    VertexId meet(VertexId u, VertexId v) const;

    /// Edge set of the tree path between u and v (through their meet).
    std::vector<std::size_t> path_between(VertexId u, VertexId v) const;
};

/// Build the shortest path tree rooted at `root`. Requires a connected
/// 1-skeleton.
ShortestPathTree build_spt(const DistanceEvaluator& d, VertexId root);

/// Simplex selection within a complex, one bit per simplex per dimension.
struct SubComplex {
    BitVector vertices;
    BitVector edges;
    BitVector triangles;
    std::map<int, BitVector> higher;

    friend bool operator==(const SubComplex&, const SubComplex&) = default;
};

/// The ball B_p^r: all simplices whose vertices lie within distance r of
/// p. Closed under faces by construction.
SubComplex ball(const DistanceEvaluator& d, VertexId p, double r, const SimplicialComplex& k);

/// Same ball given a precomputed tree at p (avoids rebuilding it).
SubComplex ball(const ShortestPathTree& tree, double r, const SimplicialComplex& k);

/// Convenience: all-pairs distance table, row p = dist array of
/// build_spt(p). Row-indexed by source (matters for asymmetric d_F).
std::vector<std::vector<double>> all_pairs_distances(const DistanceEvaluator& d);

} // namespace hbasis

#endif
