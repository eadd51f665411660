/**
 * Horton-style candidate cycles: for every root p and every non-tree edge
 * e = (u, v) of the shortest path tree T_p, the cycle e plus the tree
 * path between u and v. The candidate multiset contains a minimal
 * homology basis for every size measure built on a path-dominated
 * distance (duplicates from different roots are kept).
 */

#ifndef HBASIS_CANDIDATES_HPP
#define HBASIS_CANDIDATES_HPP

#include <vector>

#include "hbasis/metric.hpp"
#include "hbasis/simplicial_complex.hpp"

namespace hbasis {

enum class SizeKind { SumOfWeights, Radius };

/// Cycle size measure. Radius sizes are root-centered: the recorded size
/// of C(p, e) is max over the cycle's vertices of d(p, .).
struct SizeMeasure {
    SizeKind kind = SizeKind::SumOfWeights;
};

/// Lightweight handle on one candidate; the explicit edge set lives in
/// the generating tree and is materialized on demand.
struct CandidateRef {
    VertexId root;
    std::size_t nontree_edge;
    double size;
};

/// Fully materialized candidate with its cancelled edge set.
struct CandidateCycle {
    VertexId root;
    std::size_t nontree_edge;
    std::vector<std::size_t> edges; // ascending edge indices
    double size;
};

/// Sum or root-centered-radius size of an explicit edge set.
double cycle_size(const std::vector<std::size_t>& edges, SizeMeasure s, VertexId root,
                  const SimplicialComplex& k, const ShortestPathTree* tree);

class HortonCandidates {
public:
    /// Build trees for every root and enumerate all candidates, sorted by
    /// (size, root index, edge index).
    static HortonCandidates build(const SimplicialComplex& k, const DistanceEvaluator& d,
                                  SizeMeasure s);

    const SimplicialComplex& complex() const noexcept { return *complex_; }
    SizeMeasure measure() const noexcept { return measure_; }
    const std::vector<ShortestPathTree>& trees() const noexcept { return trees_; }
    const ShortestPathTree& tree(VertexId root) const
    {
        return trees_[static_cast<std::size_t>(root)];
    }
    const std::vector<CandidateRef>& sorted() const noexcept { return sorted_; }

    CandidateCycle materialize(const CandidateRef& ref) const;

private:
    const SimplicialComplex* complex_ = nullptr;
    SizeMeasure measure_;
    std::vector<ShortestPathTree> trees_;
    std::vector<CandidateRef> sorted_;
};

/// Spec-level operation: the fully materialized candidate list in
/// (size, root, edge) order. Prefer HortonCandidates at scale.
std::vector<CandidateCycle> horton_set(const SimplicialComplex& k, const DistanceEvaluator& d,
                                       SizeMeasure s);

/// True iff the candidate's own decomposition certifies edge-shortness:
/// the tree paths from its root to the two endpoints of its non-tree edge
/// are edge-disjoint (tree paths are path-dominated shortest by
/// construction). `tree` must be the tree rooted at c.root.
bool edge_short_witness(const CandidateCycle& c, const SimplicialComplex& k,
                        const ShortestPathTree& tree);

} // namespace hbasis

#endif
