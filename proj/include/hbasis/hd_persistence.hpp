/**
 * Minimal d-dimensional homology basis under the radius measure, via
 * geodesic-ball filtrations and persistence.
 *
 * Per root p, simplices are filtered by d_p(sigma) = max over vertices of
 * d(p, .), faces before cofaces. The essential d-dimensional creators of
 * the reduction yield g candidate cycles per root with their birth radii;
 * the union over roots is size-sorted, annotated, and reduced to the
 * earliest basis.
 */

#ifndef HBASIS_HD_PERSISTENCE_HPP
#define HBASIS_HD_PERSISTENCE_HPP

#include "hbasis/annotate.hpp"
#include "hbasis/basis_result.hpp"
#include "hbasis/metric.hpp"

namespace hbasis {

struct SimplexRef {
    int dim;
    std::size_t index; // canonical index within its dimension

    friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

struct Filtration {
    VertexId root = 0;
    std::vector<SimplexRef> order; // all simplices, faces before cofaces
    std::vector<double> value;     // d_p of each simplex, nondecreasing
};

/// Deterministic filtration at root p: sort by (d_p, dimension, canonical
/// index).
Filtration build_filtration(const SimplicialComplex& k, const DistanceEvaluator& d, VertexId p);

/// Same, reusing a precomputed tree at p.
Filtration build_filtration(const SimplicialComplex& k, const ShortestPathTree& tree);

/// One essential class: an explicit d-cycle (bits over canonical
/// d-simplices) and its birth radius.
struct EssentialCycle {
    BitVector chain;
    double birth;
    std::size_t creator_position; // position of the creator in the filtration
};

/// Representatives of the g = rank(H_d) essential classes born in
/// dimension d, in creator order.
std::vector<EssentialCycle> essential_cycles(const Filtration& f, const SimplicialComplex& k,
                                             int d);

/// Persistence pairs of the filtration restricted to dimension d
/// creators: (creator position, killer position or -1 if essential).
/// Exposed for reduction-correctness checks.
std::vector<std::pair<std::size_t, std::ptrdiff_t>>
persistence_pairs(const Filtration& f, const SimplicialComplex& k);

/// Minimal homology basis of H_d under the radius measure.
BasisResult hd_minimal_basis(const SimplicialComplex& k, int d,
                             const DistanceEvaluator& distance);

} // namespace hbasis

#endif
