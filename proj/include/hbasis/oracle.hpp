/**
 * Desk-scale brute force used as independent ground truth: exhaustive
 * cycle-space enumeration with matroid-greedy basis selection, and
 * exhaustive simple-path enumeration for shortest-path-tree checks.
 */

#ifndef HBASIS_ORACLE_HPP
#define HBASIS_ORACLE_HPP

#include "hbasis/annotate.hpp"
#include "hbasis/basis_result.hpp"
#include "hbasis/candidates.hpp"
#include "hbasis/metric.hpp"

namespace hbasis {

inline constexpr std::size_t kOracleMaxCycleRank = 25;
inline constexpr std::size_t kOraclePathMaxVertices = 12;

/// All 2^L elements of the cycle space Z_1 (L = n1 - n0 + 1), with sizes
/// under the given measure and annotations. Guarded at L <= 25.
struct FullCycleSpace {
    std::vector<BitVector> chains; // includes the zero chain at index 0
    std::vector<double> sizes;
    std::vector<BitVector> annotations;
};

FullCycleSpace enumerate_cycle_space(const SimplicialComplex& k, const DistanceEvaluator& d,
                                     SizeMeasure s, const AnnotationTable& ann);

/**
 * Minimal homology basis by greedy over the whole cycle space, sorted by
 * (size, lexicographic edge set); optimal by linear-matroid exchange.
 * Radius sizes here are the true Chen-Freedman measure: minimized over
 * all ball centers.
 */
BasisResult oracle_min_basis(const SimplicialComplex& k, const DistanceEvaluator& d,
                             SizeMeasure s);

/// One simple path with its ordering keys under the path order
/// (label value, hop count, vertex set).
struct OraclePath {
    std::vector<VertexId> vertices; // x ... y
    double value;                   // accumulated label (sum or running max)
    int len;
    // True exactly when every prefix realizes the distance of its
    // endpoint. These are the path-dominated shortest paths the tie-break
    // order ranges over; in the graph metric they are exactly the
    // weight-shortest paths.
    bool realizing = false;
};

/// All simple paths from x to y, sorted by the path order. Guarded at 12
/// vertices.
std::vector<OraclePath> oracle_all_paths(const SimplicialComplex& k, const DistanceEvaluator& d,
                                         VertexId x, VertexId y);

/// All simple paths from x to every vertex, one DFS for the whole root.
/// Entry [y] holds the paths ending at y. Guarded at 12 vertices.
std::vector<std::vector<OraclePath>>
oracle_all_paths_from(const SimplicialComplex& k, const DistanceEvaluator& d, VertexId x);

/// Strict comparison under the path order: (value, len), then smallest
/// differing vertex. False for incomparable equal-set paths.
bool oracle_path_less(const OraclePath& a, const OraclePath& b);

} // namespace hbasis

#endif
