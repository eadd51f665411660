/**
 * Exact minimal homology basis by divide-and-conquer over support
 * vectors.
 *
 * The algorithm keeps g support vectors S_1..S_g that always form a basis
 * of {0,1}^g and stay orthogonal (under m(S, C) = <S, a(C)>) to every
 * cycle selected so far. Each base case picks the smallest candidate
 * non-orthogonal to its support vector; the block update restores
 * orthogonality for the right half via A = Y X^{-1} and U = W Z.
 */

#ifndef HBASIS_MINBASIS_HPP
#define HBASIS_MINBASIS_HPP

#include <optional>

#include "hbasis/annotate.hpp"
#include "hbasis/basis_result.hpp"
#include "hbasis/candidates.hpp"

namespace hbasis {

/// Live state of the selection: support vectors (rows of `supports`),
/// the m-table over edges, and the cycles chosen so far.
struct SupportState {
    std::size_t g = 0;
    BitMatrix supports; // g x g, row i = S_{i+1}
    BitMatrix edge_m;   // g x n1, entry (i, e) = <S_{i+1}, a(e)>
    std::vector<CycleRepr> chosen;
};

/**
 * Debug-mode audit hooks. When attached, the algorithm cross-checks
 * itself at every step: support rank, minimum-witness of each selection
 * by full rescan, the U = WZ fast path against direct inner products, and
 * annotation rank growth. Snapshots keep each support vector as it was
 * frozen at selection time for the post-hoc orthogonality audit.
 */
struct MinBasisAudit {
    struct Snapshot {
        std::size_t index;    // selection number (0-based)
        BitVector support;    // S_{index+1} at selection time
        BitVector annotation; // a(C_{index+1})
        double size;
    };
    std::vector<Snapshot> snapshots;
    std::size_t selection_rescans = 0;
    std::size_t update_checks = 0;
};

/// Compute a minimal homology basis from the sorted candidate set.
/// Deterministic; ties among equal-size shortest cycles break by
/// (root index, non-tree edge index).
BasisResult cycle_basis(const HortonCandidates& cands, const AnnotationTable& ann,
                        MinBasisAudit* audit = nullptr);

/// Debug variant: flat de Pina loop (no recursion, supports fixed up one
/// selection at a time). Must produce the same size sequence.
BasisResult cycle_basis_flat(const HortonCandidates& cands, const AnnotationTable& ann);

namespace detail {

struct MinBasisContext {
    const HortonCandidates* cands;
    const AnnotationTable* ann;
    MinBasisAudit* audit;
};

/// Base case: the minimum-size candidate C with m(S_{i+1}, C) = 1,
/// evaluated in O(n) per root via tree labels l_p(u) = m(S, path(p, u)).
CycleRepr shortest_nonorthogonal_cycle(SupportState& state, std::size_t i,
                                       const MinBasisContext& ctx);

/// Restore orthogonality of supports [i+k/2, i+k) against the cycles
/// selected by the left half, and refresh their edge_m rows via U = WZ.
void update_supports(SupportState& state, std::size_t i, std::size_t k,
                     const MinBasisContext& ctx);

/// Extend the basis by k cycles starting at index i (0-based).
void extend_basis(SupportState& state, std::size_t i, std::size_t k, const MinBasisContext& ctx);

} // namespace detail

} // namespace hbasis

#endif
