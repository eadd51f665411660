/**
 * Annotations: g-bit vectors attached to d-simplices such that two
 * d-cycles are homologous exactly when their annotation sums agree.
 *
 * Construction: pick a maximal independent set T of boundary columns
 * (a spanning tree for d = 1), coordinatize cycles by their restriction
 * to the remaining simplices, quotient by the (d+1)-boundary image via
 * reduced row echelon, and read annotations off the free coordinates.
 */

#ifndef HBASIS_ANNOTATE_HPP
#define HBASIS_ANNOTATE_HPP

#include "hbasis/bitmatrix.hpp"
#include "hbasis/simplicial_complex.hpp"

namespace hbasis {

class AnnotationTable {
public:
    AnnotationTable() = default;
    AnnotationTable(int dim, std::size_t g, std::vector<BitVector> bits, BitMatrix boundary)
        : dim_(dim), g_(g), bits_(std::move(bits)), boundary_(std::move(boundary))
    {
    }

    int dim() const noexcept { return dim_; }
    std::size_t g() const noexcept { return g_; }

    /// Number of annotated d-simplices.
    std::size_t count() const noexcept { return bits_.size(); }

    /// Annotation of the i-th d-simplex (canonical order).
    const BitVector& of(std::size_t simplex_index) const { return bits_[simplex_index]; }

    /// Sum of annotations over the set bits of a d-chain. The chain must
    /// be a cycle; anything else is a contract violation.
    BitVector annotate_chain(const BitVector& chain) const;

    /// Same sum without the cycle check, for callers that guarantee it.
    BitVector annotate_chain_unchecked(const BitVector& chain) const;

private:
    int dim_ = 1;
    std::size_t g_ = 0;
    std::vector<BitVector> bits_;
    BitMatrix boundary_; // boundary_d, kept for the cycle check
};

/// Annotate the edges of a connected complex (g = betti_1). Tree edges of
/// the canonical spanning tree carry the zero vector.
AnnotationTable annotate_edges(const SimplicialComplex& k);

/// Annotate d-simplices for arbitrary d >= 1 via the general boundary
/// construction. For d = 1 this is an independent code path from
/// annotate_edges that induces the same class partition.
AnnotationTable annotate_simplices(const SimplicialComplex& k, int d);

/// Spec-level convenience: annotation of a cycle under a table.
BitVector cycle_annotation(const AnnotationTable& table, const ChainVector& z);

} // namespace hbasis

#endif
