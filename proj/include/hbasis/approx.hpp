/**
 * 2-approximate minimal homology basis: annotation matrix over a reduced
 * candidate set, then earliest-basis extraction. Because the columns are
 * size-sorted, the extracted basis has the lexicographically smallest
 * size sequence among bases drawn from the candidate set.
 *
 * The reduced set samples ceil(c0 * sqrt(n0 * log n0)) roots and takes
 * their Horton cycles, doubling the sample on rank deficiency until the
 * candidates span H_1. The formal 2-approximation bound is validated
 * empirically, not claimed.
 */

#ifndef HBASIS_APPROX_HPP
#define HBASIS_APPROX_HPP

#include <cstdint>

#include "hbasis/annotate.hpp"
#include "hbasis/basis_result.hpp"
#include "hbasis/candidates.hpp"

namespace hbasis {

enum class CandidateGeneration { FullHorton, SampledHorton };

/// Candidate cycles sorted by (size, root, edge), plus how they were
/// generated.
struct ApproxCandidateSet {
    std::vector<CandidateCycle> cycles;
    CandidateGeneration generation = CandidateGeneration::FullHorton;
    std::size_t sample_size = 0;
    std::uint64_t seed = 0;
};

struct ApproxCertificate {
    std::size_t requested_roots = 0; // ceil(c0 * sqrt(n0 log n0))
    std::size_t used_roots = 0;      // after saturation / doubling
    std::size_t doublings = 0;
    std::uint64_t seed = 0;
    double c0 = 2.0;
    std::vector<double> size_sequence;
};

/// g x m annotation matrix M: column i is the annotation of cycle i,
/// computed blockwise with mat_mul.
BitMatrix build_M(const ApproxCandidateSet& cands, const AnnotationTable& ann);

/// Earliest-basis extraction. Throws RankDeficiencyError when the
/// candidate annotations do not span H_1.
class RankDeficiencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

BasisResult extract_basis(const BitMatrix& m, const ApproxCandidateSet& cands,
                          const AnnotationTable& ann);

struct ApproxOptions {
    std::uint64_t seed = 0;
    double c0 = 2.0;
};

/// Full pipeline under the sum-of-weights measure: sample roots, build M,
/// extract, and double the sample on rank deficiency (full Horton always
/// spans, so this terminates).
BasisResult approx_basis(const SimplicialComplex& k, const DistanceEvaluator& d,
                         const AnnotationTable& ann, const ApproxOptions& options,
                         ApproxCertificate* certificate = nullptr);

} // namespace hbasis

#endif
