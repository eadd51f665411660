#include "hbasis/approx.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hbasis/errors.hpp"

namespace hbasis {

BitMatrix build_M(const ApproxCandidateSet& cands, const AnnotationTable& ann)
{
    const std::size_t g = ann.g();
    const std::size_t m_cols = cands.cycles.size();
    const std::size_t n_edges = ann.count();

    // B is the g x L matrix of edge annotations; A holds cycle-edge
    // incidences in column blocks so each product is a plain mat_mul.
    BitMatrix b(g, n_edges);
    for (std::size_t e = 0; e < n_edges; ++e) {
        const BitVector& a = ann.of(e);
        for (std::size_t i = 0; i < g; ++i)
            if (a.get(i))
                b.set(i, e);
    }

    constexpr std::size_t kBlock = 256;
    BitMatrix m(g, m_cols);
    for (std::size_t start = 0; start < m_cols; start += kBlock) {
        const std::size_t width = std::min(kBlock, m_cols - start);
        BitMatrix block(n_edges, width);
        for (std::size_t j = 0; j < width; ++j)
            for (std::size_t e : cands.cycles[start + j].edges)
                block.set(e, j);
        const BitMatrix product = mat_mul(b, block);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < width; ++j)
                if (product.get(i, j))
                    m.set(i, start + j);
    }
    return m;
}

BasisResult extract_basis(const BitMatrix& m, const ApproxCandidateSet& cands,
                          const AnnotationTable& ann)
{
    const std::vector<std::size_t> chosen = earliest_basis(m);
    if (chosen.size() != ann.g())
        throw RankDeficiencyError("candidate set does not span H1 (rank " +
                                  std::to_string(chosen.size()) + " of " +
                                  std::to_string(ann.g()) + ")");
    BasisResult result;
    for (std::size_t idx : chosen) {
        const CandidateCycle& c = cands.cycles[idx];
        CycleRepr repr;
        repr.dim = 1;
        repr.simplices = c.edges;
        repr.size = c.size;
        repr.annotation = m.column(idx);
        repr.root = c.root;
        repr.source_index = static_cast<int>(c.nontree_edge);
        result.cycles.push_back(std::move(repr));
    }
    result.finalize();
    return result;
}

namespace {

std::vector<CandidateCycle> candidates_for_roots(const HortonCandidates& full,
                                                 const std::vector<char>& root_selected)
{
    std::vector<CandidateCycle> cycles;
    for (const CandidateRef& ref : full.sorted())
        if (root_selected[static_cast<std::size_t>(ref.root)])
            cycles.push_back(full.materialize(ref));
    return cycles;
}

} // namespace

BasisResult approx_basis(const SimplicialComplex& k, const DistanceEvaluator& d,
                         const AnnotationTable& ann, const ApproxOptions& options,
                         ApproxCertificate* certificate)
{
    const std::size_t n0 = k.n_vertices();
    const double log_n0 = n0 > 1 ? std::log(static_cast<double>(n0)) : 1.0;
    const auto requested = static_cast<std::size_t>(
        std::ceil(options.c0 * std::sqrt(static_cast<double>(n0) * log_n0)));

    // Trees are shared across doubling rounds; only the root subset grows.
    const HortonCandidates full =
        HortonCandidates::build(k, d, SizeMeasure{SizeKind::SumOfWeights});

    std::mt19937_64 rng(options.seed);
    std::vector<VertexId> roots(n0);
    for (std::size_t i = 0; i < n0; ++i)
        roots[i] = static_cast<VertexId>(i);
    std::shuffle(roots.begin(), roots.end(), rng);

    std::size_t sample = std::min(requested, n0);
    std::size_t doublings = 0;
    for (;;) {
        std::vector<char> selected(n0, 0);
        for (std::size_t i = 0; i < sample; ++i)
            selected[static_cast<std::size_t>(roots[i])] = 1;

        ApproxCandidateSet cands;
        cands.cycles = candidates_for_roots(full, selected);
        cands.generation = sample == n0 ? CandidateGeneration::FullHorton
                                        : CandidateGeneration::SampledHorton;
        cands.sample_size = sample;
        cands.seed = options.seed;

        const BitMatrix m = build_M(cands, ann);
        try {
            BasisResult result = extract_basis(m, cands, ann);
            if (certificate) {
                certificate->requested_roots = requested;
                certificate->used_roots = sample;
                certificate->doublings = doublings;
                certificate->seed = options.seed;
                certificate->c0 = options.c0;
                certificate->size_sequence = result.size_sequence;
            }
            return result;
        } catch (const RankDeficiencyError&) {
            if (sample == n0)
                throw InternalInvariantError(
                    "full Horton candidate set failed to span H1");
            sample = std::min(n0, sample * 2);
            ++doublings;
        }
    }
}

} // namespace hbasis
