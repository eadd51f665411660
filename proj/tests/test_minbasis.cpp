#include <doctest.h>

#include <random>
#include <set>

#include "hbasis/errors.hpp"
#include "hbasis/minbasis.hpp"
#include "hbasis/oracle.hpp"
#include "support/fixtures.hpp"

using namespace hbasis;

namespace {

BasisResult exact_basis(const SimplicialComplex& k, SizeKind measure,
                        MinBasisAudit* audit = nullptr)
{
    const DistanceEvaluator d = DistanceEvaluator::graph_distance(k);
    const AnnotationTable ann = annotate_edges(k);
    const HortonCandidates cands = HortonCandidates::build(k, d, {measure});
    return cycle_basis(cands, ann, audit);
}

} // namespace

TEST_SUITE("minbasis")
{
    TEST_CASE("octahedron yields the empty basis")
    {
        const BasisResult basis = exact_basis(fixtures::octahedron(), SizeKind::SumOfWeights);
        CHECK(basis.g == 0);
        CHECK(basis.cycles.empty());
        CHECK(basis.total_size == 0.0);
    }

    TEST_CASE("4-cycle yields the loop")
    {
        const BasisResult basis = exact_basis(fixtures::four_cycle(), SizeKind::SumOfWeights);
        REQUIRE(basis.g == 1);
        CHECK(basis.size_sequence == std::vector<double>{4.0});
        CHECK(basis.cycles[0].simplices.size() == 4);
        CHECK(basis.cycles[0].annotation.any());
    }

    TEST_CASE("torus fixture yields two 3-cycles")
    {
        MinBasisAudit audit;
        const BasisResult basis =
            exact_basis(fixtures::csaszar_torus(), SizeKind::SumOfWeights, &audit);
        CHECK(basis.size_sequence == std::vector<double>{3.0, 3.0});
        // g = 2 recursion shape: one base case each side of one update.
        CHECK(audit.snapshots.size() == 2);
        CHECK(audit.update_checks == 1);
    }

    TEST_CASE("matches the oracle on random complexes under both measures")
    {
        for (std::uint64_t seed = 100; seed < 130; ++seed) {
            const SimplicialComplex k = fixtures::random_complex(seed);
            const DistanceEvaluator d = DistanceEvaluator::graph_distance(k);
            for (SizeKind measure : {SizeKind::SumOfWeights, SizeKind::Radius}) {
                MinBasisAudit audit;
                const BasisResult mine = exact_basis(k, measure, &audit);
                const BasisResult reference = oracle_min_basis(k, d, {measure});
                CHECK(mine.size_sequence == reference.size_sequence);
            }
        }
    }

    TEST_CASE("matches the oracle under maximal tie pressure (unit weights)")
    {
        for (std::uint64_t seed = 300; seed < 340; ++seed) {
            const SimplicialComplex k = fixtures::random_unit_complex(seed);
            const DistanceEvaluator d = DistanceEvaluator::graph_distance(k);
            for (SizeKind measure : {SizeKind::SumOfWeights, SizeKind::Radius}) {
                MinBasisAudit audit;
                const BasisResult mine = exact_basis(k, measure, &audit);
                const BasisResult reference = oracle_min_basis(k, d, {measure});
                CHECK(mine.size_sequence == reference.size_sequence);
            }
        }
    }

    TEST_CASE("matches the oracle on complexes beyond the corpus edge budget")
    {
        // A few denser instances, still inside the oracle guard.
        std::mt19937_64 rng(424242);
        for (int round = 0; round < 8; ++round) {
            const std::size_t n0 = std::uniform_int_distribution<std::size_t>(8, 10)(rng);
            std::set<std::pair<VertexId, VertexId>> present;
            std::vector<std::tuple<VertexId, VertexId, double>> edges;
            for (std::size_t v = 1; v < n0; ++v) {
                const auto u = static_cast<VertexId>(
                    std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
                present.insert({std::min<VertexId>(u, static_cast<VertexId>(v)),
                                std::max<VertexId>(u, static_cast<VertexId>(v))});
                edges.emplace_back(u, static_cast<VertexId>(v),
                                   std::uniform_int_distribution<int>(1, 9)(rng));
            }
            while (edges.size() < n0 + 15) {
                const auto u = static_cast<VertexId>(
                    std::uniform_int_distribution<std::size_t>(0, n0 - 1)(rng));
                const auto v = static_cast<VertexId>(
                    std::uniform_int_distribution<std::size_t>(0, n0 - 1)(rng));
                if (u == v || present.count({std::min(u, v), std::max(u, v)}))
                    continue;
                present.insert({std::min(u, v), std::max(u, v)});
                edges.emplace_back(u, v, std::uniform_int_distribution<int>(1, 9)(rng));
            }
            std::vector<std::array<VertexId, 3>> tris;
            std::bernoulli_distribution fill(0.5);
            for (VertexId a = 0; a < static_cast<VertexId>(n0); ++a)
                for (VertexId b = a + 1; b < static_cast<VertexId>(n0); ++b)
                    for (VertexId c = b + 1; c < static_cast<VertexId>(n0); ++c)
                        if (present.count({a, b}) && present.count({a, c}) &&
                            present.count({b, c}) && fill(rng))
                            tris.push_back({a, b, c});
            const SimplicialComplex k = SimplicialComplex::create(n0, edges, tris);
            const DistanceEvaluator d = DistanceEvaluator::graph_distance(k);
            const BasisResult mine = exact_basis(k, SizeKind::SumOfWeights);
            const BasisResult reference =
                oracle_min_basis(k, d, {SizeKind::SumOfWeights});
            CHECK(mine.size_sequence == reference.size_sequence);
        }
    }

    TEST_CASE("flat de Pina loop agrees with the recursion")
    {
        for (std::uint64_t seed = 130; seed < 150; ++seed) {
            const SimplicialComplex k = fixtures::random_complex(seed);
            const DistanceEvaluator d = DistanceEvaluator::graph_distance(k);
            const AnnotationTable ann = annotate_edges(k);
            for (SizeKind measure : {SizeKind::SumOfWeights, SizeKind::Radius}) {
                const HortonCandidates cands = HortonCandidates::build(k, d, {measure});
                const BasisResult recursive = cycle_basis(cands, ann);
                const BasisResult flat = cycle_basis_flat(cands, ann);
                CHECK(recursive.size_sequence == flat.size_sequence);
            }
        }
    }

    TEST_CASE("null-homologous candidates are never selected")
    {
        for (std::uint64_t seed = 150; seed < 160; ++seed) {
            const BasisResult basis =
                exact_basis(fixtures::random_complex(seed), SizeKind::SumOfWeights);
            for (const CycleRepr& c : basis.cycles)
                CHECK(c.annotation.any());
        }
    }

    TEST_CASE("audit validates supports, selections and updates end to end")
    {
        // The audit throws on any invariant breach; surviving the run is
        // the assertion. Exercise a couple of complexes with g >= 3 so
        // the update path runs more than once.
        std::size_t audited = 0;
        for (std::uint64_t seed = 160; seed < 200 && audited < 5; ++seed) {
            const SimplicialComplex k = fixtures::random_complex(seed);
            if (k.betti_1() < 3)
                continue;
            ++audited;
            MinBasisAudit audit;
            const BasisResult basis = exact_basis(k, SizeKind::SumOfWeights, &audit);
            CHECK(audit.snapshots.size() == basis.g);
            CHECK(audit.update_checks >= 1);
            CHECK(audit.selection_rescans == basis.g);
        }
        CHECK(audited == 5);
    }

    TEST_CASE("size sequences are nondecreasing and sum to total_size")
    {
        for (std::uint64_t seed = 200; seed < 210; ++seed) {
            const BasisResult basis =
                exact_basis(fixtures::random_complex(seed), SizeKind::SumOfWeights);
            double total = 0;
            for (std::size_t i = 0; i < basis.size_sequence.size(); ++i) {
                total += basis.size_sequence[i];
                if (i > 0)
                    CHECK(basis.size_sequence[i - 1] <= basis.size_sequence[i]);
            }
            CHECK(basis.total_size == total);
        }
    }
}
