// Acceptance suite: one pass/fail line per criterion. Exit code 0 only
// when every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hbasis/annotate.hpp"
#include "hbasis/approx.hpp"
#include "hbasis/errors.hpp"
#include "hbasis/hd_persistence.hpp"
#include "hbasis/minbasis.hpp"
#include "hbasis/oracle.hpp"
#include "support/fixtures.hpp"

using namespace hbasis;

namespace {

constexpr std::size_t kCorpusSize = 200;
constexpr std::uint64_t kCorpusSeedBase = 1000;

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::string&)> check;
};

SimplicialComplex corpus(std::size_t i)
{
    return fixtures::random_complex(kCorpusSeedBase + i);
}

std::vector<SimplicialComplex> named_fixtures()
{
    std::vector<SimplicialComplex> out;
    out.push_back(fixtures::octahedron());
    out.push_back(fixtures::four_cycle());
    out.push_back(fixtures::theta());
    out.push_back(fixtures::csaszar_torus());
    out.push_back(fixtures::fig1_pattern());
    out.push_back(fixtures::tetrahedron_boundary());
    out.push_back(fixtures::single_triangle());
    return out;
}

BasisResult exact_basis(const SimplicialComplex& k, SizeKind measure, DistanceKind distance,
                        MinBasisAudit* audit = nullptr)
{
    const DistanceEvaluator d = distance == DistanceKind::Graph
                                    ? DistanceEvaluator::graph_distance(k)
                                    : DistanceEvaluator::function_distance(k);
    const AnnotationTable ann = annotate_edges(k);
    const HortonCandidates cands = HortonCandidates::build(k, d, {measure});
    return cycle_basis(cands, ann, audit);
}

bool sequences_equal(const std::vector<double>& a, const std::vector<double>& b)
{
    return a == b; // integer-valued inputs, zero tolerance
}

// ---------------------------------------------------------------- 1 ----
bool check_oracle_equivalence(std::string& detail)
{
    const auto start = std::chrono::steady_clock::now();
    std::size_t checked = 0;
    for (std::size_t i = 0; i < kCorpusSize; ++i) {
        const SimplicialComplex k = corpus(i);
        const DistanceEvaluator d = DistanceEvaluator::graph_distance(k);
        const BasisResult mine = exact_basis(k, SizeKind::SumOfWeights, DistanceKind::Graph);
        const BasisResult ref = oracle_min_basis(k, d, {SizeKind::SumOfWeights});
        if (!sequences_equal(mine.size_sequence, ref.size_sequence)) {
            detail = "mismatch on corpus seed " + std::to_string(kCorpusSeedBase + i);
            return false;
        }
        ++checked;
    }
    for (const SimplicialComplex& k : named_fixtures()) {
        const DistanceEvaluator d = DistanceEvaluator::graph_distance(k);
        const BasisResult mine = exact_basis(k, SizeKind::SumOfWeights, DistanceKind::Graph);
        const BasisResult ref = oracle_min_basis(k, d, {SizeKind::SumOfWeights});
        if (!sequences_equal(mine.size_sequence, ref.size_sequence)) {
            detail = "mismatch on a named fixture";
            return false;
        }
        ++checked;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream msg;
    msg << checked << " complexes, " << seconds << " s";
    detail = msg.str();
    return seconds < 60.0;
}

// ---------------------------------------------------------------- 2 ----
bool check_fixture_values(std::string& detail)
{
    const BasisResult oct = exact_basis(fixtures::octahedron(), SizeKind::SumOfWeights,
                                        DistanceKind::Graph);
    if (oct.g != 0 || !oct.cycles.empty()) {
        detail = "octahedron basis not empty";
        return false;
    }
    const BasisResult loop = exact_basis(fixtures::four_cycle(), SizeKind::SumOfWeights,
                                         DistanceKind::Graph);
    if (!sequences_equal(loop.size_sequence, {4.0})) {
        detail = "4-cycle size sequence is not (4)";
        return false;
    }
    const SimplicialComplex torus = fixtures::csaszar_torus();
    const BasisResult t = exact_basis(torus, SizeKind::SumOfWeights, DistanceKind::Graph);
    const BasisResult t_oracle = oracle_min_basis(
        torus, DistanceEvaluator::graph_distance(torus), {SizeKind::SumOfWeights});
    if (t.g != 2 || !sequences_equal(t.size_sequence, {3.0, 3.0}) ||
        !sequences_equal(t.size_sequence, t_oracle.size_sequence)) {
        detail = "torus basis is not (3, 3)";
        return false;
    }
    detail = "octahedron empty, 4-cycle (4), torus (3,3)";
    return true;
}

// ---------------------------------------------------------------- 3 ----
bool check_annotation_soundness(std::string& detail)
{
    std::size_t boundary_checks = 0, equivalence_checks = 0;
    for (const SimplicialComplex& k : named_fixtures()) {
        const AnnotationTable ann = annotate_edges(k);
        const BitMatrix b2 = k.boundary_matrix(2);
        for (std::size_t j = 0; j < b2.cols(); ++j, ++boundary_checks)
            if (ann.annotate_chain(b2.column(j)).any()) {
                detail = "triangle boundary with nonzero annotation";
                return false;
            }
    }
    for (std::size_t i = 0; i < kCorpusSize; ++i) {
        const SimplicialComplex k = corpus(i);
        if (k.n_edges() > 20)
            continue;
        const AnnotationTable ann = annotate_edges(k);
        const BitMatrix b2 = k.boundary_matrix(2);
        const DistanceEvaluator d = DistanceEvaluator::graph_distance(k);
        const FullCycleSpace space =
            enumerate_cycle_space(k, d, {SizeKind::SumOfWeights}, ann);
        for (std::size_t c = 0; c < space.chains.size(); ++c, ++equivalence_checks) {
            const bool zero_class = space.annotations[c].none();
            const bool boundary = solve_linear(b2, space.chains[c]).has_value();
            if (zero_class != boundary) {
                detail = "annotation equality disagrees with boundary solvability (seed " +
                         std::to_string(kCorpusSeedBase + i) + ")";
                return false;
            }
        }
        const BitMatrix tri = k.boundary_matrix(2);
        for (std::size_t j = 0; j < tri.cols(); ++j, ++boundary_checks)
            if (ann.annotate_chain(tri.column(j)).any()) {
                detail = "corpus triangle boundary with nonzero annotation";
                return false;
            }
    }
    std::ostringstream msg;
    msg << boundary_checks << " boundary checks, " << equivalence_checks
        << " exhaustive equivalence checks";
    detail = msg.str();
    return true;
}

// ------------------------------------------------------------- 4, 5 ----
bool run_audited_corpus(std::string& detail, std::size_t& updates, std::size_t& rescans)
{
    for (std::size_t i = 0; i < kCorpusSize; ++i) {
        const SimplicialComplex k = corpus(i);
        try {
            MinBasisAudit audit;
            exact_basis(k, SizeKind::SumOfWeights, DistanceKind::Graph, &audit);
            updates += audit.update_checks;
            rescans += audit.selection_rescans;
        } catch (const InternalInvariantError& e) {
            detail = std::string("audit failure on seed ") +
                     std::to_string(kCorpusSeedBase + i) + ": " + e.what();
            return false;
        }
    }
    return true;
}

bool check_support_invariants(std::string& detail)
{
    std::size_t updates = 0, rescans = 0;
    if (!run_audited_corpus(detail, updates, rescans))
        return false;
    std::ostringstream msg;
    msg << rescans << " audited selections (rank, orthogonality, full-rescan minimum)";
    detail = msg.str();
    return rescans > 0;
}

bool check_update_algebra(std::string& detail)
{
    std::size_t updates = 0, rescans = 0;
    if (!run_audited_corpus(detail, updates, rescans))
        return false;
    std::ostringstream msg;
    msg << updates << " U = WZ updates cross-checked against direct inner products";
    detail = msg.str();
    return updates > 0;
}

// ---------------------------------------------------------------- 6 ----
bool check_approx_quality(std::string& detail)
{
    std::size_t instances = 0, fully_within = 0, valid_bases = 0;
    for (std::size_t i = 0; i < kCorpusSize; ++i) {
        const SimplicialComplex k = corpus(i);
        const DistanceEvaluator d = DistanceEvaluator::graph_distance(k);
        const AnnotationTable ann = annotate_edges(k);
        const HortonCandidates full = HortonCandidates::build(k, d, {SizeKind::SumOfWeights});
        const BasisResult exact = cycle_basis(full, ann);
        const BasisResult approx =
            approx_basis(k, d, ann, {kCorpusSeedBase + i, 2.0}, nullptr);
        ++instances;

        BitMatrix m(approx.g, ann.g());
        for (std::size_t c = 0; c < approx.cycles.size(); ++c)
            m.set_row(c, approx.cycles[c].annotation);
        const bool valid = approx.g == ann.g() && rank(m) == ann.g();
        if (valid)
            ++valid_bases;

        bool within = valid;
        for (std::size_t c = 0; c < approx.g && within; ++c) {
            const double ratio_num = approx.size_sequence[c];
            const double ratio_den = exact.size_sequence[c];
            if (ratio_num < ratio_den || ratio_num > 2.0 * ratio_den)
                within = false;
        }
        if (within)
            ++fully_within;
    }
    std::ostringstream msg;
    msg << valid_bases << "/" << instances << " valid bases, " << fully_within << "/"
        << instances << " fully within 2x";
    detail = msg.str();
    return valid_bases == instances &&
           fully_within * 100 >= instances * 95;
}

// ---------------------------------------------------------------- 7 ----
bool check_fig1_counterexample(std::string& detail)
{
    const SimplicialComplex k = fixtures::fig1_pattern();
    const auto cyc = fixtures::fig1_cycles(k);
    const DistanceEvaluator d = DistanceEvaluator::graph_distance(k);
    const AnnotationTable ann = annotate_edges(k);

    auto weight_of = [&](const std::vector<std::size_t>& edges) {
        double total = 0;
        for (std::size_t e : edges)
            total += k.edges()[e].weight;
        return total;
    };
    auto chain_of = [&](const std::vector<std::size_t>& edges) {
        BitVector chain(k.n_edges());
        for (std::size_t e : edges)
            chain.set(e);
        return chain;
    };

    // Oracle verification of the constructed weights, on the bare
    // 1-skeleton first (no filled triangle, so homology = cycle space):
    // the minimal cycle basis is exactly {C1, C2, C3, C4}.
    std::vector<std::tuple<VertexId, VertexId, double>> skeleton_edges;
    for (const Edge& e : k.edges())
        skeleton_edges.emplace_back(e.u, e.v, e.weight);
    const SimplicialComplex skeleton =
        SimplicialComplex::create(k.n_vertices(), skeleton_edges, {});
    const AnnotationTable full_rank_ann = annotate_edges(skeleton);
    const BasisResult mcb = oracle_min_basis(
        skeleton, DistanceEvaluator::graph_distance(skeleton), {SizeKind::SumOfWeights});
    const std::vector<double> expected_mcb = {weight_of(cyc.c1), weight_of(cyc.c2),
                                              weight_of(cyc.c3), weight_of(cyc.c4)};
    if (!sequences_equal(mcb.size_sequence, expected_mcb)) {
        detail = "minimal cycle basis is not {C1, C2, C3, C4}";
        return false;
    }

    // The candidate set {C2, C3, C4, C4'} is a cycle basis within 2x of
    // the minimal cycle basis total.
    const double g_total =
        weight_of(cyc.c2) + weight_of(cyc.c3) + weight_of(cyc.c4) + weight_of(cyc.c4_prime);
    if (g_total > 2.0 * mcb.total_size) {
        detail = "candidate set is not a 2-approximate minimal cycle basis";
        return false;
    }
    {
        Echelon span(full_rank_ann.g());
        for (const auto* edges : {&cyc.c2, &cyc.c3, &cyc.c4, &cyc.c4_prime})
            span.insert(full_rank_ann.annotate_chain(chain_of(*edges)));
        if (span.rank() != 4) {
            detail = "candidate set is not a cycle basis";
            return false;
        }
    }

    // True minimal homology basis: {C1, C2, C3}.
    const BasisResult homology = oracle_min_basis(k, d, {SizeKind::SumOfWeights});
    const std::vector<double> expected_h = {weight_of(cyc.c1), weight_of(cyc.c2),
                                            weight_of(cyc.c3)};
    if (!sequences_equal(homology.size_sequence, expected_h)) {
        detail = "minimal homology basis is not {C1, C2, C3}";
        return false;
    }

    // Earliest-basis extraction over the candidate set picks C2, C3, C4'
    // whose largest element breaks the per-index 2x bound.
    ApproxCandidateSet cands;
    for (const auto* edges : {&cyc.c2, &cyc.c3, &cyc.c4, &cyc.c4_prime}) {
        CandidateCycle c;
        c.root = -1;
        c.nontree_edge = edges->front();
        c.edges = *edges;
        c.size = weight_of(*edges);
        cands.cycles.push_back(std::move(c));
    }
    const BasisResult extracted = extract_basis(build_M(cands, ann), cands, ann);
    const std::vector<double> expected_extracted = {weight_of(cyc.c2), weight_of(cyc.c3),
                                                    weight_of(cyc.c4_prime)};
    if (!sequences_equal(extracted.size_sequence, expected_extracted)) {
        detail = "extraction did not return {C2, C3, C4'}";
        return false;
    }
    if (!(extracted.size_sequence[2] > 2.0 * homology.size_sequence[2])) {
        detail = "largest extracted cycle does not exceed 2x the optimum";
        return false;
    }
    std::ostringstream msg;
    msg << "best contained basis (" << extracted.size_sequence[0] << ", "
        << extracted.size_sequence[1] << ", " << extracted.size_sequence[2]
        << ") vs optimal (" << expected_h[0] << ", " << expected_h[1] << ", " << expected_h[2]
        << ")";
    detail = msg.str();
    return true;
}

// ---------------------------------------------------------------- 8 ----
bool check_generalized_measures(std::string& detail)
{
    std::size_t checked = 0;
    for (std::size_t i = 0; i < kCorpusSize; ++i) {
        const SimplicialComplex k = corpus(i);
        for (DistanceKind kind : {DistanceKind::Graph, DistanceKind::Function}) {
            const DistanceEvaluator d = kind == DistanceKind::Graph
                                            ? DistanceEvaluator::graph_distance(k)
                                            : DistanceEvaluator::function_distance(k);
            const BasisResult mine = exact_basis(k, SizeKind::Radius, kind);
            const BasisResult ref = oracle_min_basis(k, d, {SizeKind::Radius});
            if (!sequences_equal(mine.size_sequence, ref.size_sequence)) {
                detail = std::string("radius mismatch (") +
                         (kind == DistanceKind::Graph ? "graph" : "function") + ", seed " +
                         std::to_string(kCorpusSeedBase + i) + ")";
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " radius-measure runs match the oracle";
    return true;
}

// ---------------------------------------------------------------- 9 ----
bool check_spt_order(std::string& detail)
{
    std::size_t path_checks = 0;
    for (std::size_t i = 0; i < kCorpusSize; ++i) {
        const SimplicialComplex k = corpus(i);
        const DistanceEvaluator d = DistanceEvaluator::graph_distance(k);
        for (std::size_t root = 0; root < k.n_vertices(); ++root) {
            const ShortestPathTree tree = build_spt(d, static_cast<VertexId>(root));
            const auto by_target = oracle_all_paths_from(k, d, static_cast<VertexId>(root));
            for (std::size_t v = 0; v < k.n_vertices(); ++v) {
                if (v == root)
                    continue;
                OraclePath mine;
                mine.vertices = tree.path_vertices(static_cast<VertexId>(v));
                mine.len = static_cast<int>(mine.vertices.size()) - 1;
                mine.value = tree.dist[v];
                for (const OraclePath& other : by_target[v]) {
                    if (!other.realizing)
                        continue;
                    ++path_checks;
                    if (other.vertices != mine.vertices && oracle_path_less(other, mine)) {
                        detail = "tree path beaten on seed " +
                                 std::to_string(kCorpusSeedBase + i);
                        return false;
                    }
                }
            }
        }

        // Rerun over permuted adjacency input; trees must be identical.
        if (i % 10 == 0) {
            std::vector<std::tuple<VertexId, VertexId, double>> edges;
            for (const Edge& e : k.edges())
                edges.emplace_back(e.v, e.u, e.weight);
            std::mt19937_64 rng(kCorpusSeedBase + i);
            std::shuffle(edges.begin(), edges.end(), rng);
            const SimplicialComplex permuted = SimplicialComplex::create(
                k.n_vertices(), edges, {}, {}, k.vertex_function());
            const DistanceEvaluator dp = DistanceEvaluator::graph_distance(permuted);
            for (std::size_t root = 0; root < k.n_vertices(); ++root) {
                const ShortestPathTree a = build_spt(d, static_cast<VertexId>(root));
                const ShortestPathTree b = build_spt(dp, static_cast<VertexId>(root));
                if (a.parent != b.parent || a.order != b.order) {
                    detail = "permuted input changed the tree (seed " +
                             std::to_string(kCorpusSeedBase + i) + ")";
                    return false;
                }
            }
        }
    }
    detail = std::to_string(path_checks) + " enumerated paths dominated";
    return true;
}

// --------------------------------------------------------------- 10 ----
bool check_hd_pipeline(std::string& detail)
{
    for (const SimplicialComplex& k :
         {fixtures::four_cycle(), fixtures::theta(), fixtures::csaszar_torus(),
          fixtures::octahedron()}) {
        const DistanceEvaluator d = DistanceEvaluator::graph_distance(k);
        const BasisResult via_persistence = hd_minimal_basis(k, 1, d);
        const BasisResult via_exact = exact_basis(k, SizeKind::Radius, DistanceKind::Graph);
        if (!sequences_equal(via_persistence.size_sequence, via_exact.size_sequence)) {
            detail = "hd(1) disagrees with the exact radius pipeline";
            return false;
        }
    }
    const SimplicialComplex tetra = fixtures::tetrahedron_boundary();
    const BasisResult sphere =
        hd_minimal_basis(tetra, 2, DistanceEvaluator::graph_distance(tetra));
    if (sphere.g != 1 || !sequences_equal(sphere.size_sequence, {1.0}) ||
        sphere.cycles[0].simplices.size() != 4) {
        detail = "tetrahedron boundary did not yield one 2-cycle of radius 1";
        return false;
    }
    detail = "hd(1) matches exact radius on fixtures; tetra d=2 gives mu = 1";
    return true;
}

// --------------------------------------------------------------- 11 ----
SimplicialComplex grid_complex(int w, int h, std::size_t holes, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto vid = [&](int x, int y) { return static_cast<VertexId>(y * (w + 1) + x); };
    std::uniform_int_distribution<int> weight(1, 9);
    std::vector<std::tuple<VertexId, VertexId, double>> edges;
    for (int y = 0; y <= h; ++y)
        for (int x = 0; x <= w; ++x) {
            if (x < w)
                edges.emplace_back(vid(x, y), vid(x + 1, y), weight(rng));
            if (y < h)
                edges.emplace_back(vid(x, y), vid(x, y + 1), weight(rng));
            if (x < w && y < h)
                edges.emplace_back(vid(x, y), vid(x + 1, y + 1), weight(rng));
        }
    std::vector<std::array<VertexId, 3>> triangles;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            triangles.push_back({vid(x, y), vid(x + 1, y), vid(x + 1, y + 1)});
            triangles.push_back({vid(x, y), vid(x, y + 1), vid(x + 1, y + 1)});
        }
    // Punch holes: drop every k-th triangle fill. In a full disk all
    // boundary columns are independent, so each removal adds one class.
    const std::size_t stride = triangles.size() / holes;
    std::vector<std::array<VertexId, 3>> kept;
    std::size_t dropped = 0;
    for (std::size_t i = 0; i < triangles.size(); ++i) {
        if (dropped < holes && i % stride == stride / 2) {
            ++dropped;
            continue;
        }
        kept.push_back(triangles[i]);
    }
    return SimplicialComplex::create(static_cast<std::size_t>((w + 1) * (h + 1)), edges, kept);
}

bool check_performance(std::string& detail)
{
    const SimplicialComplex small = grid_complex(28, 28, 50, 7);
    const SimplicialComplex big = grid_complex(40, 40, 50, 7);

    auto timed_exact = [&](const SimplicialComplex& k, double& seconds) {
        const auto start = std::chrono::steady_clock::now();
        const BasisResult basis = exact_basis(k, SizeKind::SumOfWeights, DistanceKind::Graph);
        seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return basis;
    };

    double t_small = 0, t_big = 0;
    const BasisResult b_small = timed_exact(small, t_small);
    const BasisResult b_big = timed_exact(big, t_big);

    std::ostringstream msg;
    msg << small.total_simplices() << " simplices (g=" << b_small.g << ") in " << t_small
        << " s; " << big.total_simplices() << " simplices (g=" << b_big.g << ") in " << t_big
        << " s";
    detail = msg.str();

    if (b_small.g != 50 || b_big.g != 50)
        return false;
    if (t_small >= 120.0)
        return false;
    // Cubic-regime sanity: doubling the simplex count stays within ~8x.
    const double ratio = t_big / std::max(t_small, 0.05);
    msg << "; ratio " << ratio;
    detail = msg.str();
    return ratio <= 8.0;
}

} // namespace

int main()
{
    std::vector<Criterion> criteria = {
        {1, "oracle equivalence on the random corpus and fixtures", check_oracle_equivalence},
        {2, "fixture values (octahedron, 4-cycle, torus)", check_fixture_values},
        {3, "annotation soundness", check_annotation_soundness},
        {4, "support vector invariants under debug audit", check_support_invariants},
        {5, "U = WZ update algebra vs direct recomputation", check_update_algebra},
        {6, "empirical approximation quality", check_approx_quality},
        {7, "counter-example reproduction", check_fig1_counterexample},
        {8, "generalized radius measures vs oracle", check_generalized_measures},
        {9, "shortest-path-tree order minimality and determinism", check_spt_order},
        {10, "persistence pipeline (d = 1 cross-check, d = 2 sphere)", check_hd_pipeline},
        {11, "performance smoke", check_performance},
    };

    int failures = 0;
    for (Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", c.number,
                    c.title.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
