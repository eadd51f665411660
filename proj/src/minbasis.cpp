#include "hbasis/minbasis.hpp"

#include <algorithm>

#include "hbasis/errors.hpp"

namespace hbasis {

namespace detail {

namespace {

// Tree labels l_p(u) = m(S_{i+1}, tree path p -> u) for one root,
// computed root-down in deletion order.
BitVector root_labels(const ShortestPathTree& tree, const BitMatrix& edge_m, std::size_t i)
{
    BitVector labels(tree.parent.size());
    for (VertexId v : tree.order) {
        const auto vi = static_cast<std::size_t>(v);
        if (tree.parent[vi] == -1)
            continue;
        const bool parent_label = labels.get(static_cast<std::size_t>(tree.parent[vi]));
        const bool edge_bit = edge_m.get(i, static_cast<std::size_t>(tree.parent_edge[vi]));
        if (parent_label ^ edge_bit)
            labels.set(vi);
    }
    return labels;
}

CycleRepr materialize_selection(const HortonCandidates& cands, const AnnotationTable& ann,
                                const CandidateRef& ref)
{
    const CandidateCycle cycle = cands.materialize(ref);
    BitVector annotation(ann.g());
    for (std::size_t e : cycle.edges)
        annotation ^= ann.of(e);
    CycleRepr repr;
    repr.dim = 1;
    repr.simplices = cycle.edges;
    repr.size = cycle.size;
    repr.annotation = std::move(annotation);
    repr.root = cycle.root;
    repr.source_index = static_cast<int>(cycle.nontree_edge);
    return repr;
}

// Full rescan: recompute m(S_{i+1}, C) from explicit edge sets for every
// candidate and return the minimum under (size, root, edge).
std::optional<CandidateRef> rescan_minimum(const SupportState& state, std::size_t i,
                                           const MinBasisContext& ctx)
{
    const BitVector support = state.supports.row(i);
    for (const CandidateRef& ref : ctx.cands->sorted()) {
        const CandidateCycle cycle = ctx.cands->materialize(ref);
        BitVector a(ctx.ann->g());
        for (std::size_t e : cycle.edges)
            a ^= ctx.ann->of(e);
        if (support.dot(a))
            return ref;
    }
    return std::nullopt;
}

} // namespace

CycleRepr shortest_nonorthogonal_cycle(SupportState& state, std::size_t i,
                                       const MinBasisContext& ctx)
{
    const HortonCandidates& cands = *ctx.cands;
    const std::size_t n0 = cands.complex().n_vertices();

    std::vector<BitVector> labels(n0);
    std::vector<char> have_labels(n0, 0);

    const CandidateRef* found = nullptr;
    for (const CandidateRef& ref : cands.sorted()) {
        const auto p = static_cast<std::size_t>(ref.root);
        if (!have_labels[p]) {
            labels[p] = root_labels(cands.tree(ref.root), state.edge_m, i);
            have_labels[p] = 1;
        }
        const Edge& e = cands.complex().edges()[ref.nontree_edge];
        const bool m = labels[p].get(static_cast<std::size_t>(e.u)) ^
                       labels[p].get(static_cast<std::size_t>(e.v)) ^
                       state.edge_m.get(i, ref.nontree_edge);
        if (m) {
            found = &ref;
            break;
        }
    }
    if (!found)
        throw InternalInvariantError(
            "no candidate is non-orthogonal to the support vector; "
            "the candidate set cannot contain a homology basis");

    CycleRepr repr = materialize_selection(cands, *ctx.ann, *found);

    if (ctx.audit) {
        // The label-based winner must coincide with a direct rescan.
        const auto direct = rescan_minimum(state, i, ctx);
        ++ctx.audit->selection_rescans;
        if (!direct || direct->root != found->root ||
            direct->nontree_edge != found->nontree_edge || direct->size != found->size)
            throw InternalInvariantError("label-based selection disagrees with full rescan");
        if (!state.supports.row(i).dot(repr.annotation))
            throw InternalInvariantError("selected cycle is orthogonal to its support vector");
        ctx.audit->snapshots.push_back(
            {i, state.supports.row(i), repr.annotation, repr.size});
    }
    return repr;
}

void update_supports(SupportState& state, std::size_t i, std::size_t k,
                     const MinBasisContext& ctx)
{
    const std::size_t half = k / 2;
    const std::size_t rest = k - half;
    const std::size_t n1 = state.edge_m.cols();

    // X = (rows i..i+half) x (annotation columns of C_i..C_{i+half-1});
    // Y likewise with the next `rest` support rows.
    BitMatrix ann_cols(state.g, half);
    for (std::size_t t = 0; t < half; ++t)
        ann_cols.set_column(t, state.chosen[i + t].annotation);

    BitMatrix s_left(half, state.g);
    for (std::size_t s = 0; s < half; ++s)
        s_left.set_row(s, state.supports.row(i + s));
    BitMatrix s_right(rest, state.g);
    for (std::size_t s = 0; s < rest; ++s)
        s_right.set_row(s, state.supports.row(i + half + s));

    const BitMatrix x = mat_mul(s_left, ann_cols);
    const BitMatrix y = mat_mul(s_right, ann_cols);

    // Correction coefficients A = Y X^{-1}; X is unit upper triangular by
    // the orthogonality invariants, so singularity here means a bug.
    BitMatrix coeff;
    try {
        coeff = mat_mul(y, mat_inverse(x));
    } catch (const SingularMatrixError&) {
        throw InternalInvariantError("support invariant broken: X is singular");
    }

    // S_j += sum_t alpha_{jt} S_{i+t}
    const BitMatrix correction = mat_mul(coeff, s_left);
    for (std::size_t s = 0; s < rest; ++s) {
        BitVector row = state.supports.row(i + half + s);
        row ^= correction.row(s);
        state.supports.set_row(i + half + s, row);
    }

    // Fast path for the m-table: U = W Z with W = [A | I].
    BitMatrix w(rest, k);
    for (std::size_t s = 0; s < rest; ++s) {
        for (std::size_t t = 0; t < half; ++t)
            if (coeff.get(s, t))
                w.set(s, t);
        w.set(s, half + s);
    }
    BitMatrix z(k, n1);
    for (std::size_t s = 0; s < k; ++s)
        z.set_row(s, state.edge_m.row(i + s));
    const BitMatrix u = mat_mul(w, z);
    for (std::size_t s = 0; s < rest; ++s)
        state.edge_m.set_row(i + half + s, u.row(s));

    if (ctx.audit) {
        // Direct recomputation of <S_j, a(e)> for every edge must agree
        // with the fast path.
        ++ctx.audit->update_checks;
        for (std::size_t s = 0; s < rest; ++s) {
            const BitVector support = state.supports.row(i + half + s);
            for (std::size_t e = 0; e < n1; ++e)
                if (support.dot(ctx.ann->of(e)) != state.edge_m.get(i + half + s, e))
                    throw InternalInvariantError("U = WZ fast path disagrees with direct m");
        }
        // Orthogonality against the left half's cycles is restored.
        for (std::size_t s = 0; s < rest; ++s)
            for (std::size_t t = 0; t < half; ++t)
                if (state.supports.row(i + half + s).dot(state.chosen[i + t].annotation))
                    throw InternalInvariantError("update failed to restore orthogonality");
    }
}

void extend_basis(SupportState& state, std::size_t i, std::size_t k, const MinBasisContext& ctx)
{
    if (k == 0)
        return;
    if (k == 1) {
        state.chosen.push_back(shortest_nonorthogonal_cycle(state, i, ctx));
        if (ctx.audit) {
            if (rank(state.supports) != state.g)
                throw InternalInvariantError("support vectors lost full rank");
            BitMatrix chosen_ann(state.chosen.size(), state.g);
            for (std::size_t c = 0; c < state.chosen.size(); ++c)
                chosen_ann.set_row(c, state.chosen[c].annotation);
            if (rank(chosen_ann) != state.chosen.size())
                throw InternalInvariantError("selected cycles are not independent");
        }
        return;
    }
    const std::size_t half = k / 2;
    extend_basis(state, i, half, ctx);
    update_supports(state, i, k, ctx);
    extend_basis(state, i + half, k - half, ctx);
}

} // namespace detail

namespace {

SupportState init_state(const HortonCandidates& cands, const AnnotationTable& ann)
{
    SupportState state;
    state.g = ann.g();
    state.supports = BitMatrix::identity(state.g);
    state.edge_m = BitMatrix(state.g, cands.complex().n_edges());
    // With unit support vectors, m(S_i, e) is just bit i of a(e).
    for (std::size_t e = 0; e < cands.complex().n_edges(); ++e) {
        const BitVector& a = ann.of(e);
        for (std::size_t i = 0; i < state.g; ++i)
            if (a.get(i))
                state.edge_m.set(i, e);
    }
    return state;
}

BasisResult finish(SupportState&& state)
{
    BasisResult result;
    result.cycles = std::move(state.chosen);
    result.finalize();
    return result;
}

} // namespace

BasisResult cycle_basis(const HortonCandidates& cands, const AnnotationTable& ann,
                        MinBasisAudit* audit)
{
    SupportState state = init_state(cands, ann);
    detail::MinBasisContext ctx{&cands, &ann, audit};
    if (state.g > 0)
        detail::extend_basis(state, 0, state.g, ctx);

    if (audit) {
        // Final supports are frozen at selection time, so property (2)
        // must hold globally: m(S_i, C_j) = 0 for all j < i.
        for (std::size_t i = 0; i < state.g; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (audit->snapshots[i].support.dot(audit->snapshots[j].annotation))
                    throw InternalInvariantError("orthogonality audit failed");
    }
    return finish(std::move(state));
}

BasisResult cycle_basis_flat(const HortonCandidates& cands, const AnnotationTable& ann)
{
    SupportState state = init_state(cands, ann);
    detail::MinBasisContext ctx{&cands, &ann, nullptr};
    for (std::size_t i = 0; i < state.g; ++i) {
        state.chosen.push_back(detail::shortest_nonorthogonal_cycle(state, i, ctx));
        const BitVector& a_ci = state.chosen.back().annotation;
        // Classic de Pina fix-up: S_j += S_i for every later support not
        // yet orthogonal to the new cycle.
        for (std::size_t j = i + 1; j < state.g; ++j) {
            if (state.supports.row(j).dot(a_ci)) {
                state.supports.xor_row(j, i);
                state.edge_m.xor_row(j, i);
            }
        }
    }
    return finish(std::move(state));
}

} // namespace hbasis
