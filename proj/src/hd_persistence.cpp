#include "hbasis/hd_persistence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hbasis/errors.hpp"

namespace hbasis {

namespace {

std::vector<SimplexRef> all_simplices(const SimplicialComplex& k)
{
    std::vector<SimplexRef> out;
    for (int d = 0; d <= k.dimension(); ++d)
        for (std::size_t i = 0; i < k.simplex_count(d); ++i)
            out.push_back({d, i});
    return out;
}

double simplex_value(const SimplicialComplex& k, const ShortestPathTree& tree, const SimplexRef& s)
{
    double value = 0;
    for (VertexId v : k.simplex_vertices(s.dim, s.index))
        value = std::max(value, tree.dist[static_cast<std::size_t>(v)]);
    return value;
}

} // namespace

Filtration build_filtration(const SimplicialComplex& k, const ShortestPathTree& tree)
{
    Filtration f;
    f.root = tree.root;
    f.order = all_simplices(k);
    f.value.reserve(f.order.size());
    std::vector<double> values;
    values.reserve(f.order.size());
    for (const SimplexRef& s : f.order)
        values.push_back(simplex_value(k, tree, s));
    std::vector<std::size_t> perm(f.order.size());
    std::iota(perm.begin(), perm.end(), 0);
    // (d_p, dimension, index): cofaces never precede faces because their
    // value is at least the face's and their dimension is larger.
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b])
            return values[a] < values[b];
        if (f.order[a].dim != f.order[b].dim)
            return f.order[a].dim < f.order[b].dim;
        return f.order[a].index < f.order[b].index;
    });
    std::vector<SimplexRef> ordered;
    ordered.reserve(perm.size());
    for (std::size_t i : perm) {
        ordered.push_back(f.order[i]);
        f.value.push_back(values[i]);
    }
    f.order = std::move(ordered);
    return f;
}

Filtration build_filtration(const SimplicialComplex& k, const DistanceEvaluator& d, VertexId p)
{
    return build_filtration(k, build_spt(d, p));
}

namespace {

struct Reduction {
    std::vector<BitVector> reduced;   // R columns over positions
    std::vector<BitVector> combo;     // V columns over positions
    std::vector<std::ptrdiff_t> low;  // low index of each reduced column, -1 if zero
    std::vector<std::ptrdiff_t> killer_of; // for each position: column that has it as low
};

Reduction reduce(const Filtration& f, const SimplicialComplex& k)
{
    const std::size_t n = f.order.size();
    std::map<std::pair<int, std::size_t>, std::size_t> position;
    for (std::size_t j = 0; j < n; ++j)
        position[{f.order[j].dim, f.order[j].index}] = j;

    // Face positions per column via vertex-tuple lookup.
    std::map<std::vector<VertexId>, std::size_t> by_vertices;
    for (std::size_t j = 0; j < n; ++j)
        by_vertices[k.simplex_vertices(f.order[j].dim, f.order[j].index)] = j;

    Reduction red;
    red.reduced.reserve(n);
    red.combo.reserve(n);
    red.low.assign(n, -1);
    red.killer_of.assign(n, -1);

    std::vector<std::ptrdiff_t> owner(n, -1); // owner[p] = column with low p
    for (std::size_t j = 0; j < n; ++j) {
        BitVector column(n);
        const SimplexRef& s = f.order[j];
        if (s.dim > 0) {
            const std::vector<VertexId> verts = k.simplex_vertices(s.dim, s.index);
            for (std::size_t omit = 0; omit < verts.size(); ++omit) {
                std::vector<VertexId> face;
                face.reserve(verts.size() - 1);
                for (std::size_t i = 0; i < verts.size(); ++i)
                    if (i != omit)
                        face.push_back(verts[i]);
                column.flip(by_vertices.at(face));
            }
        }
        BitVector combo(n);
        combo.set(j);
        for (;;) {
            if (column.none()) {
                red.low[j] = -1;
                break;
            }
            const std::size_t low = column.highest_set_bit();
            if (owner[low] == -1) {
                owner[low] = static_cast<std::ptrdiff_t>(j);
                red.low[j] = static_cast<std::ptrdiff_t>(low);
                red.killer_of[low] = static_cast<std::ptrdiff_t>(j);
                break;
            }
            column ^= red.reduced[static_cast<std::size_t>(owner[low])];
            combo ^= red.combo[static_cast<std::size_t>(owner[low])];
        }
        red.reduced.push_back(std::move(column));
        red.combo.push_back(std::move(combo));
    }
    return red;
}

} // namespace

std::vector<std::pair<std::size_t, std::ptrdiff_t>>
persistence_pairs(const Filtration& f, const SimplicialComplex& k)
{
    const Reduction red = reduce(f, k);
    std::vector<std::pair<std::size_t, std::ptrdiff_t>> pairs;
    for (std::size_t j = 0; j < f.order.size(); ++j)
        if (red.low[j] == -1)
            pairs.emplace_back(j, red.killer_of[j]);
    return pairs;
}

std::vector<EssentialCycle> essential_cycles(const Filtration& f, const SimplicialComplex& k,
                                             int d)
{
    const Reduction red = reduce(f, k);
    const std::size_t n = f.order.size();
    std::vector<EssentialCycle> out;
    for (std::size_t j = 0; j < n; ++j) {
        if (f.order[j].dim != d || red.low[j] != -1 || red.killer_of[j] != -1)
            continue;
        // V-column bits are positions of d-simplices; map to canonical
        // indices.
        BitVector chain(k.simplex_count(d));
        for (std::size_t pos : red.combo[j].set_bits())
            chain.set(f.order[pos].index);
        out.push_back({std::move(chain), f.value[j], j});
    }
    return out;
}

BasisResult hd_minimal_basis(const SimplicialComplex& k, int d, const DistanceEvaluator& distance)
{
    if (d < 1)
        throw ValidateError("hd_minimal_basis: dimension must be >= 1");
    const AnnotationTable ann = annotate_simplices(k, d);
    const std::size_t g = ann.g();
    BasisResult result;
    if (g == 0) {
        result.finalize();
        return result;
    }

    struct Candidate {
        BitVector chain;
        double size;
        VertexId root;
        std::size_t creator;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(g * k.n_vertices());
    for (std::size_t p = 0; p < k.n_vertices(); ++p) {
        const Filtration f = build_filtration(k, distance, static_cast<VertexId>(p));
        std::vector<EssentialCycle> cycles = essential_cycles(f, k, d);
        if (cycles.size() != g)
            throw InternalInvariantError("essential class count differs from rank(H_d)");
        for (EssentialCycle& c : cycles)
            candidates.push_back(
                {std::move(c.chain), c.birth, static_cast<VertexId>(p), c.creator_position});
    }

    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.size != b.size)
            return a.size < b.size;
        if (a.root != b.root)
            return a.root < b.root;
        return a.creator < b.creator;
    });

    // X = Gamma Y: candidate-by-simplex incidence times per-simplex
    // annotations; the earliest basis of X^T is the answer.
    const std::size_t n_d = k.simplex_count(d);
    BitMatrix gamma(candidates.size(), n_d);
    for (std::size_t i = 0; i < candidates.size(); ++i)
        gamma.set_row(i, candidates[i].chain);
    BitMatrix y(n_d, g);
    for (std::size_t s = 0; s < n_d; ++s) {
        const BitVector& a = ann.of(s);
        for (std::size_t b = 0; b < g; ++b)
            if (a.get(b))
                y.set(s, b);
    }
    const BitMatrix x_t = transpose(mat_mul(gamma, y));
    const std::vector<std::size_t> chosen = earliest_basis(x_t);
    if (chosen.size() != g)
        throw InternalInvariantError("persistence candidate set does not span H_d");

    for (std::size_t idx : chosen) {
        const Candidate& c = candidates[idx];
        CycleRepr repr;
        repr.dim = d;
        for (std::size_t s : c.chain.set_bits())
            repr.simplices.push_back(s);
        repr.size = c.size;
        repr.annotation = x_t.column(idx);
        repr.root = c.root;
        repr.source_index = static_cast<int>(c.creator);
        result.cycles.push_back(std::move(repr));
    }
    result.finalize();
    return result;
}

} // namespace hbasis
