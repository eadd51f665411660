#include "hbasis/annotate.hpp"

#include <numeric>

#include "hbasis/errors.hpp"

namespace hbasis {

BitVector AnnotationTable::annotate_chain_unchecked(const BitVector& chain) const
{
    BitVector acc(g_);
    for (std::size_t s : chain.set_bits())
        acc ^= bits_[s];
    return acc;
}

BitVector AnnotationTable::annotate_chain(const BitVector& chain) const
{
    if (boundary_.apply(chain).any())
        throw InternalInvariantError("annotate_chain: chain is not a cycle");
    return annotate_chain_unchecked(chain);
}

BitVector cycle_annotation(const AnnotationTable& table, const ChainVector& z)
{
    if (z.dim != table.dim())
        throw InternalInvariantError("cycle_annotation: dimension mismatch");
    return table.annotate_chain(z.bits);
}

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(std::size_t n) : parent(n)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

// Projection of coordinate vectors onto free coordinates after reducing
// by the boundary image.
AnnotationTable build_table(int dim, std::size_t n_simplices,
                            const std::vector<std::size_t>& nontree,
                            const std::vector<BitVector>& boundary_coords, BitMatrix boundary_d)
{
    const std::size_t coord_width = nontree.size();
    Echelon image(coord_width);
    for (const BitVector& b : boundary_coords)
        image.insert(b);
    const std::vector<std::size_t> free_cols = image.free_columns();
    const std::size_t g = free_cols.size();

    std::vector<BitVector> bits(n_simplices, BitVector(g));
    for (std::size_t i = 0; i < nontree.size(); ++i) {
        BitVector coord(coord_width);
        coord.set(i);
        const BitVector reduced = image.reduce(std::move(coord));
        BitVector a(g);
        for (std::size_t j = 0; j < g; ++j)
            if (reduced.get(free_cols[j]))
                a.set(j);
        bits[nontree[i]] = std::move(a);
    }
    return AnnotationTable(dim, g, std::move(bits), std::move(boundary_d));
}

} // namespace

AnnotationTable annotate_edges(const SimplicialComplex& k)
{
    if (!k.is_connected())
        throw ValidateError("annotate_edges: 1-skeleton is not connected");

    // Canonical spanning tree: scan edges in canonical order, keep those
    // joining two components.
    DisjointSet ds(k.n_vertices());
    std::vector<char> in_tree(k.n_edges(), 0);
    for (std::size_t e = 0; e < k.n_edges(); ++e)
        if (ds.unite(k.edges()[e].u, k.edges()[e].v))
            in_tree[e] = 1;

    std::vector<std::size_t> nontree;
    std::vector<std::size_t> coord_of_edge(k.n_edges(), SIZE_MAX);
    for (std::size_t e = 0; e < k.n_edges(); ++e)
        if (!in_tree[e]) {
            coord_of_edge[e] = nontree.size();
            nontree.push_back(e);
        }

    // Triangle boundaries in fundamental-cycle coordinates: the bits of
    // the boundary's non-tree edges.
    std::vector<BitVector> boundary_coords;
    boundary_coords.reserve(k.n_triangles());
    for (const Triangle& t : k.triangles()) {
        BitVector coord(nontree.size());
        const VertexId a = t.v[0], b = t.v[1], c = t.v[2];
        for (auto [x, y] : {std::pair{a, b}, {a, c}, {b, c}}) {
            if (auto e = k.edge_index(x, y); e && coord_of_edge[*e] != SIZE_MAX)
                coord.flip(coord_of_edge[*e]);
        }
        boundary_coords.push_back(std::move(coord));
    }

    return build_table(1, k.n_edges(), nontree, boundary_coords, k.boundary_matrix(1));
}

AnnotationTable annotate_simplices(const SimplicialComplex& k, int d)
{
    if (d < 1)
        throw ValidateError("annotate_simplices: dimension must be >= 1");
    const BitMatrix bd = k.boundary_matrix(d);
    const BitMatrix bd_up = k.boundary_matrix(d + 1);
    const std::size_t n_d = k.simplex_count(d);

    // Earliest independent boundary columns play the spanning-tree role:
    // cycles are coordinatized by their restriction to the rest.
    const std::vector<std::size_t> tree = earliest_basis(bd);
    std::vector<char> in_tree(n_d, 0);
    for (std::size_t t : tree)
        in_tree[t] = 1;
    std::vector<std::size_t> nontree;
    std::vector<std::size_t> coord_of(n_d, SIZE_MAX);
    for (std::size_t i = 0; i < n_d; ++i)
        if (!in_tree[i]) {
            coord_of[i] = nontree.size();
            nontree.push_back(i);
        }

    std::vector<BitVector> boundary_coords;
    boundary_coords.reserve(bd_up.cols());
    for (std::size_t j = 0; j < bd_up.cols(); ++j) {
        const BitVector col = bd_up.column(j);
        BitVector coord(nontree.size());
        for (std::size_t s : col.set_bits())
            if (coord_of[s] != SIZE_MAX)
                coord.set(coord_of[s]);
        boundary_coords.push_back(std::move(coord));
    }

    return build_table(d, n_d, nontree, boundary_coords, bd);
}

} // namespace hbasis
