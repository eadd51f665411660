/**
 * Weighted simplicial complexes with canonical simplex order.
 *
 * Simplices are stored as sorted vertex tuples and each dimension's list
 * is sorted lexicographically, so column order in every derived matrix is
 * deterministic and independent of input order.
 */

#ifndef HBASIS_SIMPLICIAL_COMPLEX_HPP
#define HBASIS_SIMPLICIAL_COMPLEX_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hbasis/bitmatrix.hpp"

namespace hbasis {

using VertexId = int;

struct Edge {
    VertexId u; // u < v
    VertexId v;
    double weight;
};

struct Triangle {
    std::array<VertexId, 3> v; // sorted
};

/// A chain in dimension `dim`, one bit per simplex in canonical order.
struct ChainVector {
    int dim = 1;
    BitVector bits;
};

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /**
     * Build a complex from raw lists of (u, v, weight) edges and vertex
     * triples. Vertex tuples are sorted and each dimension's list is
     * brought into canonical (lexicographic) order. Duplicates and
     * missing faces are preserved so that validate() can report them.
     */
    static SimplicialComplex
    create(std::size_t n_vertices, const std::vector<std::tuple<VertexId, VertexId, double>>& edges,
           const std::vector<std::array<VertexId, 3>>& triangles,
           std::map<int, std::vector<std::vector<VertexId>>> higher = {},
           std::optional<std::vector<std::vector<double>>> vertex_function = std::nullopt);

    std::size_t n_vertices() const noexcept { return n_vertices_; }
    std::size_t n_edges() const noexcept { return edges_.size(); }
    std::size_t n_triangles() const noexcept { return triangles_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
    const std::map<int, std::vector<std::vector<VertexId>>>& higher_simplices() const noexcept
    {
        return higher_;
    }
    const std::optional<std::vector<std::vector<double>>>& vertex_function() const noexcept
    {
        return vertex_function_;
    }

    /// Largest dimension with at least one simplex.
    int dimension() const noexcept;

    /// Number of d-simplices (0 when the dimension is not represented).
    std::size_t simplex_count(int d) const noexcept;

    /// Vertex tuple of the i-th d-simplex in canonical order.
    std::vector<VertexId> simplex_vertices(int d, std::size_t index) const;

    /// Total number of simplices across all dimensions.
    std::size_t total_simplices() const noexcept;

    std::optional<std::size_t> edge_index(VertexId u, VertexId v) const;

    /// Neighbors of `u` in the 1-skeleton as (vertex, edge index) pairs,
    /// sorted by neighbor id.
    const std::vector<std::pair<VertexId, std::size_t>>& neighbors(VertexId u) const
    {
        return adjacency_[static_cast<std::size_t>(u)];
    }

    /**
     * Boundary matrix of dimension d: one column per d-simplex, one row
     * per (d-1)-simplex, entry 1 iff face-of. A dimension beyond the
     * complex yields an empty matrix with the correct row count.
     */
    BitMatrix boundary_matrix(int d) const;

    /// First Betti number: (n1 - n0 + 1) - rank(boundary_2).
    std::size_t betti_1() const;

    /// Rank of H_d = rank Z_d - rank B_d for arbitrary d >= 1.
    std::size_t betti(int d) const;

    /**
     * Structural audit: missing faces, duplicate simplices, out-of-range
     * vertex ids, negative weights, disconnected 1-skeleton, malformed
     * vertex function. An empty result means the complex is valid.
     */
    std::vector<std::string> validate() const;

    bool is_connected() const;

    /// Sum of edge weights over the set bits of a 1-chain.
    double chain_weight(const BitVector& edge_bits) const;

    /// Vertices touched by the set bits of a 1-chain, ascending.
    std::vector<VertexId> chain_vertices(const BitVector& edge_bits) const;

    /// True iff every vertex of the 1-chain has even degree (a Z_2 cycle).
    bool is_cycle(const BitVector& edge_bits) const;

private:
    std::size_t n_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<Triangle> triangles_;
    std::map<int, std::vector<std::vector<VertexId>>> higher_;
    std::optional<std::vector<std::vector<double>>> vertex_function_;
    std::vector<std::vector<std::pair<VertexId, std::size_t>>> adjacency_;
    std::map<std::pair<VertexId, VertexId>, std::size_t> edge_lookup_;

    void build_lookups();
};

} // namespace hbasis

#endif
