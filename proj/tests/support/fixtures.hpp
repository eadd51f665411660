// Named fixtures and the seeded random-complex corpus shared by the unit
// and acceptance suites.

#ifndef HBASIS_TESTS_FIXTURES_HPP
#define HBASIS_TESTS_FIXTURES_HPP

#include <cstdint>

#include "hbasis/simplicial_complex.hpp"

namespace hbasis::fixtures {

/// Octahedron surface: 6 vertices, 12 edges, 8 triangles; a sphere, so
/// betti_1 = 0.
SimplicialComplex octahedron();

/// 4-cycle graph, unit weights, no triangles; betti_1 = 1.
SimplicialComplex four_cycle();

/// Theta complex: vertices 0-3, edges (0,1),(1,2),(2,3),(0,3),(0,2), unit
/// weights, no triangles; betti_1 = 2 with minimal sizes (3, 3).
SimplicialComplex theta();

/// Csaszar 7-vertex torus triangulation (complete graph K7, 14 filled
/// triangles), unit weights; betti_1 = 2 with minimal sizes (3, 3).
SimplicialComplex csaszar_torus();

/// Boundary of the tetrahedron (4 triangles, hollow); betti_2 = 1.
SimplicialComplex tetrahedron_boundary();

/// Solid tetrahedron (with the 3-cell); betti_2 = 0.
SimplicialComplex solid_tetrahedron();

/// One filled triangle.
SimplicialComplex single_triangle();

/**
 * The counter-example pattern: 8 vertices on an octagon a..h with chords
 * bh, dh, eg and the triangle efg filled. Weights chosen so that the four
 * short cycles C1..C4 form the unique minimal cycle basis, C4 is filled,
 * and the best homology basis inside {C2, C3, C4, C1+C2+C3} violates the
 * per-index 2-approximation bound.
 */
SimplicialComplex fig1_pattern();

/// The four cycles of the fig1 pattern plus their sum C4' = C1+C2+C3 as
/// explicit edge-index sets against fig1_pattern().
struct Fig1Cycles {
    std::vector<std::size_t> c1, c2, c3, c4, c4_prime;
};
Fig1Cycles fig1_cycles(const SimplicialComplex& k);

/**
 * Seeded random connected complex: 4..12 vertices, at most 20 edges
 * (spanning tree plus random extras), random weights in {1..9}, each
 * 3-clique filled with probability 1/2, and a random scalar vertex
 * function for the function-induced distance.
 */
SimplicialComplex random_complex(std::uint64_t seed);

/// Same shape with every weight forced to 1 -- maximal tie pressure on
/// all ordering and selection rules.
SimplicialComplex random_unit_complex(std::uint64_t seed);

} // namespace hbasis::fixtures

#endif
