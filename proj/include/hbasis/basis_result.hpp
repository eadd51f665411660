#ifndef HBASIS_BASIS_RESULT_HPP
#define HBASIS_BASIS_RESULT_HPP

#include <vector>

#include "hbasis/bitmatrix.hpp"

namespace hbasis {

/// One basis cycle: simplex indices in canonical order (edges for d = 1),
/// its size under the active measure, annotation, and provenance.
struct CycleRepr {
    int dim = 1;
    std::vector<std::size_t> simplices;
    double size = 0;
    BitVector annotation;
    int root = -1;         // generating root, when applicable
    int source_index = -1; // non-tree edge (exact/approx) or creator position (hd)
};

struct BasisResult {
    std::size_t g = 0;
    std::vector<CycleRepr> cycles;      // selection order
    std::vector<double> size_sequence;  // nondecreasing
    double total_size = 0;

    void finalize(); // fills size_sequence and total_size from cycles
};

} // namespace hbasis

#endif
