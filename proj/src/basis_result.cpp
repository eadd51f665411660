#include "hbasis/basis_result.hpp"

#include <algorithm>
#include <numeric>

namespace hbasis {

void BasisResult::finalize()
{
    g = cycles.size();
    size_sequence.clear();
    size_sequence.reserve(cycles.size());
    for (const CycleRepr& c : cycles)
        size_sequence.push_back(c.size);
    std::sort(size_sequence.begin(), size_sequence.end());
    total_size = std::accumulate(size_sequence.begin(), size_sequence.end(), 0.0);
}

} // namespace hbasis
