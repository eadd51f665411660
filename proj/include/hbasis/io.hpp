/**
 * Input and result documents (JSON).
 *
 * Input grammar:
 *   {
 *     "vertices": n0,
 *     "edges": [[u, v, w], ...],
 *     "triangles": [[a, b, c], ...],
 *     "simplices_d": {"3": [[a, b, c, d], ...], ...},   // optional
 *     "vertex_function": [[f1, ..., fdz], ...]          // optional
 *   }
 * Parsing is strict: unknown fields, wrong arities and wrong types are
 * rejected.
 */

#ifndef HBASIS_IO_HPP
#define HBASIS_IO_HPP

#include <string>

#include "hbasis/simplicial_complex.hpp"

namespace hbasis {

SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex parse_complex_file(const std::string& path);

/// Inverse of parse_complex (canonical order, weights as stored).
std::string write_complex(const SimplicialComplex& k);

} // namespace hbasis

#endif
