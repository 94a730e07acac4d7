#pragma once

#include <span>
#include <vector>

#include "homcoord/annotate.hpp"
#include "homcoord/complex.hpp"
#include "homcoord/z2matrix.hpp"

namespace homcoord {

/// True iff z bounds, i.e. its annotation vanishes. Throws on non-cycles.
bool is_null_homologous(const SimplicialComplex& k, const AnnotationIndex& idx, const Chain& z);

/// True iff z1 and z2 lie in the same homology class.
bool are_homologous(const SimplicialComplex& k, const AnnotationIndex& idx, const Chain& z1,
                    const Chain& z2);

/// Earliest basis computed block by block: keeps the selected column set J and
/// folds in `block` new columns per round, taking the earliest basis of
/// [A_J | A_block] each time. Returns exactly the single-shot earliest basis;
/// intended for very wide matrices with few rows (block is typically rows()).
std::vector<std::size_t> block_earliest_basis(const Z2Matrix& a, std::size_t block);

/// Indices of a maximal homology-independent subset of the given cycles,
/// lexicographically earliest with respect to input order.
std::vector<std::size_t> max_independent_subset(const SimplicialComplex& k,
                                                const AnnotationIndex& idx,
                                                std::span<const Chain> cycles);

}  // namespace homcoord
