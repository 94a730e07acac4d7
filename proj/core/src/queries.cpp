#include "homcoord/queries.hpp"

#include <algorithm>

#include "homcoord/errors.hpp"

namespace homcoord {

bool is_null_homologous(const SimplicialComplex& k, const AnnotationIndex& idx, const Chain& z) {
  return annotate_cycle(k, idx, z).none();
}

bool are_homologous(const SimplicialComplex& k, const AnnotationIndex& idx, const Chain& z1,
                    const Chain& z2) {
  if (z1.dim != z2.dim) throw Error("are_homologous: cycle dimensions differ");
  return annotate_cycle(k, idx, z1) == annotate_cycle(k, idx, z2);
}

std::vector<std::size_t> block_earliest_basis(const Z2Matrix& a, std::size_t block) {
  if (block == 0) block = 1;
  std::vector<std::size_t> selected;  // global column indices, increasing
  std::vector<Bitset> kept;           // the corresponding columns
  for (std::size_t start = 0; start < a.cols(); start += block) {
    const std::size_t stop = std::min(start + block, a.cols());
    std::vector<Bitset> cols = kept;
    std::vector<std::size_t> ids(selected);
    for (std::size_t c = start; c < stop; ++c) {
      cols.push_back(a.column(c));
      ids.push_back(c);
    }
    const auto eb = earliest_basis(from_columns(a.rows(), cols));
    std::vector<std::size_t> next_sel;
    std::vector<Bitset> next_kept;
    for (std::size_t pos : eb) {
      next_sel.push_back(ids[pos]);
      next_kept.push_back(cols[pos]);
    }
    selected = std::move(next_sel);
    kept = std::move(next_kept);
  }
  return selected;
}

std::vector<std::size_t> max_independent_subset(const SimplicialComplex& k,
                                                const AnnotationIndex& idx,
                                                std::span<const Chain> cycles) {
  std::vector<Bitset> cols;
  cols.reserve(cycles.size());
  for (const Chain& z : cycles) cols.push_back(annotate_cycle(k, idx, z));
  const Z2Matrix a = from_columns(idx.g, cols);
  return block_earliest_basis(a, idx.g);
}

}  // namespace homcoord
