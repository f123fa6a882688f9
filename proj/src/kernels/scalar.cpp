#include "densub/kernels.hpp"

namespace densub::kernels::scalar {

std::int64_t masked_edge_weight(const EdgeColumns& edges, std::span<const std::uint32_t> member) {
  std::int64_t sum = 0;
  for (std::size_t e = 0; e < edges.w.size(); ++e) {
    if (member[edges.u[e]] && member[edges.v[e]]) sum += edges.w[e];
  }
  return sum;
}

void subset_weights(const EdgeColumns& edges, std::uint64_t first, std::span<std::int64_t> out) {
  for (std::size_t j = 0; j < out.size(); ++j) {
    const std::uint64_t mask = first + j;
    std::int64_t sum = 0;
    for (std::size_t e = 0; e < edges.w.size(); ++e) {
      if ((mask >> edges.u[e]) & (mask >> edges.v[e]) & 1u) sum += edges.w[e];
    }
    out[j] = sum;
  }
}

}  // namespace densub::kernels::scalar
