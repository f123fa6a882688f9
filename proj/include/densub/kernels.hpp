#pragma once

// Data-parallel inner loops with a scalar reference and an AVX2 variant.
// The variant is chosen once at runtime from CPUID; the scalar path is
// always compiled and is the definition the vector paths are tested against.

#include <cstdint>
#include <span>
#include <string_view>

namespace densub::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

// Best ISA the running CPU supports (and the build compiled).
Isa detected_isa();
// ISA used by the dispatching entry points below. Defaults to detected_isa();
// the DENSUB_ISA=scalar environment variable forces the scalar path.
Isa active_isa();
// Overrides the dispatch choice; requesting an unsupported ISA falls back to
// scalar. Intended for tests and benchmarks.
void set_active_isa(Isa isa);

/// Structure-of-arrays copy of an edge list, the layout every kernel reads.
struct EdgeColumns {
  std::span<const std::uint32_t> u;
  std::span<const std::uint32_t> v;
  std::span<const std::int64_t> w;
};

// Sum of w[e] over edges whose endpoints both have a nonzero entry in
// `member`. `member` is indexed by vertex id.
std::int64_t masked_edge_weight(const EdgeColumns& edges, std::span<const std::uint32_t> member);

// For each subset bitmask first + j (j < out.size()), writes the total weight
// of edges with both endpoints in the subset. Vertex ids must be < 63.
void subset_weights(const EdgeColumns& edges, std::uint64_t first, std::span<std::int64_t> out);

namespace scalar {
std::int64_t masked_edge_weight(const EdgeColumns& edges, std::span<const std::uint32_t> member);
void subset_weights(const EdgeColumns& edges, std::uint64_t first, std::span<std::int64_t> out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define DENSUB_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::int64_t masked_edge_weight(const EdgeColumns& edges, std::span<const std::uint32_t> member);
void subset_weights(const EdgeColumns& edges, std::uint64_t first, std::span<std::int64_t> out);
}  // namespace avx2
#endif

}  // namespace densub::kernels
