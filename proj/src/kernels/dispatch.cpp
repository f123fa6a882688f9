#include <atomic>
#include <cstdlib>
#include <string>

#include "densub/kernels.hpp"

namespace densub::kernels {
namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("DENSUB_ISA"); env && std::string(env) == "scalar") {
    return Isa::kScalar;
  }
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kAvx2:
      return "avx2";
    case Isa::kScalar:
      break;
  }
  return "scalar";
}

Isa detected_isa() {
#ifdef DENSUB_HAVE_AVX2_KERNELS
  static const bool has_avx2 = __builtin_cpu_supports("avx2");
  if (has_avx2) return Isa::kAvx2;
#endif
  return Isa::kScalar;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::kAvx2 && detected_isa() != Isa::kAvx2) isa = Isa::kScalar;
  active().store(isa, std::memory_order_relaxed);
}

std::int64_t masked_edge_weight(const EdgeColumns& edges, std::span<const std::uint32_t> member) {
#ifdef DENSUB_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::kAvx2) return avx2::masked_edge_weight(edges, member);
#endif
  return scalar::masked_edge_weight(edges, member);
}

void subset_weights(const EdgeColumns& edges, std::uint64_t first, std::span<std::int64_t> out) {
#ifdef DENSUB_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::kAvx2) return avx2::subset_weights(edges, first, out);
#endif
  scalar::subset_weights(edges, first, out);
}

}  // namespace densub::kernels
