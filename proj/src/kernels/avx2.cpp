// Compiled with -mavx2; only reached after a CPUID check.
#include <immintrin.h>

#include "densub/kernels.hpp"

namespace densub::kernels::avx2 {

std::int64_t masked_edge_weight(const EdgeColumns& edges, std::span<const std::uint32_t> member) {
  const std::size_t m = edges.w.size();
  const auto* base = reinterpret_cast<const int*>(member.data());
  __m256i acc0 = _mm256_setzero_si256();
  __m256i acc1 = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();

  std::size_t e = 0;
  for (; e + 8 <= m; e += 8) {
    __m256i u = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(edges.u.data() + e));
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(edges.v.data() + e));
    __m256i mu = _mm256_i32gather_epi32(base, u, 4);
    __m256i mv = _mm256_i32gather_epi32(base, v, 4);
    // All-ones lanes where both endpoints are members.
    __m256i both = _mm256_andnot_si256(
        _mm256_or_si256(_mm256_cmpeq_epi32(mu, zero), _mm256_cmpeq_epi32(mv, zero)),
        _mm256_set1_epi32(-1));
    __m256i lo = _mm256_cvtepi32_epi64(_mm256_castsi256_si128(both));
    __m256i hi = _mm256_cvtepi32_epi64(_mm256_extracti128_si256(both, 1));
    __m256i w0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(edges.w.data() + e));
    __m256i w1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(edges.w.data() + e + 4));
    acc0 = _mm256_add_epi64(acc0, _mm256_and_si256(lo, w0));
    acc1 = _mm256_add_epi64(acc1, _mm256_and_si256(hi, w1));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_add_epi64(acc0, acc1));
  std::int64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; e < m; ++e) {
    if (member[edges.u[e]] && member[edges.v[e]]) sum += edges.w[e];
  }
  return sum;
}

void subset_weights(const EdgeColumns& edges, std::uint64_t first, std::span<std::int64_t> out) {
  const std::size_t m = edges.w.size();
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i zero = _mm256_setzero_si256();
  const __m256i step = _mm256_set1_epi64x(4);

  // 16 consecutive masks per pass, held in four 4-lane registers.
  std::size_t j = 0;
  for (; j + 16 <= out.size(); j += 16) {
    const auto b = static_cast<long long>(first + j);
    __m256i m0 = _mm256_setr_epi64x(b, b + 1, b + 2, b + 3);
    __m256i m1 = _mm256_add_epi64(m0, step);
    __m256i m2 = _mm256_add_epi64(m1, step);
    __m256i m3 = _mm256_add_epi64(m2, step);
    __m256i a0 = zero, a1 = zero, a2 = zero, a3 = zero;
    for (std::size_t e = 0; e < m; ++e) {
      const __m128i su = _mm_cvtsi32_si128(static_cast<int>(edges.u[e]));
      const __m128i sv = _mm_cvtsi32_si128(static_cast<int>(edges.v[e]));
      const __m256i w = _mm256_set1_epi64x(edges.w[e]);
      auto take = [&](__m256i mask) {
        __m256i bit = _mm256_and_si256(_mm256_and_si256(_mm256_srl_epi64(mask, su),
                                                        _mm256_srl_epi64(mask, sv)),
                                       one);
        // 0 - 1 = all ones selects the weight.
        return _mm256_and_si256(_mm256_sub_epi64(zero, bit), w);
      };
      a0 = _mm256_add_epi64(a0, take(m0));
      a1 = _mm256_add_epi64(a1, take(m1));
      a2 = _mm256_add_epi64(a2, take(m2));
      a3 = _mm256_add_epi64(a3, take(m3));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + j), a0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + j + 4), a1);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + j + 8), a2);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + j + 12), a3);
  }
  if (j < out.size()) scalar::subset_weights(edges, first + j, out.subspan(j));
}

}  // namespace densub::kernels::avx2
