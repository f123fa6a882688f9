#include <doctest.h>

#include <random>
#include <vector>

#include "densub/kernels.hpp"

using namespace densub::kernels;

namespace {

struct Columns {
  std::vector<std::uint32_t> u, v;
  std::vector<std::int64_t> w;
  EdgeColumns view() const { return {u, v, w}; }
};

Columns random_columns(std::mt19937_64& rng, std::uint32_t n, std::size_t m) {
  Columns c;
  std::uniform_int_distribution<std::uint32_t> id(0, n - 1);
  std::uniform_int_distribution<std::int64_t> w(1, 1'000'000'000);
  for (std::size_t e = 0; e < m; ++e) {
    std::uint32_t a = id(rng), b = id(rng);
    if (a == b) b = (a + 1) % n;
    c.u.push_back(a);
    c.v.push_back(b);
    c.w.push_back(w(rng));
  }
  return c;
}

}  // namespace

TEST_CASE("scalar reference kernels on a hand example") {
  // Triangle 0-1-2 with weights 1, 2, 4 plus edge 2-3 of weight 8.
  Columns c{{0, 1, 0, 2}, {1, 2, 2, 3}, {1, 2, 4, 8}};
  std::vector<std::uint32_t> member{1, 1, 1, 0};
  CHECK(scalar::masked_edge_weight(c.view(), member) == 7);

  std::vector<std::int64_t> out(16);
  scalar::subset_weights(c.view(), 0, out);
  CHECK(out[0b0011] == 1);
  CHECK(out[0b0111] == 7);
  CHECK(out[0b1100] == 8);
  CHECK(out[0b1111] == 15);
  CHECK(out[0b1001] == 0);
}

#ifdef DENSUB_HAVE_AVX2_KERNELS
TEST_CASE("avx2 kernels match the scalar reference") {
  if (detected_isa() != Isa::kAvx2) {
    MESSAGE("CPU lacks AVX2; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(2024);
  for (std::size_t m : {0u, 1u, 3u, 7u, 8u, 9u, 15u, 16u, 17u, 63u, 200u, 1001u}) {
    const std::uint32_t n = 20;
    Columns c = random_columns(rng, n, m);
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<std::uint32_t> member(n);
      for (auto& x : member) x = static_cast<std::uint32_t>(rng() % 3 == 0 ? 0 : rng() % 5 + 1);
      CHECK(avx2::masked_edge_weight(c.view(), member) ==
            scalar::masked_edge_weight(c.view(), member));
    }
    for (std::uint64_t first : {0ull, 5ull, 1000ull, (1ull << 20) - 37}) {
      for (std::size_t len : {1u, 4u, 15u, 16u, 17u, 33u, 100u}) {
        std::vector<std::int64_t> a(len), b(len);
        avx2::subset_weights(c.view(), first, a);
        scalar::subset_weights(c.view(), first, b);
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("avx2 subset kernel handles ids up to 62") {
  if (detected_isa() != Isa::kAvx2) return;
  Columns c{{0, 61, 30}, {62, 62, 61}, {3, 5, 7}};
  const std::uint64_t base = (1ull << 62) | (1ull << 61);
  std::vector<std::int64_t> a(32), b(32);
  avx2::subset_weights(c.view(), base, a);
  scalar::subset_weights(c.view(), base, b);
  CHECK(a == b);
  CHECK(a[0] == 5);
  CHECK(a[1] == 8);  // bit 0 adds edge 0-62
}
#endif

TEST_CASE("dispatch honours overrides") {
  const Isa before = active_isa();
  set_active_isa(Isa::kScalar);
  CHECK(active_isa() == Isa::kScalar);
  Columns c{{0}, {1}, {5}};
  std::vector<std::uint32_t> member{1, 1};
  CHECK(masked_edge_weight(c.view(), member) == 5);
  set_active_isa(Isa::kAvx2);
  CHECK(active_isa() == detected_isa());
  CHECK(masked_edge_weight(c.view(), member) == 5);
  set_active_isa(before);
  CHECK(isa_name(Isa::kScalar) == "scalar");
}
