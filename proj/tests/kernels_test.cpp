#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "coxlat/kernels/kernels.hpp"

namespace coxlat::kernels {
namespace {

std::vector<Isa> vector_isas() {
  std::vector<Isa> out;
  if (isa_available(Isa::Avx2)) out.push_back(Isa::Avx2);
  return out;
}

TEST(Kernels, ScalarIsAlwaysAvailable) {
  EXPECT_TRUE(isa_available(Isa::Scalar));
  EXPECT_EQ(isa_name(Isa::Scalar), "scalar");
}

TEST(Kernels, ForceAndResetDispatch) {
  force_isa(Isa::Scalar);
  EXPECT_EQ(active_isa(), Isa::Scalar);
  reset_isa();
  EXPECT_EQ(active_isa(), isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar);
}

TEST(Kernels, GatherMatchesScalar) {
  const auto& ref = table_for(Isa::Scalar);
  std::mt19937 rng(1);
  for (Isa isa : vector_isas()) {
    const auto& vec = table_for(isa);
    for (std::size_t len : {0u, 1u, 7u, 31u, 32u, 33u, 100u, 1000u}) {
      for (std::size_t table_len : {1u, 16u, 126u, 240u, 256u}) {
        std::vector<std::uint8_t> table(table_len), index(len);
        for (auto& t : table) t = static_cast<std::uint8_t>(rng());
        for (auto& i : index) i = static_cast<std::uint8_t>(rng() % table_len);
        std::vector<std::uint8_t> a(len), b(len);
        ref.gather_u8(a.data(), table.data(), table_len, index.data(), len);
        vec.gather_u8(b.data(), table.data(), table_len, index.data(), len);
        EXPECT_EQ(a, b) << isa_name(isa) << " len " << len << " table " << table_len;
        for (std::size_t i = 0; i < len; ++i) ASSERT_EQ(a[i], table[index[i]]);
      }
    }
  }
}

TEST(Kernels, MaskedSumMatchesScalar) {
  const auto& ref = table_for(Isa::Scalar);
  std::mt19937_64 rng(2);
  for (Isa isa : vector_isas()) {
    const auto& vec = table_for(isa);
    for (std::size_t len : {0u, 1u, 3u, 4u, 63u, 64u, 65u, 257u, 5000u}) {
      std::vector<std::int64_t> values(len);
      for (auto& v : values) v = static_cast<std::int64_t>(rng() % 2001) - 1000;
      std::vector<std::uint64_t> mask((len + 63) / 64 + 1);
      for (auto& m : mask) m = rng();
      std::int64_t direct = 0;
      for (std::size_t i = 0; i < len; ++i)
        if ((mask[i / 64] >> (i % 64)) & 1u) direct += values[i];
      EXPECT_EQ(ref.masked_sum_i64(values.data(), mask.data(), len), direct);
      EXPECT_EQ(vec.masked_sum_i64(values.data(), mask.data(), len), direct) << isa_name(isa) << " len " << len;
    }
  }
}

TEST(Kernels, SupersetScanMatchesScalar) {
  const auto& ref = table_for(Isa::Scalar);
  std::mt19937_64 rng(3);
  for (Isa isa : vector_isas()) {
    const auto& vec = table_for(isa);
    for (std::size_t words : {1u, 2u, 3u, 5u}) {
      for (std::size_t count : {0u, 1u, 5u, 64u, 65u, 300u}) {
        std::vector<std::uint64_t> sets(count * words), query(words);
        // Sparse queries so that supersets actually occur.
        for (auto& q : query) q = rng() & rng() & rng();
        for (std::size_t y = 0; y < count; ++y)
          for (std::size_t w = 0; w < words; ++w) sets[y * words + w] = (y % 3 == 0) ? (query[w] | rng()) : rng();
        const std::size_t out_words = std::max<std::size_t>(1, (count + 63) / 64);
        std::vector<std::uint64_t> a(out_words, ~0ull), b(out_words, ~0ull);
        ref.superset_scan(sets.data(), count, words, query.data(), a.data());
        vec.superset_scan(sets.data(), count, words, query.data(), b.data());
        EXPECT_EQ(a, b) << isa_name(isa) << " words " << words << " count " << count;
        for (std::size_t y = 0; y < count; ++y) {
          bool sup = true;
          for (std::size_t w = 0; w < words; ++w) sup = sup && (query[w] & ~sets[y * words + w]) == 0;
          ASSERT_EQ(((a[y / 64] >> (y % 64)) & 1u) != 0, sup);
        }
      }
    }
  }
}

}  // namespace
}  // namespace coxlat::kernels
