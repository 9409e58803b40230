// Compiled with -mavx2; only reached through the runtime dispatch after the
// CPU reported AVX2 support.

#include <immintrin.h>

#include <cstring>

#include "coxlat/kernels/kernels.hpp"

namespace coxlat::kernels {
namespace {

// 256-entry byte lookup built from 16-byte pshufb tables: each lane picks
// from table chunk (index >> 4) at position (index & 15).
void gather_u8_avx2(std::uint8_t* dst, const std::uint8_t* table, std::size_t table_len,
                    const std::uint8_t* index, std::size_t len) {
  alignas(32) std::uint8_t padded[256] = {};
  std::memcpy(padded, table, table_len);
  const std::size_t chunks = (table_len + 15) / 16;

  __m256i tables[16];
  for (std::size_t c = 0; c < chunks; ++c) {
    tables[c] = _mm256_broadcastsi128_si256(
        _mm_load_si128(reinterpret_cast<const __m128i*>(padded + 16 * c)));
  }
  const __m256i low_nibble = _mm256_set1_epi8(0x0F);

  auto lookup32 = [&](__m256i idx) {
    const __m256i lo = _mm256_and_si256(idx, low_nibble);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(idx, 4), low_nibble);
    __m256i result = _mm256_setzero_si256();
    for (std::size_t c = 0; c < chunks; ++c) {
      const __m256i picked = _mm256_shuffle_epi8(tables[c], lo);
      const __m256i here = _mm256_cmpeq_epi8(hi, _mm256_set1_epi8(static_cast<char>(c)));
      result = _mm256_or_si256(result, _mm256_and_si256(picked, here));
    }
    return result;
  };

  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(index + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), lookup32(idx));
  }
  if (i < len) {
    alignas(32) std::uint8_t idx_tail[32] = {};
    alignas(32) std::uint8_t out_tail[32];
    std::memcpy(idx_tail, index + i, len - i);
    _mm256_store_si256(reinterpret_cast<__m256i*>(out_tail),
                       lookup32(_mm256_load_si256(reinterpret_cast<const __m256i*>(idx_tail))));
    std::memcpy(dst + i, out_tail, len - i);
  }
}

struct NibbleMasks {
  alignas(32) std::int64_t lanes[16][4];
  NibbleMasks() {
    for (int n = 0; n < 16; ++n)
      for (int k = 0; k < 4; ++k) lanes[n][k] = ((n >> k) & 1) ? -1 : 0;
  }
};

std::int64_t masked_sum_i64_avx2(const std::int64_t* values, const std::uint64_t* mask,
                                 std::size_t len) {
  static const NibbleMasks lut;
  __m256i acc = _mm256_setzero_si256();
  const std::size_t full_words = len / 64;
  for (std::size_t w = 0; w < full_words; ++w) {
    std::uint64_t m = mask[w];
    const std::int64_t* base = values + 64 * w;
    while (m != 0) {
      const int bit = __builtin_ctzll(m);
      const int group = bit >> 2;
      const unsigned nib = static_cast<unsigned>((m >> (4 * group)) & 0xF);
      const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base + 4 * group));
      const __m256i sel = _mm256_load_si256(reinterpret_cast<const __m256i*>(lut.lanes[nib]));
      acc = _mm256_add_epi64(acc, _mm256_and_si256(v, sel));
      m &= ~(std::uint64_t{0xF} << (4 * group));
    }
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (std::size_t i = full_words * 64; i < len; ++i)
    if ((mask[i >> 6] >> (i & 63)) & 1u) total += values[i];
  return total;
}

void superset_scan_avx2(const std::uint64_t* sets, std::size_t count, std::size_t words,
                        const std::uint64_t* query, std::uint64_t* out) {
  for (std::size_t w = 0; w < (count + 63) / 64; ++w) out[w] = 0;
  if (words == 1) {
    const __m256i q = _mm256_set1_epi64x(static_cast<long long>(query[0]));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t y = 0;
    for (; y + 4 <= count; y += 4) {
      const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets + y));
      const __m256i missing = _mm256_andnot_si256(s, q);
      const __m256i ok = _mm256_cmpeq_epi64(missing, zero);
      const auto bits = static_cast<std::uint64_t>(_mm256_movemask_pd(_mm256_castsi256_pd(ok)));
      out[y >> 6] |= bits << (y & 63);
    }
    for (; y < count; ++y)
      if ((query[0] & ~sets[y]) == 0) out[y >> 6] |= std::uint64_t{1} << (y & 63);
    return;
  }
  for (std::size_t y = 0; y < count; ++y) {
    const std::uint64_t* s = sets + y * words;
    __m256i missing = _mm256_setzero_si256();
    std::size_t w = 0;
    for (; w + 4 <= words; w += 4) {
      const __m256i sv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s + w));
      const __m256i qv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(query + w));
      missing = _mm256_or_si256(missing, _mm256_andnot_si256(sv, qv));
    }
    bool ok = _mm256_testz_si256(missing, missing) != 0;
    for (; w < words && ok; ++w) ok = (query[w] & ~s[w]) == 0;
    if (ok) out[y >> 6] |= std::uint64_t{1} << (y & 63);
  }
}

}  // namespace

namespace detail {
const KernelTable kAvx2Table{gather_u8_avx2, masked_sum_i64_avx2, superset_scan_avx2};
}  // namespace detail

}  // namespace coxlat::kernels
