#include "coxlat/kernels/kernels.hpp"

namespace coxlat::kernels {
namespace {

void gather_u8_scalar(std::uint8_t* dst, const std::uint8_t* table, std::size_t /*table_len*/,
                      const std::uint8_t* index, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) dst[i] = table[index[i]];
}

std::int64_t masked_sum_i64_scalar(const std::int64_t* values, const std::uint64_t* mask,
                                   std::size_t len) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < len; ++i)
    if ((mask[i >> 6] >> (i & 63)) & 1u) acc += values[i];
  return acc;
}

void superset_scan_scalar(const std::uint64_t* sets, std::size_t count, std::size_t words,
                          const std::uint64_t* query, std::uint64_t* out) {
  for (std::size_t w = 0; w < (count + 63) / 64; ++w) out[w] = 0;
  for (std::size_t y = 0; y < count; ++y) {
    const std::uint64_t* s = sets + y * words;
    bool ok = true;
    for (std::size_t w = 0; w < words && ok; ++w) ok = (query[w] & ~s[w]) == 0;
    if (ok) out[y >> 6] |= std::uint64_t{1} << (y & 63);
  }
}

}  // namespace

namespace detail {
const KernelTable kScalarTable{gather_u8_scalar, masked_sum_i64_scalar, superset_scan_scalar};
}  // namespace detail

}  // namespace coxlat::kernels
