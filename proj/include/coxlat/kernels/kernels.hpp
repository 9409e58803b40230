#pragma once

// Data-parallel inner loops with a scalar reference and SIMD variants.
//
// Every kernel has a portable scalar implementation that defines its
// semantics. Vector variants (AVX2 on x86-64) are compiled in their own
// translation units and chosen at runtime from the CPU feature bits; they must
// produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace coxlat::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  /// dst[i] = table[index[i]] for i < len. The table holds at most 256
  /// entries; every index must be < table_len.
  void (*gather_u8)(std::uint8_t* dst, const std::uint8_t* table, std::size_t table_len,
                    const std::uint8_t* index, std::size_t len);

  /// Sum of values[i] over the set bits i < len of mask (little-endian bit
  /// order within 64-bit words).
  std::int64_t (*masked_sum_i64)(const std::int64_t* values, const std::uint64_t* mask,
                                 std::size_t len);

  /// out bit y = (query is a subset of sets[y]) for y < count. Each set
  /// occupies `words` consecutive 64-bit words. out must hold
  /// ceil(count / 64) words; bits past count are cleared.
  void (*superset_scan)(const std::uint64_t* sets, std::size_t count, std::size_t words,
                        const std::uint64_t* query, std::uint64_t* out);
};

bool isa_available(Isa isa);
const KernelTable& table_for(Isa isa);
std::string_view isa_name(Isa isa);

/// Best available ISA unless overridden with force_isa.
Isa active_isa();
const KernelTable& active();
/// Pins the dispatch (tests and benchmarks). Throws std::invalid_argument if
/// the ISA is not available on this CPU.
void force_isa(Isa isa);
void reset_isa();

inline void gather_u8(std::uint8_t* dst, const std::uint8_t* table, std::size_t table_len,
                      const std::uint8_t* index, std::size_t len) {
  active().gather_u8(dst, table, table_len, index, len);
}

inline std::int64_t masked_sum_i64(const std::int64_t* values, const std::uint64_t* mask,
                                   std::size_t len) {
  return active().masked_sum_i64(values, mask, len);
}

inline void superset_scan(const std::uint64_t* sets, std::size_t count, std::size_t words,
                          const std::uint64_t* query, std::uint64_t* out) {
  active().superset_scan(sets, count, words, query, out);
}

namespace detail {
extern const KernelTable kScalarTable;
#if defined(COXLAT_HAVE_AVX2_KERNELS)
extern const KernelTable kAvx2Table;
#endif
}  // namespace detail

}  // namespace coxlat::kernels
