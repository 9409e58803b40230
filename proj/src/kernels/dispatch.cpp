#include <atomic>
#include <stdexcept>

#include "coxlat/kernels/kernels.hpp"

namespace coxlat::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(COXLAT_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() { return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar; }

std::atomic<const KernelTable*> g_active{nullptr};
std::atomic<Isa> g_isa{Isa::Scalar};

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

const KernelTable& table_for(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument("instruction set not available on this CPU");
#if defined(COXLAT_HAVE_AVX2_KERNELS)
  if (isa == Isa::Avx2) return detail::kAvx2Table;
#endif
  return detail::kScalarTable;
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    const Isa isa = detect();
    t = &table_for(isa);
    g_isa.store(isa, std::memory_order_relaxed);
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

Isa active_isa() {
  active();
  return g_isa.load(std::memory_order_relaxed);
}

void force_isa(Isa isa) {
  const KernelTable* t = &table_for(isa);
  g_isa.store(isa, std::memory_order_relaxed);
  g_active.store(t, std::memory_order_release);
}

void reset_isa() { g_active.store(nullptr, std::memory_order_release); }

}  // namespace coxlat::kernels
