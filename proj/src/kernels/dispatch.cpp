#include <atomic>
#include <cstdlib>
#include <string_view>

#include "hilbertlab/kernels.hpp"
#include "kernels_impl.hpp"

namespace hl::kernels {

namespace {

const Table kScalar{"scalar", detail::axpy_scalar, detail::scale_scalar, detail::first_nonzero_scalar};

#if defined(HILBERTLAB_HAVE_AVX2_KERNELS)
const Table kAvx2{"avx2", detail::axpy_avx2, detail::scale_avx2, detail::first_nonzero_avx2};
#endif

#if defined(HILBERTLAB_HAVE_NEON_KERNELS)
const Table kNeon{"neon", detail::axpy_neon, detail::scale_neon, detail::first_nonzero_neon};
#endif

const Table* best_available() {
  if (const Table* t = avx2_table()) return t;
  if (const Table* t = neon_table()) return t;
  return &kScalar;
}

const Table* initial_selection() {
  const char* env = std::getenv("HILBERTLAB_KERNELS");
  const std::string_view want = env ? env : "auto";
  if (want == "scalar") return &kScalar;
  if (want == "avx2" && avx2_table()) return avx2_table();
  if (want == "neon" && neon_table()) return neon_table();
  return best_available();
}

std::atomic<const Table*>& selection() {
  static std::atomic<const Table*> sel{initial_selection()};
  return sel;
}

}  // namespace

const Table& scalar_table() { return kScalar; }

const Table* avx2_table() {
#if defined(HILBERTLAB_HAVE_AVX2_KERNELS)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const Table* neon_table() {
#if defined(HILBERTLAB_HAVE_NEON_KERNELS)
  return &kNeon;
#else
  return nullptr;
#endif
}

const Table& active() { return *selection().load(std::memory_order_relaxed); }

void set_active(const Table& table) { selection().store(&table, std::memory_order_relaxed); }

}  // namespace hl::kernels
