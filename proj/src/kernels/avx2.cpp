// AVX2 variants. Compiled with a function-level target attribute so the rest
// of the library stays baseline x86-64; only called after CPU detection.

#include "kernels_impl.hpp"

#if defined(HILBERTLAB_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#define HL_AVX2 __attribute__((target("avx2")))

namespace hl::kernels::detail {

namespace {

// t < 2^31 and p < 2^15: the float quotient is within one of floor(t / p),
// so two conditional corrections land the remainder in [0, p).
HL_AVX2 inline __m256i reduce_mod(__m256i t, __m256i vp, __m256 vinv) {
  const __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(t), vinv));
  __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, vp));
  const __m256i zero = _mm256_setzero_si256();
  r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), vp));
  r = _mm256_sub_epi32(r, _mm256_andnot_si256(_mm256_cmpgt_epi32(vp, r), vp));
  return r;
}

}  // namespace

HL_AVX2 void axpy_avx2(Scalar* y, const Scalar* x, std::size_t n, Scalar c, std::uint32_t p) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256 vinv = _mm256_set1_ps(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    const __m256i t = _mm256_add_epi32(vy, _mm256_mullo_epi32(vx, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), reduce_mod(t, vp, vinv));
  }
  if (i < n) axpy_scalar(y + i, x + i, n - i, c, p);
}

HL_AVX2 void scale_avx2(Scalar* y, std::size_t n, Scalar c, std::uint32_t p) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256 vinv = _mm256_set1_ps(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i),
                        reduce_mod(_mm256_mullo_epi32(vy, vc), vp, vinv));
  }
  if (i < n) scale_scalar(y + i, n - i, c, p);
}

HL_AVX2 std::size_t first_nonzero_avx2(const Scalar* x, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const unsigned zmask =
        static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(v, zero))));
    if (zmask != 0xffu) return i + static_cast<std::size_t>(__builtin_ctz(~zmask & 0xffu));
  }
  return i + first_nonzero_scalar(x + i, n - i);
}

}  // namespace hl::kernels::detail

#endif
