// NEON variants for AArch64, where Advanced SIMD is part of the baseline ISA.

#include "kernels_impl.hpp"

#if defined(HILBERTLAB_HAVE_NEON_KERNELS)

#include <arm_neon.h>

namespace hl::kernels::detail {

namespace {

// Same float-quotient reduction as the AVX2 path; valid for t < 2^31, p < 2^15.
inline uint32x4_t reduce_mod(uint32x4_t t, uint32x4_t vp, float32x4_t vinv) {
  const uint32x4_t q = vcvtq_u32_f32(vmulq_f32(vcvtq_f32_u32(t), vinv));
  int32x4_t r = vreinterpretq_s32_u32(vmlsq_u32(t, q, vp));
  const int32x4_t sp = vreinterpretq_s32_u32(vp);
  r = vaddq_s32(r, vandq_s32(vreinterpretq_s32_u32(vcltzq_s32(r)), sp));
  r = vsubq_s32(r, vandq_s32(vreinterpretq_s32_u32(vcgeq_s32(r, sp)), sp));
  return vreinterpretq_u32_s32(r);
}

}  // namespace

void axpy_neon(Scalar* y, const Scalar* x, std::size_t n, Scalar c, std::uint32_t p) {
  const uint32x4_t vc = vdupq_n_u32(c);
  const uint32x4_t vp = vdupq_n_u32(p);
  const float32x4_t vinv = vdupq_n_f32(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t t = vmlaq_u32(vld1q_u32(y + i), vld1q_u32(x + i), vc);
    vst1q_u32(y + i, reduce_mod(t, vp, vinv));
  }
  if (i < n) axpy_scalar(y + i, x + i, n - i, c, p);
}

void scale_neon(Scalar* y, std::size_t n, Scalar c, std::uint32_t p) {
  const uint32x4_t vc = vdupq_n_u32(c);
  const uint32x4_t vp = vdupq_n_u32(p);
  const float32x4_t vinv = vdupq_n_f32(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vst1q_u32(y + i, reduce_mod(vmulq_u32(vld1q_u32(y + i), vc), vp, vinv));
  }
  if (i < n) scale_scalar(y + i, n - i, c, p);
}

std::size_t first_nonzero_neon(const Scalar* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    if (vmaxvq_u32(vld1q_u32(x + i)) != 0) break;
  }
  return i + first_nonzero_scalar(x + i, n - i);
}

}  // namespace hl::kernels::detail

#endif
