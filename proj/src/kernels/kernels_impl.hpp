#pragma once

#include <cstddef>
#include <cstdint>

#include "hilbertlab/field.hpp"

namespace hl::kernels::detail {

void axpy_scalar(Scalar* y, const Scalar* x, std::size_t n, Scalar c, std::uint32_t p);
void scale_scalar(Scalar* y, std::size_t n, Scalar c, std::uint32_t p);
std::size_t first_nonzero_scalar(const Scalar* x, std::size_t n);

#if defined(__x86_64__) || defined(__i386__)
#define HILBERTLAB_HAVE_AVX2_KERNELS 1
void axpy_avx2(Scalar* y, const Scalar* x, std::size_t n, Scalar c, std::uint32_t p);
void scale_avx2(Scalar* y, std::size_t n, Scalar c, std::uint32_t p);
std::size_t first_nonzero_avx2(const Scalar* x, std::size_t n);
#endif

#if defined(__aarch64__)
#define HILBERTLAB_HAVE_NEON_KERNELS 1
void axpy_neon(Scalar* y, const Scalar* x, std::size_t n, Scalar c, std::uint32_t p);
void scale_neon(Scalar* y, std::size_t n, Scalar c, std::uint32_t p);
std::size_t first_nonzero_neon(const Scalar* x, std::size_t n);
#endif

}  // namespace hl::kernels::detail
