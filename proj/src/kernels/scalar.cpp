#include "kernels_impl.hpp"

namespace hl::kernels::detail {

void axpy_scalar(Scalar* y, const Scalar* x, std::size_t n, Scalar c, std::uint32_t p) {
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = static_cast<Scalar>((y[i] + cc * x[i]) % p);
  }
}

void scale_scalar(Scalar* y, std::size_t n, Scalar c, std::uint32_t p) {
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = static_cast<Scalar>(cc * y[i] % p);
  }
}

std::size_t first_nonzero_scalar(const Scalar* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != 0) return i;
  }
  return n;
}

}  // namespace hl::kernels::detail
