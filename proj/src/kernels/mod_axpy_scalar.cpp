#include "cuspgroup/kernels/mod_axpy.hpp"

namespace cuspgroup::kernels {

// Reference path in plain 64-bit integer arithmetic.
void submul_mod_scalar(double* y, const double* x, double c, std::size_t len, const ModulusF64& m)
{
    const auto q = static_cast<std::uint64_t>(m.q);
    const auto cc = static_cast<std::uint64_t>(c);
    for (std::size_t i = 0; i < len; ++i) {
        const std::uint64_t prod = cc * static_cast<std::uint64_t>(x[i]) % q;
        const std::uint64_t yi = static_cast<std::uint64_t>(y[i]);
        y[i] = static_cast<double>(yi >= prod ? yi - prod : yi + q - prod);
    }
}

} // namespace cuspgroup::kernels
