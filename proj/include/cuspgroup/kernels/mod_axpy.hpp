#pragma once

// Row-update kernels for Gaussian elimination over Z/qZ.
//
// Residues live in doubles so one kernel serves both the scalar reference
// and the AVX2 path. Every q handled here is below 2^26, so the product of
// two residues is below 2^52 and therefore exact in binary64.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cuspgroup::kernels {

inline constexpr std::uint32_t kMaxKernelModulus = 1u << 26;

struct ModulusF64 {
    double q;
    double inv; // 1/q rounded; only used for quotient estimates

    explicit ModulusF64(std::uint32_t modulus) : q(static_cast<double>(modulus)), inv(1.0 / static_cast<double>(modulus)) {}
};

/// y[i] <- (y[i] - c * x[i]) mod q for i < len; c, x[i], y[i] in [0, q).
using SubmulFn = void (*)(double* y, const double* x, double c, std::size_t len, const ModulusF64& m);

void submul_mod_scalar(double* y, const double* x, double c, std::size_t len, const ModulusF64& m);

#if defined(__x86_64__) || defined(__i386__)
#define CUSPGROUP_HAVE_AVX2_KERNEL 1
void submul_mod_avx2(double* y, const double* x, double c, std::size_t len, const ModulusF64& m);
#endif

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

bool isa_supported(Isa isa);

/// Widest supported ISA. Setting CUSPGROUP_FORCE_SCALAR=1 in the environment
/// pins the scalar path.
Isa best_isa();

/// Throws std::invalid_argument if the ISA is not supported on this CPU.
SubmulFn submul_kernel(Isa isa);

} // namespace cuspgroup::kernels
