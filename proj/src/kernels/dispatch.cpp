#include "cuspgroup/kernels/mod_axpy.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace cuspgroup::kernels {

std::string_view to_string(Isa isa)
{
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa)
{
    switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#ifdef CUSPGROUP_HAVE_AVX2_KERNEL
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

Isa best_isa()
{
    static const Isa chosen = [] {
        const char* force = std::getenv("CUSPGROUP_FORCE_SCALAR");
        if (force != nullptr && std::strcmp(force, "0") != 0 && *force != '\0')
            return Isa::Scalar;
        return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    }();
    return chosen;
}

SubmulFn submul_kernel(Isa isa)
{
    if (!isa_supported(isa))
        throw std::invalid_argument("ISA " + std::string(to_string(isa)) + " not supported on this CPU");
    switch (isa) {
    case Isa::Scalar: return &submul_mod_scalar;
    case Isa::Avx2:
#ifdef CUSPGROUP_HAVE_AVX2_KERNEL
        return &submul_mod_avx2;
#else
        break;
#endif
    }
    return &submul_mod_scalar;
}

} // namespace cuspgroup::kernels
