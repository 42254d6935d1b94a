#include "cuspgroup/kernels/mod_axpy.hpp"

#include <immintrin.h>

namespace cuspgroup::kernels {

// prod = c*x exactly; quot = floor(prod/q) may be off by one either way,
// which the two conditional corrections absorb.
__attribute__((target("avx2,fma"))) void submul_mod_avx2(double* y, const double* x, double c, std::size_t len,
                                                          const ModulusF64& m)
{
    const __m256d vq = _mm256_set1_pd(m.q);
    const __m256d vinv = _mm256_set1_pd(m.inv);
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d zero = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d vy = _mm256_loadu_pd(y + i);
        const __m256d prod = _mm256_mul_pd(vc, vx);
        const __m256d quot = _mm256_floor_pd(_mm256_mul_pd(prod, vinv));
        __m256d r = _mm256_fnmadd_pd(quot, vq, prod);
        r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vq));
        r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vq, _CMP_GE_OQ), vq));
        __m256d out = _mm256_sub_pd(vy, r);
        out = _mm256_add_pd(out, _mm256_and_pd(_mm256_cmp_pd(out, zero, _CMP_LT_OQ), vq));
        _mm256_storeu_pd(y + i, out);
    }
    if (i < len)
        submul_mod_scalar(y + i, x + i, c, len - i, m);
}

} // namespace cuspgroup::kernels
