// AVX2 kernel variants.  This translation unit is compiled with -mavx2 and
// must only be entered after a runtime cpu check (see kernels.cpp).

#include "widecat/kernels.hpp"

#if defined(WIDECAT_HAVE_AVX2)

#include <immintrin.h>

namespace widecat::kernels::avx2 {

namespace {

// Byte-nibble lookup popcount (Mula); returns four 64-bit partial sums.
inline __m256i popcount256(__m256i v)
{
    const __m256i lut = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    const __m256i cnt =
        _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::uint64_t hsum64(__m256i v)
{
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<std::uint64_t>(_mm_extract_epi64(s, 0)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

} // namespace

void bits_and(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(va, vb));
    }
    for (; i < nw; ++i)
        dst[i] = a[i] & b[i];
}

void bits_andnot(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // andnot computes ~first & second
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(vb, va));
    }
    for (; i < nw; ++i)
        dst[i] = a[i] & ~b[i];
}

void bits_or(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(va, vb));
    }
    for (; i < nw; ++i)
        dst[i] = a[i] | b[i];
}

std::uint64_t bits_popcount(const std::uint64_t* a, std::size_t nw)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, popcount256(v));
    }
    std::uint64_t n = hsum64(acc);
    for (; i < nw; ++i)
        n += static_cast<std::uint64_t>(__builtin_popcountll(a[i]));
    return n;
}

std::uint64_t bits_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(va, vb)));
    }
    std::uint64_t n = hsum64(acc);
    for (; i < nw; ++i)
        n += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return n;
}

bool bits_none(const std::uint64_t* a, std::size_t nw)
{
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        if (!_mm256_testz_si256(v, v))
            return false;
    }
    for (; i < nw; ++i)
        if (a[i] != 0)
            return false;
    return true;
}

namespace {

// Barrett reduction of eight lanes x < 2^31 to x mod p, p < 2^15.
// q = floor(x * M / 2^32) with M = floor(2^32 / p) satisfies q in {q*, q*-1},
// so one conditional subtract corrects the remainder.
inline __m256i barrett_mod(__m256i x, __m256i mv, __m256i pv)
{
    __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(x, mv), 32);
    __m256i q_odd = _mm256_srli_epi64(_mm256_mul_epu32(_mm256_srli_epi64(x, 32), mv), 32);
    __m256i q = _mm256_or_si256(q_even, _mm256_slli_epi64(q_odd, 32));
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, pv));
    // r < 2p < 2^16, so signed compare is safe
    __m256i lt = _mm256_cmpgt_epi32(pv, r);
    return _mm256_sub_epi32(r, _mm256_andnot_si256(lt, pv));
}

} // namespace

void row_axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t len, std::uint32_t p)
{
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const std::uint32_t m = static_cast<std::uint32_t>((static_cast<std::uint64_t>(1) << 32) / p);
    const __m256i mv = _mm256_set1_epi32(static_cast<int>(m));
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        // d + c*s < p + p^2 < 2^31 for p < 2^15
        __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, cv));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett_mod(x, mv, pv));
    }
    for (; i < len; ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

void row_scale(std::uint32_t* dst, std::uint32_t c, std::size_t len, std::uint32_t p)
{
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const std::uint32_t m = static_cast<std::uint32_t>((static_cast<std::uint64_t>(1) << 32) / p);
    const __m256i mv = _mm256_set1_epi32(static_cast<int>(m));
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i x = _mm256_mullo_epi32(d, cv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett_mod(x, mv, pv));
    }
    for (; i < len; ++i)
        dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * dst[i] % p);
}

} // namespace widecat::kernels::avx2

#endif // WIDECAT_HAVE_AVX2
