// NEON kernel variants for aarch64 builds.

#include "widecat/kernels.hpp"

#if defined(WIDECAT_HAVE_NEON)

#include <arm_neon.h>

namespace widecat::kernels::neon {

void bits_and(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    std::size_t i = 0;
    for (; i + 2 <= nw; i += 2)
        vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < nw; ++i)
        dst[i] = a[i] & b[i];
}

void bits_andnot(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    std::size_t i = 0;
    for (; i + 2 <= nw; i += 2)
        vst1q_u64(dst + i, vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < nw; ++i)
        dst[i] = a[i] & ~b[i];
}

void bits_or(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    std::size_t i = 0;
    for (; i + 2 <= nw; i += 2)
        vst1q_u64(dst + i, vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < nw; ++i)
        dst[i] = a[i] | b[i];
}

std::uint64_t bits_popcount(const std::uint64_t* a, std::size_t nw)
{
    std::uint64_t n = 0;
    std::size_t i = 0;
    for (; i + 2 <= nw; i += 2) {
        uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(a + i)));
        n += vaddvq_u8(bytes);
    }
    for (; i < nw; ++i)
        n += static_cast<std::uint64_t>(__builtin_popcountll(a[i]));
    return n;
}

std::uint64_t bits_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    std::uint64_t n = 0;
    std::size_t i = 0;
    for (; i + 2 <= nw; i += 2) {
        uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        n += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
    }
    for (; i < nw; ++i)
        n += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return n;
}

bool bits_none(const std::uint64_t* a, std::size_t nw)
{
    std::size_t i = 0;
    for (; i + 2 <= nw; i += 2) {
        uint64x2_t v = vld1q_u64(a + i);
        if ((vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0)
            return false;
    }
    for (; i < nw; ++i)
        if (a[i] != 0)
            return false;
    return true;
}

} // namespace widecat::kernels::neon

#endif // WIDECAT_HAVE_NEON
