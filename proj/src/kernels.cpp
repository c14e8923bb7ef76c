#include "widecat/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <stdexcept>

namespace widecat::kernels {

namespace scalar {

void bits_and(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    for (std::size_t i = 0; i < nw; ++i)
        dst[i] = a[i] & b[i];
}

void bits_andnot(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    for (std::size_t i = 0; i < nw; ++i)
        dst[i] = a[i] & ~b[i];
}

void bits_or(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    for (std::size_t i = 0; i < nw; ++i)
        dst[i] = a[i] | b[i];
}

std::uint64_t bits_popcount(const std::uint64_t* a, std::size_t nw)
{
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < nw; ++i)
        n += static_cast<std::uint64_t>(std::popcount(a[i]));
    return n;
}

std::uint64_t bits_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < nw; ++i)
        n += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return n;
}

bool bits_none(const std::uint64_t* a, std::size_t nw)
{
    for (std::size_t i = 0; i < nw; ++i)
        if (a[i] != 0)
            return false;
    return true;
}

void row_axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t len, std::uint32_t p)
{
    for (std::size_t i = 0; i < len; ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

void row_scale(std::uint32_t* dst, std::uint32_t c, std::size_t len, std::uint32_t p)
{
    for (std::size_t i = 0; i < len; ++i)
        dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * dst[i] % p);
}

} // namespace scalar

namespace {

struct Ops {
    void (*bits_and)(std::uint64_t*, const std::uint64_t*, const std::uint64_t*, std::size_t);
    void (*bits_andnot)(std::uint64_t*, const std::uint64_t*, const std::uint64_t*, std::size_t);
    void (*bits_or)(std::uint64_t*, const std::uint64_t*, const std::uint64_t*, std::size_t);
    std::uint64_t (*bits_popcount)(const std::uint64_t*, std::size_t);
    std::uint64_t (*bits_and_popcount)(const std::uint64_t*, const std::uint64_t*, std::size_t);
    bool (*bits_none)(const std::uint64_t*, std::size_t);
};

constexpr Ops kScalarOps = {
    &scalar::bits_and,     &scalar::bits_andnot,       &scalar::bits_or,
    &scalar::bits_popcount, &scalar::bits_and_popcount, &scalar::bits_none,
};

#if defined(WIDECAT_HAVE_AVX2)
constexpr Ops kAvx2Ops = {
    &avx2::bits_and,     &avx2::bits_andnot,       &avx2::bits_or,
    &avx2::bits_popcount, &avx2::bits_and_popcount, &avx2::bits_none,
};
#endif
#if defined(WIDECAT_HAVE_NEON)
constexpr Ops kNeonOps = {
    &neon::bits_and,     &neon::bits_andnot,       &neon::bits_or,
    &neon::bits_popcount, &neon::bits_and_popcount, &neon::bits_none,
};
#endif

std::atomic<const Ops*> g_ops{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};
std::once_flag g_init_flag;

Backend detect_backend()
{
    const char* env = std::getenv("WIDECAT_SIMD");
    if (env && std::strcmp(env, "scalar") == 0)
        return Backend::scalar;
#if defined(WIDECAT_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2"))
        return Backend::avx2;
#endif
#if defined(WIDECAT_HAVE_NEON)
    return Backend::neon;
#endif
    return Backend::scalar;
}

void install(Backend b)
{
    switch (b) {
    case Backend::scalar:
        g_ops.store(&kScalarOps);
        break;
#if defined(WIDECAT_HAVE_AVX2)
    case Backend::avx2:
        g_ops.store(&kAvx2Ops);
        break;
#endif
#if defined(WIDECAT_HAVE_NEON)
    case Backend::neon:
        g_ops.store(&kNeonOps);
        break;
#endif
    default:
        g_ops.store(&kScalarOps);
        b = Backend::scalar;
        break;
    }
    g_backend.store(b);
}

const Ops& ops()
{
    const Ops* o = g_ops.load(std::memory_order_acquire);
    if (o == nullptr) {
        std::call_once(g_init_flag, [] { install(detect_backend()); });
        o = g_ops.load(std::memory_order_acquire);
    }
    return *o;
}

} // namespace

const char* backend_name(Backend b)
{
    switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
    }
    return "?";
}

bool backend_supported(Backend b)
{
    switch (b) {
    case Backend::scalar:
        return true;
    case Backend::avx2:
#if defined(WIDECAT_HAVE_AVX2)
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    case Backend::neon:
#if defined(WIDECAT_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Backend active_backend()
{
    ops();
    return g_backend.load();
}

void force_backend(Backend b)
{
    if (!backend_supported(b))
        throw std::invalid_argument("unsupported kernel backend on this host");
    ops(); // make sure one-time init has run before overriding
    install(b);
}

void bits_and(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    ops().bits_and(dst, a, b, nw);
}

void bits_andnot(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    ops().bits_andnot(dst, a, b, nw);
}

void bits_or(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    ops().bits_or(dst, a, b, nw);
}

std::uint64_t bits_popcount(const std::uint64_t* a, std::size_t nw)
{
    return ops().bits_popcount(a, nw);
}

std::uint64_t bits_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw)
{
    return ops().bits_and_popcount(a, b, nw);
}

bool bits_none(const std::uint64_t* a, std::size_t nw)
{
    return ops().bits_none(a, nw);
}

void row_axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t len, std::uint32_t p)
{
#if defined(WIDECAT_HAVE_AVX2)
    ops();
    if (p < (1u << 15) && g_backend.load() == Backend::avx2) {
        avx2::row_axpy(dst, src, c, len, p);
        return;
    }
#endif
    scalar::row_axpy(dst, src, c, len, p);
}

void row_scale(std::uint32_t* dst, std::uint32_t c, std::size_t len, std::uint32_t p)
{
#if defined(WIDECAT_HAVE_AVX2)
    ops();
    if (p < (1u << 15) && g_backend.load() == Backend::avx2) {
        avx2::row_scale(dst, c, len, p);
        return;
    }
#endif
    scalar::row_scale(dst, c, len, p);
}

} // namespace widecat::kernels
