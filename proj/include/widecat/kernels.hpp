#pragma once

// Low-level data-parallel kernels used by the counting engine (64-bit word
// bitset operations) and by the mod-p elimination code (residue row
// operations).  Every kernel has a scalar reference implementation; on x86
// an AVX2 variant is compiled into a separate translation unit and selected
// at runtime, on aarch64 a NEON variant takes that role.  The dispatched
// entry points below always agree with widecat::kernels::scalar; the test
// suite checks this on random inputs.

#include <cstddef>
#include <cstdint>

namespace widecat::kernels {

enum class Backend { scalar, avx2, neon };

const char* backend_name(Backend b);
bool backend_supported(Backend b);
Backend active_backend();
// Test hook. Throws std::invalid_argument if the backend is unsupported here.
void force_backend(Backend b);

// Word kernels. All arrays hold nw 64-bit words; dst may alias a or b.
void bits_and(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
void bits_andnot(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
void bits_or(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
std::uint64_t bits_popcount(const std::uint64_t* a, std::size_t nw);
std::uint64_t bits_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
bool bits_none(const std::uint64_t* a, std::size_t nw);

// Residue row kernels mod a prime p < 2^31; entries are in [0, p).
// row_axpy: dst[i] = (dst[i] + c * src[i]) mod p.  row_scale: dst[i] = (c * dst[i]) mod p.
void row_axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t len, std::uint32_t p);
void row_scale(std::uint32_t* dst, std::uint32_t c, std::size_t len, std::uint32_t p);

namespace scalar {
void bits_and(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
void bits_andnot(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
void bits_or(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
std::uint64_t bits_popcount(const std::uint64_t* a, std::size_t nw);
std::uint64_t bits_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
bool bits_none(const std::uint64_t* a, std::size_t nw);
void row_axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t len, std::uint32_t p);
void row_scale(std::uint32_t* dst, std::uint32_t c, std::size_t len, std::uint32_t p);
} // namespace scalar

#if defined(WIDECAT_HAVE_AVX2)
namespace avx2 {
void bits_and(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
void bits_andnot(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
void bits_or(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
std::uint64_t bits_popcount(const std::uint64_t* a, std::size_t nw);
std::uint64_t bits_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
bool bits_none(const std::uint64_t* a, std::size_t nw);
// Valid for p < 2^15 only (products must fit one 32-bit lane); callers of the
// dispatched row kernels never route larger characteristics here.
void row_axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t len, std::uint32_t p);
void row_scale(std::uint32_t* dst, std::uint32_t c, std::size_t len, std::uint32_t p);
} // namespace avx2
#endif

#if defined(WIDECAT_HAVE_NEON)
namespace neon {
void bits_and(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
void bits_andnot(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
void bits_or(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
std::uint64_t bits_popcount(const std::uint64_t* a, std::size_t nw);
std::uint64_t bits_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
bool bits_none(const std::uint64_t* a, std::size_t nw);
} // namespace neon
#endif

} // namespace widecat::kernels
