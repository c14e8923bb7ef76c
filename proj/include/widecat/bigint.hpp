#pragma once

// Unsigned arbitrary-precision integers.  The counting engine only needs
// addition, multiplication, comparison and decimal conversion, so this stays
// deliberately small: base 2^32 limbs, little-endian, no trailing zero limbs.

#include <cstdint>
#include <string>
#include <vector>

namespace widecat {

class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);

    static BigUint from_decimal(const std::string& s); // throws std::invalid_argument

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const; // throws std::overflow_error if too large

    BigUint& operator+=(const BigUint& o);
    BigUint operator+(const BigUint& o) const;
    BigUint operator*(const BigUint& o) const;
    BigUint& operator*=(const BigUint& o);

    BigUint& mul_u32(std::uint32_t m);
    // Exact division by a small divisor; throws std::invalid_argument on a
    // nonzero remainder or zero divisor.
    BigUint& divexact_u32(std::uint32_t divisor);

    int compare(const BigUint& o) const; // -1, 0, +1
    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUint& o) const { return !(*this == o); }
    bool operator<(const BigUint& o) const { return compare(o) < 0; }

    std::string to_string() const;

private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

} // namespace widecat
