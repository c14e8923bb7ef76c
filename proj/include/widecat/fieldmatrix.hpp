#pragma once

// Dense matrices over a prime field Z/p with exact elimination.  Row
// operations go through the kernels module so the mod-p inner loops share
// the scalar/SIMD dispatch.

#include <cstdint>
#include <optional>
#include <vector>

namespace widecat {

inline constexpr std::uint32_t kDefaultFieldChar = 32003;

bool is_prime_u32(std::uint32_t p);

// Arithmetic in Z/p for a fixed prime p < 2^31.
struct Fp {
    std::uint32_t p;

    explicit Fp(std::uint32_t prime);

    std::uint32_t reduce(long long v) const;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t inv(std::uint32_t a) const; // throws on a == 0
};

class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static FieldMatrix identity(std::size_t n, std::uint32_t p);
    // Entries may be any integers; they are reduced mod p.
    static FieldMatrix from(std::size_t rows, std::size_t cols, std::uint32_t p,
                            const std::vector<long long>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t characteristic() const { return p_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const std::uint32_t* row(std::size_t r) const { return a_.data() + r * cols_; }
    std::uint32_t* row(std::size_t r) { return a_.data() + r * cols_; }

    FieldMatrix mul(const FieldMatrix& o) const;
    bool is_zero() const;

    bool operator==(const FieldMatrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t p_ = kDefaultFieldChar;
    std::vector<std::uint32_t> a_;
};

std::size_t rank(FieldMatrix m); // by value; eliminates in place

// Rows of the result form a basis of { v : m v = 0 }.
FieldMatrix kernel_basis(const FieldMatrix& m);

// Coefficients c with sum_i c_i * basis_rows[i] == target, if the target
// lies in the row span.  Used to express composed morphisms in a solved
// hom-space basis.
std::optional<std::vector<std::uint32_t>> solve_row_combination(const FieldMatrix& basis_rows,
                                                                const std::vector<std::uint32_t>& target);

} // namespace widecat
