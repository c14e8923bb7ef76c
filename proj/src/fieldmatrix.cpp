#include "widecat/fieldmatrix.hpp"

#include "widecat/kernels.hpp"

#include <stdexcept>

namespace widecat {

bool is_prime_u32(std::uint32_t p)
{
    if (p < 2)
        return false;
    if (p % 2 == 0)
        return p == 2;
    for (std::uint32_t f = 3; static_cast<std::uint64_t>(f) * f <= p; f += 2)
        if (p % f == 0)
            return false;
    return true;
}

Fp::Fp(std::uint32_t prime) : p(prime)
{
    if (!is_prime_u32(p) || p >= (std::uint32_t{1} << 31))
        throw std::invalid_argument("field characteristic must be a prime below 2^31");
}

std::uint32_t Fp::reduce(long long v) const
{
    long long r = v % static_cast<long long>(p);
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t Fp::inv(std::uint32_t a) const
{
    if (a == 0)
        throw std::invalid_argument("inverse of zero");
    // extended Euclid
    long long t = 0, new_t = 1;
    long long r = p, new_r = a;
    while (new_r != 0) {
        const long long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0)
        t += p;
    return static_cast<std::uint32_t>(t);
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0)
{
}

FieldMatrix FieldMatrix::identity(std::size_t n, std::uint32_t p)
{
    FieldMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

FieldMatrix FieldMatrix::from(std::size_t rows, std::size_t cols, std::uint32_t p,
                              const std::vector<long long>& entries)
{
    if (entries.size() != rows * cols)
        throw std::invalid_argument("entry count does not match the shape");
    FieldMatrix m(rows, cols, p);
    const Fp f(p);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.a_[i] = f.reduce(entries[i]);
    return m;
}

FieldMatrix FieldMatrix::mul(const FieldMatrix& o) const
{
    if (cols_ != o.rows_ || p_ != o.p_)
        throw std::invalid_argument("matrix shapes/fields do not match for multiplication");
    FieldMatrix r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint32_t c = at(i, k);
            if (c != 0)
                kernels::row_axpy(r.row(i), o.row(k), c, o.cols_, p_);
        }
    }
    return r;
}

bool FieldMatrix::is_zero() const
{
    for (std::uint32_t v : a_)
        if (v != 0)
            return false;
    return true;
}

namespace {

// In-place row echelon; returns pivot columns (one per eliminated row).
std::vector<std::size_t> echelonize(FieldMatrix& m)
{
    const Fp f(m.characteristic());
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m.at(pr, c) == 0)
            ++pr;
        if (pr == m.rows())
            continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(pr, j), m.at(r, j));
        const std::uint32_t piv_inv = f.inv(m.at(r, c));
        if (piv_inv != 1)
            kernels::row_scale(m.row(r), piv_inv, m.cols(), m.characteristic());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r)
                continue;
            const std::uint32_t v = m.at(i, c);
            if (v != 0)
                kernels::row_axpy(m.row(i), m.row(r), f.neg(v), m.cols(), m.characteristic());
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(FieldMatrix m)
{
    return echelonize(m).size();
}

FieldMatrix kernel_basis(const FieldMatrix& m)
{
    FieldMatrix e = m;
    const auto pivots = echelonize(e);
    const Fp f(m.characteristic());

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;

    const std::size_t dim = m.cols() - pivots.size();
    FieldMatrix basis(dim, m.cols(), m.characteristic());
    std::size_t out = 0;
    for (std::size_t free_c = 0; free_c < m.cols(); ++free_c) {
        if (is_pivot[free_c])
            continue;
        basis.at(out, free_c) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis.at(out, pivots[i]) = f.neg(e.at(i, free_c));
        ++out;
    }
    return basis;
}

std::optional<std::vector<std::uint32_t>> solve_row_combination(const FieldMatrix& basis_rows,
                                                                const std::vector<std::uint32_t>& target)
{
    if (target.size() != basis_rows.cols() && !(basis_rows.rows() == 0 && target.empty()))
        throw std::invalid_argument("target length does not match the basis width");
    const std::uint32_t p = basis_rows.characteristic();
    const std::size_t k = basis_rows.rows();
    const std::size_t n = basis_rows.cols();

    // Augmented system B^T c = target.
    FieldMatrix sys(n, k + 1, p);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            sys.at(i, j) = basis_rows.at(j, i);
        sys.at(i, k) = target[i];
    }
    const auto pivots = echelonize(sys);
    std::vector<std::uint32_t> coeffs(k, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == k)
            return std::nullopt; // inconsistent
        coeffs[pivots[r]] = sys.at(r, k);
    }
    return coeffs;
}

} // namespace widecat
