#include "widecat/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace widecat {

BigUint::BigUint(std::uint64_t v)
{
    if (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32)
            limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
}

BigUint BigUint::from_decimal(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty decimal string");
    BigUint r;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("bad decimal digit");
        r.mul_u32(10);
        r += BigUint(static_cast<std::uint64_t>(ch - '0'));
    }
    return r;
}

std::uint64_t BigUint::to_u64() const
{
    if (!fits_u64())
        throw std::overflow_error("BigUint does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() >= 1)
        v = limbs_[0];
    if (limbs_.size() == 2)
        v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return v;
}

void BigUint::trim()
{
    while (!limbs_.empty() && limbs_.back() == 0)
        limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& o)
{
    const std::size_t n = std::max(limbs_.size(), o.limbs_.size());
    limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry)
        limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint BigUint::operator+(const BigUint& o) const
{
    BigUint r = *this;
    r += o;
    return r;
}

BigUint BigUint::operator*(const BigUint& o) const
{
    if (is_zero() || o.is_zero())
        return BigUint();
    BigUint r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] + carry +
                                static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j];
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigUint& BigUint::operator*=(const BigUint& o)
{
    *this = *this * o;
    return *this;
}

BigUint& BigUint::mul_u32(std::uint32_t m)
{
    if (m == 0) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
        limb = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry)
        limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::divexact_u32(std::uint32_t divisor)
{
    if (divisor == 0)
        throw std::invalid_argument("division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    if (rem != 0)
        throw std::invalid_argument("inexact division");
    trim();
    return *this;
}

int BigUint::compare(const BigUint& o) const
{
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i])
            return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::string BigUint::to_string() const
{
    if (is_zero())
        return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string out;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0)
            work.pop_back();
        for (int k = 0; k < 9; ++k) {
            out.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0')
        out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace widecat
