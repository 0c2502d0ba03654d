#ifndef NECKLICAL_COEFFICIENTS_HPP
#define NECKLICAL_COEFFICIENTS_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace necklical {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/**
 * Element of Z/p with the prime carried at runtime. A modulus of 0 marks a
 * plain integer constant (as produced by `ModP(1)` in generic code); it takes
 * the modulus of whatever it is combined with.
 */
class ModP
{
  public:
    ModP() = default;
    ModP(long long v) : value_(v) {}   // NOLINT(google-explicit-constructor)
    ModP(long long v, std::uint64_t p) : modulus_(p) { value_ = reduce(v, p); }

    [[nodiscard]] std::uint64_t modulus() const { return modulus_; }
    [[nodiscard]] long long value() const { return value_; }

    [[nodiscard]] bool is_zero() const
    {
        return modulus_ == 0 ? value_ == 0 : value_ % static_cast<long long>(modulus_) == 0;
    }

    friend ModP operator+(const ModP& a, const ModP& b)
    {
        const std::uint64_t p = common(a, b);
        return p == 0 ? ModP(a.value_ + b.value_) : ModP(reduce(a.value_, p) + reduce(b.value_, p), p);
    }
    friend ModP operator-(const ModP& a, const ModP& b)
    {
        const std::uint64_t p = common(a, b);
        return p == 0 ? ModP(a.value_ - b.value_) : ModP(reduce(a.value_, p) - reduce(b.value_, p), p);
    }
    friend ModP operator*(const ModP& a, const ModP& b)
    {
        const std::uint64_t p = common(a, b);
        if (p == 0)
            return ModP(a.value_ * b.value_);
        const auto x = static_cast<unsigned __int128>(reduce(a.value_, p)) * reduce(b.value_, p);
        return ModP(static_cast<long long>(x % p), p);
    }
    ModP operator-() const { return modulus_ == 0 ? ModP(-value_) : ModP(-value_, modulus_); }
    ModP& operator+=(const ModP& b) { return *this = *this + b; }
    ModP& operator-=(const ModP& b) { return *this = *this - b; }
    ModP& operator*=(const ModP& b) { return *this = *this * b; }

    /// Multiplicative inverse; requires a prime modulus and a nonzero value.
    [[nodiscard]] ModP inverse() const
    {
        if (modulus_ == 0 || is_zero())
            throw std::domain_error("ModP: no inverse");
        // Fermat
        ModP base = *this;
        ModP out(1, modulus_);
        for (std::uint64_t e = modulus_ - 2; e > 0; e >>= 1)
        {
            if (e & 1)
                out *= base;
            base *= base;
        }
        return out;
    }

    friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }

    friend bool operator==(const ModP& a, const ModP& b) { return (a - b).is_zero(); }
    friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const ModP& a)
    {
        return os << (a.modulus_ == 0 ? a.value_ : reduce(a.value_, a.modulus_));
    }

  private:
    static long long reduce(long long v, std::uint64_t p)
    {
        const auto m = static_cast<long long>(p);
        v %= m;
        return v < 0 ? v + m : v;
    }

    static std::uint64_t common(const ModP& a, const ModP& b)
    {
        if (a.modulus_ != 0 && b.modulus_ != 0 && a.modulus_ != b.modulus_)
            throw std::invalid_argument("ModP: mixing different moduli");
        return a.modulus_ != 0 ? a.modulus_ : b.modulus_;
    }

    long long value_ = 0;
    std::uint64_t modulus_ = 0;
};

template <class R>
[[nodiscard]] inline bool is_zero(const R& x)
{
    return x == R(0);
}

[[nodiscard]] inline bool is_zero(const ModP& x)
{
    return x.is_zero();
}

[[nodiscard]] bool is_prime(std::uint64_t p);

}   // namespace necklical

#endif
