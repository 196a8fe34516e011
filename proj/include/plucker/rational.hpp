#ifndef PLUCKER_RATIONAL_HPP
#define PLUCKER_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace plucker {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rat {
public:
    Rat() = default;
    Rat(long v) : v_(v) {}
    Rat(int v) : v_(static_cast<long>(v)) {}
    Rat(const BigInt& v) : v_(v) {}
    Rat(const BigInt& num, const BigInt& den);
    Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

    /// Parses "p", "-p" or "p/q".
    static Rat from_string(std::string_view text);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat inverse() const;
    Rat abs() const;
    Rat pow(unsigned e) const;

    /// Renders as "p/q", or "p" when the denominator is 1.
    std::string str() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const { Rat r; r.v_ = -v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// (-1)^k for any integer k.
inline long sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

BigInt binomial(unsigned long n, unsigned long k);

} // namespace plucker

#endif
