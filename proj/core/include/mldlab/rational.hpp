#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mldlab {

/// Exact rational number, always in lowest terms with positive denominator.
/// Arbitrary precision throughout; there is no floating-point fallback.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(static_cast<long>(n)), den_(1) {}
    Rational(long long num, long long den);
    Rational(mpz_class num, mpz_class den);

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    std::strong_ordering operator<=>(const Rational& o) const;

    /// "12/13", "-1/2", or "3" when integral. parse() accepts exactly these
    /// shapes; parse(str(x)) == x always.
    std::string str() const;
    static std::optional<Rational> parse(std::string_view text);

private:
    void normalize();

    mpz_class num_;
    mpz_class den_; // > 0
};

} // namespace mldlab
