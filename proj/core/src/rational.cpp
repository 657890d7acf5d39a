#include "mldlab/rational.hpp"

#include <stdexcept>

namespace mldlab {

Rational::Rational(long long num, long long den)
    : num_(static_cast<long>(num)), den_(static_cast<long>(den)) {
    normalize();
}

Rational::Rational(mpz_class num, mpz_class den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_ == 0)
        throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    num_ /= g;
    den_ /= g;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0)
        throw std::domain_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    int c = cmp(num_ * o.den_, o.num_ * den_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.get_str();
    if (den_ != 1) {
        s += '/';
        s += den_.get_str();
    }
    return s;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    auto slash = text.find('/');
    auto is_int = [](std::string_view s) {
        if (s.empty())
            return false;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    std::string_view num_part = text.substr(0, slash);
    if (!is_int(num_part))
        return std::nullopt;
    mpz_class num(std::string(num_part), 10);
    if (slash == std::string_view::npos)
        return Rational(num, 1);
    std::string_view den_part = text.substr(slash + 1);
    if (!is_int(den_part))
        return std::nullopt;
    mpz_class den(std::string(den_part), 10);
    if (den == 0)
        return std::nullopt;
    return Rational(num, den);
}

} // namespace mldlab
