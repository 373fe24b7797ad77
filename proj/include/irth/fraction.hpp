#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>

namespace irth {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored reduced with a positive denominator.
/// Share arithmetic in this domain never leaves small denominators, but the
/// backing integers are arbitrary precision so overflow cannot occur.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}

    Fraction(BigInt numerator, BigInt denominator) {
        if (denominator == 0)
            throw std::invalid_argument("Fraction: zero denominator");
        if (denominator < 0) {
            numerator = -numerator;
            denominator = -denominator;
        }
        BigInt g = boost::multiprecision::gcd(abs(numerator), denominator);
        if (g > 1) {
            numerator /= g;
            denominator /= g;
        }
        num_ = std::move(numerator);
        den_ = std::move(denominator);
    }

    Fraction(long long numerator, long long denominator)
        : Fraction(BigInt(numerator), BigInt(denominator)) {}

    explicit Fraction(long long whole) : num_(whole), den_(1) {}

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    Fraction operator+(const Fraction& o) const {
        return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Fraction operator-(const Fraction& o) const {
        return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Fraction operator*(const Fraction& o) const {
        return Fraction(num_ * o.num_, den_ * o.den_);
    }
    Fraction operator/(const Fraction& o) const {
        if (o.num_ == 0)
            throw std::domain_error("Fraction: division by zero");
        return Fraction(num_ * o.den_, den_ * o.num_);
    }
    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }

    bool operator==(const Fraction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    std::strong_ordering operator<=>(const Fraction& o) const {
        BigInt lhs = num_ * o.den_;
        BigInt rhs = o.num_ * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "n/d"; whole values still render with the denominator ("3/1" only
    /// when d == 1 and the caller asked for the plain form).
    std::string str() const {
        return num_.str() + "/" + den_.str();
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// Parses "n/d" or a bare integer "n". Throws on malformed input.
    static Fraction parse(const std::string& text);

    /// Value * 100 rendered to exactly two decimals, round half to even.
    /// "11.11" for 3/27, "16.67" for 1/6.
    std::string percent() const;

private:
    BigInt num_;
    BigInt den_;
};

Fraction lcm_fraction_base(const Fraction& a, const Fraction& b);

}  // namespace irth
