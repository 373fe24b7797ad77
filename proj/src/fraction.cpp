#include "irth/fraction.hpp"

#include <cctype>

namespace irth {

Fraction Fraction::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty())
        throw std::invalid_argument("Fraction::parse: empty input");
    auto slash = s.find('/');
    auto check_int = [](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("Fraction::parse: missing digits");
        size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("Fraction::parse: bare sign");
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw std::invalid_argument("Fraction::parse: not a number: " + t);
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Fraction(BigInt(s), BigInt(1));
    }
    std::string n = s.substr(0, slash);
    std::string d = s.substr(slash + 1);
    check_int(n);
    check_int(d);
    return Fraction(BigInt(n), BigInt(d));
}

std::string Fraction::percent() const {
    // Scale to hundredths of a percent and round half to even.
    BigInt n = num_ * 10000;
    BigInt q = n / den_;
    BigInt r = n % den_;
    if (n < 0) { /* not expected for shares; keep truncation semantics */ }
    BigInt twice = r * 2;
    if (twice > den_ || (twice == den_ && (q % 2) != 0)) ++q;
    BigInt whole = q / 100;
    BigInt cents = q % 100;
    std::string c = cents.str();
    if (c.size() < 2) c = "0" + c;
    return whole.str() + "." + c;
}

Fraction lcm_fraction_base(const Fraction& a, const Fraction& b) {
    BigInt l = boost::multiprecision::lcm(a.denominator(), b.denominator());
    return Fraction(BigInt(1), l);
}

}  // namespace irth
