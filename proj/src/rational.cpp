#include "korselt/rational.hpp"

#include <cctype>

namespace korselt {

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw domain_error("rational: zero denominator");
    if (den_ < 0) {
        mpz_neg(num_.get_mpz_t(), num_.get_mpz_t());
        mpz_neg(den_.get_mpz_t(), den_.get_mpz_t());
    }
    Int g = gcd(num_, den_);
    if (g > 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::operator-() const {
    Rational r = *this;
    mpz_neg(r.num_.get_mpz_t(), r.num_.get_mpz_t());
    return r;
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

std::string Rational::str() const {
    std::string s = num_.get_str();
    if (den_ != 1) {
        s += '/';
        s += den_.get_str();
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    const auto malformed = [&] {
        return domain_error("rational: malformed value '" + std::string(text) + "'");
    };
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }
    const auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    };
    std::string_view num_part = rest;
    std::string_view den_part;
    if (const auto slash = rest.find('/'); slash != std::string_view::npos) {
        num_part = rest.substr(0, slash);
        den_part = rest.substr(slash + 1);
        if (!digits(den_part)) throw malformed();
    }
    if (!digits(num_part)) throw malformed();

    Int num(std::string(num_part), 10);
    if (negative) mpz_neg(num.get_mpz_t(), num.get_mpz_t());
    Int den = den_part.empty() ? Int(1) : Int(std::string(den_part), 10);
    if (den == 0) throw domain_error("rational: zero denominator in '" + std::string(text) + "'");
    return {std::move(num), std::move(den)};
}

Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw domain_error("rational: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

} // namespace korselt
