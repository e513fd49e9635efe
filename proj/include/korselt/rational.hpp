#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "korselt/integers.hpp"

namespace korselt {

// Exact rational in lowest terms with positive denominator. The canonical
// form is unique, so equality is field-wise and ordering is cross
// multiplication against positive denominators.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    explicit Rational(Int value) : num_(std::move(value)), den_(1) {}
    Rational(Int num, Int den); // canonicalizes; den == 0 is a domain_error

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const;
    Rational abs() const;

    /// Rendering is "a/b", with "/b" omitted when b = 1.
    std::string str() const;

    /// Accepts "a" or "a/b" with an optional leading minus.
    static Rational parse(std::string_view text);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    Int num_;
    Int den_;
};

/// Canonical reduced form of num/den; value preserving, sign on the numerator.
inline Rational reduce(Int num, Int den) { return {std::move(num), std::move(den)}; }

} // namespace korselt
