#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "sni/errors.hpp"

namespace sni {

/// Exact rational on int64, always normalized (gcd 1, positive denominator).
/// Magnitudes here stay tiny (desk-scale rates), so no overflow guards.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw DivisionByZero("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    bool is_integer() const { return den_ == 1; }

    /// Decimal string truncated toward zero at 4 places, e.g. 213/23 -> "9.2608".
    std::string decimal4() const {
        std::int64_t n = num_ < 0 ? -num_ : num_;
        const std::int64_t ip = n / den_;
        const std::int64_t frac = ((n - ip * den_) * 10000) / den_;
        std::string s = (num_ < 0 ? "-" : "") + std::to_string(ip) + ".";
        std::string f = std::to_string(frac);
        return s + std::string(4 - f.size(), '0') + f;
    }

private:
    std::int64_t num_;
    std::int64_t den_;
};

} // namespace sni
