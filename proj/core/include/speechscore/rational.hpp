#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace speechscore {

// Exact ratio of tick counts. Keeps every rate (P_FP, DER, WER, ...)
// free of float rounding until the moment a report is printed.
// Arithmetic runs through 128-bit intermediates; the reduced result
// must fit in 64 bits (tick denominators are bounded by file lengths,
// so this never triggers in practice).
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den) {
        assign(num, den);
    }

    static Rational zero() { return Rational(0, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Decimal rendering rounded half-even to `digits` places.
    std::string decimal(int digits = 6) const;

    Rational operator+(const Rational& o) const {
        return from128(w(num_) * o.den_ + w(o.num_) * den_, w(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return from128(w(num_) * o.den_ - w(o.num_) * den_, w(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return from128(w(num_) * o.num_, w(den_) * o.den_);
    }
    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator<(const Rational& o) const {
        return w(num_) * o.den_ < w(o.num_) * den_;
    }
    bool operator<=(const Rational& o) const {
        return w(num_) * o.den_ <= w(o.num_) * den_;
    }

private:
    using i128 = __int128;
    static i128 w(std::int64_t v) { return static_cast<i128>(v); }

    static Rational from128(i128 num, i128 den) {
        if (den < 0) { num = -num; den = -den; }
        i128 a = num < 0 ? -num : num;
        i128 b = den;
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
        if (num == 0) den = 1;
        constexpr i128 lim = INT64_MAX;
        if (num > lim || num < -lim || den > lim)
            throw std::overflow_error("rational out of 64-bit range");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    void assign(std::int64_t num, std::int64_t den) {
        *this = from128(w(num), w(den));
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace speechscore
