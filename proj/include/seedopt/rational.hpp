#ifndef SEEDOPT_RATIONAL_HPP
#define SEEDOPT_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace seedopt {

// Exact rational arithmetic for payoff coefficients and payoff values.
// Payoffs must compare exactly, so no floating point is allowed anywhere
// a seed-set decision is made. Intermediate products go through __int128
// and are checked before narrowing back to int64.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;  // always > 0

    Rational() = default;

    Rational(std::int64_t n) : num(n), den(1) {}

    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num == 0; }
    bool is_positive() const { return num > 0; }
    bool is_negative() const { return num < 0; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1)
            return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num) * b.num, i128(a.den) * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0)
            throw std::domain_error("rational division by zero");
        return from_i128(i128(a.num) * b.den, i128(a.den) * b.num);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num) * b.den < i128(b.num) * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Parses "3", "-2/7", "0.25". Decimal forms convert exactly over a
    // power-of-ten denominator.
    static Rational parse(const std::string& text);

private:
    using i128 = __int128;

    static Rational from_i128(i128 n, i128 d) {
        if (d == 0)
            throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 an = n < 0 ? -n : n;
        // gcd on __int128
        i128 x = an, y = d;
        while (y != 0) {
            i128 t = x % y;
            x = y;
            y = t;
        }
        if (x > 1) {
            n /= x;
            d /= x;
        }
        const i128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d);
        return r;
    }
};

inline std::int64_t lcm_i64(std::int64_t a, std::int64_t b) {
    const __int128 l = (__int128)(a / std::gcd(a, b)) * b;
    if (l > INT64_MAX)
        throw std::overflow_error("lcm overflow");
    return static_cast<std::int64_t>(l);
}

}  // namespace seedopt

#endif
