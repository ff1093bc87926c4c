#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace dimerkit {

// Exact rational on 64-bit words. The grid computations keep numbers tiny
// (denominators are one fixed prime), so we only guard against overflow
// instead of switching to big integers.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    static long long checked(__int128 v) {
        if (v > INT64_MAX / 2 || v < INT64_MIN / 2)
            throw std::overflow_error("Rat: overflow");
        return (long long)v;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(checked((__int128)a.num * b.den + (__int128)b.num * a.den),
                   checked((__int128)a.den * b.den));
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(checked((__int128)a.num * b.den - (__int128)b.num * a.den),
                   checked((__int128)a.den * b.den));
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(checked((__int128)a.num * b.num), checked((__int128)a.den * b.den));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return Rat(checked((__int128)a.num * b.den), checked((__int128)a.den * b.num));
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    bool is_integer() const { return den == 1; }

    // Largest integer <= num/den.
    long long floor() const {
        long long q = num / den, r = num % den;
        return (r < 0) ? q - 1 : q;
    }
};

} // namespace dimerkit
