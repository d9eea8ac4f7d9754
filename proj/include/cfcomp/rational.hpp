#pragma once

#include "cfcomp/dyadic.hpp"

#include <string>
#include <vector>

namespace cfc {

// Gaussian rational a + b*i. Exact field arithmetic; the backbone of every
// ground-truth computation the inexact engine is tested against.
struct QQi {
    Rat re{0};
    Rat im{0};

    QQi() = default;
    QQi(long v) : re(v), im(0) {}
    QQi(Rat r) : re(std::move(r)), im(0) {}
    QQi(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    Rat norm_sq() const { return re * re + im * im; }

    QQi conj() const { return QQi(re, -im); }

    friend QQi operator+(const QQi& a, const QQi& b) { return QQi(a.re + b.re, a.im + b.im); }
    friend QQi operator-(const QQi& a, const QQi& b) { return QQi(a.re - b.re, a.im - b.im); }
    friend QQi operator-(const QQi& a) { return QQi(-a.re, -a.im); }
    friend QQi operator*(const QQi& a, const QQi& b) {
        return QQi(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend QQi operator/(const QQi& a, const QQi& b) {
        Rat n = b.norm_sq();
        if (n.is_zero()) throw std::domain_error("QQi division by zero");
        QQi p = a * b.conj();
        return QQi(p.re / n, p.im / n);
    }
    QQi& operator+=(const QQi& b) { return *this = *this + b; }
    QQi& operator-=(const QQi& b) { return *this = *this - b; }
    QQi& operator*=(const QQi& b) { return *this = *this * b; }
    QQi& operator/=(const QQi& b) { return *this = *this / b; }

    bool operator==(const QQi& o) const { return re == o.re && im == o.im; }
    bool operator!=(const QQi& o) const { return !(*this == o); }
};

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Rat sup_norm(const std::vector<Rat>& v) {
    Rat m(0);
    for (const auto& x : v)
        if (rat_abs(x) > m) m = rat_abs(x);
    return m;
}

// max_j sqrt(|v_j|^2) is irrational in general; the exact layer works with
// the max of norm squares instead.
inline Rat sup_norm_sq(const std::vector<QQi>& v) {
    Rat m(0);
    for (const auto& x : v)
        if (x.norm_sq() > m) m = x.norm_sq();
    return m;
}

std::string rat_to_string(const Rat& q);
// Accepts "a/b", integers, and plain decimals ("-1.25"); exact parse.
Rat rat_from_string(const std::string& s);

// ceil(log2(q)) for q > 0, exact.
long ceil_log2(const Rat& q);

} // namespace cfc
