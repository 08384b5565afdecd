#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "diffgal/rational.hpp"

namespace diffgal {

// Dense univariate polynomial, coefficient of x^i at c[i].  Normalized: no
// trailing zero coefficients, so degree() == c.size() - 1 and the zero
// polynomial has empty c.
template <class T>
struct Poly {
    std::vector<T> c;

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly constant(T v) {
        Poly p;
        if (!(v == T(0))) p.c.push_back(std::move(v));
        return p;
    }
    static Poly monomial(int deg, T v) {
        Poly p;
        if (!(v == T(0))) {
            p.c.assign(deg + 1, T(0));
            p.c[deg] = std::move(v);
        }
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == T(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const T& operator[](int i) const { return c[i]; }
    T coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : T(0); }
    T lead() const { return c.back(); }

    bool operator==(const Poly& o) const { return c == o.c; }
};

template <class T>
Poly<T> operator+(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), T(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
}

template <class T>
Poly<T> operator-(const Poly<T>& a) {
    Poly<T> r = a;
    for (auto& x : r.c) x = T(0) - x;
    return r;
}

template <class T>
Poly<T> operator-(const Poly<T>& a, const Poly<T>& b) {
    return a + (-b);
}

template <class T>
Poly<T> operator*(const Poly<T>& a, const Poly<T>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly<T> r;
    r.c.assign(a.c.size() + b.c.size() - 1, T(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == T(0)) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == T(0)) continue;
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
    }
    r.trim();
    return r;
}

template <class T>
Poly<T> operator*(const T& s, const Poly<T>& p) {
    if (s == T(0)) return {};
    Poly<T> r = p;
    for (auto& x : r.c) x = s * x;
    r.trim();
    return r;
}

// Euclidean division; requires an invertible leading coefficient of b
// (exact over a field; over Z only for monic b).
template <class T>
std::pair<Poly<T>, Poly<T>> divrem(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Poly<T> q, r = a;
    int db = b.degree();
    if (r.degree() < db) return {q, r};
    q.c.assign(r.degree() - db + 1, T(0));
    T inv_lead = T(1) / b.lead();
    for (int k = r.degree(); k >= db; --k) {
        if (k >= (int)r.c.size() || r.c[k] == T(0)) continue;
        T f = r.c[k] * inv_lead;
        q.c[k - db] = f;
        for (int j = 0; j <= db; ++j) r.c[k - db + j] = r.c[k - db + j] - f * b.c[j];
    }
    q.trim();
    r.trim();
    return {q, r};
}

template <class T>
Poly<T> derivative(const Poly<T>& p) {
    Poly<T> r;
    if (p.degree() < 1) return r;
    r.c.resize(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) r.c[i - 1] = T(int(i)) * p.c[i];
    r.trim();
    return r;
}

template <class T>
T eval(const Poly<T>& p, const T& x) {
    T r(0);
    for (int i = p.degree(); i >= 0; --i) r = r * x + p.c[i];
    return r;
}

// p(x + a), Horner-style synthetic shift.
template <class T>
Poly<T> taylor_shift(const Poly<T>& p, const T& a) {
    Poly<T> r;
    for (int i = p.degree(); i >= 0; --i) {
        r = r * Poly<T>({a, T(1)});
        r = r + Poly<T>::constant(p.c[i]);
    }
    return r;
}

template <class T>
Poly<T> monic(const Poly<T>& p) {
    if (p.is_zero()) return p;
    T inv = T(1) / p.lead();
    return inv * p;
}

template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// g = gcd(a, b) monic with u*a + v*b = g.
template <class T>
struct ExtGcd {
    Poly<T> g, u, v;
};

template <class T>
ExtGcd<T> poly_ext_gcd(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r0 = a, r1 = b;
    Poly<T> u0 = Poly<T>::constant(T(1)), u1;
    Poly<T> v0, v1 = Poly<T>::constant(T(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        Poly<T> u2 = u0 - q * u1;
        Poly<T> v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    T inv = T(1) / r0.lead();
    return {inv * r0, inv * u0, inv * v0};
}

}  // namespace diffgal
