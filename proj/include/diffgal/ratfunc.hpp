#pragma once

#include "diffgal/cyclotomic.hpp"
#include "diffgal/linalg.hpp"
#include "diffgal/polynomial.hpp"

namespace diffgal {

using FMat = DMat<FieldElem>;

// Rational function over the constant field, canonical form: monic
// denominator, gcd(num, den) = 1.
class RatFunc {
  public:
    RatFunc() = default;
    RatFunc(int v) : num_(Poly<FieldElem>::constant(FieldElem(v))) {}
    RatFunc(const FieldElem& v) : num_(Poly<FieldElem>::constant(v)) {}
    RatFunc(Poly<FieldElem> num, Poly<FieldElem> den);
    static RatFunc from_poly(Poly<FieldElem> p);
    static RatFunc x();

    const Poly<FieldElem>& num() const { return num_; }
    const Poly<FieldElem>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc derivative() const;
    FieldElem eval(const FieldElem& p) const;  // throws BadPointError on a pole
    bool pole_at(const FieldElem& p) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  private:
    void normalize();
    Poly<FieldElem> num_;
    Poly<FieldElem> den_ = Poly<FieldElem>::constant(FieldElem(1));
};

// Element of the Kummer extension F(x, x^{1/n}): sum_j a_j(x) x^{j/n} with
// rational-function components, subject to (x^{1/n})^n = x.
class KummerElem {
  public:
    KummerElem() : n_(1), comp_(1) {}
    KummerElem(int v) : n_(1), comp_{RatFunc(v)} {}
    KummerElem(const FieldElem& v) : n_(1), comp_{RatFunc(v)} {}
    KummerElem(const RatFunc& r) : n_(1), comp_{r} {}
    KummerElem(int n, std::vector<RatFunc> comps);
    // the monomial x^{j/n}
    static KummerElem root_power(int n, int j);

    int ramification() const { return n_; }
    const std::vector<RatFunc>& components() const { return comp_; }
    KummerElem with_ramification(int n) const;
    bool is_zero() const;
    bool is_rational_function() const;  // all components beyond j = 0 vanish
    const RatFunc& rational_part() const { return comp_[0]; }

    // Galois generator action x^{1/n} -> zeta_n^k x^{1/n}
    KummerElem galois(int64_t k, const std::shared_ptr<const CycloField>& f) const;
    KummerElem derivative() const;  // d/dx
    FieldElem eval(const FieldElem& p, const FieldElem& root) const;
    KummerElem inverse() const;

    KummerElem operator-() const;
    friend KummerElem operator+(const KummerElem& a, const KummerElem& b);
    friend KummerElem operator-(const KummerElem& a, const KummerElem& b);
    friend KummerElem operator*(const KummerElem& a, const KummerElem& b);
    friend KummerElem operator/(const KummerElem& a, const KummerElem& b);
    friend bool operator==(const KummerElem& a, const KummerElem& b);
    friend bool operator!=(const KummerElem& a, const KummerElem& b) { return !(a == b); }
    KummerElem& operator+=(const KummerElem& o) { return *this = *this + o; }
    KummerElem& operator-=(const KummerElem& o) { return *this = *this - o; }
    KummerElem& operator*=(const KummerElem& o) { return *this = *this * o; }
    KummerElem& operator/=(const KummerElem& o) { return *this = *this / o; }

  private:
    int n_;
    std::vector<RatFunc> comp_;  // size n_
};

// Truncated Laurent series at a point: coefficients of t^k, lo <= k <= hi.
struct LaurentSeries {
    int lo = 0;
    int hi = -1;
    std::vector<FieldElem> c;  // c[k - lo]

    FieldElem at(int k) const {
        if (k < lo || k > hi) return FieldElem(0);
        return c[k - lo];
    }
};

// Exact expansion in t = x - p through order hi; p must not be a zero of the
// denominator beyond representable order.
LaurentSeries laurent_expand(const RatFunc& rf, const FieldElem& p, int hi);
// Expansion of a Kummer element at the curve point (p, root), root^n = p;
// requires p != 0 (ramification point excluded).
LaurentSeries laurent_expand(const KummerElem& ke, const FieldElem& p, const FieldElem& root,
                             int hi);

using KMat = DMat<KummerElem>;

// Entrywise matrix expansion: order -> coefficient matrix, for orders lo..hi
// where lo is the smallest order with a nonzero coefficient (at least floor).
std::map<int, FMat> laurent_expand_matrix(const KMat& a, const FieldElem& p,
                                          const FieldElem& root, int hi);

KMat kummer_matrix(const FMat& constant);

}  // namespace diffgal

namespace Eigen {
template <>
struct NumTraits<diffgal::KummerElem> : GenericNumTraits<diffgal::KummerElem> {
    typedef diffgal::KummerElem Real;
    typedef diffgal::KummerElem NonInteger;
    typedef diffgal::KummerElem Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 32,
        AddCost = 240,
        MulCost = 480
    };
};
}  // namespace Eigen
