#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "diffgal/polynomial.hpp"
#include "diffgal/rational.hpp"

namespace diffgal {

// The cyclotomic field Q(zeta_M), the computable stand-in for the
// algebraically closed constant field.  One instance per order M, shared and
// immutable; obtain through CycloField::make.
class CycloField {
  public:
    static std::shared_ptr<const CycloField> make(uint32_t order);

    uint32_t order() const { return m_; }
    uint32_t degree() const { return phi_; }
    const Poly<Int>& modulus() const { return phi_poly_; }

    // Canonical form of a term list: exponents taken mod M, reduced mod
    // Phi_M, sorted, zero coefficients dropped.
    using Term = std::pair<uint32_t, Rat>;
    std::vector<Term> reduce(std::vector<std::pair<int64_t, Rat>> raw) const;

  private:
    explicit CycloField(uint32_t order);

    uint32_t m_;
    uint32_t phi_;
    uint32_t rad_;      // radical of M
    uint32_t stride_;   // M / rad, so Phi_M(x) = Phi_rad(x^stride)
    uint32_t phi_rad_;
    Poly<Int> phi_poly_;
    // nonzero (degree, coefficient) pairs of Phi_rad below its leading term
    std::vector<std::pair<uint32_t, Int>> rad_tail_;
};

uint32_t euler_phi(uint32_t n);
uint32_t radical(uint32_t n);
Poly<Int> cyclotomic_polynomial(uint32_t n);

// Exact element of Q(zeta_M).  A null field pointer denotes a plain rational
// constant, which lifts into whichever field it first meets; this is what
// lets Eigen's Scalar(0)/Scalar(1) work without a field in scope.
class FieldElem {
  public:
    FieldElem() = default;
    FieldElem(int v) { set_rational(Rat(v)); }
    FieldElem(const Rat& v) { set_rational(v); }
    FieldElem(std::shared_ptr<const CycloField> f, std::vector<std::pair<int64_t, Rat>> raw);

    static FieldElem zeta(const std::shared_ptr<const CycloField>& f, int64_t k);
    static FieldElem from_rat(const std::shared_ptr<const CycloField>& f, const Rat& v);

    const std::shared_ptr<const CycloField>& field() const { return fld_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // The rational value; throws unless is_rational().
    Rat rational_value() const;

    const std::vector<CycloField::Term>& terms() const { return terms_; }
    std::vector<Rat> dense_coeffs() const;  // length phi(M) power-basis vector

    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem galois_power(int64_t k) const;  // zeta_M -> zeta_M^k, gcd(k, M) = 1

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    FieldElem& operator+=(const FieldElem& o) { *this = *this + o; return *this; }
    FieldElem& operator-=(const FieldElem& o) { *this = *this - o; return *this; }
    FieldElem& operator*=(const FieldElem& o) { *this = *this * o; return *this; }
    FieldElem& operator/=(const FieldElem& o) { *this = *this / o; return *this; }

    std::string str() const;

  private:
    void set_rational(const Rat& v);
    static const std::shared_ptr<const CycloField>& join(const FieldElem& a, const FieldElem& b);

    std::shared_ptr<const CycloField> fld_;
    std::vector<CycloField::Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& e);

// Embeds an element of Q(zeta_m) into Q(zeta_M) for m | M.
FieldElem embed(const FieldElem& e, const std::shared_ptr<const CycloField>& f);

// Square root of a prime as a Gauss sum, with the sign fixed by the standard
// embedding zeta_M -> exp(2 pi i / M): the result has positive real part.
// Conductor must divide M: 8 for p = 2, p for p = 1 mod 4, 4p for p = 3 mod 4.
FieldElem sqrt_prime(uint32_t p, const std::shared_ptr<const CycloField>& f);
uint32_t sqrt_conductor(uint32_t p);

// Rank over Q of the given elements viewed as vectors in the power basis.
int q_linear_rank(const std::vector<FieldElem>& elems);

// Smallest cyclotomic order containing sqrt(r) (via its squarefree part);
// prime factors of r must stay below 10^6.
uint32_t rational_sqrt_conductor(const Rat& r);
// Exact square root of a rational inside f; throws NeedsLargerField when the
// conductor does not divide the field order.
FieldElem sqrt_rational(const Rat& r, const std::shared_ptr<const CycloField>& f);

}  // namespace diffgal

namespace Eigen {
template <>
struct NumTraits<diffgal::FieldElem> : GenericNumTraits<diffgal::FieldElem> {
    typedef diffgal::FieldElem Real;
    typedef diffgal::FieldElem NonInteger;
    typedef diffgal::FieldElem Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 120,
        MulCost = 240
    };
};
}  // namespace Eigen
