#include "diffgal/ratfunc.hpp"

#include <numeric>

namespace diffgal {

RatFunc::RatFunc(Poly<FieldElem> num, Poly<FieldElem> den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("RatFunc: zero denominator");
    normalize();
}

RatFunc RatFunc::from_poly(Poly<FieldElem> p) {
    RatFunc r;
    r.num_ = std::move(p);
    return r;
}

RatFunc RatFunc::x() { return from_poly(Poly<FieldElem>::monomial(1, FieldElem(1))); }

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly<FieldElem>::constant(FieldElem(1));
        return;
    }
    Poly<FieldElem> g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divrem(num_, g).first;
        den_ = divrem(den_, g).first;
    }
    FieldElem lead = den_.lead();
    if (!(lead == FieldElem(1))) {
        FieldElem inv = lead.inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::derivative() const {
    // (n/d)' = (n'd - nd') / d^2
    return RatFunc(diffgal::derivative(num_) * den_ - num_ * diffgal::derivative(den_),
                   den_ * den_);
}

FieldElem RatFunc::eval(const FieldElem& p) const {
    FieldElem d = diffgal::eval(den_, p);
    if (d.is_zero()) throw BadPointError("RatFunc: evaluation at a pole");
    return diffgal::eval(num_, p) / d;
}

bool RatFunc::pole_at(const FieldElem& p) const {
    return diffgal::eval(den_, p).is_zero();
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZeroError("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}
bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

KummerElem::KummerElem(int n, std::vector<RatFunc> comps) : n_(n), comp_(std::move(comps)) {
    if (n_ < 1) throw Error("KummerElem: ramification must be positive");
    comp_.resize(n_);
}

KummerElem KummerElem::root_power(int n, int j) {
    // x^{j/n} with arbitrary integer j
    int q = j >= 0 ? j / n : -((-j + n - 1) / n);
    int rpos = j - q * n;  // 0 <= rpos < n
    std::vector<RatFunc> comps(n);
    RatFunc xq = q >= 0 ? RatFunc::from_poly(Poly<FieldElem>::monomial(q, FieldElem(1)))
                        : RatFunc(Poly<FieldElem>::constant(FieldElem(1)),
                                  Poly<FieldElem>::monomial(-q, FieldElem(1)));
    comps[rpos] = xq;
    return KummerElem(n, std::move(comps));
}

KummerElem KummerElem::with_ramification(int n) const {
    if (n % n_ != 0) throw Error("KummerElem: ramification not a multiple");
    int f = n / n_;
    std::vector<RatFunc> comps(n);
    for (int j = 0; j < n_; ++j) comps[j * f] = comp_[j];
    return KummerElem(n, std::move(comps));
}

bool KummerElem::is_zero() const {
    for (const auto& c : comp_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool KummerElem::is_rational_function() const {
    for (int j = 1; j < n_; ++j) {
        if (!comp_[j].is_zero()) return false;
    }
    return true;
}

KummerElem KummerElem::galois(int64_t k, const std::shared_ptr<const CycloField>& f) const {
    if (f->order() % n_ != 0) throw Error("KummerElem::galois: field lacks zeta_n");
    int64_t step = f->order() / n_;
    KummerElem r = *this;
    for (int j = 0; j < n_; ++j) {
        int64_t e = (int64_t)j * k % n_;
        if (e < 0) e += n_;
        r.comp_[j] = RatFunc(FieldElem::zeta(f, e * step)) * r.comp_[j];
    }
    return r;
}

KummerElem KummerElem::derivative() const {
    // d/dx (a_j x^{j/n}) = (a_j' + (j/n) a_j / x) x^{j/n}
    KummerElem r = *this;
    RatFunc invx(Poly<FieldElem>::constant(FieldElem(1)), Poly<FieldElem>::monomial(1, FieldElem(1)));
    for (int j = 0; j < n_; ++j) {
        r.comp_[j] = comp_[j].derivative() + RatFunc(FieldElem(Rat(j, n_))) * comp_[j] * invx;
    }
    return r;
}

FieldElem KummerElem::eval(const FieldElem& p, const FieldElem& root) const {
    FieldElem acc(0), pw(1);
    for (int j = 0; j < n_; ++j) {
        acc += comp_[j].eval(p) * pw;
        pw = pw * root;
    }
    return acc;
}

KummerElem KummerElem::operator-() const {
    KummerElem r = *this;
    for (auto& c : r.comp_) c = -c;
    return r;
}

KummerElem operator+(const KummerElem& a, const KummerElem& b) {
    int n = std::lcm(a.n_, b.n_);
    KummerElem x = a.with_ramification(n), y = b.with_ramification(n);
    for (int j = 0; j < n; ++j) x.comp_[j] += y.comp_[j];
    return x;
}
KummerElem operator-(const KummerElem& a, const KummerElem& b) { return a + (-b); }

KummerElem operator*(const KummerElem& a, const KummerElem& b) {
    int n = std::lcm(a.n_, b.n_);
    KummerElem x = a.with_ramification(n), y = b.with_ramification(n);
    std::vector<RatFunc> comps(n);
    RatFunc xf = RatFunc::x();
    for (int i = 0; i < n; ++i) {
        if (x.comp_[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y.comp_[j].is_zero()) continue;
            RatFunc prod = x.comp_[i] * y.comp_[j];
            if (i + j >= n) prod *= xf;  // x^{n/n} = x
            comps[(i + j) % n] += prod;
        }
    }
    return KummerElem(n, std::move(comps));
}

KummerElem KummerElem::inverse() const {
    if (is_zero()) throw DivisionByZeroError("KummerElem: division by zero");
    if (is_rational_function()) {
        KummerElem r = *this;
        r.comp_[0] = RatFunc(1) / r.comp_[0];
        return r;
    }
    // extended gcd with y^n - x over the rational function field
    Poly<RatFunc> self;
    self.c.assign(n_, RatFunc());
    for (int j = 0; j < n_; ++j) self.c[j] = comp_[j];
    self.trim();
    Poly<RatFunc> mod;
    mod.c.assign(n_ + 1, RatFunc());
    mod.c[0] = -RatFunc::x();
    mod.c[n_] = RatFunc(1);
    auto g = poly_ext_gcd(self, mod);
    if (g.g.degree() != 0) throw Error("KummerElem: inverse failed");
    RatFunc lead = g.g.c[0];
    std::vector<RatFunc> comps(n_);
    for (int j = 0; j <= g.u.degree() && j < n_; ++j) comps[j] = g.u.c[j] / lead;
    return KummerElem(n_, std::move(comps));
}

KummerElem operator/(const KummerElem& a, const KummerElem& b) { return a * b.inverse(); }

bool operator==(const KummerElem& a, const KummerElem& b) { return (a - b).is_zero(); }

LaurentSeries laurent_expand(const RatFunc& rf, const FieldElem& p, int hi) {
    LaurentSeries s;
    if (rf.is_zero()) {
        s.lo = 0;
        s.hi = hi;
        s.c.assign(hi >= 0 ? hi + 1 : 0, FieldElem(0));
        return s;
    }
    Poly<FieldElem> n = taylor_shift(rf.num(), p);
    Poly<FieldElem> d = taylor_shift(rf.den(), p);
    int vn = 0, vd = 0;
    while (vn <= n.degree() && n.c[vn].is_zero()) ++vn;
    while (vd <= d.degree() && d.c[vd].is_zero()) ++vd;
    int v = vn - vd;
    s.lo = v;
    s.hi = hi;
    if (hi < v) {
        s.lo = hi + 1;
        s.hi = hi;
        return s;
    }
    int len = hi - v + 1;
    s.c.assign(len, FieldElem(0));
    // power series division of shifted numerator by shifted denominator
    FieldElem d0inv = d.c[vd].inverse();
    std::vector<FieldElem> q(len, FieldElem(0));
    for (int k = 0; k < len; ++k) {
        FieldElem acc = (vn + k <= n.degree()) ? n.c[vn + k] : FieldElem(0);
        for (int j = 0; j < k; ++j) {
            int di = vd + k - j;
            if (di <= d.degree() && !d.c[di].is_zero()) acc -= q[j] * d.c[di];
        }
        q[k] = acc * d0inv;
    }
    s.c = std::move(q);
    return s;
}

LaurentSeries laurent_expand(const KummerElem& ke, const FieldElem& p, const FieldElem& root,
                             int hi) {
    int n = ke.ramification();
    if (ke.is_rational_function()) return laurent_expand(ke.rational_part(), p, hi);
    if (p.is_zero()) throw BadPointError("laurent_expand: ramification point x = 0");
    {
        FieldElem pw(1);
        for (int j = 0; j < n; ++j) pw = pw * root;
        if (!(pw == p)) throw BadPointError("laurent_expand: root^n != p");
    }
    std::map<int, FieldElem> acc;
    FieldElem pinv = n > 1 ? p.inverse() : FieldElem(0);
    FieldElem rootpw(1);
    for (int j = 0; j < n; ++j, rootpw = rootpw * root) {
        const RatFunc& a = ke.components()[j];
        if (a.is_zero()) continue;
        LaurentSeries base = laurent_expand(a, p, hi);
        if (base.lo > base.hi) continue;
        // x^{j/n} = root^j (1 + t/p)^{j/n}, expanded binomially
        int blen = hi - std::min(base.lo, 0) + 1;
        if (blen < 1) blen = 1;
        std::vector<FieldElem> binom((size_t)blen, FieldElem(0));
        if (j == 0) {
            binom[0] = FieldElem(1);
        } else {
            Rat qexp(j, n);
            FieldElem cur = rootpw;
            for (size_t k = 0; k < binom.size(); ++k) {
                binom[k] = cur;
                cur = cur * FieldElem((qexp - (int64_t)k) / Rat((int64_t)k + 1)) * pinv;
            }
        }
        for (int k = base.lo; k <= base.hi; ++k) {
            if (base.at(k).is_zero()) continue;
            for (size_t b = 0; b < binom.size() && k + (int)b <= hi; ++b) {
                if (binom[b].is_zero()) continue;
                auto [it, fresh] = acc.emplace(k + (int)b, base.at(k) * binom[b]);
                if (!fresh) it->second += base.at(k) * binom[b];
            }
        }
    }
    for (auto it = acc.begin(); it != acc.end();) {
        if (it->second.is_zero()) it = acc.erase(it);
        else ++it;
    }
    LaurentSeries total;
    if (acc.empty()) {
        total.lo = 0;
        total.hi = hi;
        total.c.assign(hi >= 0 ? hi + 1 : 0, FieldElem(0));
        return total;
    }
    total.lo = acc.begin()->first;
    total.hi = hi;
    total.c.assign(hi - total.lo + 1, FieldElem(0));
    for (auto& [k, v] : acc) total.c[k - total.lo] = v;
    return total;
}

std::map<int, FMat> laurent_expand_matrix(const KMat& a, const FieldElem& p,
                                          const FieldElem& root, int hi) {
    int ram = 1;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) ram = std::lcm(ram, a(i, j).ramification());
    }
    std::map<int, FMat> out;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            LaurentSeries s = laurent_expand(a(i, j).with_ramification(ram), p, root, hi);
            for (int k = s.lo; k <= s.hi; ++k) {
                if (s.at(k).is_zero()) continue;
                auto [it, fresh] =
                    out.emplace(k, FMat::Constant(a.rows(), a.cols(), FieldElem(0)));
                it->second(i, j) = s.at(k);
            }
        }
    }
    return out;
}

KMat kummer_matrix(const FMat& constant) {
    KMat m(constant.rows(), constant.cols());
    for (int i = 0; i < constant.rows(); ++i) {
        for (int j = 0; j < constant.cols(); ++j) m(i, j) = KummerElem(constant(i, j));
    }
    return m;
}

}  // namespace diffgal
