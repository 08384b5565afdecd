#include "diffgal/cyclotomic.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

#include "diffgal/linalg.hpp"

namespace diffgal {

uint32_t euler_phi(uint32_t n) {
    uint32_t r = n;
    for (uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

uint32_t radical(uint32_t n) {
    uint32_t r = 1;
    for (uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r *= p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r *= n;
    return r;
}

namespace {

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> ps;
    for (uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Exact quotient by a monic divisor, remainder known to vanish.
Poly<Int> exact_monic_quotient(const Poly<Int>& a, const Poly<Int>& b) {
    Poly<Int> q, r = a;
    int db = b.degree();
    q.c.assign(r.degree() - db + 1, Int(0));
    for (int k = r.degree(); k >= db; --k) {
        if (r.c[k] == 0) continue;
        Int f = r.c[k];
        q.c[k - db] = f;
        for (int j = 0; j <= db; ++j) {
            if (b.c[j] != 0) r.c[k - db + j] -= f * b.c[j];
        }
    }
    q.trim();
    return q;
}

// Phi_n for squarefree n via the chain Phi_{mp}(x) = Phi_m(x^p) / Phi_m(x).
Poly<Int> cyclotomic_squarefree(uint32_t n, std::map<uint32_t, Poly<Int>>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Poly<Int> p({Int(-1), Int(1)});  // Phi_1 = x - 1
    for (uint32_t q : prime_factors(n)) {
        Poly<Int> up;
        up.c.assign((size_t)p.degree() * q + 1, Int(0));
        for (int i = 0; i <= p.degree(); ++i) up.c[(size_t)i * q] = p.c[i];
        p = exact_monic_quotient(up, p);
    }
    cache.emplace(n, p);
    return p;
}

std::map<uint32_t, Poly<Int>>& squarefree_cache() {
    static std::map<uint32_t, Poly<Int>> c;
    return c;
}
std::mutex& cyclo_mutex() {
    static std::mutex m;
    return m;
}

Poly<Int> substitute_power(const Poly<Int>& p, uint32_t s) {
    if (s == 1) return p;
    Poly<Int> r;
    if (p.is_zero()) return r;
    r.c.assign((size_t)p.degree() * s + 1, Int(0));
    for (int i = 0; i <= p.degree(); ++i) r.c[(size_t)i * s] = p.c[i];
    return r;
}

}  // namespace

Poly<Int> cyclotomic_polynomial(uint32_t n) {
    if (n == 0) throw Error("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(cyclo_mutex());
    uint32_t r = radical(n);
    Poly<Int> base = cyclotomic_squarefree(r, squarefree_cache());
    return substitute_power(base, n / r);
}

CycloField::CycloField(uint32_t order)
    : m_(order),
      phi_(euler_phi(order)),
      rad_(radical(order)),
      stride_(order / radical(order)),
      phi_rad_(euler_phi(radical(order))),
      phi_poly_(cyclotomic_polynomial(order)) {
    std::lock_guard<std::mutex> lock(cyclo_mutex());
    const Poly<Int>& pr = squarefree_cache().at(rad_);
    for (int i = 0; i < pr.degree(); ++i) {
        if (pr.c[i] != 0) rad_tail_.emplace_back((uint32_t)i, pr.c[i]);
    }
}

std::shared_ptr<const CycloField> CycloField::make(uint32_t order) {
    static std::map<uint32_t, std::shared_ptr<const CycloField>> registry;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(order);
    if (it != registry.end()) return it->second;
    auto f = std::shared_ptr<const CycloField>(new CycloField(order));
    registry.emplace(order, f);
    return f;
}

std::vector<CycloField::Term> CycloField::reduce(std::vector<std::pair<int64_t, Rat>> raw) const {
    // zeta^M = 1, so exponents live mod M.
    std::map<uint32_t, Rat> acc;
    bool needs_division = false;
    for (auto& [e, c] : raw) {
        if (c == 0) continue;
        int64_t em = e % (int64_t)m_;
        if (em < 0) em += m_;
        if ((uint32_t)em >= phi_) needs_division = true;
        auto [it, fresh] = acc.emplace((uint32_t)em, c);
        if (!fresh) it->second += c;
    }
    if (needs_division) {
        // Phi_M(x) = Phi_rad(x^stride): split by exponent residue mod stride
        // and reduce each class as a polynomial in y = x^stride mod Phi_rad.
        // Scale to a common denominator so the division runs over Z.
        Int den(1);
        for (auto& [e, c] : acc) den = boost::multiprecision::lcm(den, rat_den(c));
        std::map<uint32_t, std::vector<Int>> classes;
        for (auto& [e, c] : acc) {
            if (c == 0) continue;
            uint32_t v = e % stride_, u = e / stride_;
            auto& vec = classes[v];
            if (vec.size() <= u) vec.resize(u + 1, Int(0));
            vec[u] += rat_num(c) * (den / rat_den(c));
        }
        acc.clear();
        for (auto& [v, vec] : classes) {
            for (int k = (int)vec.size() - 1; k >= (int)phi_rad_; --k) {
                if (vec[k] == 0) continue;
                Int f = std::move(vec[k]);
                vec[k] = 0;
                for (auto& [j, bc] : rad_tail_) vec[k - phi_rad_ + j] -= f * bc;
            }
            for (uint32_t u = 0; u < vec.size() && u < phi_rad_; ++u) {
                if (vec[u] == 0) continue;
                uint32_t e = v + stride_ * u;
                auto [it, fresh] = acc.emplace(e, Rat(vec[u], den));
                if (!fresh) it->second += Rat(vec[u], den);
            }
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc) {
        if (!(c == 0)) out.emplace_back(e, c);
    }
    return out;
}

void FieldElem::set_rational(const Rat& v) {
    fld_.reset();
    terms_.clear();
    if (!(v == 0)) terms_.emplace_back(0u, v);
}

FieldElem::FieldElem(std::shared_ptr<const CycloField> f, std::vector<std::pair<int64_t, Rat>> raw)
    : fld_(std::move(f)) {
    if (!fld_) throw Error("FieldElem: null field");
    terms_ = fld_->reduce(std::move(raw));
}

FieldElem FieldElem::zeta(const std::shared_ptr<const CycloField>& f, int64_t k) {
    return FieldElem(f, {{k, Rat(1)}});
}

FieldElem FieldElem::from_rat(const std::shared_ptr<const CycloField>& f, const Rat& v) {
    return FieldElem(f, {{0, v}});
}

bool FieldElem::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

Rat FieldElem::rational_value() const {
    if (terms_.empty()) return Rat(0);
    if (terms_.size() == 1 && terms_[0].first == 0) return terms_[0].second;
    throw Error("FieldElem: not a rational constant: " + str());
}

std::vector<Rat> FieldElem::dense_coeffs() const {
    size_t n = fld_ ? fld_->degree() : 1;
    std::vector<Rat> v(n, Rat(0));
    for (auto& [e, c] : terms_) v[e] = c;
    return v;
}

const std::shared_ptr<const CycloField>& FieldElem::join(const FieldElem& a, const FieldElem& b) {
    if (a.fld_ && b.fld_) {
        if (a.fld_ != b.fld_)
            throw FieldMismatchError("FieldElem: mismatched parent fields (orders " +
                                     std::to_string(a.fld_->order()) + " and " +
                                     std::to_string(b.fld_->order()) + ")");
        return a.fld_;
    }
    return a.fld_ ? a.fld_ : b.fld_;
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    FieldElem r;
    r.fld_ = FieldElem::join(a, b);
    // merge of two sorted term lists
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j >= b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (i >= a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Rat c = a.terms_[i].second + b.terms_[j].second;
            if (!(c == 0)) r.terms_.emplace_back(a.terms_[i].first, c);
            ++i;
            ++j;
        }
    }
    return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    FieldElem r;
    r.fld_ = FieldElem::join(a, b);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.is_rational()) {
        const Rat& s = a.terms_.empty() ? Rat(0) : a.terms_[0].second;
        r.terms_ = b.terms_;
        for (auto& [e, c] : r.terms_) c *= s;
        return r;
    }
    if (b.is_rational()) return b * a;
    std::vector<std::pair<int64_t, Rat>> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) raw.emplace_back((int64_t)ea + eb, ca * cb);
    r.terms_ = r.fld_->reduce(std::move(raw));
    return r;
}

FieldElem FieldElem::inverse() const {
    if (terms_.empty()) throw DivisionByZeroError("FieldElem: division by zero");
    if (is_rational()) {
        FieldElem r;
        r.fld_ = fld_;
        r.terms_.emplace_back(0u, Rat(1) / terms_[0].second);
        return r;
    }
    // extended gcd with the modulus in Q[x]
    Poly<Rat> a;
    a.c.assign(terms_.back().first + 1, Rat(0));
    for (auto& [e, c] : terms_) a.c[e] = c;
    Poly<Rat> mod;
    mod.c.reserve(fld_->modulus().c.size());
    for (const Int& z : fld_->modulus().c) mod.c.push_back(Rat(z));
    auto g = poly_ext_gcd(a, mod);
    if (g.g.degree() != 0) throw Error("FieldElem: inverse failed (modulus not coprime?)");
    Rat lead = g.g.c[0];
    std::vector<std::pair<int64_t, Rat>> raw;
    for (int i = 0; i <= g.u.degree(); ++i) {
        if (!(g.u.c[i] == 0)) raw.emplace_back(i, g.u.c[i] / lead);
    }
    return FieldElem(fld_, std::move(raw));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

FieldElem FieldElem::galois_power(int64_t k) const {
    if (!fld_) return *this;
    uint32_t m = fld_->order();
    int64_t km = k % m;
    if (km < 0) km += m;
    if (std::gcd((uint32_t)km, m) != 1) throw Error("galois_power: exponent not coprime to order");
    std::vector<std::pair<int64_t, Rat>> raw;
    raw.reserve(terms_.size());
    for (auto& [e, c] : terms_) raw.emplace_back((int64_t)e * km, c);
    return FieldElem(fld_, std::move(raw));
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.fld_ && b.fld_ && a.fld_ != b.fld_)
        throw FieldMismatchError("FieldElem: comparing elements of different fields");
    return a.terms_ == b.terms_;
}

std::string FieldElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (e > 0) os << "*z^" << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.str(); }

FieldElem embed(const FieldElem& e, const std::shared_ptr<const CycloField>& f) {
    if (!e.field()) {
        return e.is_zero() ? FieldElem::from_rat(f, Rat(0)) : FieldElem::from_rat(f, e.rational_value());
    }
    uint32_t m = e.field()->order(), big = f->order();
    if (big % m != 0) throw FieldMismatchError("embed: source order does not divide target order");
    uint32_t scale = big / m;
    std::vector<std::pair<int64_t, Rat>> raw;
    for (auto& [ex, c] : e.terms()) raw.emplace_back((int64_t)ex * scale, c);
    return FieldElem(f, std::move(raw));
}

uint32_t sqrt_conductor(uint32_t p) {
    if (p == 2) return 8;
    return (p % 4 == 1) ? p : 4 * p;
}

namespace {
int legendre_symbol(uint32_t a, uint32_t p) {
    uint64_t r = 1, base = a % p, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}
}  // namespace

FieldElem sqrt_prime(uint32_t p, const std::shared_ptr<const CycloField>& f) {
    uint32_t cond = sqrt_conductor(p);
    uint32_t m = f->order();
    if (m % cond != 0)
        throw ConductorError("sqrt_prime(" + std::to_string(p) + "): conductor " +
                             std::to_string(cond) + " does not divide " + std::to_string(m));
    std::vector<std::pair<int64_t, Rat>> raw;
    if (p == 2) {
        // zeta_8 + zeta_8^{-1} = sqrt(2), positive real part
        raw.emplace_back(m / 8, Rat(1));
        raw.emplace_back((int64_t)7 * m / 8, Rat(1));
    } else if (p % 4 == 1) {
        // Gauss: sum chi(a) zeta_p^a = +sqrt(p) for p = 1 mod 4
        for (uint32_t a = 1; a < p; ++a) raw.emplace_back((int64_t)a * (m / p), Rat(legendre_symbol(a, p)));
    } else {
        // Gauss: sum chi(a) zeta_p^a = +i sqrt(p) for p = 3 mod 4; divide by i
        int64_t i_inv = (int64_t)3 * m / 4;  // zeta_4^{-1}
        for (uint32_t a = 1; a < p; ++a)
            raw.emplace_back(i_inv + (int64_t)a * (m / p), Rat(legendre_symbol(a, p)));
    }
    return FieldElem(f, std::move(raw));
}

uint32_t rational_sqrt_conductor(const Rat& r) {
    if (r == 0) return 1;
    Int v = rat_num(r) * rat_den(r);
    uint32_t cond = 1;
    if (v < 0) {
        cond = 4;
        v = -v;
    }
    for (Int p = 2; p * p <= v && p < 1000000; ++p) {
        if (v % p != 0) continue;
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e % 2) cond = std::lcm(cond, sqrt_conductor((uint32_t)p));
    }
    if (v >= 1000000) throw Error("rational_sqrt_conductor: prime factor too large");
    if (v > 1) cond = std::lcm(cond, sqrt_conductor((uint32_t)v));
    return cond;
}

FieldElem sqrt_rational(const Rat& r, const std::shared_ptr<const CycloField>& f) {
    if (r == 0) return FieldElem::from_rat(f, Rat(0));
    uint32_t cond = rational_sqrt_conductor(r);
    if (f->order() % cond != 0) throw NeedsLargerField(std::lcm(f->order(), cond));
    Int num = rat_num(r), den = rat_den(r);
    FieldElem out = FieldElem::from_rat(f, Rat(1, den));  // sqrt(n/d) = sqrt(n d)/d
    Int v = num * den;
    if (v < 0) {
        out = out * FieldElem::zeta(f, f->order() / 4);
        v = -v;
    }
    Rat square_part(1);
    for (Int p = 2; p * p <= v; ++p) {
        if (v % p != 0) continue;
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) square_part *= Rat(p);
        if (e % 2) out = out * sqrt_prime((uint32_t)p, f);
    }
    if (v > 1) out = out * sqrt_prime((uint32_t)v, f);
    out = FieldElem(square_part) * out;
    if (!(out * out == FieldElem::from_rat(f, r))) throw Error("sqrt_rational: verification failed");
    return out;
}

int q_linear_rank(const std::vector<FieldElem>& elems) {
    if (elems.empty()) return 0;
    std::map<uint32_t, int> colidx;
    for (const auto& e : elems)
        for (auto& [ex, c] : e.terms())
            if (!colidx.count(ex)) colidx.emplace(ex, (int)colidx.size());
    if (colidx.empty()) return 0;  // all zero
    RatMat m((int)elems.size(), (int)colidx.size());
    m.setConstant(Rat(0));
    for (size_t i = 0; i < elems.size(); ++i)
        for (auto& [ex, c] : elems[i].terms()) m((int)i, colidx.at(ex)) = c;
    return exact_rank(std::move(m));
}

}  // namespace diffgal
