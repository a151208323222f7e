#include "sdcyc/gf2poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdcyc::oracle {

namespace gf2 {

int degree(std::uint64_t f) {
    return f == 0 ? -1 : 63 - __builtin_clzll(f);
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

std::uint64_t mod(std::uint64_t a, std::uint64_t f) {
    const int df = degree(f);
    for (int d = degree(a); d >= df; d = degree(a)) {
        a ^= f << (d - df);
    }
    return a;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t r = mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

namespace {

// x^(2^k) mod f by repeated squaring of the residue.
std::uint64_t frobenius_power_of_x(unsigned k, std::uint64_t f) {
    std::uint64_t h = mod(2, f);  // the polynomial x
    for (unsigned i = 0; i < k; ++i) h = mod(mul(h, h), f);
    return h;
}

}  // namespace

bool is_irreducible(std::uint64_t f) {
    const int d = degree(f);
    if (d < 1) return false;
    if ((f & 1) == 0 && f != 2) return false;  // divisible by x
    if (frobenius_power_of_x(static_cast<unsigned>(d), f) != mod(2, f)) return false;
    for (int t = 2; t <= d; ++t) {
        if (d % t != 0) continue;
        bool t_prime = true;
        for (int u = 2; u * u <= t; ++u) {
            if (t % u == 0) t_prime = false;
        }
        if (!t_prime) continue;
        std::uint64_t sub = frobenius_power_of_x(static_cast<unsigned>(d / t), f) ^ mod(2, f);
        if (gcd(f, sub) != 1) return false;
    }
    return true;
}

}  // namespace gf2

FieldRep FieldRep::canonical(unsigned degree) {
    if (degree < 1 || degree > 30) {
        throw std::invalid_argument("FieldRep: supported degrees are 1..30");
    }
    for (std::uint64_t cand = std::uint64_t(1) << degree; cand < std::uint64_t(2) << degree;
         ++cand) {
        if (gf2::is_irreducible(cand)) {
            return FieldRep(degree, static_cast<std::uint32_t>(cand));
        }
    }
    throw std::logic_error("FieldRep: no irreducible modulus found");  // unreachable
}

std::uint32_t FieldRep::mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(gf2::mod(gf2::mul(a, b), modulus_));
}

std::uint32_t FieldRep::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e != 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t FieldRep::inv(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("FieldRep: inversion of zero");
    return pow(a, order() - 2);
}

std::uint32_t FieldRep::conj_sqrt(std::uint32_t a) const {
    if (degree_ % 2 != 0) {
        throw std::invalid_argument("FieldRep: conjugation requires a square-order field");
    }
    for (unsigned i = 0; i < degree_ / 2; ++i) a = mul(a, a);
    return a;
}

GFPoly::GFPoly(FieldRep field, std::vector<std::uint32_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (std::uint32_t c : coeffs_) {
        if (c >= field_.order()) throw std::invalid_argument("GFPoly: coefficient out of field");
    }
    normalize();
}

GFPoly GFPoly::monomial(FieldRep field, std::uint32_t c, std::size_t k) {
    std::vector<std::uint32_t> coeffs(k + 1, 0);
    coeffs[k] = c;
    return {field, std::move(coeffs)};
}

std::uint32_t GFPoly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("GFPoly: zero polynomial has no leading term");
    return coeffs_.back();
}

void GFPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

GFPoly GFPoly::monic() const {
    if (is_zero() || is_monic()) return *this;
    std::uint32_t scale = field_.inv(leading());
    std::vector<std::uint32_t> c = coeffs_;
    for (auto& v : c) v = field_.mul(v, scale);
    return {field_, std::move(c)};
}

std::string GFPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        std::uint32_t c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += c == 1 ? "1" : "g" + std::to_string(c);  // element by bit pattern
        } else {
            if (c != 1) out += "g" + std::to_string(c) + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

void require_same_field(const GFPoly& a, const GFPoly& b) {
    if (!(a.field() == b.field())) {
        throw std::invalid_argument("GFPoly: operands belong to different fields");
    }
}

}  // namespace

GFPoly operator+(const GFPoly& a, const GFPoly& b) {
    require_same_field(a, b);
    std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = FieldRep::add(a.coeff(i), b.coeff(i));
    return {a.field(), std::move(c)};
}

GFPoly operator*(const GFPoly& a, const GFPoly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return GFPoly(a.field());
    std::vector<std::uint32_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            c[i + j] ^= a.field().mul(a.coeffs()[i], b.coeffs()[j]);
        }
    }
    return {a.field(), std::move(c)};
}

std::pair<GFPoly, GFPoly> divrem(const GFPoly& a, const GFPoly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw std::invalid_argument("GFPoly: division by zero");
    if (a.degree() < b.degree()) return {GFPoly(a.field()), a};
    const std::uint32_t lead_inv = a.field().inv(b.leading());
    const std::size_t nb = b.coeffs().size();
    std::vector<std::uint32_t> rem = a.coeffs();
    std::vector<std::uint32_t> quot(rem.size() - nb + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        std::uint32_t factor = a.field().mul(rem[k + nb - 1], lead_inv);
        if (factor == 0) continue;
        quot[k] = factor;
        for (std::size_t j = 0; j < nb; ++j) {
            rem[k + j] ^= a.field().mul(factor, b.coeffs()[j]);
        }
    }
    return {GFPoly(a.field(), std::move(quot)), GFPoly(a.field(), std::move(rem))};
}

GFPoly operator/(const GFPoly& a, const GFPoly& b) { return divrem(a, b).first; }
GFPoly operator%(const GFPoly& a, const GFPoly& b) { return divrem(a, b).second; }

GFPoly gcd(const GFPoly& a, const GFPoly& b) {
    GFPoly u = a, v = b;
    while (!v.is_zero()) {
        GFPoly r = u % v;
        u = v;
        v = r;
    }
    return u.monic();
}

GFPoly pow(const GFPoly& base, unsigned long e) {
    GFPoly r = GFPoly::one(base.field());
    GFPoly b = base;
    while (e != 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

GFPoly reciprocal(const GFPoly& f) {
    if (f.is_zero() || f.coeff(0) == 0) {
        throw std::invalid_argument("reciprocal: constant term must be nonzero");
    }
    std::vector<std::uint32_t> rev(f.coeffs().rbegin(), f.coeffs().rend());
    std::uint32_t scale = f.field().inv(f.coeff(0));
    for (auto& c : rev) c = f.field().mul(c, scale);
    return {f.field(), std::move(rev)};
}

GFPoly conj_reciprocal(const GFPoly& f) {
    if (f.is_zero() || f.coeff(0) == 0) {
        throw std::invalid_argument("conj_reciprocal: constant term must be nonzero");
    }
    std::vector<std::uint32_t> conj = f.coeffs();
    for (auto& c : conj) c = f.field().conj_sqrt(c);
    return reciprocal(GFPoly(f.field(), std::move(conj)));
}

namespace {

// q-th power mod f, q the field order: deg(field) squarings.
GFPoly frobenius_mod(const GFPoly& h, const GFPoly& f) {
    GFPoly r = h;
    for (unsigned i = 0; i < f.field().degree(); ++i) r = (r * r) % f;
    return r;
}

// Absolute trace (down to the 2-element field) of u as an element of the
// degree-d factor algebra: sum of u^(2^i) mod g for i < deg(field)*d.
GFPoly trace_map(const GFPoly& u, const GFPoly& g, unsigned d) {
    GFPoly acc = u, cur = u;
    const unsigned bits = g.field().degree() * d;
    for (unsigned i = 1; i < bits; ++i) {
        cur = (cur * cur) % g;
        acc = acc + cur;
    }
    return acc;
}

// Splits a squarefree product of irreducibles of equal degree d. The trace
// of c*x^j is constant on each factor's roots, so a gcd against it peels
// off the factors whose trace vanishes; candidates run over the basis
// elements c = 2^b and increasing j until every pair is separated.
void equal_degree_split(const GFPoly& g, unsigned d, std::vector<GFPoly>& out) {
    if (g.degree() == static_cast<int>(d)) {
        out.push_back(g.monic());
        return;
    }
    for (std::size_t j = 1; j <= static_cast<std::size_t>(g.degree()) * 64; ++j) {
        for (unsigned b = 0; b < g.field().degree(); ++b) {
            GFPoly u = GFPoly::monomial(g.field(), std::uint32_t(1) << b, j) % g;
            GFPoly t = trace_map(u, g, d);
            GFPoly s = gcd(g, t);
            if (s.degree() > 0 && s.degree() < g.degree()) {
                equal_degree_split(s, d, out);
                equal_degree_split(g / s, d, out);
                return;
            }
        }
    }
    throw std::logic_error("equal_degree_split: no separating trace candidate found");
}

}  // namespace

std::vector<GFPoly> factor_xn_minus_1(unsigned long n, FieldRep field) {
    if (n < 1 || n % 2 == 0) {
        throw std::invalid_argument("factor_xn_minus_1: n must be odd and positive");
    }
    std::vector<std::uint32_t> coeffs(n + 1, 0);
    coeffs[0] = 1;
    coeffs[n] = 1;  // x^n - 1 = x^n + 1 in characteristic 2
    GFPoly f(field, std::move(coeffs));

    std::vector<GFPoly> factors;
    GFPoly h = GFPoly::x(field) % f;
    for (unsigned d = 1; !f.is_zero() && f.degree() > 0; ++d) {
        if (2 * static_cast<int>(d) > f.degree()) {
            factors.push_back(f.monic());  // remainder is irreducible
            break;
        }
        h = frobenius_mod(h, f);
        GFPoly g = gcd(f, h + GFPoly::x(field));
        if (g.degree() > 0) {
            equal_degree_split(g, d, factors);
            f = f / g;
            h = h % f;
        }
    }
    std::sort(factors.begin(), factors.end(), [](const GFPoly& a, const GFPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            auto ca = a.coeff(static_cast<std::size_t>(i));
            auto cb = b.coeff(static_cast<std::size_t>(i));
            if (ca != cb) return ca < cb;
        }
        return false;
    });
    return factors;
}

}  // namespace sdcyc::oracle
