#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sdcyc::oracle {

/// Bit-packed polynomials over the 2-element field: bit i holds the
/// coefficient of x^i. Degrees stay below 32 throughout.
namespace gf2 {

int degree(std::uint64_t f);  // -1 for the zero polynomial
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t mod(std::uint64_t a, std::uint64_t f);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Standard criterion: x^{2^d} = x mod f, and gcd(x^{2^{d/t}} - x, f) = 1
/// for every prime t dividing d (so f has no roots in a proper subfield).
bool is_irreducible(std::uint64_t f);

}  // namespace gf2

/// The field GF(2^l) in the canonical representation: the modulus is the
/// lexicographically smallest monic irreducible of degree l (coefficients
/// read high-to-low as a binary number). Elements are bit-vectors < 2^l.
class FieldRep {
public:
    static FieldRep canonical(unsigned degree);

    unsigned degree() const { return degree_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint64_t order() const { return std::uint64_t(1) << degree_; }

    static constexpr std::uint32_t add(std::uint32_t a, std::uint32_t b) { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;  // rejects 0

    /// Frobenius by the square root of the field order: a^(2^(l/2)).
    /// Requires even degree.
    std::uint32_t conj_sqrt(std::uint32_t a) const;

    bool operator==(const FieldRep&) const = default;

private:
    FieldRep(unsigned degree, std::uint32_t modulus) : degree_(degree), modulus_(modulus) {}

    unsigned degree_;
    std::uint32_t modulus_;
};

/// A polynomial over a FieldRep, coefficients lowest degree first, leading
/// coefficient nonzero unless zero.
class GFPoly {
public:
    explicit GFPoly(FieldRep field) : field_(field) {}
    GFPoly(FieldRep field, std::vector<std::uint32_t> coeffs);

    static GFPoly one(FieldRep field) { return {field, {1}}; }
    static GFPoly x(FieldRep field) { return {field, {0, 1}}; }
    /// c * x^k
    static GFPoly monomial(FieldRep field, std::uint32_t c, std::size_t k);

    const FieldRep& field() const { return field_; }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    std::uint32_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint32_t leading() const;

    GFPoly monic() const;
    std::string str() const;

    bool operator==(const GFPoly&) const = default;

private:
    FieldRep field_;
    std::vector<std::uint32_t> coeffs_;

    void normalize();
};

GFPoly operator+(const GFPoly& a, const GFPoly& b);
GFPoly operator*(const GFPoly& a, const GFPoly& b);
std::pair<GFPoly, GFPoly> divrem(const GFPoly& a, const GFPoly& b);
GFPoly operator/(const GFPoly& a, const GFPoly& b);
GFPoly operator%(const GFPoly& a, const GFPoly& b);
GFPoly gcd(const GFPoly& a, const GFPoly& b);  // monic
GFPoly pow(const GFPoly& base, unsigned long e);

/// f*(x) = f0^{-1} x^k f(1/x): monic coefficient reversal. Rejects
/// polynomials with zero constant term.
GFPoly reciprocal(const GFPoly& f);

/// f†(x): reversal with every coefficient raised to the square root of the
/// field order first. Requires a square-order field and f(0) != 0.
GFPoly conj_reciprocal(const GFPoly& f);

/// Monic irreducible factors of x^n - 1 over the field, for odd n (the
/// polynomial is then squarefree). Distinct-degree splitting followed by
/// deterministic equal-degree splitting via trace maps of c*x^j candidates.
/// Sorted by degree, then by coefficients read high to low.
std::vector<GFPoly> factor_xn_minus_1(unsigned long n, FieldRep field);

}  // namespace sdcyc::oracle
