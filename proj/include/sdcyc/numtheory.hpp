#pragma once

#include <gmpxx.h>

#include <vector>

namespace sdcyc::numtheory {

struct PrimePower {
    mpz_class prime;
    unsigned long exponent;

    bool operator==(const PrimePower&) const = default;
};

/// A positive integer carried as its canonical prime factorization.
/// Primes are strictly increasing and certified prime; the empty list is 1.
class Factorization {
public:
    Factorization() : value_(1) {}

    /// Factors n by trial division up to kTrialDivisionLimit; a remaining
    /// cofactor must pass the primality check or the input is rejected as
    /// out of the supported range.
    static Factorization of(const mpz_class& n);

    /// Builds a factorization from caller-supplied pairs (validated:
    /// strictly increasing certified primes, positive exponents).
    static Factorization from_pairs(std::vector<PrimePower> pairs);

    const std::vector<PrimePower>& pairs() const { return pairs_; }
    const mpz_class& value() const { return value_; }
    bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }

    /// All divisors of value(), each as a Factorization (order: mixed-radix
    /// over the exponent tuples, starting at 1).
    std::vector<Factorization> divisors() const;

    bool operator==(const Factorization&) const = default;

private:
    std::vector<PrimePower> pairs_;
    mpz_class value_;
};

inline constexpr unsigned long kTrialDivisionLimit = 1'000'000;

/// Deterministic Miller-Rabin below 2^64; BPSW/Miller-Rabin via GMP above.
bool is_prime(const mpz_class& n);

inline Factorization factorize(const mpz_class& n) { return Factorization::of(n); }

mpz_class euler_phi(const Factorization& f);

/// Largest g with 2^g | n. Requires n >= 1.
unsigned long two_adic_valuation(const mpz_class& n);

mpz_class pow_mod(const mpz_class& base, const mpz_class& exp, const mpz_class& m);

/// Least k >= 1 with a^k = 1 (mod m). Requires gcd(a, m) = 1; m = 1 gives 1
/// (trivial group). Computed by descending through the prime divisors of
/// phi(m) rather than linear search.
mpz_class mult_order(const mpz_class& a, const mpz_class& m);
mpz_class mult_order(const mpz_class& a, const Factorization& m);

/// ord_{p^2}(2) == p(p-1)?
bool two_is_primitive_root_mod_p2(const mpz_class& p);

/// Order data of 2^l modulo the powers of an odd prime p, up to p^r.
///
/// ord_{p^i}(2^l) stays at ord_base for i <= alpha and then grows by a
/// factor p per level; alpha is the last level before the growth starts,
/// capped at r (levels above r are never queried).
struct OrderProfile {
    mpz_class p;
    unsigned long l = 1;
    unsigned long r = 1;
    mpz_class ord_p_2;       // ord_p(2)
    unsigned long gamma = 0; // 2^gamma || ord_p(2)
    unsigned long v2_l = 0;  // 2^v2_l || l
    unsigned long alpha = 1; // largest i <= r with ord_{p^i}(2^l) = ord_base
    mpz_class ord_base;      // ord_p(2^l) = ord_p(2) / gcd(ord_p(2), l)
};

OrderProfile order_profile(const mpz_class& p, unsigned long r, unsigned long l);

/// ord_{p^i}(2^l), or ord_{p^i}(2^{2l}) when doubled is set (the value is
/// halved exactly when ord_base is even; the parity of the ladder never
/// changes with i). Requires 1 <= i <= profile.r.
mpz_class ord_prime_power(const OrderProfile& profile, unsigned long i, bool doubled = false);

}  // namespace sdcyc::numtheory
