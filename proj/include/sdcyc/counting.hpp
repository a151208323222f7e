#pragma once

#include <gmpxx.h>

#include <string>

#include "sdcyc/numtheory.hpp"

namespace sdcyc::counting {

enum class Kind { euclidean, hermitian };
enum class Method { general_sum, prime_power, two_prime };

std::string to_string(Kind kind);
std::string to_string(Method method);

/// An even code length n = 2^nu * n' with n' odd and nu >= 1.
struct LengthSpec {
    unsigned long nu;
    numtheory::Factorization odd_part;

    LengthSpec(unsigned long nu, numtheory::Factorization odd_part);
};

/// The code count (2^nu + 1)^exponent, with the exact expanded value.
struct CountResult {
    mpz_class exponent;
    mpz_class base;   // 2^nu + 1
    mpz_class value;  // base^exponent, exact
    Kind kind;
    Method method;
};

/// Number of bits allowed in an expanded CountResult::value; beyond this a
/// resource_limit_error is thrown (query the exponent instead).
inline constexpr unsigned long kMaxValueBits = 1ul << 26;

/// Exponent of the Euclidean count: (1/2) sum over d | n' of
/// chi_l(d) * phi(d) / ord_d(2^l), accumulated in exact rationals.
/// Throws std::logic_error if the halved sum is not an integer.
mpz_class t_general(const numtheory::Factorization& n_prime, unsigned long l);

/// Hermitian analogue with lambda_l and ord_d(2^{2l}).
mpz_class tau_general(const numtheory::Factorization& n_prime, unsigned long l);

/// Closed form for t(p^r, l): zero when 2^gamma does not divide l; the
/// running-sum of gcd(p^{i-1}(p-1), l) halved when 2 generates mod p^2;
/// otherwise gcd(ord_p(2), l) / (2 ord_p(2)) * (p^a - 1 + (p-1)(r-a)p^{a-1})
/// with a the order-ladder plateau.
mpz_class t_prime_power(const mpz_class& p, unsigned long r, unsigned long l);

/// Closed form for tau(p^r, l), dispatched on v2(l) against gamma:
/// v2(l) >= gamma uses the halved coefficient, v2(l) = gamma - 1 gives zero,
/// v2(l) < gamma - 1 uses the doubled coefficient.
mpz_class tau_prime_power(const mpz_class& p, unsigned long r, unsigned long l);

/// (r/2) * gcd(p-1, l), valid only under: p does not divide l, ord_p(2^l)
/// odd, and 2 a primitive root mod p^2. Rejects inputs violating these.
mpz_class t_corollary_check(const mpz_class& p, unsigned long r, unsigned long l);

/// r * gcd((p-1)/2, l), valid only under: p does not divide l, 2 a
/// primitive root mod p^2, and ord_p(2^l) odd or divisible by 4.
mpz_class tau_corollary_check(const mpz_class& p, unsigned long r, unsigned long l);

/// Whether the mixed-divisor double sum of the two-prime formulas carries
/// its 1/2 factor. `unhalved` reproduces the uncorrected closed form, which
/// overcounts (kept for fault-injection in the verify harness).
enum class DoubleSum { halved, unhalved };

/// t(p^r q^s, l) = chi_l(p) t(p^r,l) + chi_l(q) t(q^s,l)
///   + chi_l(pq) * (1/2) * sum_{i,j} phi(p^i q^j) / lcm of the two orders.
mpz_class t_two_primes(const mpz_class& p, const mpz_class& q, unsigned long r, unsigned long s,
                       unsigned long l, DoubleSum convention = DoubleSum::halved);

/// Hermitian analogue with lambda and the orders of 2^{2l}.
mpz_class tau_two_primes(const mpz_class& p, const mpz_class& q, unsigned long r, unsigned long s,
                         unsigned long l, DoubleSum convention = DoubleSum::halved);

struct ExponentResult {
    mpz_class exponent;
    Method method;
};

/// t or tau of n' via the cheapest applicable route: prime-power when
/// n' = p^r, two-prime when n' = p^r q^s, general sum otherwise.
ExponentResult code_count_exponent(const numtheory::Factorization& odd_part, unsigned long l,
                                   Kind kind);
ExponentResult code_count_exponent(const LengthSpec& spec, unsigned long l, Kind kind);

/// Full count (2^nu + 1)^t resp. (2^nu + 1)^tau with the exact value.
CountResult count_self_dual(const LengthSpec& spec, unsigned long l, Kind kind);

/// A self-dual cyclic code of length n exists over a characteristic-2
/// field iff n is even (for either inner product).
bool exists_self_dual(const mpz_class& n, unsigned long field_exponent, Kind kind);

enum class TauTOrdering { equal, tau_zero_less, t_zero_less };

std::string to_string(TauTOrdering ordering);

struct TauTComparison {
    TauTOrdering ordering;
    mpz_class tau;        // tau(p^r, l)
    mpz_class t_doubled;  // t(p^r, 2l)
};

/// Compares tau(p^r, l) with t(p^r, 2l): equal when 2^gamma | l, tau = 0 <
/// t when 2^{gamma-1} || l, tau > t = 0 otherwise. The claimed relation is
/// re-verified against the computed values before returning.
TauTComparison compare_tau_t(const mpz_class& p, unsigned long r, unsigned long l);

}  // namespace sdcyc::counting
