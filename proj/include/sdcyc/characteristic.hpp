#pragma once

#include <gmpxx.h>

#include <optional>

namespace sdcyc::characteristic {

/// Outcome of a chi/lambda evaluation. When the value is 0 the witness is
/// an exponent s with j | 2^{l*s} + 1 (odd s for lambda).
struct ChiResult {
    int value = 1;
    std::optional<mpz_class> witness;
};

/// chi_l(j) = 0 iff some s >= 1 has j | 2^{l*s} + 1, else 1.
///
/// Decided without searching: -1 lies in the cyclic group generated by 2^l
/// mod j iff that group's order m is even and (2^l)^{m/2} = -1 (a cyclic
/// group has at most one element of order 2). Requires j odd, j >= 1.
ChiResult chi(unsigned long l, const mpz_class& j);

/// lambda_l(j) = 0 iff some odd s >= 1 has j | 2^{l*s} + 1, else 1.
/// The solutions s form the residue class m/2 mod m, so an odd solution
/// exists iff m/2 is odd.
ChiResult lambda(unsigned long l, const mpz_class& j);

/// chi_l(p) for an odd prime p: 1 iff ord_p(2^l) is odd.
int chi_prime(unsigned long l, const mpz_class& p);

/// lambda_l(p) for an odd prime p: 0 iff 2 || ord_p(2^l).
int lambda_prime(unsigned long l, const mpz_class& p);

/// chi_l(pq) for distinct odd primes, composed from the per-prime values
/// and the 2-adic valuations of ord_p(2) and ord_q(2).
int chi_two_primes(unsigned long l, const mpz_class& p, const mpz_class& q);

/// lambda_l(pq) = max(lambda_l(p), lambda_l(q)).
int lambda_two_primes(unsigned long l, const mpz_class& p, const mpz_class& q);

}  // namespace sdcyc::characteristic
