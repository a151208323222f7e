#include "sdcyc/characteristic.hpp"

#include <stdexcept>

#include "sdcyc/numtheory.hpp"

namespace sdcyc::characteristic {

namespace nt = sdcyc::numtheory;

namespace {

void require_odd(const mpz_class& j, const char* who) {
    if (j < 1 || mpz_even_p(j.get_mpz_t())) {
        throw std::invalid_argument(std::string(who) + ": argument must be odd and positive");
    }
}

mpz_class require_odd_prime(const mpz_class& p, const char* who) {
    if (p == 2 || !nt::is_prime(p)) {
        throw std::invalid_argument(std::string(who) + ": argument must be an odd prime");
    }
    return p;
}

// ord_p(2^l) = ord_p(2) / gcd(ord_p(2), l).
mpz_class ord_of_two_power(unsigned long l, const mpz_class& p) {
    mpz_class ord = nt::mult_order(2, p);
    return ord / gcd(ord, mpz_class(l));
}

}  // namespace

ChiResult chi(unsigned long l, const mpz_class& j) {
    require_odd(j, "chi");
    if (j == 1) return {0, mpz_class(1)};
    mpz_class a = nt::pow_mod(2, mpz_class(l), j);
    mpz_class m = nt::mult_order(a, j);
    if (mpz_even_p(m.get_mpz_t())) {
        mpz_class half = m / 2;
        if (nt::pow_mod(a, half, j) == j - 1) return {0, half};
    }
    return {1, std::nullopt};
}

ChiResult lambda(unsigned long l, const mpz_class& j) {
    require_odd(j, "lambda");
    if (j == 1) return {0, mpz_class(1)};
    mpz_class a = nt::pow_mod(2, mpz_class(l), j);
    mpz_class m = nt::mult_order(a, j);
    if (mpz_even_p(m.get_mpz_t())) {
        mpz_class half = m / 2;
        if (mpz_odd_p(half.get_mpz_t()) && nt::pow_mod(a, half, j) == j - 1) return {0, half};
    }
    return {1, std::nullopt};
}

int chi_prime(unsigned long l, const mpz_class& p) {
    require_odd_prime(p, "chi_prime");
    return mpz_odd_p(ord_of_two_power(l, p).get_mpz_t()) ? 1 : 0;
}

int lambda_prime(unsigned long l, const mpz_class& p) {
    require_odd_prime(p, "lambda_prime");
    return nt::two_adic_valuation(ord_of_two_power(l, p)) == 1 ? 0 : 1;
}

int chi_two_primes(unsigned long l, const mpz_class& p, const mpz_class& q) {
    require_odd_prime(p, "chi_two_primes");
    require_odd_prime(q, "chi_two_primes");
    if (p == q) throw std::invalid_argument("chi_two_primes: primes must be distinct");
    if (chi_prime(l, p) == 1 || chi_prime(l, q) == 1) return 1;
    // Both per-prime values 0: the product is 0 exactly when the 2-adic
    // valuations of ord_p(2) and ord_q(2) coincide.
    unsigned long g = nt::two_adic_valuation(nt::mult_order(2, p));
    unsigned long b = nt::two_adic_valuation(nt::mult_order(2, q));
    return g != b ? 1 : 0;
}

int lambda_two_primes(unsigned long l, const mpz_class& p, const mpz_class& q) {
    require_odd_prime(p, "lambda_two_primes");
    require_odd_prime(q, "lambda_two_primes");
    if (p == q) throw std::invalid_argument("lambda_two_primes: primes must be distinct");
    return lambda_prime(l, p) == 1 || lambda_prime(l, q) == 1 ? 1 : 0;
}

}  // namespace sdcyc::characteristic
