#include "sdcyc/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdcyc::numtheory {

namespace {

// Deterministic witness set for n < 2^64 (Sinclair / Jaeschke bounds).
constexpr unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_round(const mpz_class& n, const mpz_class& witness, const mpz_class& odd_part,
                        unsigned long twos) {
    mpz_class x = pow_mod(witness, odd_part, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < twos; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    for (unsigned long p : kWitnesses) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) {
        return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
    }
    unsigned long twos = two_adic_valuation(n - 1);
    mpz_class odd_part = (n - 1) >> twos;
    for (unsigned long w : kWitnesses) {
        if (!miller_rabin_round(n, mpz_class(w), odd_part, twos)) return false;
    }
    return true;
}

Factorization Factorization::of(const mpz_class& n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
    Factorization result;
    result.value_ = n;
    mpz_class rest = n;
    auto strip = [&](const mpz_class& p) {
        unsigned long e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        if (e > 0) result.pairs_.push_back({p, e});
    };
    strip(2);
    for (unsigned long c = 3; c <= kTrialDivisionLimit && rest > 1; c += 2) {
        mpz_class cand(c);
        if (cand * cand > rest) break;
        strip(cand);
    }
    if (rest > 1) {
        if (mpz_class limit(kTrialDivisionLimit); rest > limit * limit && !is_prime(rest)) {
            throw std::invalid_argument(
                "factorize: composite cofactor " + rest.get_str() +
                " exceeds the trial-division range; supply the factorization explicitly");
        }
        result.pairs_.push_back({rest, 1});
    }
    return result;
}

Factorization Factorization::from_pairs(std::vector<PrimePower> pairs) {
    Factorization result;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [p, e] = pairs[i];
        if (e == 0) throw std::invalid_argument("from_pairs: exponent must be positive");
        if (!is_prime(p)) {
            throw std::invalid_argument("from_pairs: " + p.get_str() + " is not prime");
        }
        if (i > 0 && pairs[i - 1].prime >= p) {
            throw std::invalid_argument("from_pairs: primes must be strictly increasing");
        }
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        result.value_ *= pe;
    }
    result.pairs_ = std::move(pairs);
    return result;
}

std::vector<Factorization> Factorization::divisors() const {
    std::vector<Factorization> out;
    out.emplace_back();
    for (const auto& [p, e] : pairs_) {
        const std::size_t base_count = out.size();
        mpz_class pk = 1;
        for (unsigned long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base_count; ++i) {
                Factorization d = out[i];
                d.pairs_.push_back({p, k});
                d.value_ *= pk;
                out.push_back(std::move(d));
            }
        }
    }
    return out;
}

mpz_class euler_phi(const Factorization& f) {
    mpz_class phi = 1;
    for (const auto& [p, e] : f.pairs()) {
        phi *= p - 1;
        for (unsigned long k = 1; k < e; ++k) phi *= p;
    }
    return phi;
}

unsigned long two_adic_valuation(const mpz_class& n) {
    if (n < 1) throw std::invalid_argument("two_adic_valuation: argument must be positive");
    return mpz_scan1(n.get_mpz_t(), 0);
}

mpz_class pow_mod(const mpz_class& base, const mpz_class& exp, const mpz_class& m) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class mult_order(const mpz_class& a, const Factorization& m) {
    const mpz_class& mod = m.value();
    if (mod < 1) throw std::invalid_argument("mult_order: modulus must be positive");
    if (mod == 1) return 1;
    if (gcd(a, mod) != 1) {
        throw std::invalid_argument("mult_order: arguments must be coprime");
    }
    // ord divides phi(m); strip prime factors of phi(m) while a^(k/rho) = 1.
    mpz_class k = euler_phi(m);
    const Factorization k_fact = factorize(k);
    for (const auto& [rho, e] : k_fact.pairs()) {
        (void)e;
        while (mpz_divisible_p(k.get_mpz_t(), rho.get_mpz_t())) {
            mpz_class reduced = k / rho;
            if (pow_mod(a, reduced, mod) != 1) break;
            k = reduced;
        }
    }
    return k;
}

mpz_class mult_order(const mpz_class& a, const mpz_class& m) {
    if (m < 1) throw std::invalid_argument("mult_order: modulus must be positive");
    if (m == 1) return 1;
    if (gcd(a, m) != 1) throw std::invalid_argument("mult_order: arguments must be coprime");
    return mult_order(a, factorize(m));
}

bool two_is_primitive_root_mod_p2(const mpz_class& p) {
    return mult_order(2, p) == p - 1 && pow_mod(2, p - 1, p * p) != 1;
}

OrderProfile order_profile(const mpz_class& p, unsigned long r, unsigned long l) {
    if (p == 2 || !is_prime(p)) {
        throw std::invalid_argument("order_profile: p must be an odd prime");
    }
    if (r < 1 || l < 1) throw std::invalid_argument("order_profile: r and l must be positive");
    OrderProfile prof;
    prof.p = p;
    prof.l = l;
    prof.r = r;
    prof.ord_p_2 = mult_order(2, p);
    prof.gamma = two_adic_valuation(prof.ord_p_2);
    prof.v2_l = two_adic_valuation(mpz_class(l));
    prof.ord_base = prof.ord_p_2 / gcd(prof.ord_p_2, mpz_class(l));
    // Climb the ladder: ord_{p^i}(2^l) equals ord_base exactly while
    // (2^l)^ord_base = 1 (mod p^i); after the first failure it gains a
    // factor p per level, so alpha is the last passing level.
    prof.alpha = 1;
    mpz_class pk = p;
    for (unsigned long i = 2; i <= r; ++i) {
        pk *= p;
        mpz_class base = pow_mod(2, mpz_class(l), pk);
        if (pow_mod(base, prof.ord_base, pk) != 1) break;
        prof.alpha = i;
    }
    return prof;
}

mpz_class ord_prime_power(const OrderProfile& profile, unsigned long i, bool doubled) {
    if (i < 1) throw std::invalid_argument("ord_prime_power: level must be positive");
    if (i > profile.r) {
        throw std::out_of_range("ord_prime_power: level exceeds the profile range");
    }
    mpz_class ord = profile.ord_base;
    for (unsigned long k = profile.alpha; k < i; ++k) ord *= profile.p;
    if (doubled && mpz_even_p(profile.ord_base.get_mpz_t())) ord /= 2;
    return ord;
}

}  // namespace sdcyc::numtheory
