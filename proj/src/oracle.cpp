#include "sdcyc/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "sdcyc/errors.hpp"
#include "sdcyc/numtheory.hpp"

namespace sdcyc::oracle {

namespace nt = sdcyc::numtheory;

CosetPairing build_cosets(unsigned long n_prime, unsigned long l, counting::Kind kind) {
    if (n_prime < 1 || n_prime % 2 == 0) {
        throw std::invalid_argument("build_cosets: n' must be odd and positive");
    }
    if (l < 1) throw std::invalid_argument("build_cosets: l must be positive");
    const unsigned long n = n_prime;
    const unsigned long bits = kind == counting::Kind::euclidean ? l : 2 * l;
    mpz_class q = nt::pow_mod(2, mpz_class(bits), mpz_class(n));
    CosetPairing cp;
    cp.modulus_n = n;
    cp.multiplier = n == 1 ? 1 : q.get_ui();

    std::vector<std::size_t> coset_of(n, SIZE_MAX);
    for (unsigned long a = 0; a < n; ++a) {
        if (coset_of[a] != SIZE_MAX) continue;
        std::vector<unsigned long> orbit;
        unsigned long x = a;
        do {
            coset_of[x] = cp.cosets.size();
            orbit.push_back(x);
            x = mpz_class(mpz_class(x) * cp.multiplier % n).get_ui();
        } while (x != a);
        std::sort(orbit.begin(), orbit.end());
        cp.cosets.push_back(std::move(orbit));
    }

    // Reciprocal image of the coset of a: the coset of -a, or of -2^l * a
    // in the Hermitian case.
    mpz_class twist = kind == counting::Kind::euclidean
                          ? mpz_class(n - 1)
                          : mpz_class(n) - nt::pow_mod(2, mpz_class(l), mpz_class(n));
    cp.pairing.resize(cp.cosets.size());
    for (std::size_t i = 0; i < cp.cosets.size(); ++i) {
        unsigned long a = cp.cosets[i].front();
        unsigned long target = n == 1 ? 0 : mpz_class(twist * a % n).get_ui();
        cp.pairing[i] = coset_of[target];
    }
    return cp;
}

unsigned long pair_count(const CosetPairing& pairing) {
    unsigned long moved = 0;
    for (std::size_t i = 0; i < pairing.pairing.size(); ++i) {
        if (pairing.pairing[i] >= pairing.cosets.size()) {
            throw std::invalid_argument("pair_count: pairing index out of range");
        }
        if (pairing.pairing[pairing.pairing[i]] != i) {
            throw std::invalid_argument("pair_count: pairing is not an involution");
        }
        if (pairing.pairing[i] != i) ++moved;
    }
    return moved / 2;
}

unsigned long enumerate_self_dual(const counting::LengthSpec& spec, unsigned long l,
                                  counting::Kind kind, EnumerationLimits limits,
                                  std::vector<GFPoly>* generators) {
    if (l < 1) throw std::invalid_argument("enumerate_self_dual: l must be positive");
    mpz_class n_big = spec.odd_part.value() << spec.nu;
    if (n_big > limits.max_length) {
        throw resource_limit_error("enumerate_self_dual: length " + n_big.get_str() +
                                   " exceeds the limit of " + std::to_string(limits.max_length));
    }
    const unsigned long n_prime = spec.odd_part.value().get_ui();
    const unsigned long half_mult = 1ul << spec.nu;  // x^n - 1 = (x^n' - 1)^(2^nu)
    const bool hermitian = kind == counting::Kind::hermitian;

    FieldRep field = FieldRep::canonical(hermitian ? 2 * l : l);
    std::vector<GFPoly> factors = factor_xn_minus_1(n_prime, field);
    const std::size_t k = factors.size();

    mpz_class total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= half_mult + 1;
    if (total > limits.max_iterations) {
        throw resource_limit_error("enumerate_self_dual: " + total.get_str() +
                                   " exponent vectors exceed the iteration budget of " +
                                   std::to_string(limits.max_iterations));
    }

    // factor_powers[i][e] = factors[i]^e for e = 0..2^nu
    std::vector<std::vector<GFPoly>> factor_powers(k);
    for (std::size_t i = 0; i < k; ++i) {
        factor_powers[i].push_back(GFPoly::one(field));
        for (unsigned long e = 1; e <= half_mult; ++e) {
            factor_powers[i].push_back(factor_powers[i].back() * factors[i]);
        }
    }

    std::vector<unsigned long> exponents(k, 0);
    unsigned long count = 0;
    while (true) {
        GFPoly g = GFPoly::one(field);
        GFPoly h = GFPoly::one(field);
        for (std::size_t i = 0; i < k; ++i) {
            g = g * factor_powers[i][exponents[i]];
            h = h * factor_powers[i][half_mult - exponents[i]];
        }
        GFPoly mirror = hermitian ? conj_reciprocal(h) : reciprocal(h);
        if (g == mirror) {
            ++count;
            if (generators) generators->push_back(g);
        }

        std::size_t pos = 0;  // odometer step
        while (pos < k && exponents[pos] == half_mult) {
            exponents[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
        ++exponents[pos];
    }
    return count;
}

}  // namespace sdcyc::oracle
