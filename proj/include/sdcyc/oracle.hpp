#pragma once

#include <cstddef>
#include <vector>

#include "sdcyc/counting.hpp"
#include "sdcyc/gf2poly.hpp"

namespace sdcyc::oracle {

/// Cyclotomic cosets of a multiplier mod n', together with the involution
/// induced on them by the reciprocal map a -> -a (Euclidean) or the
/// conjugate-reciprocal map a -> -2^l * a (Hermitian).
struct CosetPairing {
    unsigned long modulus_n = 1;    // n'
    unsigned long multiplier = 1;   // 2^l or 2^{2l} mod n'
    std::vector<std::vector<unsigned long>> cosets;  // sorted, partition of 0..n'-1
    std::vector<std::size_t> pairing;                // involution on coset indices
};

/// Requires n' odd. For Euclidean the cosets are orbits of 2^l mod n', for
/// Hermitian orbits of 2^{2l} mod n'.
CosetPairing build_cosets(unsigned long n_prime, unsigned long l, counting::Kind kind);

/// Number of unordered pairs {C, C'} with C' = pairing(C) != C. This is the
/// ground truth for the t / tau exponents.
unsigned long pair_count(const CosetPairing& pairing);

struct EnumerationLimits {
    unsigned long max_length = 30;
    unsigned long max_iterations = 1'000'000;
};

/// Counts self-dual cyclic codes of length 2^nu * n' by brute force:
/// factors x^n - 1, walks every generator exponent vector, and keeps the
/// divisors g with g = h* (resp. g = h†) for h = (x^n - 1) / g. Throws
/// resource_limit_error when the instance exceeds the limits. When
/// `generators` is given, the matching g are appended to it.
unsigned long enumerate_self_dual(const counting::LengthSpec& spec, unsigned long l,
                                  counting::Kind kind, EnumerationLimits limits = {},
                                  std::vector<GFPoly>* generators = nullptr);

}  // namespace sdcyc::oracle
