#include "sdcyc/counting.hpp"

#include <stdexcept>
#include <utility>

#include "sdcyc/characteristic.hpp"
#include "sdcyc/errors.hpp"

namespace sdcyc::counting {

namespace nt = sdcyc::numtheory;
namespace chr = sdcyc::characteristic;

namespace {

mpz_class exact_int(const mpq_class& q, const char* who) {
    mpq_class r = q;
    r.canonicalize();
    if (r.get_den() != 1) {
        throw std::logic_error(std::string(who) + ": sum is not an integer (" + r.get_str() +
                               "); the pairing count must be integral");
    }
    return r.get_num();
}

void require_positive(unsigned long v, const char* who, const char* name) {
    if (v < 1) {
        throw std::invalid_argument(std::string(who) + ": " + name + " must be positive");
    }
}

mpz_class pow_pz(const mpz_class& p, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
    return r;
}

// mpq_class(num, den) leaves the fraction unreduced; GMP arithmetic expects
// canonical operands.
mpq_class frac(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// Shared sum for t_general / tau_general; `doubled` selects ord_d(2^{2l}).
mpz_class divisor_sum(const numtheory::Factorization& n_prime, unsigned long l, bool doubled,
                      const char* who) {
    require_positive(l, who, "l");
    if (!n_prime.is_odd()) {
        throw std::invalid_argument(std::string(who) + ": n' must be odd");
    }
    if (doubled && 2 * l < l) throw std::overflow_error(std::string(who) + ": l too large");
    const unsigned long exponent = doubled ? 2 * l : l;
    mpq_class sum = 0;
    for (const auto& d : n_prime.divisors()) {
        if (d.value() == 1) continue;  // chi_l(1) = lambda_l(1) = 0
        int indicator = doubled ? chr::lambda(l, d.value()).value : chr::chi(l, d.value()).value;
        if (indicator == 0) continue;
        mpz_class base = nt::pow_mod(2, mpz_class(exponent), d.value());
        mpz_class ord = nt::mult_order(base, d);
        sum += frac(nt::euler_phi(d), ord);
    }
    return exact_int(sum / 2, who);
}

struct PrimePowerInputs {
    nt::OrderProfile profile;
    bool primitive_root;  // 2 generates mod p^2
};

PrimePowerInputs prime_power_inputs(const mpz_class& p, unsigned long r, unsigned long l,
                                    const char* who) {
    require_positive(r, who, "r");
    require_positive(l, who, "l");
    PrimePowerInputs in{nt::order_profile(p, r, l), false};
    in.primitive_root = nt::two_is_primitive_root_mod_p2(p);
    return in;
}

// p^a - 1 + (p-1)(r-a)p^{a-1}
mpz_class ladder_bracket(const nt::OrderProfile& prof) {
    mpz_class head = pow_pz(prof.p, prof.alpha) - 1;
    mpz_class tail = (prof.p - 1) * (prof.r - prof.alpha) * pow_pz(prof.p, prof.alpha - 1);
    return head + tail;
}

// sum_{i=1..r} gcd(p^{i-1}(p-1), m) / 2
mpz_class primitive_root_sum(const mpz_class& p, unsigned long r, unsigned long m,
                             const char* who) {
    mpz_class sum = 0;
    mpz_class group_order = p - 1;
    for (unsigned long i = 1; i <= r; ++i) {
        sum += gcd(group_order, mpz_class(m));
        group_order *= p;
    }
    return exact_int(frac(sum, 2), who);
}

// The mixed-divisor part of the two-prime formulas:
// sum_{i=1..r} sum_{j=1..s} phi(p^i q^j) / lcm(ord_{p^i}, ord_{q^j}),
// halved unless the uncorrected convention is requested.
mpq_class mixed_divisor_term(const nt::OrderProfile& pp, const nt::OrderProfile& qp, bool doubled,
                             DoubleSum convention) {
    mpq_class mixed = 0;
    mpz_class phi_p = pp.p - 1;
    for (unsigned long i = 1; i <= pp.r; ++i) {
        mpz_class ord_p = nt::ord_prime_power(pp, i, doubled);
        mpz_class phi_q = qp.p - 1;
        for (unsigned long j = 1; j <= qp.r; ++j) {
            mpz_class ord_q = nt::ord_prime_power(qp, j, doubled);
            mixed += frac(phi_p * phi_q, lcm(ord_p, ord_q));
            phi_q *= qp.p;
        }
        phi_p *= pp.p;
    }
    if (convention == DoubleSum::halved) mixed /= 2;
    return mixed;
}

}  // namespace

std::string to_string(Kind kind) {
    return kind == Kind::euclidean ? "euclidean" : "hermitian";
}

std::string to_string(Method method) {
    switch (method) {
        case Method::general_sum: return "general-sum";
        case Method::prime_power: return "prime-power";
        case Method::two_prime: return "two-prime";
    }
    return "unknown";
}

std::string to_string(TauTOrdering ordering) {
    switch (ordering) {
        case TauTOrdering::equal: return "equal";
        case TauTOrdering::tau_zero_less: return "tau-zero-less";
        case TauTOrdering::t_zero_less: return "t-zero-less";
    }
    return "unknown";
}

LengthSpec::LengthSpec(unsigned long nu_arg, numtheory::Factorization odd_part_arg)
    : nu(nu_arg), odd_part(std::move(odd_part_arg)) {
    if (nu < 1) throw std::invalid_argument("LengthSpec: nu must be at least 1");
    if (!odd_part.is_odd()) throw std::invalid_argument("LengthSpec: odd part must be odd");
}

mpz_class t_general(const numtheory::Factorization& n_prime, unsigned long l) {
    return divisor_sum(n_prime, l, false, "t_general");
}

mpz_class tau_general(const numtheory::Factorization& n_prime, unsigned long l) {
    return divisor_sum(n_prime, l, true, "tau_general");
}

mpz_class t_prime_power(const mpz_class& p, unsigned long r, unsigned long l) {
    auto in = prime_power_inputs(p, r, l, "t_prime_power");
    const auto& prof = in.profile;
    if (prof.v2_l < prof.gamma) return 0;  // 2^gamma does not divide l
    if (in.primitive_root) return primitive_root_sum(p, r, l, "t_prime_power");
    mpq_class coeff = frac(gcd(prof.ord_p_2, mpz_class(l)), 2 * prof.ord_p_2);
    return exact_int(coeff * ladder_bracket(prof), "t_prime_power");
}

mpz_class tau_prime_power(const mpz_class& p, unsigned long r, unsigned long l) {
    auto in = prime_power_inputs(p, r, l, "tau_prime_power");
    const auto& prof = in.profile;
    if (prof.gamma >= 1 && prof.v2_l == prof.gamma - 1) return 0;  // 2 || ord_p(2^l)
    if (in.primitive_root) {
        if (2 * l < l) throw std::overflow_error("tau_prime_power: l too large");
        return primitive_root_sum(p, r, 2 * l, "tau_prime_power");
    }
    mpz_class g = gcd(prof.ord_p_2, mpz_class(l));
    mpq_class coeff =
        prof.v2_l >= prof.gamma ? frac(g, 2 * prof.ord_p_2) : frac(g, prof.ord_p_2);
    return exact_int(coeff * ladder_bracket(prof), "tau_prime_power");
}

mpz_class t_corollary_check(const mpz_class& p, unsigned long r, unsigned long l) {
    auto in = prime_power_inputs(p, r, l, "t_corollary_check");
    const auto& prof = in.profile;
    if (mpz_divisible_p(mpz_class(l).get_mpz_t(), p.get_mpz_t())) {
        throw std::invalid_argument("t_corollary_check: requires p not dividing l");
    }
    if (mpz_even_p(prof.ord_base.get_mpz_t())) {
        throw std::invalid_argument("t_corollary_check: requires ord_p(2^l) odd");
    }
    if (!in.primitive_root) {
        throw std::invalid_argument("t_corollary_check: requires 2 primitive root mod p^2");
    }
    return exact_int(frac(r * gcd(p - 1, mpz_class(l)), 2), "t_corollary_check");
}

mpz_class tau_corollary_check(const mpz_class& p, unsigned long r, unsigned long l) {
    auto in = prime_power_inputs(p, r, l, "tau_corollary_check");
    const auto& prof = in.profile;
    if (mpz_divisible_p(mpz_class(l).get_mpz_t(), p.get_mpz_t())) {
        throw std::invalid_argument("tau_corollary_check: requires p not dividing l");
    }
    if (!in.primitive_root) {
        throw std::invalid_argument("tau_corollary_check: requires 2 primitive root mod p^2");
    }
    if (prof.gamma >= 1 && prof.v2_l == prof.gamma - 1) {
        throw std::invalid_argument(
            "tau_corollary_check: requires ord_p(2^l) odd or divisible by 4");
    }
    return r * gcd((p - 1) / 2, mpz_class(l));
}

namespace {

mpz_class two_prime_sum(const mpz_class& p, const mpz_class& q, unsigned long r, unsigned long s,
                        unsigned long l, DoubleSum convention, bool hermitian, const char* who) {
    if (p == q) throw std::invalid_argument(std::string(who) + ": primes must be distinct");
    require_positive(l, who, "l");
    auto pp = nt::order_profile(p, r, l);
    auto qp = nt::order_profile(q, s, l);

    mpq_class total = 0;
    int ind_p = hermitian ? chr::lambda_prime(l, p) : chr::chi_prime(l, p);
    int ind_q = hermitian ? chr::lambda_prime(l, q) : chr::chi_prime(l, q);
    int ind_pq = hermitian ? chr::lambda_two_primes(l, p, q) : chr::chi_two_primes(l, p, q);
    if (ind_p) total += hermitian ? tau_prime_power(p, r, l) : t_prime_power(p, r, l);
    if (ind_q) total += hermitian ? tau_prime_power(q, s, l) : t_prime_power(q, s, l);
    if (ind_pq) total += mixed_divisor_term(pp, qp, hermitian, convention);
    return exact_int(total, who);
}

}  // namespace

mpz_class t_two_primes(const mpz_class& p, const mpz_class& q, unsigned long r, unsigned long s,
                       unsigned long l, DoubleSum convention) {
    return two_prime_sum(p, q, r, s, l, convention, false, "t_two_primes");
}

mpz_class tau_two_primes(const mpz_class& p, const mpz_class& q, unsigned long r, unsigned long s,
                         unsigned long l, DoubleSum convention) {
    return two_prime_sum(p, q, r, s, l, convention, true, "tau_two_primes");
}

ExponentResult code_count_exponent(const numtheory::Factorization& odd_part, unsigned long l,
                                   Kind kind) {
    const auto& pairs = odd_part.pairs();
    const bool hermitian = kind == Kind::hermitian;
    if (pairs.size() == 1) {
        const auto& [p, r] = pairs.front();
        mpz_class e = hermitian ? tau_prime_power(p, r, l) : t_prime_power(p, r, l);
        return {std::move(e), Method::prime_power};
    }
    if (pairs.size() == 2) {
        const auto& [p, r] = pairs.front();
        const auto& [q, s] = pairs.back();
        mpz_class e = hermitian ? tau_two_primes(p, q, r, s, l) : t_two_primes(p, q, r, s, l);
        return {std::move(e), Method::two_prime};
    }
    mpz_class e = hermitian ? tau_general(odd_part, l) : t_general(odd_part, l);
    return {std::move(e), Method::general_sum};
}

ExponentResult code_count_exponent(const LengthSpec& spec, unsigned long l, Kind kind) {
    return code_count_exponent(spec.odd_part, l, kind);
}

CountResult count_self_dual(const LengthSpec& spec, unsigned long l, Kind kind) {
    ExponentResult er = code_count_exponent(spec, l, kind);
    CountResult result;
    result.exponent = std::move(er.exponent);
    result.method = er.method;
    result.kind = kind;
    result.base = (mpz_class(1) << spec.nu) + 1;
    if (!result.exponent.fits_ulong_p() ||
        result.exponent.get_ui() * mpz_sizeinbase(result.base.get_mpz_t(), 2) > kMaxValueBits) {
        throw resource_limit_error(
            "count_self_dual: expanded value would exceed " + std::to_string(kMaxValueBits) +
            " bits; query the exponent instead");
    }
    mpz_pow_ui(result.value.get_mpz_t(), result.base.get_mpz_t(), result.exponent.get_ui());
    return result;
}

bool exists_self_dual(const mpz_class& n, unsigned long field_exponent, Kind) {
    if (n < 1) throw std::invalid_argument("exists_self_dual: length must be positive");
    if (field_exponent < 1) {
        throw std::invalid_argument("exists_self_dual: field exponent must be positive");
    }
    return mpz_even_p(n.get_mpz_t()) != 0;
}

TauTComparison compare_tau_t(const mpz_class& p, unsigned long r, unsigned long l) {
    auto prof = nt::order_profile(p, r, l);
    TauTComparison cmp;
    cmp.tau = tau_prime_power(p, r, l);
    cmp.t_doubled = t_prime_power(p, r, 2 * l);
    if (prof.v2_l >= prof.gamma) {
        cmp.ordering = TauTOrdering::equal;
    } else if (prof.v2_l == prof.gamma - 1) {
        cmp.ordering = TauTOrdering::tau_zero_less;
    } else {
        cmp.ordering = TauTOrdering::t_zero_less;
    }
    const bool consistent =
        (cmp.ordering == TauTOrdering::equal && cmp.tau == cmp.t_doubled) ||
        (cmp.ordering == TauTOrdering::tau_zero_less && cmp.tau == 0 && cmp.t_doubled > 0) ||
        (cmp.ordering == TauTOrdering::t_zero_less && cmp.t_doubled == 0 && cmp.tau > 0);
    if (!consistent) {
        throw std::logic_error("compare_tau_t: computed values contradict the predicted case");
    }
    return cmp;
}

}  // namespace sdcyc::counting
