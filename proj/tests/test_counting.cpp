#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <stdexcept>

#include "sdcyc/counting.hpp"
#include "sdcyc/errors.hpp"
#include "sdcyc/numtheory.hpp"
#include "sdcyc/oracle.hpp"

using namespace sdcyc;
namespace cnt = sdcyc::counting;
namespace nt = sdcyc::numtheory;

TEST_CASE("t_general frozen values") {
    CHECK(cnt::t_general(nt::factorize(1), 1) == 0);
    CHECK(cnt::t_general(nt::factorize(1), 7) == 0);
    CHECK(cnt::t_general(nt::factorize(1331), 4) == 3);
    // 2-cosets mod 21 pair {1,2,4,8,16,11}<->{5,10,20,19,17,13} and
    // {3,6,12}<->{9,18,15}; {7,14} and {0} are self-paired.
    CHECK(cnt::t_general(nt::factorize(21), 1) == 2);
    CHECK_THROWS_AS(cnt::t_general(nt::factorize(6), 1), std::invalid_argument);
}

TEST_CASE("tau_general frozen values") {
    CHECK(cnt::tau_general(nt::factorize(1), 3) == 0);
    CHECK(cnt::tau_general(nt::factorize(1331), 4) == 3);
    // 4-cosets mod 15: three asymmetric pairs under C -> -2C
    CHECK(cnt::tau_general(nt::factorize(15), 1) == 3);
}

TEST_CASE("t_prime_power examples") {
    CHECK(cnt::t_prime_power(11, 3, 4) == 3);
    CHECK(cnt::t_prime_power(7, 1, 1) == 1);
    CHECK(cnt::t_prime_power(5, 1, 1) == 0);
    CHECK_THROWS_AS(cnt::t_prime_power(2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(cnt::t_prime_power(9, 1, 1), std::invalid_argument);
}

TEST_CASE("tau_prime_power examples") {
    CHECK(cnt::tau_prime_power(11, 3, 4) == 3);
    CHECK(cnt::tau_prime_power(5, 1, 1) == 1);
    CHECK(cnt::tau_prime_power(3, 1, 1) == 0);
}

TEST_CASE("fast paths agree with the general sums") {
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
        for (unsigned long r = 1; r <= 2; ++r) {
            mpz_class pr;
            mpz_pow_ui(pr.get_mpz_t(), mpz_class(p).get_mpz_t(), r);
            auto fact = nt::factorize(pr);
            for (unsigned long l = 1; l <= 4; ++l) {
                CHECK(cnt::t_prime_power(p, r, l) == cnt::t_general(fact, l));
                CHECK(cnt::tau_prime_power(p, r, l) == cnt::tau_general(fact, l));
            }
        }
    }
}

TEST_CASE("order ladder plateau above level 1 (Wieferich prime)") {
    // 1093^2 divides 2^364 - 1, so the ladder stays flat through level 2;
    // the closed form must still match the divisor sum.
    auto prof = nt::order_profile(1093, 3, 1);
    CHECK(prof.alpha == 2);
    auto fact = nt::factorize(mpz_class(1093) * 1093);
    CHECK(cnt::t_prime_power(1093, 2, 1) == cnt::t_general(fact, 1));
    CHECK(cnt::tau_prime_power(1093, 2, 1) == cnt::tau_general(fact, 1));
}

TEST_CASE("t corollary closed form") {
    CHECK(cnt::t_corollary_check(11, 3, 4) == 3);
    CHECK(cnt::t_corollary_check(11, 3, 8) == 3);
    CHECK(cnt::t_corollary_check(3, 2, 2) == 2);
    CHECK(cnt::t_corollary_check(3, 2, 2) == cnt::t_general(nt::factorize(9), 2));
    // 2 is not a primitive root mod 49 (ord_49(2) = 21), so the closed form
    // does not apply at p = 7; the true value of t(49, 1) is 2.
    CHECK_THROWS_AS(cnt::t_corollary_check(7, 2, 1), std::invalid_argument);
    CHECK(cnt::t_general(nt::factorize(49), 1) == 2);
    // ord_11(2^1) = 10 is even
    CHECK_THROWS_AS(cnt::t_corollary_check(11, 3, 1), std::invalid_argument);
    // p | l
    CHECK_THROWS_AS(cnt::t_corollary_check(3, 1, 6), std::invalid_argument);
}

TEST_CASE("tau corollary closed form") {
    CHECK(cnt::tau_corollary_check(11, 3, 4) == 3);  // 3 * gcd(5, 4)
    CHECK(cnt::tau_corollary_check(11, 3, 4) == cnt::tau_prime_power(11, 3, 4));
    CHECK(cnt::tau_corollary_check(5, 2, 1) == cnt::tau_general(nt::factorize(25), 1));
    CHECK_THROWS_AS(cnt::tau_corollary_check(3, 1, 1), std::invalid_argument);  // 2 || ord
    CHECK_THROWS_AS(cnt::tau_corollary_check(7, 1, 1), std::invalid_argument);  // not prim root
}

TEST_CASE("t_two_primes examples") {
    CHECK(cnt::t_two_primes(3, 7, 1, 1, 1) == 2);
    CHECK(cnt::t_two_primes(5, 13, 1, 1, 1) == 0);
    CHECK(cnt::t_two_primes(3, 5, 1, 1, 1) == 1);
    CHECK_THROWS_AS(cnt::t_two_primes(3, 3, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("dropping the mixed-sum halving overcounts") {
    CHECK(cnt::t_two_primes(3, 7, 1, 1, 1, cnt::DoubleSum::unhalved) == 3);
    CHECK(cnt::t_general(nt::factorize(21), 1) == 2);
    CHECK(cnt::t_two_primes(3, 5, 1, 1, 1, cnt::DoubleSum::unhalved) == 2);
}

TEST_CASE("tau_two_primes examples") {
    CHECK(cnt::tau_two_primes(3, 5, 1, 1, 1) == 3);
    CHECK(cnt::tau_two_primes(3, 11, 1, 1, 1) == 0);
    CHECK(cnt::tau_two_primes(5, 7, 1, 1, 1) == cnt::tau_general(nt::factorize(35), 1));
}

TEST_CASE("two-prime formulas agree with the general sums") {
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        for (unsigned long q : {5ul, 7ul, 11ul}) {
            if (p >= q) continue;
            for (unsigned long r = 1; r <= 2; ++r) {
                for (unsigned long s = 1; s <= 2; ++s) {
                    mpz_class m;
                    mpz_pow_ui(m.get_mpz_t(), mpz_class(p).get_mpz_t(), r);
                    mpz_class qs;
                    mpz_pow_ui(qs.get_mpz_t(), mpz_class(q).get_mpz_t(), s);
                    m *= qs;
                    auto fact = nt::factorize(m);
                    for (unsigned long l = 1; l <= 3; ++l) {
                        CHECK(cnt::t_two_primes(p, q, r, s, l) == cnt::t_general(fact, l));
                        CHECK(cnt::tau_two_primes(p, q, r, s, l) == cnt::tau_general(fact, l));
                    }
                }
            }
        }
    }
}

TEST_CASE("count_self_dual examples and dispatch") {
    cnt::LengthSpec paper(1, nt::factorize(1331));
    auto res = cnt::count_self_dual(paper, 4, cnt::Kind::euclidean);
    CHECK(res.exponent == 3);
    CHECK(res.base == 3);
    CHECK(res.value == 27);
    CHECK(res.method == cnt::Method::prime_power);

    auto herm = cnt::count_self_dual(paper, 4, cnt::Kind::hermitian);
    CHECK(herm.value == 27);

    cnt::LengthSpec trivial(1, nt::factorize(1));
    auto one = cnt::count_self_dual(trivial, 1, cnt::Kind::euclidean);
    CHECK(one.exponent == 0);
    CHECK(one.value == 1);
    CHECK(one.method == cnt::Method::general_sum);

    cnt::LengthSpec nu2(2, nt::factorize(7));
    auto five = cnt::count_self_dual(nu2, 1, cnt::Kind::euclidean);
    CHECK(five.base == 5);
    CHECK(five.value == 5);

    cnt::LengthSpec two(1, nt::factorize(45));
    CHECK(cnt::count_self_dual(two, 1, cnt::Kind::euclidean).method == cnt::Method::two_prime);
    cnt::LengthSpec three(1, nt::factorize(105));
    CHECK(cnt::count_self_dual(three, 1, cnt::Kind::euclidean).method ==
          cnt::Method::general_sum);

    CHECK_THROWS_AS(cnt::LengthSpec(0, nt::factorize(7)), std::invalid_argument);
    CHECK_THROWS_AS(cnt::LengthSpec(1, nt::factorize(6)), std::invalid_argument);
}

TEST_CASE("count value is exactly base^exponent") {
    for (unsigned long n : {1ul, 3ul, 9ul, 21ul, 1331ul}) {
        for (unsigned long nu = 1; nu <= 3; ++nu) {
            cnt::LengthSpec spec(nu, nt::factorize(mpz_class(n)));
            for (auto kind : {cnt::Kind::euclidean, cnt::Kind::hermitian}) {
                auto res = cnt::count_self_dual(spec, 2, kind);
                mpz_class expected;
                mpz_pow_ui(expected.get_mpz_t(), res.base.get_mpz_t(), res.exponent.get_ui());
                CHECK(res.value == expected);
                CHECK(res.base == (mpz_class(1) << nu) + 1);
            }
        }
    }
}

TEST_CASE("expansion guard trips on astronomically large counts") {
    // t(7^r, 1) = r, so nu = 62 with r just above the bit budget must refuse
    // to expand (the exponent itself is still fine to compute).
    unsigned long r = (cnt::kMaxValueBits / 63) + 1000;
    cnt::LengthSpec spec(62, nt::Factorization::from_pairs({{7, r}}));
    CHECK(cnt::code_count_exponent(spec, 1, cnt::Kind::euclidean).exponent == r);
    CHECK_THROWS_AS(cnt::count_self_dual(spec, 1, cnt::Kind::euclidean), resource_limit_error);
}

TEST_CASE("exists_self_dual is parity of the length") {
    CHECK_FALSE(cnt::exists_self_dual(7, 1, cnt::Kind::euclidean));
    CHECK(cnt::exists_self_dual(2, 1, cnt::Kind::euclidean));
    CHECK(cnt::exists_self_dual(14, 2, cnt::Kind::hermitian));
    CHECK_THROWS_AS(cnt::exists_self_dual(0, 1, cnt::Kind::euclidean), std::invalid_argument);
}

TEST_CASE("compare_tau_t examples") {
    auto eq = cnt::compare_tau_t(7, 1, 1);
    CHECK(eq.ordering == cnt::TauTOrdering::equal);
    CHECK(eq.tau == 1);
    CHECK(eq.t_doubled == 1);

    auto tz = cnt::compare_tau_t(3, 1, 1);
    CHECK(tz.ordering == cnt::TauTOrdering::tau_zero_less);
    CHECK(tz.tau == 0);
    CHECK(tz.t_doubled == 1);

    auto hz = cnt::compare_tau_t(5, 1, 1);
    CHECK(hz.ordering == cnt::TauTOrdering::t_zero_less);
    CHECK(hz.tau == 1);
    CHECK(hz.t_doubled == 0);
}

TEST_CASE("counting exponents match the coset oracle on a small grid") {
    for (unsigned long n = 1; n <= 45; n += 2) {
        auto fact = nt::factorize(mpz_class(n));
        for (unsigned long l = 1; l <= 4; ++l) {
            CHECK(cnt::t_general(fact, l) ==
                  oracle::pair_count(oracle::build_cosets(n, l, cnt::Kind::euclidean)));
            CHECK(cnt::tau_general(fact, l) ==
                  oracle::pair_count(oracle::build_cosets(n, l, cnt::Kind::hermitian)));
        }
    }
}
