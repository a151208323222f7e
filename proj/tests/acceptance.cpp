// Acceptance suite: runs every gate criterion end to end and prints one
// pass/fail line per criterion. Exits with the number of failures.

#include <gmpxx.h>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sdcyc/characteristic.hpp"
#include "sdcyc/counting.hpp"
#include "sdcyc/numtheory.hpp"
#include "sdcyc/oracle.hpp"
#include "sdcyc/verify.hpp"

namespace cnt = sdcyc::counting;
namespace nt = sdcyc::numtheory;
namespace oracle = sdcyc::oracle;

namespace {

std::vector<unsigned long> odd_primes_up_to(unsigned long bound) {
    std::vector<unsigned long> primes;
    for (unsigned long p = 3; p <= bound; p += 2) {
        if (nt::is_prime(mpz_class(p))) primes.push_back(p);
    }
    return primes;
}

mpz_class pow_ul(unsigned long p, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), mpz_class(p).get_mpz_t(), e);
    return r;
}

struct Criterion {
    std::string description;
    double budget_seconds;  // 0 = untimed
    std::function<void(std::ostringstream&)> body;  // writes failure details
};

bool euclidean_paper_example(std::ostringstream& fail) {
    mpz_class t_fast = cnt::t_prime_power(11, 3, 4);
    mpz_class t_gen = cnt::t_general(nt::factorize(1331), 4);
    cnt::LengthSpec spec(1, nt::factorize(1331));
    mpz_class count = cnt::count_self_dual(spec, 4, cnt::Kind::euclidean).value;
    if (t_fast != 3 || t_gen != 3 || count != 27) {
        fail << "t(11^3,4) fast=" << t_fast << " general=" << t_gen << " count=" << count;
        return false;
    }
    return true;
}

bool hermitian_paper_example(std::ostringstream& fail) {
    mpz_class tau_fast = cnt::tau_prime_power(11, 3, 4);
    mpz_class tau_gen = cnt::tau_general(nt::factorize(1331), 4);
    cnt::LengthSpec spec(1, nt::factorize(1331));
    mpz_class count = cnt::count_self_dual(spec, 4, cnt::Kind::hermitian).value;
    if (tau_fast != 3 || tau_gen != 3 || count != 27) {
        fail << "tau(11^3,4) fast=" << tau_fast << " general=" << tau_gen << " count=" << count;
        return false;
    }
    return true;
}

bool oracle_equivalence(std::ostringstream& fail) {
    for (unsigned long n = 1; n <= 105; n += 2) {
        auto fact = nt::factorize(mpz_class(n));
        for (unsigned long l = 1; l <= 8; ++l) {
            mpz_class t = cnt::t_general(fact, l);
            unsigned long to = oracle::pair_count(oracle::build_cosets(n, l, cnt::Kind::euclidean));
            if (t != to) {
                fail << "t(" << n << "," << l << ") = " << t << " vs oracle " << to;
                return false;
            }
            mpz_class tau = cnt::tau_general(fact, l);
            unsigned long ho =
                oracle::pair_count(oracle::build_cosets(n, l, cnt::Kind::hermitian));
            if (tau != ho) {
                fail << "tau(" << n << "," << l << ") = " << tau << " vs oracle " << ho;
                return false;
            }
        }
    }
    return true;
}

bool fast_path_equivalence(std::ostringstream& fail) {
    for (unsigned long p : odd_primes_up_to(31)) {
        for (unsigned long r = 1; r <= 3; ++r) {
            auto fact = nt::factorize(pow_ul(p, r));
            for (unsigned long l = 1; l <= 10; ++l) {
                if (cnt::t_prime_power(p, r, l) != cnt::t_general(fact, l) ||
                    cnt::tau_prime_power(p, r, l) != cnt::tau_general(fact, l)) {
                    fail << "prime-power mismatch at (" << p << "^" << r << ", l=" << l << ")";
                    return false;
                }
            }
        }
    }
    const unsigned long primes[] = {3, 5, 7, 11, 13};
    for (unsigned long p : primes) {
        for (unsigned long q : primes) {
            if (p >= q) continue;
            for (unsigned long r = 1; r <= 2; ++r) {
                for (unsigned long s = 1; s <= 2; ++s) {
                    auto fact = nt::factorize(pow_ul(p, r) * pow_ul(q, s));
                    for (unsigned long l = 1; l <= 6; ++l) {
                        if (cnt::t_two_primes(p, q, r, s, l) != cnt::t_general(fact, l) ||
                            cnt::tau_two_primes(p, q, r, s, l) != cnt::tau_general(fact, l)) {
                            fail << "two-prime mismatch at (" << p << "^" << r << " * " << q << "^"
                                 << s << ", l=" << l << ")";
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

bool exhaustive_ground_truth(std::ostringstream& fail) {
    struct Pinned {
        unsigned long nu, n_prime, l;
        cnt::Kind kind;
        unsigned long expected;
    };
    const Pinned pinned[] = {
        {1, 1, 1, cnt::Kind::euclidean, 1},  // length 2 over GF(2)
        {1, 3, 1, cnt::Kind::euclidean, 1},  // length 6 over GF(2)
        {1, 7, 1, cnt::Kind::euclidean, 3},  // length 14 over GF(2)
        {1, 5, 1, cnt::Kind::hermitian, 3},  // length 10 over GF(4), Hermitian
    };
    for (const auto& c : pinned) {
        cnt::LengthSpec spec(c.nu, nt::factorize(mpz_class(c.n_prime)));
        unsigned long got = oracle::enumerate_self_dual(spec, c.l, c.kind);
        if (got != c.expected) {
            fail << "length " << (c.n_prime << c.nu) << " " << cnt::to_string(c.kind)
                 << ": enumerated " << got << ", expected " << c.expected;
            return false;
        }
    }
    for (unsigned long nu = 1; (1ul << nu) <= 16; ++nu) {
        for (unsigned long np = 1; (np << nu) <= 16; np += 2) {
            cnt::LengthSpec spec(nu, nt::factorize(mpz_class(np)));
            for (unsigned long l = 1; l <= 2; ++l) {
                for (auto kind : {cnt::Kind::euclidean, cnt::Kind::hermitian}) {
                    unsigned long enumerated = oracle::enumerate_self_dual(spec, l, kind);
                    mpz_class counted = cnt::count_self_dual(spec, l, kind).value;
                    if (counted != enumerated) {
                        fail << "length " << (np << nu) << " l=" << l << " "
                             << cnt::to_string(kind) << ": formula " << counted
                             << " != enumerated " << enumerated;
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool half_factor_fault_detected(std::ostringstream& fail) {
    mpz_class uncorrected = cnt::t_two_primes(3, 7, 1, 1, 1, cnt::DoubleSum::unhalved);
    mpz_class corrected = cnt::t_general(nt::factorize(21), 1);
    unsigned long from_cosets =
        oracle::pair_count(oracle::build_cosets(21, 1, cnt::Kind::euclidean));
    if (uncorrected != 3 || corrected != 2 || from_cosets != 2) {
        fail << "t(21,1): unhalved=" << uncorrected << " general=" << corrected
             << " oracle=" << from_cosets << " (expected 3 / 2 / 2)";
        return false;
    }
    sdcyc::verify::Options opts;
    opts.odd_max = 21;
    opts.l_max = 2;
    opts.enumerate_max_length = 4;
    opts.drop_two_prime_halving = true;
    auto report = sdcyc::verify::run_verification(opts);
    if (report.all_passed()) {
        fail << "verify harness accepted the unhalved two-prime formulas";
        return false;
    }
    const auto* failure = report.first_failure();
    if (failure == nullptr || failure->family != "two-prime-vs-general" ||
        failure->counterexample.empty()) {
        fail << "fault was not attributed to the two-prime family";
        return false;
    }
    return true;
}

bool trichotomy(std::ostringstream& fail) {
    for (unsigned long p : odd_primes_up_to(50)) {
        for (unsigned long r = 1; r <= 3; ++r) {
            auto fact = nt::factorize(pow_ul(p, r));
            for (unsigned long l = 1; l <= 16; ++l) {
                mpz_class tau = cnt::tau_general(fact, l);
                mpz_class t2 = cnt::t_general(fact, 2 * l);
                const bool a = tau == t2;
                const bool b = tau == 0 && tau < t2;
                const bool c = t2 == 0 && tau > t2;
                if (int(a) + int(b) + int(c) != 1) {
                    fail << "no unique relation at (" << p << "^" << r << ", l=" << l
                         << "): tau=" << tau << " t=" << t2;
                    return false;
                }
                auto prof = nt::order_profile(mpz_class(p), r, l);
                cnt::TauTOrdering expected =
                    prof.v2_l >= prof.gamma
                        ? cnt::TauTOrdering::equal
                        : (prof.v2_l == prof.gamma - 1 ? cnt::TauTOrdering::tau_zero_less
                                                       : cnt::TauTOrdering::t_zero_less);
                auto cmp = cnt::compare_tau_t(mpz_class(p), r, l);
                const bool predicate_matches =
                    (expected == cnt::TauTOrdering::equal && a) ||
                    (expected == cnt::TauTOrdering::tau_zero_less && b) ||
                    (expected == cnt::TauTOrdering::t_zero_less && c);
                if (cmp.ordering != expected || !predicate_matches || cmp.tau != tau ||
                    cmp.t_doubled != t2) {
                    fail << "gamma predicate mismatch at (" << p << "^" << r << ", l=" << l << ")";
                    return false;
                }
            }
        }
    }
    return true;
}

bool existence(std::ostringstream& fail) {
    for (unsigned long n = 1; n <= 100; ++n) {
        for (auto kind : {cnt::Kind::euclidean, cnt::Kind::hermitian}) {
            bool expected = n % 2 == 0;
            if ((n % 2 == 1 && n <= 99) || (n % 2 == 0 && n <= 100)) {
                if (cnt::exists_self_dual(mpz_class(n), 1, kind) != expected) {
                    fail << "exists_self_dual(" << n << ") != " << expected;
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;
    auto add = [&](std::string description, double budget,
                   std::function<bool(std::ostringstream&)> fn) {
        criteria.push_back({std::move(description), budget,
                            [fn = std::move(fn)](std::ostringstream& fail) {
                                if (!fn(fail) && fail.str().empty()) fail << "check failed";
                            }});
    };

    add("t(11^3,4) = 3 and the Euclidean count at nu=1 is 27", 1.0, euclidean_paper_example);
    add("tau(11^3,4) = 3 and the Hermitian count at nu=1 is 27", 1.0, hermitian_paper_example);
    add("t/tau general sums equal the coset pair counts for odd n' <= 105, l <= 8", 60.0,
        oracle_equivalence);
    add("prime-power and two-prime fast paths equal the general sums on the full grids", 0.0,
        fast_path_equivalence);
    add("exhaustive enumeration matches the counting formulas for lengths <= 16", 30.0,
        exhaustive_ground_truth);
    add("dropping the 1/2 factor makes t(21,1) = 3 and the verify harness flags it", 0.0,
        half_factor_fault_detected);
    add("tau(p^r,l) vs t(p^r,2l) trichotomy holds for p <= 50, r <= 3, l <= 16", 0.0, trichotomy);
    add("self-dual cyclic codes exist exactly at even lengths (n <= 100)", 0.0, existence);

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::ostringstream fail;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(fail);
        } catch (const std::exception& e) {
            fail << "exception: " << e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool over_budget = c.budget_seconds > 0 && elapsed > c.budget_seconds;
        bool passed = fail.str().empty() && !over_budget;
        std::cout << (passed ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
                  << c.description << " [" << std::fixed << std::setprecision(2) << elapsed
                  << " s";
        if (c.budget_seconds > 0) std::cout << " / " << c.budget_seconds << " s budget";
        std::cout << "]";
        if (!fail.str().empty()) std::cout << " -- " << fail.str();
        if (over_budget) std::cout << " -- over time budget";
        std::cout << "\n";
        if (!passed) ++failures;
    }
    std::cout << (failures == 0 ? "all acceptance criteria passed"
                                : std::to_string(failures) + " acceptance criteria failed")
              << "\n";
    return failures;
}
