#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "sdcyc/errors.hpp"
#include "sdcyc/output.hpp"
#include "sdcyc/verify.hpp"

namespace sdcyc::cli {

namespace nt = sdcyc::numtheory;
namespace cnt = sdcyc::counting;

namespace {

mpz_class parse_decimal(const std::string& text, const std::string& flag) {
    mpz_class v;
    if (text.empty() || mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0 || v < 1) {
        throw std::invalid_argument(flag + " expects a positive decimal integer, got '" + text +
                                    "'");
    }
    return v;
}

// "p1^r1,p2^r2,..." with plain "p" meaning exponent 1.
nt::Factorization parse_factored(const std::string& text) {
    std::vector<nt::PrimePower> pairs;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        auto caret = token.find('^');
        std::string prime_text = token.substr(0, caret);
        unsigned long exponent = 1;
        if (caret != std::string::npos) {
            mpz_class e = parse_decimal(token.substr(caret + 1), "--odd-factored exponent");
            if (!e.fits_ulong_p()) {
                throw std::invalid_argument("--odd-factored exponent is too large");
            }
            exponent = e.get_ui();
        }
        pairs.push_back({parse_decimal(prime_text, "--odd-factored prime"), exponent});
    }
    if (pairs.empty()) throw std::invalid_argument("--odd-factored is empty");
    return nt::Factorization::from_pairs(std::move(pairs));
}

nt::Factorization parse_odd_part(const std::string& odd, const std::string& odd_factored) {
    nt::Factorization fact;
    if (!odd_factored.empty()) {
        fact = parse_factored(odd_factored);
    } else {
        fact = nt::factorize(parse_decimal(odd, "--odd"));
    }
    if (!fact.is_odd()) {
        throw std::invalid_argument("the odd part must be odd, got " + fact.value().get_str());
    }
    return fact;
}

cnt::Kind parse_kind(const std::string& kind) {
    return kind == "hermitian" ? cnt::Kind::hermitian : cnt::Kind::euclidean;
}

nlohmann::json exponent_json(const nt::Factorization& odd_part, unsigned long l, cnt::Kind kind,
                             const cnt::ExponentResult& result) {
    nlohmann::json j{{"odd_part", odd_part.value().get_str()},
                     {"l", l},
                     {"kind", cnt::to_string(kind)},
                     {"method", cnt::to_string(result.method)}};
    if (result.exponent.fits_ulong_p()) {
        j["exponent"] = result.exponent.get_ui();
    } else {
        j["exponent"] = result.exponent.get_str();
    }
    return j;
}

void print_verify_report(const verify::Report& report, std::ostream& out) {
    std::size_t width = 0;
    for (const auto& c : report.checks) width = std::max(width, c.family.size());
    out << std::left << std::setw(static_cast<int>(width) + 2) << "check" << std::right
        << std::setw(8) << "cases"
        << "  result\n";
    for (const auto& c : report.checks) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << c.family << std::right
            << std::setw(8) << c.cases << "  " << (c.passed ? "pass" : "FAIL");
        if (c.skipped > 0) out << "  (" << c.skipped << " over the iteration budget, skipped)";
        out << "\n";
    }
    if (const auto* failure = report.first_failure()) {
        out << "first counterexample: " << failure->counterexample << "\n";
    } else {
        out << "all " << report.checks.size() << " check families passed\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts of Euclidean and Hermitian self-dual cyclic codes over "
                 "characteristic-2 finite fields"};
    app.name("sdcyc");
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- count ----
    auto* count_cmd = app.add_subcommand("count", "Count self-dual cyclic codes of length 2^nu * odd");
    struct {
        unsigned long nu = 1;
        std::string odd;
        std::string odd_factored;
        unsigned long l = 1;
        std::string kind = "euclidean";
        std::string format = "text";
        bool exponent_only = false;
    } count_args;
    count_cmd->add_option("--nu", count_args.nu, "Two-adic exponent of the length (>= 1)")
        ->required()
        ->check(CLI::Range(1ul, 62ul));
    auto* odd_opt = count_cmd->add_option("--odd", count_args.odd, "Odd part of the length (decimal)");
    auto* odd_fact_opt = count_cmd->add_option("--odd-factored", count_args.odd_factored,
                                               "Odd part as p1^r1,p2^r2,...");
    odd_opt->excludes(odd_fact_opt);
    count_cmd->add_option("--l", count_args.l, "Field is GF(2^l) (Hermitian: GF(2^2l))")
        ->required()
        ->check(CLI::Range(1ul, 1000000ul));
    count_cmd->add_option("--kind", count_args.kind, "Inner product")
        ->required()
        ->check(CLI::IsMember({"euclidean", "hermitian"}));
    count_cmd->add_option("--format", count_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    count_cmd->add_flag("--exponent-only", count_args.exponent_only,
                        "Skip the exact expansion of base^exponent");
    count_cmd->callback([&] {
        if (count_args.odd.empty() && count_args.odd_factored.empty()) {
            throw std::invalid_argument("count requires --odd or --odd-factored");
        }
        cnt::LengthSpec spec(count_args.nu,
                             parse_odd_part(count_args.odd, count_args.odd_factored));
        cnt::Kind kind = parse_kind(count_args.kind);
        mpz_class base = (mpz_class(1) << spec.nu) + 1;
        if (count_args.exponent_only) {
            auto result = cnt::code_count_exponent(spec, count_args.l, kind);
            if (count_args.format == "json") {
                auto j = exponent_json(spec.odd_part, count_args.l, kind, result);
                j["nu"] = spec.nu;
                j["base"] = base.get_ui();  // nu <= 62 keeps this exact
                out << j.dump() << "\n";
            } else {
                out << base.get_str() << "^" << result.exponent.get_str() << "\n";
            }
            return;
        }
        auto record = make_record(spec, count_args.l, cnt::count_self_dual(spec, count_args.l, kind));
        if (count_args.format == "json") {
            out << record_json(record).dump() << "\n";
        } else {
            out << record.base << "^" << record.exponent << " = " << record.value << "\n";
        }
    });

    // ---- t / tau ----
    struct {
        std::string odd;
        std::string odd_factored;
        unsigned long l = 1;
        std::string format = "text";
    } exp_args;
    auto add_exponent_cmd = [&](const std::string& name, const std::string& help, cnt::Kind kind) {
        auto* cmd = app.add_subcommand(name, help);
        auto* odd = cmd->add_option("--odd", exp_args.odd, "Odd modulus (decimal)");
        auto* oddf =
            cmd->add_option("--odd-factored", exp_args.odd_factored, "Odd modulus as p1^r1,...");
        odd->excludes(oddf);
        cmd->add_option("--l", exp_args.l, "Field exponent l")
            ->required()
            ->check(CLI::Range(1ul, 1000000ul));
        cmd->add_option("--format", exp_args.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->callback([&, kind] {
            if (exp_args.odd.empty() && exp_args.odd_factored.empty()) {
                throw std::invalid_argument("expected --odd or --odd-factored");
            }
            auto fact = parse_odd_part(exp_args.odd, exp_args.odd_factored);
            auto result = cnt::code_count_exponent(fact, exp_args.l, kind);
            if (exp_args.format == "json") {
                out << exponent_json(fact, exp_args.l, kind, result).dump() << "\n";
            } else {
                out << result.exponent.get_str() << " (" << cnt::to_string(result.method) << ")\n";
            }
        });
        return cmd;
    };
    add_exponent_cmd("t", "Exponent of the Euclidean count for odd length part", cnt::Kind::euclidean);
    add_exponent_cmd("tau", "Exponent of the Hermitian count for odd length part",
                     cnt::Kind::hermitian);

    // ---- table ----
    auto* table_cmd = app.add_subcommand("table", "Tabulate counts for odd <= odd-max, l <= l-max");
    struct {
        unsigned long odd_max = 9;
        unsigned long l_max = 2;
        unsigned long nu = 1;
        std::string kind = "euclidean";
        std::string format = "csv";
    } table_args;
    table_cmd->add_option("--odd-max", table_args.odd_max, "Largest odd part")
        ->required()
        ->check(CLI::Range(1ul, 100000ul));
    table_cmd->add_option("--l-max", table_args.l_max, "Largest field exponent")
        ->required()
        ->check(CLI::Range(1ul, 64ul));
    table_cmd->add_option("--nu", table_args.nu, "Two-adic exponent of the length")
        ->required()
        ->check(CLI::Range(1ul, 62ul));
    table_cmd->add_option("--kind", table_args.kind, "Inner product")
        ->required()
        ->check(CLI::IsMember({"euclidean", "hermitian"}));
    table_cmd->add_option("--format", table_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    table_cmd->callback([&] {
        cnt::Kind kind = parse_kind(table_args.kind);
        std::vector<OutputRecord> records;
        for (unsigned long n = 1; n <= table_args.odd_max; n += 2) {
            cnt::LengthSpec spec(table_args.nu, nt::factorize(mpz_class(n)));
            for (unsigned long l = 1; l <= table_args.l_max; ++l) {
                records.push_back(
                    make_record(spec, l, cnt::count_self_dual(spec, l, kind)));
            }
        }
        // Emitted only after every row computed, so bad inputs never leave
        // a truncated table behind.
        if (table_args.format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& rec : records) rows.push_back(record_json(rec));
            out << rows.dump() << "\n";
        } else {
            out << csv_header() << "\n";
            for (const auto& rec : records) out << csv_row(rec) << "\n";
        }
    });

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check every identity family");
    verify::Options verify_opts;
    verify_cmd->add_option("--odd-max", verify_opts.odd_max, "Oracle grid bound on n'")
        ->check(CLI::Range(1ul, 2000ul))
        ->capture_default_str();
    verify_cmd->add_option("--l-max", verify_opts.l_max, "Oracle grid bound on l")
        ->check(CLI::Range(1ul, 16ul))
        ->capture_default_str();
    verify_cmd
        ->add_option("--enumerate-max-length", verify_opts.enumerate_max_length,
                     "Largest code length enumerated exhaustively")
        ->check(CLI::Range(2ul, 30ul))
        ->capture_default_str();
    verify_cmd
        ->add_flag("--drop-two-prime-halving", verify_opts.drop_two_prime_halving,
                   "Fault injection: evaluate the two-prime formulas without the 1/2 factor")
        ->group("");  // hidden
    verify_cmd->callback([&] {
        auto report = verify::run_verification(verify_opts);
        print_verify_report(report, out);
        if (!report.all_passed()) exit_code = 1;
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const resource_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace sdcyc::cli
