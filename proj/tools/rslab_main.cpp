// rslab — command-line front end: L-factor tables, exceptional-pole reports,
// factorization verification (single pair or seeded random suite), derivative
// decompositions, Tate-integral quadrature, and numeric spot-checks.
//
// Exit codes: 0 success/verified, 1 verified-false (counterexample), 2 parse
// error, 3 precondition violation, 4 numeric-oracle failure.

#include <atomic>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "rslab/json_io.hpp"
#include "rslab/numeric.hpp"
#include "rslab/parser.hpp"
#include "rslab/random_pairs.hpp"

namespace {

using namespace rslab;

constexpr int kExitVerifiedFalse = 1;
constexpr int kExitParseError = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitNumeric = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --pi1/--pi2 accept either a file path or an inline DSL expression.
std::string resolve_input(const std::string& arg) {
    if (arg.find("ps[") != std::string::npos || arg.find("|.|") != std::string::npos) return arg;
    return slurp(arg);
}

PrincipalSeries load_series(const std::string& arg) {
    return parse_principal_series(resolve_input(arg));
}

std::complex<double> parse_complex_flag(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) return {std::stod(text), 0.0};
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ParseError("malformed complex value '" + text + "', expected re[,im]");
    }
}

int parse_random_n(const std::string& text) {
    std::string digits = text;
    if (digits.rfind("n=", 0) == 0) digits = digits.substr(2);
    try {
        const int n = std::stoi(digits);
        if (n < 1) throw std::out_of_range("n");
        return n;
    } catch (const std::exception&) {
        throw ParseError("malformed --random value '" + text + "', expected n=<len>");
    }
}

void emit(const Json& payload) {
    Json out{{"schema", 1}};
    out.update(payload);
    std::cout << out.dump(2) << "\n";
}

unsigned default_jobs() {
    if (const char* env = std::getenv("RSLAB_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

struct Options {
    std::string pi1, pi2, pi, s0, s_value, random_n, file_f, file_g, c1, c2;
    bool json = false;
    bool quiet = false;
    int k = 0;
    std::int64_t deg = 0;
    int trials = 100;
    std::uint64_t seed = 0;
    std::uint64_t count = 100;
    unsigned jobs = default_jobs();
};

int cmd_lfactor(const Options& opt) {
    const PrincipalSeries p1 = load_series(opt.pi1);
    const PrincipalSeries p2 = load_series(opt.pi2);
    const GammaProduct product = pair_l_function(p1, p2);

    if (opt.json) {
        Json table = Json::array();
        for (std::size_t i = 0; i < p1.n(); ++i)
            for (std::size_t j = 0; j < p2.n(); ++j)
                table.push_back(Json{{"i", i + 1},
                                     {"j", j + 1},
                                     {"factor", to_json(l_factor(char_mul(p1.at(i), p2.at(j))))}});
        emit(Json{{"command", "lfactor"},
                  {"pi1", render(p1)},
                  {"pi2", render(p2)},
                  {"factors", std::move(table)},
                  {"product", to_json(product)}});
    } else {
        std::cout << "pi1 = " << render(p1) << "\npi2 = " << render(p2) << "\n";
        for (std::size_t i = 0; i < p1.n(); ++i)
            for (std::size_t j = 0; j < p2.n(); ++j)
                std::cout << "  (" << i + 1 << "," << j + 1 << ")  "
                          << l_factor(char_mul(p1.at(i), p2.at(j))).str() << "\n";
        std::cout << "L(s, pi1 x pi2) = " << product.str() << "\n";
    }
    return 0;
}

int cmd_exceptional(const Options& opt) {
    const PrincipalSeries p1 = load_series(opt.pi1);
    const PrincipalSeries p2 = load_series(opt.pi2);

    if (!opt.s0.empty()) {
        const GaussianRational s0 = GaussianRational::parse(opt.s0);
        const ExceptionalCertificate cert = exceptional_certificate(p1, p2, s0);
        if (opt.json)
            emit(Json{{"command", "exceptional"}, {"certificate", to_json(cert)}});
        else
            std::cout << "exceptional pole at s0 = " << cert.s0.str() << ", level "
                      << cert.level << "\n"
                      << to_json(cert).dump(2) << "\n";
        return 0;
    }

    const std::vector<GaussianRational> anchors = exceptional_poles(p1, p2);
    Json list = Json::array();
    for (const GaussianRational& a : anchors)
        list.push_back(Json{{"anchor", to_json(a)},
                            {"certificate", to_json(exceptional_certificate(p1, p2, a))}});
    if (opt.json) {
        emit(Json{{"command", "exceptional"},
                  {"anchors", std::move(list)},
                  {"exceptional_l_factor", to_json(exceptional_l_factor(p1, p2))}});
    } else if (anchors.empty()) {
        std::cout << "P_ex empty\n";
    } else {
        std::cout << "exceptional anchors:";
        for (const GaussianRational& a : anchors) std::cout << " " << a.str();
        std::cout << "\nL_ex = " << exceptional_l_factor(p1, p2).str() << "\n" << list.dump(2) << "\n";
    }
    return 0;
}

int print_report(const FactorizationReport& report, const Options& opt) {
    if (opt.quiet) {
        std::cout << Json{{"equal", report.equal}}.dump() << "\n";
    } else if (opt.json) {
        Json j = to_json(report);
        j["command"] = "verify-lcm";
        emit(j);
    } else {
        std::cout << "lhs = " << report.lhs.str() << "\nrhs = " << report.rhs.str() << "\n"
                  << "equal: " << (report.equal ? "true" : "false") << "\n";
        if (!report.equal) std::cout << to_json(report).dump(2) << "\n";
    }
    return report.equal ? 0 : kExitVerifiedFalse;
}

int cmd_verify_lcm(const Options& opt) {
    if (opt.random_n.empty()) {
        if (opt.pi1.empty() || opt.pi2.empty())
            throw ParseError("verify-lcm needs either --pi1/--pi2 or --random n=<len>");
        const PrincipalSeries p1 = load_series(opt.pi1);
        const PrincipalSeries p2 = load_series(opt.pi2);
        return print_report(verify_factorization(p1, p2), opt);
    }

    PairGenOptions gen;
    gen.n = parse_random_n(opt.random_n);
    const std::uint64_t count = opt.count;

    std::vector<std::uint8_t> equal(count, 0);
    std::atomic<std::uint64_t> cursor{0};
    auto worker = [&] {
        for (std::uint64_t idx; (idx = cursor.fetch_add(1)) < count;) {
            Prng rng = Prng::for_item(opt.seed, idx);
            const GeneratedPair pair = random_general_position_pair(rng, gen);
            equal[idx] = verify_factorization(pair.p1, pair.p2).equal ? 1 : 0;
        }
    };
    std::vector<std::thread> pool;
    const unsigned jobs = std::max(1u, opt.jobs);
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    std::uint64_t failures = 0;
    std::int64_t first_failure = -1;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (!equal[i]) {
            ++failures;
            if (first_failure < 0) first_failure = static_cast<std::int64_t>(i);
        }
    }

    if (opt.quiet) {
        std::cout << Json{{"equal", failures == 0}}.dump() << "\n";
    } else if (opt.json) {
        Json j{{"command", "verify-lcm"},
               {"random", Json{{"n", gen.n}, {"count", count}, {"seed", opt.seed}}},
               {"failures", failures},
               {"equal", failures == 0}};
        if (first_failure >= 0) {
            Prng rng = Prng::for_item(opt.seed, static_cast<std::uint64_t>(first_failure));
            const GeneratedPair pair = random_general_position_pair(rng, gen);
            j["counterexample"] = Json{{"index", first_failure},
                                       {"pi1", render(pair.p1)},
                                       {"pi2", render(pair.p2)},
                                       {"report", to_json(verify_factorization(pair.p1, pair.p2))}};
        }
        emit(j);
    } else {
        std::cout << "verify-lcm random suite: n=" << gen.n << " count=" << count
                  << " seed=" << opt.seed << " -> " << (count - failures) << "/" << count
                  << " equal\n";
        if (first_failure >= 0) {
            Prng rng = Prng::for_item(opt.seed, static_cast<std::uint64_t>(first_failure));
            const GeneratedPair pair = random_general_position_pair(rng, gen);
            std::cout << "counterexample at index " << first_failure << ":\n  pi1 = "
                      << render(pair.p1) << "\n  pi2 = " << render(pair.p2) << "\n"
                      << to_json(verify_factorization(pair.p1, pair.p2)).dump(2) << "\n";
        }
    }
    return failures == 0 ? 0 : kExitVerifiedFalse;
}

int cmd_derivative(const Options& opt) {
    const PrincipalSeries p = load_series(opt.pi);
    const DerivativeDecomposition d = derivative(p, opt.k);
    if (opt.json) {
        Json comps = Json::array();
        for (const DerivativeComponent& c : d.components)
            comps.push_back(Json{{"subset", c.subset}, {"series", render(c.series)}});
        emit(Json{{"command", "derivative"}, {"k", d.k}, {"components", std::move(comps)}});
    } else {
        std::cout << "derivative k=" << d.k << " of " << render(p) << ": "
                  << d.components.size() << " component(s)\n";
        for (const DerivativeComponent& c : d.components) {
            std::cout << "  {";
            for (std::size_t i = 0; i < c.subset.size(); ++i)
                std::cout << (i ? "," : "") << c.subset[i];
            std::cout << "}  " << render(c.series) << "\n";
        }
    }
    return 0;
}

int cmd_tate(const Options& opt) {
    const CharacterGL1 c1 = opt.c1.empty() ? CharacterGL1() : parse_character(opt.c1);
    const CharacterGL1 c2 = opt.c2.empty() ? CharacterGL1() : parse_character(opt.c2);
    const std::complex<double> s = parse_complex_flag(opt.s_value);

    const std::complex<double> value = tate_integral_num(s, c1, c2, opt.deg);
    const bool odd = ((c1.eps() + c2.eps() + opt.deg) & 1) != 0;
    const std::complex<double> closed =
        odd ? 0.0 : gamma_r_eval(s + c1.s().to_complex() + c2.s().to_complex() +
                                 static_cast<double>(opt.deg));
    const double err = odd ? std::abs(value) : std::abs(value - closed) / std::abs(closed);

    if (opt.json) {
        emit(Json{{"command", "tate"},
                  {"value", Json{{"re", value.real()}, {"im", value.imag()}}},
                  {"closed_form", Json{{"re", closed.real()}, {"im", closed.imag()}}},
                  {"error", err}});
    } else {
        std::cout.precision(15);
        std::cout << "quadrature  = " << value << "\nclosed form = " << closed << "\n"
                  << (odd ? "abs" : "rel") << " error   = " << err << "\n";
    }
    if (!(err < 1e-6)) throw NumericError("quadrature disagrees with the closed form");
    return 0;
}

int cmd_spotcheck(const Options& opt) {
    const GammaProduct f = gamma_product_from_json(Json::parse(slurp(opt.file_f), nullptr, true, true));
    const GammaProduct g = gamma_product_from_json(Json::parse(slurp(opt.file_g), nullptr, true, true));
    const bool ok = symbolic_numeric_spotcheck(f, g, opt.trials, opt.seed ^ 0x5eedULL);
    if (opt.json)
        emit(Json{{"command", "spotcheck"}, {"agree", ok}, {"trials", opt.trials}});
    else
        std::cout << (ok ? "true" : "false") << "\n";
    return ok ? 0 : kExitVerifiedFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for archimedean Rankin-Selberg L-factors of principal series"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", opt.json, "emit JSON");
        sub->add_option("--seed", opt.seed, "seed for randomized behavior");
        sub->add_option("--jobs", opt.jobs, "worker threads (default: RSLAB_JOBS or 1)");
    };

    CLI::App* lfactor = app.add_subcommand("lfactor", "pair L-function as a Gamma_R factor table");
    lfactor->add_option("--pi1", opt.pi1, "first series (file or inline ps[...])")->required();
    lfactor->add_option("--pi2", opt.pi2, "second series")->required();
    add_common(lfactor);

    CLI::App* exceptional =
        app.add_subcommand("exceptional", "exceptional poles, levels and certificates");
    exceptional->add_option("--pi1", opt.pi1)->required();
    exceptional->add_option("--pi2", opt.pi2)->required();
    exceptional->add_option("--s0", opt.s0, "certify this point only (gaussian literal)");
    add_common(exceptional);

    CLI::App* verify = app.add_subcommand("verify-lcm",
                                          "check L^{-1} = lcm of inverse exceptional factors of derivatives");
    verify->add_option("--pi1", opt.pi1, "first series (file or inline ps[...])");
    verify->add_option("--pi2", opt.pi2, "second series");
    verify->add_option("--random", opt.random_n, "run a random suite, value n=<series length>");
    verify->add_option("--count", opt.count, "random suite size");
    verify->add_flag("--quiet", opt.quiet, "emit only {\"equal\": ...}");
    add_common(verify);

    CLI::App* deriv = app.add_subcommand("derivative", "derivative decomposition of one series");
    deriv->add_option("--pi", opt.pi, "series (file or inline)")->required();
    deriv->add_option("-k,--k", opt.k, "derivative order")->required();
    add_common(deriv);

    CLI::App* tate = app.add_subcommand("tate", "GL(1) Tate integral vs closed form");
    tate->add_option("--c1", opt.c1, "first character (inline, default trivial)");
    tate->add_option("--c2", opt.c2, "second character");
    tate->add_option("--deg", opt.deg, "test-function degree j in x^j e^{-pi x^2}");
    tate->add_option("--s", opt.s_value, "evaluation point, re[,im]")->required();
    add_common(tate);

    CLI::App* spot = app.add_subcommand("spotcheck", "numeric agreement of two Gamma_R products");
    spot->add_option("file_f", opt.file_f, "JSON file with the first product")->required();
    spot->add_option("file_g", opt.file_g, "JSON file with the second product")->required();
    spot->add_option("--trials", opt.trials, "sample points");
    add_common(spot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParseError;
    }

    try {
        if (lfactor->parsed()) return cmd_lfactor(opt);
        if (exceptional->parsed()) return cmd_exceptional(opt);
        if (verify->parsed()) return cmd_verify_lcm(opt);
        if (deriv->parsed()) return cmd_derivative(opt);
        if (tate->parsed()) return cmd_tate(opt);
        if (spot->parsed()) return cmd_spotcheck(opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
