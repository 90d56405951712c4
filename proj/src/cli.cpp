#include "krq/cli.hpp"

#include "krq/hilbert_oracle.hpp"
#include "krq/kr_polynomials.hpp"
#include "krq/limits.hpp"
#include "krq/parallel.hpp"
#include "krq/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <optional>

namespace krq {

namespace {

using nlohmann::json;

struct Common {
    std::string format = "json";
    bool progress = false;
    bool timing = false;
};

void add_common(CLI::App* cmd, Common& common)
{
    cmd->add_option("--format", common.format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_flag("--progress", common.progress, "progress messages on stderr");
    cmd->add_flag("--timing", common.timing, "add wall_time_ms to the JSON envelope");
}

std::string join(const std::vector<std::string>& args)
{
    std::string out;
    for (const auto& a : args) {
        if (!out.empty()) out += ' ';
        out += a;
    }
    return out;
}

class Envelope {
public:
    Envelope(const std::vector<std::string>& args, const Common& common)
        : common_(common), start_(std::chrono::steady_clock::now())
    {
        body_["tool"] = "krq";
        body_["version"] = KRQ_VERSION;
        body_["command"] = join(args);
        body_["q"] = nullptr;
        body_["bounds"] = json::object();
        body_["certainty"] = {{"proved", 0}, {"probable", 0}};
    }

    void q(const Rational& value) { body_["q"] = to_string(value); }
    void bound(const std::string& name, json value) { body_["bounds"][name] = std::move(value); }
    void certainty(const CertaintyTally& tally)
    {
        body_["certainty"] = {{"proved", tally.proved}, {"probable", tally.probable}};
    }

    void emit(std::ostream& out, json payload)
    {
        body_["payload"] = std::move(payload);
        if (common_.timing) {
            const auto elapsed = std::chrono::steady_clock::now() - start_;
            body_["wall_time_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        }
        out << body_.dump(2) << '\n';
    }

private:
    const Common& common_;
    std::chrono::steady_clock::time_point start_;
    json body_;
};

void progress(const Common& common, std::ostream& err, const std::string& message)
{
    if (common.progress) err << "[krq] " << message << '\n';
}

// ---- cn ---------------------------------------------------------------------

struct CnArgs {
    std::int64_t n = 0;
    std::optional<std::string> q;
    std::string route = "divisors";
};

int cmd_cn(const CnArgs& a, const Common& common, const std::vector<std::string>& args, std::ostream& out)
{
    if (a.n < 1) throw std::invalid_argument("cn requires n >= 1");
    const Route route = parse_route(a.route);
    const Format format = parse_format(common.format);
    const LaurentPoly poly = cn_polynomial(a.n, route);

    Envelope env(args, common);
    env.bound("n", a.n);
    json payload{{"n", a.n}, {"route", std::string(to_string(route))}};

    if (a.q) {
        const Rational q0 = parse_rational(*a.q);
        const Rational value = laurent_eval(poly, q0);
        env.q(q0);
        payload["value"] = to_string(value);
        if (format == Format::Csv) {
            out << "n,q,route,value\n" << a.n << ',' << to_string(q0) << ',' << to_string(route) << ','
                << to_string(value) << '\n';
        } else if (format == Format::Pretty) {
            out << "C_" << a.n << "(" << to_string(q0) << ") = " << to_string(value) << '\n';
        } else {
            env.emit(out, std::move(payload));
        }
        return kExitOk;
    }

    payload["polynomial"] = polynomial_json(poly);
    if (format == Format::Csv) write_polynomial_csv(out, poly);
    else if (format == Format::Pretty) out << "C_" << a.n << "(q) = " << pretty_polynomial(poly) << '\n';
    else env.emit(out, std::move(payload));
    return kExitOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
    std::int64_t max_n = 0;
    std::optional<std::int64_t> gf_max;
    std::int64_t gf_cap = kDefaultGfCap;
    bool oracle = false;
    std::uint64_t oracle_budget = OracleOptions{}.budget;
};

struct Discrepancy {
    std::int64_t n;
    std::string check;
    std::optional<std::int64_t> first_exponent;
};

struct VerifyRow {
    std::int64_t n;
    bool gf_checked;
    std::vector<Discrepancy> discrepancies;
};

VerifyRow verify_one(std::int64_t n, const std::vector<LaurentPoly>& gf)
{
    VerifyRow row{n, n <= static_cast<std::int64_t>(gf.size()), {}};
    const LaurentPoly coeffs = cn_via_coefficients(n);
    const LaurentPoly divisors = cn_via_divisors(n).shifted(n);
    auto compare = [&](const LaurentPoly& a, const LaurentPoly& b, const char* pair) {
        if (auto e = first_difference(a, b)) row.discrepancies.push_back({n, pair, e});
    };
    compare(coeffs, divisors, "coeffs/divisors");
    if (row.gf_checked) {
        const LaurentPoly from_gf = gf[static_cast<std::size_t>(n - 1)].shifted(n);
        compare(coeffs, from_gf, "coeffs/gf");
        compare(divisors, from_gf, "divisors/gf");
    }
    compare(coeffs, coeffs.reflected().shifted(2 * n), "palindromy");
    if (coeffs.min_exponent() != 0 || coeffs.max_exponent() != 2 * n || coeffs.coefficient(2 * n) != 1)
        row.discrepancies.push_back({n, "degree", std::nullopt});
    const auto [once, r1] = coeffs.divide_by_q_minus_one();
    const auto [twice, r2] = once.divide_by_q_minus_one();
    if (r1 != 0 || r2 != 0) row.discrepancies.push_back({n, "double-root", std::nullopt});
    return row;
}

int cmd_verify(const VerifyArgs& a, const Common& common, const std::vector<std::string>& args,
               std::ostream& out, std::ostream& err)
{
    if (a.max_n < 1) throw std::invalid_argument("verify requires --max-n >= 1");
    const std::int64_t gf_max = a.gf_max.value_or(std::min<std::int64_t>(a.max_n, 200));
    if (gf_max < 0 || gf_max > a.max_n) throw std::invalid_argument("--gf-max must lie in [0, --max-n]");
    const Format format = parse_format(common.format);
    const unsigned threads = thread_count_from_env();

    progress(common, err, "expanding generating function to order " + std::to_string(gf_max));
    const auto gf = cn_via_gf(gf_max, a.gf_cap);
    progress(common, err, "comparing routes for n <= " + std::to_string(a.max_n));
    const auto chunks = map_chunks<std::vector<VerifyRow>>(1, a.max_n, threads, [&](std::int64_t lo, std::int64_t hi) {
        std::vector<VerifyRow> rows;
        for (std::int64_t n = lo; n <= hi; ++n) rows.push_back(verify_one(n, gf));
        return rows;
    });

    json rows = json::array();
    json discrepancies = json::array();
    std::size_t mismatches = 0;
    for (const auto& chunk : chunks) {
        for (const auto& row : chunk) {
            json routes = json::array({"coeffs", "divisors"});
            if (row.gf_checked) routes.push_back("gf");
            rows.push_back({{"n", row.n}, {"routes", routes}, {"ok", row.discrepancies.empty()}});
            for (const auto& d : row.discrepancies) {
                discrepancies.push_back(
                    {{"n", d.n},
                     {"check", d.check},
                     {"first_exponent", d.first_exponent ? json(*d.first_exponent) : json(nullptr)}});
                ++mismatches;
            }
        }
    }

    json oracle_rows = json::array();
    if (a.oracle) {
        for (int n = 1; n <= std::min<std::int64_t>(a.max_n, kMaxOracleDimension); ++n) {
            for (int q : {2, 3}) {
                const Integer formula = cn_eval(n, q).get_num();
                try {
                    progress(common, err, "oracle n=" + std::to_string(n) + " q=" + std::to_string(q));
                    const Integer brute = count_ideals_bruteforce(n, q, {a.oracle_budget, threads});
                    const bool match = brute == formula;
                    if (!match) ++mismatches;
                    oracle_rows.push_back({{"n", n}, {"q", q}, {"bruteforce", to_string(brute)},
                                           {"formula", to_string(formula)}, {"status", match ? "match" : "mismatch"}});
                } catch (const BudgetExceeded&) {
                    oracle_rows.push_back({{"n", n}, {"q", q}, {"bruteforce", nullptr},
                                           {"formula", to_string(formula)}, {"status", "skipped"}});
                }
            }
        }
    }

    if (format == Format::Csv) {
        out << "n,routes,ok\n";
        for (const auto& r : rows) {
            std::string routes;
            for (const auto& x : r["routes"]) routes += (routes.empty() ? "" : "+") + x.get<std::string>();
            out << r["n"].get<std::int64_t>() << ',' << routes << ',' << (r["ok"].get<bool>() ? "true" : "false")
                << '\n';
        }
    } else if (format == Format::Pretty) {
        out << "checked n = 1.." << a.max_n << " (generating function up to " << gf_max << "): " << mismatches
            << " discrepancies\n";
        for (const auto& d : discrepancies) out << "  " << d.dump() << '\n';
        for (const auto& o : oracle_rows)
            out << "  oracle C_" << o["n"].get<int>() << "(" << o["q"].get<int>()
                << ") = " << o["formula"].get<std::string>() << " : " << o["status"].get<std::string>() << '\n';
    } else {
        Envelope env(args, common);
        env.bound("max_n", a.max_n);
        env.bound("gf_max", gf_max);
        env.emit(out, {{"rows", rows},
                       {"discrepancies", discrepancies},
                       {"discrepancy_count", mismatches},
                       {"oracle", oracle_rows}});
    }
    return mismatches == 0 ? kExitOk : kExitInconsistent;
}

// ---- scan / criterion / ek -------------------------------------------------

struct ScanArgs {
    std::int64_t max_n = 0;
    std::string q = "2";
    std::optional<std::int64_t> crosscheck;
};

int cmd_scan(const ScanArgs& a, const Common& common, const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err)
{
    const Rational q0 = parse_rational(a.q);
    const Format format = parse_format(common.format);
    const std::int64_t crosscheck = a.crosscheck.value_or(std::clamp<std::int64_t>(a.max_n, 0, 2000));
    progress(common, err, "scanning n <= " + std::to_string(a.max_n));
    const ClusterReport report = scan_phi(a.max_n, q0, crosscheck, thread_count_from_env());
    progress(common, err, std::to_string(report.rows.size()) + " members");

    if (format == Format::Csv) {
        write_deviation_csv(out, report.rows);
    } else if (format == Format::Pretty) {
        write_cluster_pretty(out, report);
    } else {
        Envelope env(args, common);
        env.q(q0);
        env.bound("max_n", a.max_n);
        env.bound("crosscheck", crosscheck);
        env.certainty(report.certainty);
        env.emit(out, cluster_json(report));
    }
    return kExitOk;
}

struct CriterionArgs {
    std::int64_t max_n = 0;
    std::optional<std::int64_t> epsilon_exponent;
    std::int64_t expand_bound = 64;
};

int cmd_criterion(const CriterionArgs& a, const Common& common, const std::vector<std::string>& args,
                  std::ostream& out, std::ostream& err)
{
    const Format format = parse_format(common.format);
    progress(common, err, "criterion scan n <= " + std::to_string(a.max_n));
    const CriterionReport report =
        criterion_scan(a.max_n, a.epsilon_exponent, a.expand_bound, thread_count_from_env());

    if (format == Format::Csv) {
        write_criterion_csv(out, report);
    } else if (format == Format::Pretty) {
        write_criterion_pretty(out, report);
    } else {
        Envelope env(args, common);
        env.q(2);
        env.bound("max_n", a.max_n);
        env.bound("expand_bound", a.expand_bound);
        env.certainty(report.certainty);
        env.emit(out, criterion_json(report));
    }
    return kExitOk;
}

struct EkArgs {
    std::string k;
    std::int64_t max_h = 0;
    std::string q = "2";
    std::int64_t expand_bound = 10000;
};

int cmd_ek(const EkArgs& a, const Common& common, const std::vector<std::string>& args, std::ostream& out)
{
    const Rational parsed_k = parse_rational(a.k);
    if (parsed_k.get_den() != 1) throw std::invalid_argument("--k must be an integer");
    const Integer k = parsed_k.get_num();
    const Rational q0 = parse_rational(a.q);
    const Format format = parse_format(common.format);
    const auto records = ek_search_report(k, a.max_h, q0, a.expand_bound);

    if (format == Format::Csv) {
        write_deviation_csv(out, records);
    } else if (format == Format::Pretty) {
        write_deviation_pretty(out, records);
    } else {
        CertaintyTally tally;
        json rows = json::array();
        for (const auto& rec : records) {
            tally.add(rec.decomposition.certainty);
            rows.push_back(record_json(rec));
        }
        Envelope env(args, common);
        env.q(q0);
        env.bound("max_h", a.max_h);
        env.bound("expand_bound", a.expand_bound);
        env.certainty(tally);
        env.emit(out, {{"k", to_string(k)}, {"limit", to_string(limit_candidate(k, q0))}, {"records", rows}});
    }
    return kExitOk;
}

// ---- oracle ------------------------------------------------------------------

struct OracleArgs {
    int n = 0;
    int q = 0;
    std::uint64_t budget = OracleOptions{}.budget;
};

int cmd_oracle(const OracleArgs& a, const Common& common, const std::vector<std::string>& args, std::ostream& out)
{
    const Format format = parse_format(common.format);
    const OracleCount count = count_cyclic_triples(a.n, a.q, {a.budget, thread_count_from_env()});
    const Integer formula = cn_eval(a.n, a.q).get_num();
    const bool match = count.ideals == formula;

    if (format == Format::Csv) {
        out << "n,q,cyclic_triples,gl_order,ideals,formula,match\n"
            << a.n << ',' << a.q << ',' << count.cyclic_triples.get_str() << ',' << count.group_order.get_str() << ','
            << count.ideals.get_str() << ',' << formula.get_str() << ',' << (match ? "true" : "false") << '\n';
    } else if (format == Format::Pretty) {
        out << "codimension-" << a.n << " ideals over F_" << a.q << ": " << count.ideals.get_str()
            << " (formula " << formula.get_str() << ", " << (match ? "match" : "MISMATCH") << ")\n";
    } else {
        Envelope env(args, common);
        env.q(a.q);
        env.bound("n", a.n);
        env.bound("budget", a.budget);
        env.emit(out, {{"n", a.n},
                       {"q", a.q},
                       {"cyclic_triples", to_string(count.cyclic_triples)},
                       {"gl_order", to_string(count.group_order)},
                       {"ideals", to_string(count.ideals)},
                       {"formula", to_string(formula)},
                       {"match", match}});
    }
    return match ? kExitOk : kExitInconsistent;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact ideal-counting polynomials C_n(q) and the limit points of their deviations", "krq"};
    app.require_subcommand(1);
    app.set_version_flag("--version", KRQ_VERSION);
    Common common;

    CnArgs cn_args;
    auto* cn = app.add_subcommand("cn", "C_n(q) as a polynomial, or its exact value at --q");
    cn->add_option("n", cn_args.n, "codimension n >= 1")->required();
    cn->add_option("--q", cn_args.q, "evaluation point (integer or num/den)");
    cn->add_option("--route", cn_args.route, "coeffs | divisors | gf")
        ->check(CLI::IsMember({"coeffs", "divisors", "gf"}));
    add_common(cn, common);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "cross-check the three routes and structural identities");
    verify->add_option("--max-n", verify_args.max_n, "check n = 1..N")->required();
    verify->add_option("--gf-max", verify_args.gf_max, "generating-function order M <= N (default min(N, 200))");
    verify->add_option("--gf-cap", verify_args.gf_cap, "refuse generating-function orders above this");
    verify->add_flag("--oracle", verify_args.oracle, "also run the brute-force ideal count for n <= 3, q in {2,3}");
    verify->add_option("--oracle-budget", verify_args.oracle_budget, "cap on q^(n*n) for the oracle");
    add_common(verify, common);

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "deviations D_n(q) over n <= N with prime odd part, grouped by k");
    scan->add_option("--max-n", scan_args.max_n, "scan bound N")->required();
    scan->add_option("--q", scan_args.q, "q >= 2 (integer or num/den)");
    scan->add_option("--crosscheck", scan_args.crosscheck, "direct evaluation for n <= B (default min(N, 2000))");
    add_common(scan, common);

    CriterionArgs criterion_args;
    auto* criterion = app.add_subcommand("criterion", "flag n with |D_n(2)| <= 1/2 + eps");
    criterion->add_option("--max-n", criterion_args.max_n, "scan bound N")->required();
    criterion->add_option("--epsilon-exp", criterion_args.epsilon_exponent, "fixed eps = 2^-e (default eps = 2^-n)");
    criterion->add_option("--expand-bound", criterion_args.expand_bound, "print |D_n(2)| exactly for n <= B");
    add_common(criterion, common);

    EkArgs ek_args;
    auto* ek = app.add_subcommand("ek", "members of E_k up to 2^H with exact deviations");
    ek->add_option("--k", ek_args.k, "odd integer k")->required();
    ek->add_option("--max-h", ek_args.max_h, "largest exponent H")->required();
    ek->add_option("--q", ek_args.q, "q >= 2 (integer or num/den)");
    ek->add_option("--expand-bound", ek_args.expand_bound, "evaluate directly for n <= B");
    add_common(ek, common);

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "brute-force count of codimension-n ideals over F_q");
    oracle->add_option("--n", oracle_args.n, "1..3")->required();
    oracle->add_option("--q", oracle_args.q, "2, 3 or 5")->required();
    oracle->add_option("--budget", oracle_args.budget, "cap on q^(n*n)");
    add_common(oracle, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cn) return cmd_cn(cn_args, common, args, out);
        if (*verify) return cmd_verify(verify_args, common, args, out, err);
        if (*scan) return cmd_scan(scan_args, common, args, out, err);
        if (*criterion) return cmd_criterion(criterion_args, common, args, out, err);
        if (*ek) return cmd_ek(ek_args, common, args, out);
        if (*oracle) return cmd_oracle(oracle_args, common, args, out);
    } catch (const InconsistencyError& e) {
        err << "krq: inconsistency: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const std::invalid_argument& e) {
        err << "krq: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "krq: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "krq: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace krq
