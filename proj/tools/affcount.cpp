// affcount: orbit counts of affine groups on functions and Reed-Muller
// quotients, plus the cross-check suites.
//
// Exit status: 0 ok, 1 verification failure, 2 invalid input or guard,
// 3 internal fault.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "affcount/checks.hpp"
#include "affcount/class_formulas.hpp"
#include "affcount/compound.hpp"
#include "affcount/rm_action.hpp"

using namespace affcount;
using Json = nlohmann::ordered_json;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    unsigned q = 2;
    unsigned n = 0;
    std::string format = "json";
    unsigned parallelism = 1;
    bool verbose = false;
    std::string out;
};

struct Output {
    Json json;              // used for format=json
    std::string csv;        // used for format=csv
    bool ok = true;
};

PrimePower field_of(unsigned q)
{
    if (q > 512) throw InputError("q=" + std::to_string(q) + " exceeds 512");
    if (!PrimePower::is_prime_power(q)) throw InputError("q=" + std::to_string(q) + " is not a prime power");
    return PrimePower(q);
}

void guard(const char* what, unsigned value, unsigned limit, const char* flag)
{
    if (value > limit)
        throw InputError(std::string("resource guard: ") + what + "=" + std::to_string(value) + " exceeds " +
                         std::to_string(limit) + " (raise with " + flag + ")");
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    return r + '"';
}

Json header(const char* command, Json params)
{
    Json j;
    j["command"] = command;
    j["parameters"] = std::move(params);
    return j;
}

Output count_functions(const Common& c)
{
    const PrimePower q = field_of(c.q);
    const FunctionClassCount r = count_function_classes(c.n, q, c.parallelism);
    Output o;
    o.json = header("count-functions", {{"q", std::to_string(c.q)}, {"n", std::to_string(c.n)}});
    o.json["result"] = {{"count", to_decimal(r.count)},
                        {"class_count", to_decimal(r.class_count)},
                        {"class_indices", std::to_string(r.index_count)},
                        {"group_order", to_decimal(r.group_order)},
                        {"burnside_sum", to_decimal(r.burnside_sum)}};
    if (c.verbose && c.n > 0) {
        Json classes = Json::array();
        for_each_class_evaluation(AglContext(c.n, q), [&](const ClassEvaluation& e) {
            classes.push_back({{"index", e.index.to_string()},
                               {"centralizer", to_decimal(e.centralizer)},
                               {"order", to_decimal(e.order)},
                               {"orbit_exponent", to_decimal(e.fix_exponent)},
                               {"multiplicity", to_decimal(e.multiplicity)}});
        });
        o.json["classes"] = std::move(classes);
    }
    o.json["verification"] = {{"status", "pass"}, {"detail", "burnside sum divisible by |G|"}};
    o.csv = "q,n,count,class_count,class_indices,group_order\n" + std::to_string(c.q) + "," +
            std::to_string(c.n) + "," + to_decimal(r.count) + "," + to_decimal(r.class_count) + "," +
            std::to_string(r.index_count) + "," + to_decimal(r.group_order) + "\n";
    return o;
}

Output count_cosets(const Common& c, unsigned s, unsigned r, bool coset_classes, unsigned max_n)
{
    if (c.q != 2) throw InputError("count-cosets is binary only (q=2)");
    guard("n", c.n, max_n, "--max-n");
    if (coset_classes) {
        if (c.n < 2) throw InputError("--coset-classes needs n >= 2");
        s = 0;
        r = c.n - 2;
    }
    if (s > r || r > c.n)
        throw InputError("need 0 <= s <= r <= n, got s=" + std::to_string(s) + " r=" + std::to_string(r) +
                         " n=" + std::to_string(c.n));
    const ThetaResult t = theta_detail(c.n, s, r, c.parallelism);
    Output o;
    o.json = header("count-cosets", {{"n", std::to_string(c.n)},
                                     {"s", std::to_string(s)},
                                     {"r", std::to_string(r)},
                                     {"coset_classes", coset_classes}});
    o.json["result"] = {{"count", to_decimal(t.value)},
                        {"class_indices", std::to_string(t.index_count)},
                        {"burnside_sum", to_decimal(t.burnside_sum)}};
    o.json["verification"] = {{"status", "pass"}, {"detail", "burnside sum divisible by |G|"}};
    o.csv = "n,s,r,count,class_indices\n" + std::to_string(c.n) + "," + std::to_string(s) + "," +
            std::to_string(r) + "," + to_decimal(t.value) + "," + std::to_string(t.index_count) + "\n";
    return o;
}

Output verify(const Common& c, const std::string& suite, unsigned max_n)
{
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw InputError("unknown suite '" + suite + "'");
    field_of(c.q);
    guard("n", c.n, max_n, "--max-n");
    SuiteOptions opt;
    opt.q = c.q;
    opt.n = c.n;
    opt.parallelism = c.parallelism;
    opt.progress = [](const std::string& line) { std::cerr << line << '\n'; };
    SuiteReport rep;
    try {
        rep = run_suite(suite, opt);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    Output o;
    o.ok = rep.pass();
    o.json = header("verify", {{"suite", suite}, {"q", std::to_string(c.q)}, {"n", std::to_string(c.n)}});
    Json checks = Json::array();
    std::ostringstream csv;
    csv << "check,status,detail\n";
    for (const auto& ch : rep.checks) {
        checks.push_back({{"name", ch.name}, {"status", ch.pass ? "pass" : "fail"}, {"detail", ch.detail}});
        csv << csv_quote(ch.name) << ',' << (ch.pass ? "pass" : "fail") << ',' << csv_quote(ch.detail) << '\n';
    }
    o.json["result"] = {{"checks", std::move(checks)}};
    o.json["verification"] = {{"status", o.ok ? "pass" : "fail"}};
    o.csv = csv.str();
    return o;
}

Output asymptotic(const Common& c, unsigned n_max, unsigned max_n)
{
    if (n_max < 2) throw InputError("--n-max must be >= 2");
    guard("n-max", n_max, max_n, "--max-n");
    const AsymptoticReport rep = asymptotic_report(n_max, c.parallelism);
    Output o;
    o.json = header("asymptotic", {{"n_max", std::to_string(n_max)}});
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "n,M,exponent,rho\n";
    for (const auto& row : rep.rows) {
        rows.push_back({{"n", std::to_string(row.n)},
                        {"M", to_decimal(row.M)},
                        {"exponent", std::to_string(row.exponent)},
                        {"rho", row.rho}});
        csv << row.n << ',' << to_decimal(row.M) << ',' << row.exponent << ',' << row.rho << '\n';
    }
    o.json["result"] = {{"constant", rep.constant_decimal},
                        {"constant_terms", std::to_string(rep.constant.terms)},
                        {"rows", std::move(rows)}};
    o.json["verification"] = {{"status", "pass"}};
    o.csv = csv.str();
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Orbit counts of affine groups on functions over finite fields"};
    app.require_subcommand(1);

    Common c;
    auto add_common = [&](CLI::App* sub, bool with_q) {
        if (with_q) sub->add_option("--q", c.q, "field size (prime power <= 512)");
        sub->add_option("--n", c.n, "dimension");
        sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--parallelism", c.parallelism, "worker threads")->check(CLI::Range(1u, 1024u));
        sub->add_flag("--verbose", c.verbose, "per-class detail (json)");
        sub->add_option("--out", c.out, "also write the report to this file");
    };

    unsigned max_n_functions = 16, max_n_cosets = 10, max_n_verify = 12, max_n_asym = 10;
    unsigned s = 0, r = 0, n_max = 10;
    bool coset_classes = false;
    std::string suite;

    auto* cf = app.add_subcommand("count-functions", "orbits of AGL(n,F_q) on all functions F_q^n -> F_q");
    add_common(cf, true);
    cf->add_option("--max-n", max_n_functions, "resource guard on n");

    auto* cc = app.add_subcommand("count-cosets", "orbits of AGL(n,F_2) on R(r,n)/R(s-1,n)");
    add_common(cc, false);
    cc->add_option("--s", s, "lower degree");
    cc->add_option("--r", r, "upper degree");
    cc->add_flag("--coset-classes", coset_classes, "count R(n-2,n) orbits (s=0, r=n-2)");
    cc->add_option("--max-n", max_n_cosets, "resource guard on n");

    auto* vf = app.add_subcommand("verify", "run a cross-check suite");
    add_common(vf, true);
    vf->add_option("--suite", suite, "reps, class-equation, oracle, duality, compound, asymptotic")->required();
    vf->add_option("--max-n", max_n_verify, "resource guard on n");

    auto* as = app.add_subcommand("asymptotic", "M_n and the normalized ratio rho_n for 2 <= n <= n-max");
    add_common(as, false);
    as->add_option("--n-max", n_max, "largest n");
    as->add_option("--max-n", max_n_asym, "resource guard on n-max");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    Output o;
    try {
        if (cf->parsed()) {
            guard("n", c.n, max_n_functions, "--max-n");
            o = count_functions(c);
        } else if (cc->parsed()) {
            o = count_cosets(c, s, r, coset_classes, max_n_cosets);
        } else if (vf->parsed()) {
            if (vf->count("--n") == 0) c.n = 4;
            o = verify(c, suite, max_n_verify);
        } else {
            o = asymptotic(c, n_max, max_n_asym);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal fault: " << e.what() << '\n';
        return 3;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::string text;
    if (c.format == "csv") {
        text = o.csv;
    } else {
        o.json["timing"] = {{"elapsed_seconds", secs}, {"parallelism", c.parallelism}};
        text = o.json.dump(2) + "\n";
    }
    std::cout << text;
    if (!c.out.empty()) {
        std::ofstream f(c.out, std::ios::binary);
        f << text;
        if (!f) {
            std::cerr << "error: cannot write " << c.out << '\n';
            return 2;
        }
    }
    return o.ok ? 0 : 1;
}
