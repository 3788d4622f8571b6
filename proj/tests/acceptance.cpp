// Acceptance runner: one PASS/FAIL line per criterion, details indented.
// Usage: acceptance [criterion numbers...]   (default: all ten)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "affcount/checks.hpp"
#include "affcount/class_formulas.hpp"
#include "affcount/compound.hpp"
#include "affcount/rm_action.hpp"

using namespace affcount;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> lines;

    void add(const CheckResult& c)
    {
        pass = pass && c.pass;
        lines.push_back(std::string(c.pass ? "ok   " : "FAIL ") + c.name + ": " + c.detail);
    }
    void expect(bool ok, const std::string& what)
    {
        pass = pass && ok;
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

Outcome worked_example()
{
    Outcome o;
    o.add(check_worked_example());
    return o;
}

Outcome function_count_oracles()
{
    Outcome o;
    struct Pair {
        unsigned q, n;
    };
    for (const Pair p : {Pair{2, 1}, Pair{2, 2}, Pair{2, 3}, Pair{2, 4}, Pair{3, 1}, Pair{3, 2}, Pair{4, 1}, Pair{4, 2}})
        o.add(check_function_count_oracles(p.n, PrimePower(p.q)));
    o.expect(count_function_classes(1, PrimePower(2)).count == 3, "N_{2,1} = 3");
    o.expect(count_function_classes(2, PrimePower(2)).count == 5, "N_{2,2} = 5");
    o.expect(count_function_classes(1, PrimePower(3)).count == 10, "N_{3,1} = 10");
    return o;
}

Outcome class_equation()
{
    Outcome o;
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (unsigned n = 1; n <= 8; ++n) o.add(check_class_equation(n, PrimePower(q)));
    // Each of these divides its Burnside sum by |G| exactly and throws on a
    // remainder.
    std::size_t runs = 0;
    try {
        for (unsigned q : {2u, 3u, 4u, 5u})
            for (unsigned n = 0; n <= 8; ++n, ++runs) count_function_classes(n, PrimePower(q));
        for (unsigned n = 1; n <= 7; ++n)
            for (unsigned s = 0; s <= n; ++s)
                for (unsigned r = s; r <= n; ++r, ++runs) theta(n, s, r);
        o.expect(true, "Burnside divisibility held in " + std::to_string(runs) + " counts");
    } catch (const InternalFault& e) {
        o.expect(false, std::string("Burnside divisibility: ") + e.what());
    }
    return o;
}

Outcome representatives()
{
    Outcome o;
    for (unsigned q : {2u, 3u})
        for (unsigned n = 1; n <= 5; ++n) o.add(check_representatives(n, PrimePower(q)));
    return o;
}

Outcome coset_oracles()
{
    Outcome o;
    o.expect(coset_class_count_M(2) == 2, "M_2 = 2");
    o.expect(coset_class_count_M(3) == 3, "M_3 = 3");
    for (unsigned n = 2; n <= 4; ++n) o.add(check_M_oracles(n));
    for (unsigned n = 1; n <= 4; ++n) o.add(check_theta_full_space(n));
    for (unsigned n = 1; n <= 6; ++n) o.add(check_theta_duality(n));
    for (unsigned n = 2; n <= 6; ++n) o.add(check_M_readings(n));
    return o;
}

Outcome compound_sweeps()
{
    Outcome o;
    o.add(check_kronecker_sweep(5, 50, 20240601));
    o.add(check_jordan_structure_sweep(12));
    o.add(check_rank_bound_sweep(12));
    return o;
}

Outcome translation_fix()
{
    Outcome o;
    for (unsigned n = 2; n <= 8; ++n) o.add(check_translation_fix(n));
    return o;
}

Outcome asymptotics()
{
    Outcome o;
    const AsymptoticReport rep = asymptotic_report(10);
    for (const auto& row : rep.rows)
        o.lines.push_back("     n=" + std::to_string(row.n) + " M_n=" + to_decimal(row.M).substr(0, 24) +
                          (to_decimal(row.M).size() > 24 ? "..." : "") + " rho_n=" + row.rho.substr(0, 12));
    for (const auto& c : check_asymptotics(rep)) o.add(c);
    return o;
}

Outcome case_bounds()
{
    Outcome o;
    for (unsigned n = 2; n <= 8; ++n) o.add(check_case_bounds(n));
    return o;
}

Outcome performance()
{
    Outcome o;
    const unsigned hw = std::max(2u, std::thread::hardware_concurrency());

    auto t0 = std::chrono::steady_clock::now();
    const FunctionClassCount n12 = count_function_classes(12, PrimePower(2), 1);
    const double s12 = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "N_{2,12} single worker in %.3f s (limit 60 s)", s12);
    o.expect(s12 < 60.0, buf);

    t0 = std::chrono::steady_clock::now();
    const FunctionClassCount n16 = count_function_classes(16, PrimePower(2), hw);
    const double s16 = seconds_since(t0);
    std::snprintf(buf, sizeof buf, "N_{2,16} with %u workers in %.3f s (limit 600 s)", hw, s16);
    o.expect(s16 < 600.0, buf);

    bool same = count_function_classes(12, PrimePower(2), hw).burnside_sum == n12.burnside_sum &&
                count_function_classes(16, PrimePower(2), 1).burnside_sum == n16.burnside_sum;
    for (unsigned k : {2u, 3u, 7u}) same = same && count_function_classes(14, PrimePower(2), k).count ==
                                                       count_function_classes(14, PrimePower(2), 1).count;
    same = same && theta(8, 0, 6, hw) == theta(8, 0, 6, 1);
    o.expect(same, "identical results across parallelism 1, 2, 3, 7 and " + std::to_string(hw));
    return o;
}

struct Criterion {
    const char* title;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> criteria{
        {"worked-example centralizers", worked_example},
        {"function-count oracle equivalence", function_count_oracles},
        {"class equation and Burnside divisibility", class_equation},
        {"representatives match the closed forms", representatives},
        {"coset-count oracles, full space and duality", coset_oracles},
        {"compound matrix sweeps", compound_sweeps},
        {"translation fixed cosets", translation_fix},
        {"asymptotic ratio properties", asymptotics},
        {"case-bound consistency", case_bounds},
        {"performance and parallel determinism", performance},
    };

    std::vector<unsigned> selected;
    for (int i = 1; i < argc; ++i) {
        const int k = std::atoi(argv[i]);
        if (k < 1 || k > static_cast<int>(criteria.size())) {
            std::cerr << "unknown criterion " << argv[i] << '\n';
            return 2;
        }
        selected.push_back(static_cast<unsigned>(k));
    }
    if (selected.empty())
        for (unsigned k = 1; k <= criteria.size(); ++k) selected.push_back(k);

    bool all = true;
    for (unsigned k : selected) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k - 1].run();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        char head[160];
        std::snprintf(head, sizeof head, "criterion %2u %s  %s (%.2f s)", k, o.pass ? "PASS" : "FAIL",
                      criteria[k - 1].title, seconds_since(t0));
        std::cout << head << '\n';
        for (const auto& line : o.lines) std::cout << "    " << line << '\n';
        std::cout.flush();
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
