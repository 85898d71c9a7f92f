// Acceptance suite: one PASS/FAIL line per criterion. Tolerances and time
// budgets are fixed here; a criterion passes only if its check passes within budget.

#include "robin/robin.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace robin;

namespace
{

struct Criterion
{
    int id;
    std::string title;
    double budget_seconds;
    std::function<std::vector<CheckResult>()> run;
};

// Criterion 11: the suite itself must notice a 0.1% change of phi.
CheckResult fault_injection()
{
    const auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opt;
    opt.phi_scale = 1.001;
    const auto results = run_verify(opt);
    CheckResult r;
    r.name = "fault_injection";
    r.bound = Bound::at_least;
    r.tolerance = 1.0;
    int failing = 0;
    std::string names;
    for (const auto &c : results) {
        if (!c.passed) {
            ++failing;
            names += (names.empty() ? "" : " ") + c.name;
        }
    }
    r.observed = failing;
    r.passed = failing >= 1;
    r.detail = "checks failing under phi*1.001: " + names;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace

int main()
{
    const VerifyOptions base;
    const std::vector<Criterion> criteria{
        {1, "scattering functional equation", 5, [&] { return std::vector{check_functional_equation(base, 1e-9)}; }},
        {2, "constant-term oracle agreement", 60, [&] { return std::vector{check_oracle_agreement(base, 1e-6)}; }},
        {3, "Robin reality", 120, [&] { return std::vector{check_robin_reality(base, 1e-8)}; }},
        {4, "derivative formula", 60, [&] { return std::vector{check_derivative_formula(base, 1e-5)}; }},
        {5, "Maass-Selberg pairing", 120, [&] { return std::vector{check_maass_selberg(base, 1e-3)}; }},
        {6, "Dirichlet limit", 30, [&] { return std::vector{check_dirichlet_limit(base, 1e-4)}; }},
        {7, "continuation", 60,
         [&] { return std::vector{check_continuation(base, 1e-4), check_half_point(base, 1e-6)}; }},
        {8, "root disjointness", 30, [&] { return std::vector{check_disjointness(base, 1e-7)}; }},
        {9, "lambda' decay", 20, [&] { return std::vector{check_lambda_prime_decay(base, 1.0)}; }},
        {10, "Jordan chain", 10, [&] { return std::vector{check_jordan_chain(base, 1e-8)}; }},
        {11, "fault injection", 30, [&] { return std::vector{fault_injection()}; }},
    };

    int failed = 0;
    double total = 0.0;
    for (const auto &c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto results = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        total += secs;
        bool ok = secs <= c.budget_seconds;
        std::string body;
        for (const auto &r : results) {
            ok = ok && r.passed;
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s%s observed=%.3e %s %.1e", body.empty() ? "" : "; ", r.name.c_str(),
                          r.observed, bound_text(r.bound), r.tolerance);
            body += buf;
            if (!r.detail.empty()) {
                body += " (" + r.detail + ")";
            }
        }
        std::printf("%s criterion %d: %s | %s | %.2fs of %.0fs budget\n", ok ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), body.c_str(), secs, c.budget_seconds);
        std::fflush(stdout);
        failed += ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed in %.1fs\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
                total);
    return failed == 0 ? 0 : 1;
}
