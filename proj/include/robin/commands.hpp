#ifndef ROBIN_COMMANDS_HPP
#define ROBIN_COMMANDS_HPP

#include "robin/continuation.hpp"
#include "robin/csv.hpp"
#include "robin/errors.hpp"
#include "robin/maass_selberg.hpp"
#include "robin/robin_maps.hpp"
#include "robin/root_finding.hpp"
#include "robin/verify.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace robin
{

struct RunConfig
{
    double eta = 2.0;
    Window window{0.0, 1.0, 0.0, 30.0};
    std::vector<ExtendedComplex> gamma_values{ExtendedComplex(0.0)};
    PathSpec path;
    double tol = 1e-6;
    std::string output_path = "-";
    double phi_scale = 1.0;

    RunConfig()
    {
        path.waypoints = {Complex(2.0, 0.0), Complex(0.75, 0.0)};
        path.max_step = 0.25;
        path.min_step = 1e-9;
    }

    void validate() const
    {
        if (!(eta > 1.0)) {
            throw UsageError("eta must exceed 1");
        }
        if (!(window.x1 >= window.x0 && window.y1 >= window.y0)) {
            throw UsageError("window must satisfy x0 <= x1 and y0 <= y1");
        }
        if (!(tol > 0.0)) {
            throw UsageError("tolerance must be positive");
        }
        if (!(phi_scale > 0.0)) {
            throw UsageError("phi scale must be positive");
        }
        try {
            path.validate();
        } catch (const DomainError &e) {
            throw UsageError(e.what());
        }
    }

    TruncationConfig truncation() const
    {
        TruncationConfig c;
        c.eta = eta;
        if (phi_scale != 1.0) {
            c.surface = perturbed(c.surface, phi_scale);
        }
        return c;
    }
};

inline std::string trim(const std::string &s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        ++a;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        --b;
    }
    return s.substr(a, b - a);
}

inline std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        cur = trim(cur);
        if (!cur.empty()) {
            out.push_back(cur);
        }
    }
    return out;
}

inline double parse_real(const std::string &text)
{
    const std::string t = trim(text);
    char *end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size()) {
        throw UsageError("not a number: '" + text + "'");
    }
    return v;
}

/// Accepts "1.5", "-2i", "0.5+3i", "1e-3-2.5i" and "inf" (the point at infinity).
inline ExtendedComplex parse_extended(const std::string &text)
{
    const std::string t = trim(text);
    if (t == "inf" || t == "+inf" || t == "infinity") {
        return ExtendedComplex::infinity();
    }
    if (t.empty()) {
        throw UsageError("empty complex value");
    }
    if (t.back() != 'i') {
        return Complex(parse_real(t), 0.0);
    }
    const std::string body = t.substr(0, t.size() - 1);
    // Split at the last sign that is not part of an exponent.
    std::size_t cut = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    auto imag_of = [&](const std::string &s) {
        if (s.empty() || s == "+") {
            return 1.0;
        }
        if (s == "-") {
            return -1.0;
        }
        return parse_real(s);
    };
    if (cut == std::string::npos) {
        return Complex(0.0, imag_of(body));
    }
    return Complex(parse_real(body.substr(0, cut)), imag_of(body.substr(cut)));
}

inline Complex parse_complex(const std::string &text)
{
    const auto v = parse_extended(text);
    if (v.infinite) {
        throw UsageError("infinity is not allowed here: '" + text + "'");
    }
    return v.value;
}

inline Window parse_window(const std::string &text)
{
    const auto parts = split(text, ',');
    if (parts.size() != 4) {
        throw UsageError("window needs x0,x1,y0,y1");
    }
    return {parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2]), parse_real(parts[3])};
}

inline std::vector<ExtendedComplex> parse_gamma_list(const std::string &text)
{
    std::vector<ExtendedComplex> out;
    for (const auto &p : split(text, ',')) {
        out.push_back(parse_extended(p));
    }
    if (out.empty()) {
        throw UsageError("gamma list is empty");
    }
    return out;
}

/// Waypoints separated by ';', e.g. "2;0.5+3i".
inline std::vector<Complex> parse_path(const std::string &text)
{
    std::vector<Complex> out;
    for (const auto &p : split(text, ';')) {
        out.push_back(parse_complex(p));
    }
    return out;
}

namespace detail
{

inline void error_trailer(CsvWriter &w, const Error &e)
{
    w.row({std::string("error"), std::string(e.kind()), std::string(e.what())});
    w.flush();
}

inline void append(std::vector<CsvField> &row, Complex z)
{
    row.push_back(z.real());
    row.push_back(z.imag());
}

inline void append(std::vector<CsvField> &row, const ExtendedComplex &g)
{
    if (g.infinite) {
        row.push_back(std::numeric_limits<double>::infinity());
        row.push_back(0.0);
    } else {
        append(row, g.value);
    }
}

} // namespace detail

/// Robin roots in the window for every gamma. Returns the process exit code.
inline int cmd_spectrum(const RunConfig &rc, std::ostream &out)
{
    CsvWriter w(out);
    w.header({"gamma_re", "gamma_im", "s_re", "s_im", "lambda_re", "lambda_im", "robin_residual"});
    try {
        rc.validate();
        const auto cfg = rc.truncation();
        for (const auto &g : rc.gamma_values) {
            for (const auto &r : solve_robin_roots(g, rc.window, cfg)) {
                std::vector<CsvField> row;
                detail::append(row, g);
                detail::append(row, r.point.s);
                detail::append(row, r.point.lambda);
                row.push_back(r.residual);
                w.row(row);
            }
        }
    } catch (const UsageError &) {
        throw;
    } catch (const Error &e) {
        detail::error_trailer(w, e);
        return 1;
    }
    return 0;
}

/// Eigenvalue curve along the gamma path, seeded by the root in the window
/// closest to its centre at the first waypoint.
inline int cmd_trace(const RunConfig &rc, std::ostream &out)
{
    CsvWriter w(out);
    w.header({"t", "gamma_re", "gamma_im", "s_re", "s_im", "lambda_re", "lambda_im", "lambda_prime_formula_re",
              "lambda_prime_formula_im", "lambda_prime_fd_re", "lambda_prime_fd_im", "flag"});
    rc.validate();
    const auto cfg = rc.truncation();
    auto emit = [&](const TracePoint &p, const std::string &forced) {
        std::vector<CsvField> row{p.t};
        detail::append(row, p.point.gamma);
        detail::append(row, p.point.s);
        detail::append(row, p.point.lambda);
        std::string flag = forced;
        Complex formula(std::numeric_limits<double>::quiet_NaN(), 0.0), fd = formula;
        try {
            const auto lp = lambda_prime_of_gamma(p.point, cfg);
            formula = lp.value;
            fd = detail::fd_lambda_prime(p.point.s, p.point.gamma.value, cfg);
            if (flag.empty() && (lp.ramification || std::abs(formula - fd) > 1e-5 * std::abs(formula))) {
                flag = "ramification";
            }
        } catch (const Error &) {
            if (flag.empty()) {
                flag = "ramification";
            }
        }
        detail::append(row, formula);
        detail::append(row, fd);
        row.push_back(flag);
        w.row(row);
    };
    try {
        const Complex g0 = rc.path.waypoints.front();
        const auto roots = solve_robin_roots(g0, rc.window, cfg);
        if (roots.empty()) {
            throw ConvergenceError("trace: no root in the window at the start of the path");
        }
        const Complex c = rc.window.center();
        Complex seed = roots.front().point.s;
        for (const auto &r : roots) {
            if (std::abs(r.point.s - c) < std::abs(seed - c)) {
                seed = r.point.s;
            }
        }
        for (const auto &p : trace_curve(rc.path, make_point(seed, g0, cfg.eta), cfg)) {
            emit(p, "");
        }
    } catch (const StepCollapseError &e) {
        const auto &partial = e.partial();
        for (std::size_t i = 0; i < partial.size(); ++i) {
            emit(partial[i], i + 1 == partial.size() ? "ramification" : "");
        }
        detail::error_trailer(w, e);
        return 1;
    } catch (const UsageError &) {
        throw;
    } catch (const Error &e) {
        detail::error_trailer(w, e);
        return 1;
    }
    return 0;
}

/// beta continued from the first waypoint to each later one, against the closed form.
inline int cmd_continue(const RunConfig &rc, std::ostream &out)
{
    CsvWriter w(out);
    w.header({"s_re", "s_im", "beta_cont_re", "beta_cont_im", "beta_oracle_re", "beta_oracle_im", "abs_diff",
              "pole_flag", "status"});
    rc.validate();
    const auto cfg = rc.truncation();
    const auto &wp = rc.path.waypoints;
    bool failed = false;
    for (std::size_t k = 1; k < wp.size(); ++k) {
        PathSpec p = rc.path;
        p.waypoints.assign(wp.begin(), wp.begin() + static_cast<long>(k) + 1);
        std::vector<CsvField> row;
        detail::append(row, wp[k]);
        const auto oracle = scattering_phi(cfg.surface, wp[k]);
        try {
            const auto [v, chain] = continue_beta(p, rc.tol);
            bool at_pole = v.pole;
            for (const auto &f : chain.pole_flags) {
                at_pole = at_pole || std::abs(f.location - wp[k]) <= 1e-6;
            }
            detail::append(row, v.value);
            detail::append(row, oracle.value);
            row.push_back(oracle.pole || v.pole ? std::numeric_limits<double>::quiet_NaN()
                                                 : std::abs(v.value - oracle.value));
            row.push_back(static_cast<long>(at_pole));
            row.push_back(std::string("ok"));
        } catch (const Error &e) {
            failed = true;
            const double nan = std::numeric_limits<double>::quiet_NaN();
            row.push_back(nan);
            row.push_back(nan);
            detail::append(row, oracle.value);
            row.push_back(nan);
            row.push_back(0L);
            row.push_back(std::string(e.kind()));
        }
        w.row(row);
    }
    return failed ? 1 : 0;
}

/// Ramification points (zeros of gamma'(s)) in the window.
inline int cmd_branch(const RunConfig &rc, std::ostream &out)
{
    CsvWriter w(out);
    w.header({"s_re", "s_im", "gamma_re", "gamma_im", "order", "pairing_abs", "verified"});
    try {
        rc.validate();
        const auto cfg = rc.truncation();
        for (const auto &h : ramification_scan(rc.window, cfg)) {
            std::vector<CsvField> row;
            detail::append(row, h.s);
            detail::append(row, gamma_of_s(h.s, cfg));
            row.push_back(static_cast<long>(h.order));
            row.push_back(h.pairing_abs);
            row.push_back(static_cast<long>(h.verified));
            w.row(row);
        }
    } catch (const UsageError &) {
        throw;
    } catch (const Error &e) {
        detail::error_trailer(w, e);
        return 1;
    }
    return 0;
}

inline const char *bound_text(Bound b)
{
    switch (b) {
    case Bound::at_most:
        return "<=";
    case Bound::below:
        return "<";
    case Bound::at_least:
        return ">=";
    }
    return "?";
}

/// Full verification suite; the report goes to `report`, the CSV table to `csv` if given.
inline int cmd_verify(const RunConfig &rc, std::optional<double> tol_override, std::ostream &report,
                      std::ostream *csv = nullptr)
{
    rc.validate();
    VerifyOptions opt;
    opt.cfg.eta = rc.eta;
    opt.phi_scale = rc.phi_scale;
    opt.tol_override = tol_override;
    const auto results = run_verify(opt);
    std::vector<std::string> failing;
    for (const auto &r : results) {
        char line[256];
        std::snprintf(line, sizeof line, "%-4s %-20s observed=%-12.4e %s tol=%-9.2e %6.2fs", r.passed ? "PASS" : "FAIL",
                      r.name.c_str(), r.observed, bound_text(r.bound), r.tolerance, r.seconds);
        report << line << "  " << r.detail << '\n';
        if (!r.passed) {
            failing.push_back(r.name);
        }
    }
    if (csv) {
        CsvWriter w(*csv);
        // No timings here, so that the table is reproducible byte for byte.
        w.header({"check", "passed", "observed", "bound", "tolerance", "detail"});
        for (const auto &r : results) {
            w.row({r.name, static_cast<long>(r.passed), r.observed, std::string(bound_text(r.bound)), r.tolerance,
                   r.detail});
        }
    }
    if (failing.empty()) {
        report << "verify: all " << results.size() << " checks passed\n";
        return 0;
    }
    report << "verify: failing checks:";
    for (const auto &f : failing) {
        report << ' ' << f;
    }
    report << '\n';
    return 1;
}

} // namespace robin

#endif
