// robin: command-line front end for the Robin spectral toolkit.
//
//   robin spectrum --gamma 0,1,inf --window 0,1,0,30 --out roots.csv
//   robin trace    --path "0;4" --window 0.4,0.6,7,10
//   robin continue --path "2;0.75;0.5+3i"
//   robin branch   --window 0.05,0.95,0.2,10
//   robin verify   [--tol 1e-15] [--phi-scale 1.001]
//
// Exit codes: 0 success, 1 check or module failure, 2 usage error.

#include "robin/robin.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace
{

const char *const keys[] = {"eta", "gamma", "window", "path", "tol", "out", "phi-scale", "max-step", "min-step"};

std::map<std::string, std::string> read_config(const std::string &file)
{
    std::ifstream in(file);
    if (!in) {
        throw robin::UsageError("cannot open config file " + file);
    }
    std::map<std::string, std::string> out;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = robin::trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw robin::UsageError(file + ":" + std::to_string(n) + ": expected key=value");
        }
        const std::string key = robin::trim(line.substr(0, eq));
        bool known = false;
        for (const char *k : keys) {
            known = known || key == k;
        }
        if (!known) {
            throw robin::UsageError(file + ":" + std::to_string(n) + ": unknown key '" + key + "'");
        }
        out[key] = robin::trim(line.substr(eq + 1));
    }
    return out;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Robin pseudo-Laplacian spectra on the modular surface"};
    app.require_subcommand(1);

    std::map<std::string, std::string> flags;
    std::string config_file;
    app.add_option("--config", config_file, "key=value file; flags given on the command line win");
    for (const char *k : keys) {
        app.add_option(std::string("--") + k, flags[k]);
    }
    app.get_option("--eta")->description("truncation height (default 2)");
    app.get_option("--gamma")->description("comma-separated Robin parameters; 'inf' is the Dirichlet case");
    app.get_option("--window")->description("x0,x1,y0,y1 rectangle in the s-plane");
    app.get_option("--path")->description("';'-separated waypoints (gamma-plane for trace, s-plane for continue)");
    app.get_option("--tol")->description("continuation tolerance; for verify it overrides every check tolerance");
    app.get_option("--out")->description("output file, '-' for stdout");
    app.get_option("--phi-scale")->description("multiply the scattering coefficient (fault injection)");
    app.get_option("--max-step")->description("largest path step");
    app.get_option("--min-step")->description("step below which a path is abandoned");

    auto *spectrum = app.add_subcommand("spectrum", "Robin roots in a window for each gamma")->fallthrough();
    auto *trace = app.add_subcommand("trace", "eigenvalue curve along a gamma path")->fallthrough();
    auto *cont = app.add_subcommand("continue", "continue beta along an s path from lattice data")->fallthrough();
    auto *branch = app.add_subcommand("branch", "ramification points in a window")->fallthrough();
    auto *verify = app.add_subcommand("verify", "run the verification suite")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    robin::RunConfig rc;
    std::optional<double> tol_given;
    try {
        std::map<std::string, std::string> values;
        if (!config_file.empty()) {
            values = read_config(config_file);
        }
        for (const char *k : keys) {
            if (app.get_option(std::string("--") + k)->count() > 0) {
                values[k] = flags[k];
            }
        }
        if (trace->parsed()) {
            rc.window = {0.4, 0.6, 7.0, 10.0};
            rc.path.waypoints = {0.0, 4.0};
        }
        if (branch->parsed()) {
            rc.window = {0.05, 0.95, 0.2, 10.0};
        }
        if (cont->parsed()) {
            rc.path.max_step = 0.5;
            rc.path.min_step = 1e-3;
        }
        for (const auto &[k, v] : values) {
            if (k == "eta") {
                rc.eta = robin::parse_real(v);
            } else if (k == "gamma") {
                rc.gamma_values = robin::parse_gamma_list(v);
            } else if (k == "window") {
                rc.window = robin::parse_window(v);
            } else if (k == "path") {
                rc.path.waypoints = robin::parse_path(v);
            } else if (k == "tol") {
                rc.tol = robin::parse_real(v);
                tol_given = rc.tol;
            } else if (k == "out") {
                rc.output_path = v;
            } else if (k == "phi-scale") {
                rc.phi_scale = robin::parse_real(v);
            } else if (k == "max-step") {
                rc.path.max_step = robin::parse_real(v);
            } else if (k == "min-step") {
                rc.path.min_step = robin::parse_real(v);
            }
        }
        rc.validate();
    } catch (const robin::Error &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    std::ofstream file;
    std::ostream *out = &std::cout;
    if (rc.output_path != "-") {
        file.open(rc.output_path);
        if (!file) {
            std::cerr << "usage error: cannot write " << rc.output_path << '\n';
            return 2;
        }
        out = &file;
    }

    try {
        if (spectrum->parsed()) {
            return robin::cmd_spectrum(rc, *out);
        }
        if (trace->parsed()) {
            return robin::cmd_trace(rc, *out);
        }
        if (cont->parsed()) {
            return robin::cmd_continue(rc, *out);
        }
        if (branch->parsed()) {
            return robin::cmd_branch(rc, *out);
        }
        if (verify->parsed()) {
            // The report always goes to stdout; --out additionally receives the CSV table.
            return robin::cmd_verify(rc, tol_given, std::cout, out == &std::cout ? nullptr : out);
        }
    } catch (const robin::UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const robin::Error &e) {
        std::cerr << e.kind() << ": " << e.what() << '\n';
        return 1;
    }
    return 2;
}
