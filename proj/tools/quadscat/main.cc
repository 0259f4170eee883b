//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/main.cc
//---------------------------------------------------------------------------//
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "quadscat/Error.hh"

#include "CLI11.hpp"
#include "Commands.hh"
#include "Config.hh"
#include "json.hpp"

namespace
{
char const help_footer[] = R"(
Config (JSON, from --config or stdin):
  quadric     {"axes": [a0, ..., an], "kind": "one-sheeted" | "two-sheeted" |
               "ellipsoid" | "cone"}; not needed for quantum
  seed        unsigned integer; --seed takes precedence
  states      [{"x": [...], "y": [...]}, ...]; y is rescaled to unit length
  count       number of sampled states appended after explicit ones
  extent      bound on |x0| for sampled hyperboloid points (default 2)
  integrator  {rtol, atol, max_step, s_limit, escape_radius, span: [s0, s1]}
  tolerances  {constraint, classification, isotropic, pole}
  <command>   command parameters, e.g. "quantum": {"a": 1, "c": 1, "k": 0,
               "energies": [...], "side": "left", "half_crossing": [lo, hi],
               "ince": true}; "neumann-check": {"z_samples", "tau_max"};
               "projective-check": {"s_max"}; "cone"/"scatter": {"incoming"};
               "classify": {"ground_truth"}

Outputs in --out:
  classify          classify.csv: seed,id,F0..Fn,J,c1..c(n-1),label,
                    crossings,windings,match
  scatter           scatter.json
  trace             trace_NNNN.csv per state and trace.json; columns
                    s,tau,alpha,x0..xn,y0..yn,z1..zn,F0..Fn,J
                    (3 + 2(n+1) + n + (n+2) total; tau and alpha are nan on
                    isotropic geodesics)
  neumann-check     neumann.json
  projective-check  projective.json
  quantum           quantum.csv (seed,E,R,T,flux_defect,rho_max,tau_max)
                    and quantum.json
  cone              cone.json

Exit codes: 0 success, 2 config error, 3 numerical failure. Errors are
printed to stderr as one JSON object.
)";

int fail(nlohmann::json const& err, int code)
{
    std::cerr << err.dump() << std::endl;
    return code;
}

std::string read_input(std::string const& path)
{
    if (path.empty() || path == "-")
    {
        return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream is(path, std::ios::binary);
    if (!is)
    {
        throw quadscat::app::ConfigError("--config", "cannot open " + path);
    }
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}
}  // namespace

//---------------------------------------------------------------------------//
int main(int argc, char** argv)
{
    using namespace quadscat;
    using nlohmann::json;

    CLI::App cli{"Geodesic scattering on quadrics"};
    cli.footer(help_footer);
    std::string command, config_path, out_dir = ".";
    std::optional<std::uint64_t> seed;
    int jobs = 1;
    std::vector<std::string> overrides;
    cli.add_option("command", command, "Command to run")
        ->required()
        ->check(CLI::IsMember({"classify",
                               "scatter",
                               "trace",
                               "neumann-check",
                               "projective-check",
                               "quantum",
                               "cone"}));
    cli.add_option("--config", config_path, "JSON config file ('-' or absent: stdin)");
    cli.add_option("--seed", seed, "Sampler seed (overrides the config)");
    cli.add_option("--out", out_dir, "Output directory");
    cli.add_option("--jobs", jobs, "Worker threads (0: hardware concurrency)")
        ->check(CLI::NonNegativeNumber);
    cli.add_option("--tol-override", overrides, "KEY=VAL tolerance override (repeatable)");

    try
    {
        cli.parse(argc, argv);
    }
    catch (CLI::Success const& e)
    {
        return cli.exit(e);
    }
    catch (CLI::ParseError const& e)
    {
        return fail({{"error", "ConfigError"}, {"field", "argv"}, {"line", 0}, {"message", e.what()}},
                    2);
    }

    try
    {
        auto cfg = app::parse_config(read_input(config_path), command);
        if (seed)
        {
            cfg.seed = *seed;
        }
        for (auto const& kv : overrides)
        {
            app::apply_override(cfg, kv);
        }
        app::validate(cfg);
        app::check_command(cfg);
        std::filesystem::create_directories(out_dir);
        auto summary = app::run_command(cfg, {out_dir, jobs});
        std::cout << summary.dump(2) << std::endl;
        return 0;
    }
    catch (app::ConfigError const& e)
    {
        return fail({{"error", "ConfigError"},
                     {"field", e.field()},
                     {"line", e.line()},
                     {"message", e.what()}},
                    2);
    }
    catch (Error const& e)
    {
        return fail({{"error", to_cstring(e.kind())}, {"message", e.what()}}, 3);
    }
    catch (std::exception const& e)
    {
        return fail({{"error", "IOError"}, {"message", e.what()}}, 3);
    }
}
