//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Commands.cc
//---------------------------------------------------------------------------//
#include "Commands.hh"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <random>
#include <thread>

#include "quadscat/Cone.hh"
#include "quadscat/Error.hh"
#include "quadscat/GeodesicFlow.hh"
#include "quadscat/Neumann.hh"
#include "quadscat/Projective.hh"
#include "quadscat/Quantum1d.hh"
#include "quadscat/Sampling.hh"
#include "quadscat/SpectralCurve.hh"
#include "quadscat/Scattering.hh"

#include "Output.hh"

using nlohmann::json;

namespace quadscat
{
namespace app
{
namespace
{
//---------------------------------------------------------------------------//
//! Run f(i) for i in [0, n) on up to `jobs` threads; rethrow the first error
template<class F>
void parallel_for(std::size_t n, int jobs, F&& f)
{
    std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs)
                                   : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(n, 1));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
        {
            f(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_lock;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
    {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
            {
                try
                {
                    f(i);
                }
                catch (...)
                {
                    std::lock_guard<std::mutex> g(error_lock);
                    if (!error)
                    {
                        error = std::current_exception();
                    }
                    next = n;
                }
            }
        });
    }
    for (auto& t : pool)
    {
        t.join();
    }
    if (error)
    {
        std::rethrow_exception(error);
    }
}

json to_json(Vec const& v)
{
    return json(std::vector<double>(v.data(), v.data() + v.size()));
}

json to_json(Mat const& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i)
    {
        rows.push_back(to_json(Vec(m.row(i).transpose())));
    }
    return rows;
}

//! Errors that mark one instance as skipped rather than failing the run
bool skippable(ErrorKind k)
{
    switch (k)
    {
        case ErrorKind::degenerate_curve:
        case ErrorKind::critical_divergence:
        case ErrorKind::case_mismatch:
        case ErrorKind::divisor_shape:
        case ErrorKind::not_escaped:
        case ErrorKind::collision:
        case ErrorKind::degenerate_coordinate:
        case ErrorKind::isotropic:
        case ErrorKind::pole:
            return true;
        default:
            return false;
    }
}

json skipped(Error const& e)
{
    return {{"skipped", true}, {"reason", to_cstring(e.kind())}, {"message", e.what()}};
}

void write_json(RunContext const& ctx, char const* name, json const& doc)
{
    write_atomic(ctx.out_dir / name, doc.dump(2) + "\n");
}

CaseLabel two_sheeted_label(IntegralSet const& is, Tolerances const& tol)
{
    if (is.isotropic)
        return CaseLabel::isotropic;
    if (is.F[0] < -tol.classification)
        return CaseLabel::reflection;
    if (is.F[0] > tol.classification)
        return CaseLabel::transmission;
    return CaseLabel::critical;
}

GeodesicOptions escaping(RunConfig const& cfg)
{
    auto opts = cfg.geodesic;
    opts.stop_on_escape = true;
    return opts;
}

//---------------------------------------------------------------------------//
json cmd_classify(RunConfig const& cfg, RunContext const& ctx)
{
    auto const& spec = *cfg.quadric;
    int const n = spec.n();
    bool const truth = cfg.params.value("ground_truth", true);
    auto states = instance_states(cfg);

    std::vector<std::string> header{"seed", "id"};
    for (int k = 0; k <= n; ++k)
        header.push_back("F" + std::to_string(k));
    header.push_back("J");
    for (int i = 1; i < n; ++i)
        header.push_back("c" + std::to_string(i));
    for (char const* h : {"label", "crossings", "windings", "match"})
        header.push_back(h);

    std::vector<std::vector<std::string>> rows(states.size());
    std::vector<int> verdict(states.size(), -1);
    parallel_for(states.size(), ctx.jobs, [&](std::size_t i) {
        auto const& st = states[i];
        auto is = integrals(spec, st, cfg.tol);
        CaseLabel label = spec.kind() == QuadricKind::one_sheeted
                              ? classify_state(spec, st, cfg.tol).label
                              : two_sheeted_label(is, cfg.tol);
        auto& row = rows[i];
        row = {std::to_string(cfg.seed), std::to_string(i)};
        for (int k = 0; k <= n; ++k)
            row.push_back(format_double(is.F[k]));
        row.push_back(format_double(is.J));
        for (int j = 0; j + 1 < n; ++j)
            row.push_back(j < static_cast<int>(is.c.size()) ? format_double(is.c[j]) : "");
        row.push_back(to_cstring(label));
        bool decidable = label == CaseLabel::transmission || label == CaseLabel::reflection;
        if (!truth || !decidable || n != 2)
        {
            row.insert(row.end(), {"", "", ""});
            return;
        }
        auto rec = scatter_geodesic(spec, st, cfg.s_limit, escaping(cfg), cfg.tol);
        if (rec.winding.nonterminal)
        {
            row.insert(row.end(), {"", "", ""});
            return;
        }
        long expect = label == CaseLabel::transmission ? 1 : 0;
        bool match = rec.winding.crossings == expect;
        verdict[i] = match;
        row.push_back(std::to_string(rec.winding.crossings));
        row.push_back(std::to_string(rec.winding.windings));
        row.push_back(match ? "true" : "false");
    });

    CsvTable table(header);
    for (auto& r : rows)
        table.add_row(std::move(r));
    write_atomic(ctx.out_dir / "classify.csv", table.str());
    return {{"instances", states.size()},
            {"matched", std::count(verdict.begin(), verdict.end(), 1)},
            {"mismatched", std::count(verdict.begin(), verdict.end(), 0)},
            {"outputs", {"classify.csv"}}};
}

//---------------------------------------------------------------------------//
json cone_records(QuadricSpec const& spec, RunConfig const& cfg)
{
    double alpha = cone_angle(spec);
    json doc{{"alpha", alpha}, {"alpha_doubled_nodes", cone_angle(spec, 128)}};
    auto const& a = spec.axes();
    if (a[1] == a[2])
    {
        doc["alpha_closed_form"] = 2 * std::numbers::pi * std::sqrt(a[2] / (a[2] - a[0]));
    }
    json shifts = json::array();
    for (double in : param_doubles(cfg, "incoming", {0.0, 0.5, 1.0, 2.0}))
    {
        shifts.push_back({{"incoming", in}, {"outgoing", cone_scatter(alpha, in)}});
    }
    doc["corner_shift"] = shifts;
    return doc;
}

json cmd_scatter(RunConfig const& cfg, RunContext const& ctx)
{
    auto const& spec = *cfg.quadric;
    json doc{{"seed", cfg.seed}, {"kind", to_cstring(spec.kind())}};
    if (spec.kind() == QuadricKind::cone)
    {
        doc["cone"] = cone_records(spec, cfg);
        write_json(ctx, "scatter.json", doc);
        return {{"alpha", doc["cone"]["alpha"]}, {"outputs", {"scatter.json"}}};
    }

    auto states = instance_states(cfg);
    std::vector<json> records(states.size());
    parallel_for(states.size(), ctx.jobs, [&](std::size_t i) {
        auto const& st = states[i];
        auto is = integrals(spec, st, cfg.tol);
        json rec{{"id", i}, {"F", to_json(is.F)}, {"J", is.J}};
        CaseLabel label = two_sheeted_label(is, cfg.tol);
        std::optional<CaseLabel> refined;
        if (spec.kind() == QuadricKind::one_sheeted)
        {
            auto cls = classify_state(spec, st, cfg.tol);
            label = cls.label;
            refined = cls.refined;
        }
        rec["label"] = to_cstring(label);
        if (refined)
        {
            rec["case"] = to_cstring(*refined);
        }
        try
        {
            auto curve = build_spectral_curve(spec, is);
            rec["roots"] = curve.roots();
            bool reflected = spec.kind() == QuadricKind::two_sheeted
                                 ? label == CaseLabel::reflection
                                 : refined == CaseLabel::case_i;
            if (!reflected)
            {
                records[i] = rec;
                return;
            }
            auto measured = scatter_geodesic(spec, st, cfg.s_limit, escaping(cfg), cfg.tol);
            rec["windings"] = measured.winding.windings;
            rec["crossings"] = measured.winding.crossings;
            rec["nonterminal"] = measured.winding.nonterminal;
            auto rn = rotation_number(curve, spec.kind());
            rec["rotation"] = {{"N", rn.N}, {"I1", rn.I1}, {"I2", rn.I2}, {"ratio", rn.ratio}};
            rec["N_match"] = !measured.winding.nonterminal && measured.winding.windings == rn.N;
            if (spec.kind() == QuadricKind::one_sheeted)
            {
                auto ab = measure_abel_scattering(spec, st, cfg.tol);
                rec["delta"] = to_json(ab.delta);
                rec["lattice"] = to_json(ab.lattice.generators);
                rec["abel_minus"] = to_json(ab.minus.coords);
                rec["abel_plus"] = to_json(ab.plus.coords);
                rec["residual"] = ab.residual.norm();
            }
        }
        catch (Error const& e)
        {
            if (!skippable(e.kind()))
            {
                throw;
            }
            rec.update(skipped(e));
        }
        records[i] = rec;
    });

    int n_skipped = 0, n_mismatch = 0;
    double worst = 0;
    std::map<std::string, int> labels;
    for (auto const& r : records)
    {
        ++labels[r["label"].get<std::string>()];
        n_skipped += r.value("skipped", false);
        n_mismatch += r.contains("N_match") && !r["N_match"].get<bool>();
        if (r.contains("residual"))
            worst = std::max(worst, r["residual"].get<double>());
    }
    doc["instances"] = records;
    write_json(ctx, "scatter.json", doc);
    return {{"instances", records.size()},
            {"skipped", n_skipped},
            {"labels", labels},
            {"rotation_mismatches", n_mismatch},
            {"max_residual", worst},
            {"outputs", {"scatter.json"}}};
}

//---------------------------------------------------------------------------//
std::vector<std::string> trace_header(int n)
{
    std::vector<std::string> h{"s", "tau", "alpha"};
    for (int k = 0; k <= n; ++k)
        h.push_back("x" + std::to_string(k));
    for (int k = 0; k <= n; ++k)
        h.push_back("y" + std::to_string(k));
    for (int k = 1; k <= n; ++k)
        h.push_back("z" + std::to_string(k));
    for (int k = 0; k <= n; ++k)
        h.push_back("F" + std::to_string(k));
    h.push_back("J");
    return h;
}

json cmd_trace(RunConfig const& cfg, RunContext const& ctx)
{
    auto const& spec = *cfg.quadric;
    int const n = spec.n();
    auto states = instance_states(cfg);
    auto header = trace_header(n);
    std::vector<std::string> files(states.size());
    std::vector<std::string> contents(states.size());

    parallel_for(states.size(), ctx.jobs, [&](std::size_t i) {
        auto traj = integrate_geodesic(spec, states[i], cfg.span[0], cfg.span[1], cfg.geodesic);
        double const J0 = joachimsthal(spec, states[i].x, states[i].y);
        bool const iso = std::fabs(J0) <= cfg.tol.isotropic;
        if (!iso)
        {
            knoerrer_reparametrize(spec, traj, cfg.tol.isotropic);
        }
        CsvTable table(header);
        for (std::size_t j = 0; j < traj.size(); ++j)
        {
            auto const& st = traj.states[j];
            std::vector<std::string> row{format_double(traj.s[j])};
            row.push_back(format_double(iso ? std::nan("") : traj.tau[j]));
            row.push_back(format_double(iso ? std::nan("") : knoerrer_alpha(spec, st.x, J0)));
            for (int k = 0; k <= n; ++k)
                row.push_back(format_double(st.x[k]));
            for (int k = 0; k <= n; ++k)
                row.push_back(format_double(st.y[k]));
            auto ec = jacobi_elliptic_coords(spec, st.x);
            for (int k = 0; k < n; ++k)
                row.push_back(format_double(k < static_cast<int>(ec.z.size()) ? ec.z[k]
                                                                              : std::nan("")));
            for (int k = 0; k <= n; ++k)
                row.push_back(format_double(uhlenbeck_devaney(spec, st.x, st.y, k)));
            row.push_back(format_double(joachimsthal(spec, st.x, st.y)));
            table.add_row(std::move(row));
        }
        char name[32];
        std::snprintf(name, sizeof(name), "trace_%04zu.csv", i);
        files[i] = name;
        contents[i] = table.str();
    });

    for (std::size_t i = 0; i < states.size(); ++i)
    {
        write_atomic(ctx.out_dir / files[i], contents[i]);
    }
    json manifest{{"seed", cfg.seed},
                  {"kind", to_cstring(spec.kind())},
                  {"axes", to_json(spec.axes())},
                  {"span", cfg.span},
                  {"columns", header},
                  {"files", files}};
    write_json(ctx, "trace.json", manifest);
    std::vector<std::string> outputs = files;
    outputs.push_back("trace.json");
    return {{"instances", states.size()}, {"columns", header.size()}, {"outputs", outputs}};
}

//---------------------------------------------------------------------------//
std::vector<double> sample_z(QuadricSpec const& spec, Rng& rng, int count)
{
    auto const& a = spec.axes();
    std::uniform_real_distribution<double> unif(a.minCoeff() - 1, a.maxCoeff() + 1);
    std::vector<double> zs;
    while (static_cast<int>(zs.size()) < count)
    {
        double z = unif(rng);
        bool ok = std::fabs(z) > 0.05;
        for (int k = 0; k < a.size(); ++k)
            ok = ok && std::fabs(z - a[k]) > 0.05;
        if (ok)
            zs.push_back(z);
    }
    return zs;
}

json cmd_neumann_check(RunConfig const& cfg, RunContext const& ctx)
{
    auto const& spec = *cfg.quadric;
    auto states = instance_states(cfg);
    int const n_z = param_int(cfg, "z_samples", 50);
    double const tau_max = param_double(cfg, "tau_max", 20);
    if (n_z < 1 || !(tau_max > 0))
    {
        throw ConfigError("neumann-check", "neumann-check: need z_samples >= 1 and tau_max > 0");
    }
    // Draw z samples sequentially so results do not depend on --jobs
    Rng zrng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<std::vector<double>> zs;
    for (std::size_t i = 0; i < states.size(); ++i)
        zs.push_back(sample_z(spec, zrng, n_z));

    std::vector<json> records(states.size());
    parallel_for(states.size(), ctx.jobs, [&](std::size_t i) {
        auto const& st = states[i];
        auto is = integrals(spec, st, cfg.tol);
        json rec{{"id", i}, {"J", is.J}};
        if (is.isotropic)
        {
            rec.update({{"skipped", true}, {"reason", "IsotropicError"}});
            records[i] = rec;
            return;
        }
        rec["knoerrer_identity"] = verify_knoerrer_identity(spec, st, zs[i], cfg.tol.isotropic);
        auto ns = NeumannSpec::from_quadric(spec, is.eps);
        auto img = gauss_map(spec, st, is.J, cfg.tol.isotropic);
        NeumannState nst{img.q, img.p};
        rec["psi0"] = psi_u(ns, nst, 0, cfg.tol.pole);
        auto traj = integrate_neumann(ns, nst, 0, tau_max, cfg.geodesic.ode);
        double H0 = neumann_hamiltonian(ns, nst), dH = 0, dq = 0;
        for (auto const& s : traj.states)
        {
            dH = std::max(dH, std::fabs(neumann_hamiltonian(ns, s) - H0));
            dq = std::max(dq, std::fabs(s.q.norm() - 1));
        }
        rec["hamiltonian_drift"] = dH;
        rec["sphere_drift"] = dq;
        try
        {
            auto curve = spectral_curve_from_neumann(ns, nst);
            auto D = lifted_divisor(ns, nst, curve);
            double worst = 0;
            json pts = json::array();
            for (auto const& p : D.points)
            {
                double r = curve.R(p.u);
                worst = std::max(worst, std::fabs(p.w * p.w - r) / std::max(1.0, std::fabs(r)));
                pts.push_back({{"u", p.u}, {"w", p.w}, {"oval", p.oval}});
            }
            rec["divisor"] = pts;
            rec["divisor_residual"] = worst;
        }
        catch (Error const& e)
        {
            if (!skippable(e.kind()))
                throw;
            rec["divisor"] = skipped(e);
        }
        records[i] = rec;
    });

    double worst_id = 0, worst_h = 0;
    for (auto const& r : records)
    {
        worst_id = std::max(worst_id, r.value("knoerrer_identity", 0.0));
        worst_h = std::max(worst_h, r.value("hamiltonian_drift", 0.0));
    }
    write_json(ctx, "neumann.json", {{"seed", cfg.seed}, {"instances", records}});
    return {{"instances", records.size()},
            {"max_knoerrer_identity", worst_id},
            {"max_hamiltonian_drift", worst_h},
            {"outputs", {"neumann.json"}}};
}

//---------------------------------------------------------------------------//
json cmd_projective_check(RunConfig const& cfg, RunContext const& ctx)
{
    auto const& spec = *cfg.quadric;
    auto states = instance_states(cfg);
    double const s_max = param_double(cfg, "s_max", 2);
    if (!(s_max > 0))
    {
        throw ConfigError("projective-check.s_max", "projective-check.s_max: must be positive");
    }
    Vec const b = spec.b();
    std::vector<json> records(states.size());
    parallel_for(states.size(), ctx.jobs, [&](std::size_t i) {
        auto const& st = states[i];
        double J = joachimsthal(spec, st.x, st.y);
        json rec{{"id", i}, {"J", J}};
        if (std::fabs(J) <= cfg.tol.isotropic)
        {
            rec.update({{"skipped", true}, {"reason", "IsotropicError"}});
            records[i] = rec;
            return;
        }
        auto gopts = cfg.geodesic;
        gopts.ode.max_step = std::min(gopts.ode.max_step, 2e-3);
        auto traj = integrate_geodesic(spec, st, 0, s_max, gopts);
        knoerrer_reparametrize(spec, traj, cfg.tol.isotropic);
        double c = b.cwiseProduct(st.x).squaredNorm() / std::sqrt(std::fabs(J));
        std::vector<double> t;
        for (double tau : traj.tau)
            t.push_back(c * tau);
        auto m1 = integrate_metric1_geodesic(b, st.x, st.y, t, {1e-13, 1e-15});
        double drift = 0, param = 0;
        std::vector<Vec> ref;
        for (std::size_t j = 0; j < m1.x.size(); ++j)
        {
            drift = std::max(drift, std::fabs(eval_constraint(spec, m1.x[j])));
            param = std::max(param, (m1.x[j] - traj.states[j].x).norm());
            ref.push_back(traj.states[j].x);
        }
        rec["constraint_drift"] = drift;
        rec["hausdorff"] = hausdorff_distance(ref, m1.x);
        rec["tau_parameter_residual"] = param;
        rec["metric1_signature"] = {metric1_at(b, st.x).positive, metric1_at(b, st.x).negative};
        records[i] = rec;
    });
    double worst = 0;
    for (auto const& r : records)
        worst = std::max(worst, r.value("hausdorff", 0.0));
    write_json(ctx, "projective.json", {{"seed", cfg.seed}, {"instances", records}});
    return {{"instances", records.size()}, {"max_hausdorff", worst}, {"outputs", {"projective.json"}}};
}

//---------------------------------------------------------------------------//
json cmd_quantum(RunConfig const& cfg, RunContext const& ctx)
{
    SymmetricSpec spec;
    spec.a = param_double(cfg, "a", 1);
    spec.c = param_double(cfg, "c", 1);
    spec.k = param_int(cfg, "k", 0);
    try
    {
        spec.validate();
    }
    catch (Error const& e)
    {
        throw ConfigError("quantum", std::string("quantum: ") + e.what());
    }
    TransmissionOptions opts;
    opts.v_tol = param_double(cfg, "v_tol", opts.v_tol);
    opts.tau_cap = param_double(cfg, "tau_cap", opts.tau_cap);
    opts.ode = cfg.geodesic.ode;
    opts.ode.max_step = std::numeric_limits<double>::infinity();
    auto side = cfg.params.value("side", std::string("left"));
    if (side != "left" && side != "right")
    {
        throw ConfigError("quantum.side", "quantum.side: expected left or right");
    }
    Incidence inc = side == "left" ? Incidence::left : Incidence::right;
    auto energies = param_doubles(cfg, "energies", {1, 5, 10, 20, 50});
    for (double E : energies)
    {
        if (!(E > 0))
            throw ConfigError("quantum.energies", "quantum.energies: must be positive");
    }

    std::vector<TransmissionResult> res(energies.size());
    parallel_for(energies.size(), ctx.jobs, [&](std::size_t i) {
        res[i] = transmission(spec, energies[i], opts, inc);
    });
    CsvTable table({"seed", "E", "R", "T", "flux_defect", "rho_max", "tau_max"});
    for (std::size_t i = 0; i < energies.size(); ++i)
    {
        table.add_row({std::to_string(cfg.seed),
                       format_double(energies[i]),
                       format_double(res[i].R),
                       format_double(res[i].T),
                       format_double(res[i].R + res[i].T - 1),
                       format_double(res[i].rho_max),
                       format_double(res[i].tau_max)});
    }

    json doc{{"seed", cfg.seed},
             {"a", spec.a},
             {"c", spec.c},
             {"k", spec.k},
             {"V0", potential_V(spec, 0)},
             {"classical_threshold", double(spec.k) * spec.k / (2 * spec.a * spec.a)}};
    if (cfg.params.contains("half_crossing"))
    {
        auto br = param_doubles(cfg, "half_crossing", {});
        if (br.size() != 2 || !(0 < br[0] && br[0] < br[1]))
            throw ConfigError("quantum.half_crossing", "quantum.half_crossing: expected [E_lo, E_hi]");
        doc["half_crossing"] = transmission_half_crossing(spec, br[0], br[1], opts);
    }
    if (cfg.params.value("ince", false))
    {
        json ince = json::array();
        for (double E : energies)
        {
            auto ic = ince_coefficients(spec, E);
            ince.push_back({{"E", E},
                            {"alpha", ic.alpha},
                            {"beta", ic.beta},
                            {"gamma", ic.gamma},
                            {"residual", ince_residual(spec, E, ic, 2.0, 801)}});
        }
        doc["ince"] = ince;
    }
    write_atomic(ctx.out_dir / "quantum.csv", table.str());
    write_json(ctx, "quantum.json", doc);
    doc["outputs"] = {"quantum.csv", "quantum.json"};
    return doc;
}

//---------------------------------------------------------------------------//
json cmd_cone(RunConfig const& cfg, RunContext const& ctx)
{
    json doc = cone_records(*cfg.quadric, cfg);
    doc["seed"] = cfg.seed;
    write_json(ctx, "cone.json", doc);
    return {{"alpha", doc["alpha"]}, {"outputs", {"cone.json"}}};
}
}  // namespace

//---------------------------------------------------------------------------//
void check_command(RunConfig const& cfg)
{
    auto const& c = cfg.command;
    if (c == "quantum")
    {
        return;
    }
    auto const& spec = *cfg.quadric;
    auto kind = spec.kind();
    auto fail = [&](std::string const& msg) { throw ConfigError("quadric", c + ": " + msg); };
    if (c == "cone")
    {
        if (kind != QuadricKind::cone || spec.n() != 2)
            fail("needs a cone in R^3");
        return;
    }
    if (kind == QuadricKind::cone && c != "scatter")
        fail("not defined for cones");
    if (c == "classify" && kind == QuadricKind::ellipsoid)
        fail("needs a hyperboloid");
    if (c == "scatter")
    {
        if (spec.n() != 2)
            fail("needs n = 2");
        if (kind == QuadricKind::ellipsoid)
            fail("needs a hyperboloid or cone");
    }
    if (spec.has_repeated_axes() && c != "trace" && c != "scatter")
        fail("needs distinct axes");
    if (c != "scatter" && cfg.states.empty() && cfg.count == 0)
        throw ConfigError("count", "no states: give states or count > 0");
}

json run_command(RunConfig const& cfg, RunContext const& ctx)
{
    check_command(cfg);
    json summary;
    auto const& c = cfg.command;
    if (c == "classify")
        summary = cmd_classify(cfg, ctx);
    else if (c == "scatter")
        summary = cmd_scatter(cfg, ctx);
    else if (c == "trace")
        summary = cmd_trace(cfg, ctx);
    else if (c == "neumann-check")
        summary = cmd_neumann_check(cfg, ctx);
    else if (c == "projective-check")
        summary = cmd_projective_check(cfg, ctx);
    else if (c == "quantum")
        summary = cmd_quantum(cfg, ctx);
    else
        summary = cmd_cone(cfg, ctx);
    summary["command"] = c;
    summary["seed"] = cfg.seed;
    return summary;
}

//---------------------------------------------------------------------------//
}  // namespace app
}  // namespace quadscat
