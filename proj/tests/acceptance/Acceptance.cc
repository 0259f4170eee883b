//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file acceptance/Acceptance.cc
//! \brief Desk-scale acceptance suites, one verdict line per criterion
//---------------------------------------------------------------------------//
#include <chrono>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "quadscat/Cone.hh"
#include "quadscat/Error.hh"
#include "quadscat/GeodesicFlow.hh"
#include "quadscat/Neumann.hh"
#include "quadscat/Projective.hh"
#include "quadscat/Quantum1d.hh"
#include "quadscat/Scattering.hh"
#include "quadscat/Symmetric.hh"
#include "support/Support.hh"

using namespace quadscat;
using namespace quadscat::test;

namespace
{
constexpr double pi = std::numbers::pi;

struct Verdict
{
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, std::string const& what)
    {
        if (!ok)
        {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

QuadricSpec one_sheeted() { return {{-1, 1, 2}, QuadricKind::one_sheeted}; }
QuadricSpec two_sheeted() { return {{-1, 1, 2}, QuadricKind::two_sheeted}; }

//---------------------------------------------------------------------------//
// 1. Conservation
void conservation(Verdict& v)
{
    auto spec = one_sheeted();
    Rng rng(101);
    double drift = 0, ident_a = 0, ident_sum = 0;
    int const dim = spec.n() + 1;
    for (int g = 0; g < 50; ++g)
    {
        auto st = random_state(spec, rng);
        auto traj = integrate_geodesic(spec, st, -50, 50);
        Vec F0(dim);
        for (int k = 0; k < dim; ++k)
        {
            F0[k] = uhlenbeck_devaney(spec, st.x, st.y, k);
        }
        double J0 = joachimsthal(spec, st.x, st.y);
        for (auto const& s : traj.states)
        {
            double sum = 0, wsum = 0, sum_abs = 0, wsum_abs = 0;
            for (int k = 0; k < dim; ++k)
            {
                double f = uhlenbeck_devaney(spec, s.x, s.y, k);
                drift = std::max(drift, std::fabs(f - F0[k]) / std::max(1.0, std::fabs(F0[k])));
                sum += f;
                sum_abs += std::fabs(f);
                wsum += spec.b()[k] * f;
                wsum_abs += std::fabs(spec.b()[k] * f);
            }
            double J = joachimsthal(spec, s.x, s.y);
            drift = std::max(drift, std::fabs(J - J0) / std::max(1.0, std::fabs(J0)));
            ident_a = std::max(ident_a, std::fabs(wsum) / std::max(1.0, wsum_abs));
            ident_sum = std::max(ident_sum,
                                 std::fabs(sum - s.y.squaredNorm()) / std::max(1.0, sum_abs));
        }
    }
    v.detail << "max drift " << drift << ", sum F/a " << ident_a << ", sum F - |y|^2 "
             << ident_sum;
    v.check(drift < 1e-8, "drift < 1e-8");
    v.check(ident_a < 1e-12 && ident_sum < 1e-12, "identities < 1e-12");
}

//---------------------------------------------------------------------------//
// 2. Neck crossing criterion and critical orbits
void neck_crossing(Verdict& v)
{
    auto spec = one_sheeted();
    Rng rng(202);
    int mismatches = 0, unresolved = 0, trans = 0;
    GeodesicOptions opts;
    opts.stop_on_escape = true;
    for (int g = 0; g < 100; ++g)
    {
        auto st = random_state_away_from_critical(spec, rng, 1e-4);
        auto label = classify_state(spec, st).label;
        auto traj = integrate_geodesic(spec, st, -1e4, 1e4, opts);
        if (!(traj.escaped_minus && traj.escaped_plus))
        {
            ++unresolved;
            continue;
        }
        bool crossed = traj.states.front().x[0] * traj.states.back().x[0] < 0;
        trans += crossed;
        if (crossed != (label == CaseLabel::transmission))
        {
            ++mismatches;
        }
    }
    v.detail << "100 geodesics: " << trans << " crossed, " << mismatches << " mismatches, "
             << unresolved << " unresolved;";
    v.check(mismatches == 0 && unresolved == 0, "sign(F0) predicts crossing");

    // Critical orbits. Roundoff in F_0 limits a double-precision orbit to
    // about six decades of decay before it turns away from the neck, so the
    // fit uses an extended-precision oracle; the library integrator must
    // agree with it while |x_0| > 1e-5.
    double worst_r2 = 1, worst_agree = 0;
    bool monotone = true;
    std::pair<double, double> const starts[] = {{0.5, 1.0}, {-0.8, 0.6}, {1.2, 1.0}};
    for (auto [x0, x1] : starts)
    {
        auto orbit = critical_decay_long_double(spec, x0, x1, 40, 1e-8);
        std::vector<double> s, logx;
        double prev = orbit.samples.front().abs_x0;
        for (auto const& smp : orbit.samples)
        {
            s.push_back(smp.s);
            logx.push_back(std::log(smp.abs_x0));
            monotone = monotone && smp.abs_x0 <= prev;
            prev = smp.abs_x0;
        }
        auto fit = fit_line(s, logx);
        worst_r2 = std::min(worst_r2, fit.r2);
        v.detail << " rate " << -fit.slope << " R^2 " << fit.r2;

        GeodesicOptions copts;
        copts.ode = {1e-13, 1e-15, 1e-3, 0.05};
        auto traj = integrate_geodesic(spec, orbit.initial, 0, 15, copts);
        for (std::size_t i = 0; i < traj.size(); ++i)
        {
            double ax = std::fabs(traj.states[i].x[0]);
            if (ax < 1e-5)
            {
                break;
            }
            // Linear interpolation of log |x0| between oracle samples
            auto it = std::lower_bound(s.begin(), s.end(), traj.s[i]);
            std::size_t k = std::clamp<std::size_t>(it - s.begin(), 1, s.size() - 1);
            double w = (traj.s[i] - s[k - 1]) / (s[k] - s[k - 1]);
            double ref = (1 - w) * logx[k - 1] + w * logx[k];
            worst_agree = std::max(worst_agree, std::fabs(std::log(ax) - ref));
        }
    }
    v.detail << "; library vs oracle |d log x0| " << worst_agree;
    v.check(worst_agree < 1e-2, "library critical orbit matches oracle");
    v.detail << "; critical R^2 min " << worst_r2;
    v.check(worst_r2 > 0.999, "log-affine R^2 > 0.999");
    v.check(monotone, "monotone decay");
}

//---------------------------------------------------------------------------//
// 3. Knoerrer identity and Neumann image
void knoerrer(Verdict& v)
{
    auto spec = one_sheeted();
    Rng rng(303);
    std::uniform_real_distribution<double> zdist(-5, 5);
    double ident = 0;
    for (int i = 0; i < 50; ++i)
    {
        auto st = random_state(spec, rng);
        double z;
        do
        {
            z = zdist(rng);
        } while ((spec.axes().array() - z).abs().minCoeff() < 1e-2 || std::fabs(z) < 1e-2);
        ident = std::max(ident, verify_knoerrer_identity(spec, st, {z}));
    }
    double resid = 0;
    for (int i = 0; i < 5; ++i)
    {
        auto st = random_state(spec, rng);
        double J = joachimsthal(spec, st.x, st.y);
        GeodesicOptions opts;
        opts.ode.max_step = 2e-3;
        auto traj = integrate_geodesic(spec, st, -2, 2, opts);
        knoerrer_reparametrize(spec, traj);
        Vec b = (J > 0 ? 1.0 : -1.0) * spec.b();
        std::vector<Vec> q, p;
        for (auto const& s : traj.states)
        {
            auto img = gauss_map(spec, s, J);
            q.push_back(img.q);
            p.push_back(img.p);
        }
        for (std::size_t k = 1; k + 1 < q.size(); ++k)
        {
            Vec dq = nonuniform_derivative(traj.tau, q, k);
            Vec dp = nonuniform_derivative(traj.tau, p, k);
            resid = std::max(resid, (dq - p[k]).norm());
            resid = std::max(resid, (dp - neumann_acceleration(b, q[k], p[k])).norm());
        }
    }
    v.detail << "identity " << ident << ", Neumann FD residual " << resid;
    v.check(ident < 1e-10, "identity < 1e-10");
    v.check(resid < 1e-5, "Neumann residual < 1e-5");
}

//---------------------------------------------------------------------------//
// 4. Abel scattering shift
void abel_scattering(Verdict& v)
{
    auto spec = one_sheeted();
    Rng rng(404);
    int done = 0, skipped = 0, n_i = 0;
    double worst = 0;
    while (done < 20)
    {
        auto st = random_state(spec, rng);
        auto cls = classify_state(spec, st);
        if (!cls.refined
            || (*cls.refined != CaseLabel::case_i && *cls.refined != CaseLabel::case_ii))
        {
            continue;
        }
        try
        {
            auto m = measure_abel_scattering(spec, st);
            worst = std::max(worst, m.residual.norm());
            n_i += *cls.refined == CaseLabel::case_i;
            ++done;
        }
        catch (Error const& e)
        {
            ++skipped;
        }
    }
    v.detail << done << " instances (" << n_i << " case I), " << skipped
             << " skipped, max residual " << worst;
    v.check(worst < 1e-4, "residual < 1e-4");
}

//---------------------------------------------------------------------------//
// 5. Rotation number
// Random one-sheeted states rarely wind; every other draw perturbs a critical
// direction by 10^-1 .. 10^-7 so that N >= 1 is exercised.
std::optional<PhaseState> near_critical_state(QuadricSpec const& spec, Rng& rng, int i)
{
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    double x0 = coord(rng), x1 = coord(rng);
    double r = 1 + x0 * x0 - x1 * x1;
    if (r <= 0)
    {
        return std::nullopt;
    }
    Vec x(3);
    x << x0, x1, std::sqrt(spec.axes()[2] * r);
    auto cs = critical_state(spec, x, i % 2);
    if (!cs)
    {
        return std::nullopt;
    }
    double eps = std::pow(10.0, -1 - 6 * std::uniform_real_distribution<double>(0, 1)(rng));
    Vec y = cs->y + (i % 3 ? eps : -eps) * tangent_basis(spec, x).col(0);
    Vec bx = spec.b().cwiseProduct(x);
    y -= bx * (bx.dot(y) / bx.squaredNorm());
    return PhaseState{x, y.normalized()};
}

void rotation(Verdict& v)
{
    GeodesicOptions opts;
    opts.stop_on_escape = true;
    for (auto spec : {one_sheeted(), two_sheeted()})
    {
        bool const one = spec.kind() == QuadricKind::one_sheeted;
        Rng rng(505);
        int done = 0, mismatch = 0, excluded = 0, case_ii = 0, draw = 0;
        double worst_offset = 0;
        long max_n = 0;
        while (done < 20)
        {
            PhaseState st;
            if (one && draw++ % 2)
            {
                auto nc = near_critical_state(spec, rng, draw);
                if (!nc)
                {
                    continue;
                }
                st = *nc;
            }
            else
            {
                st = random_state(spec, rng);
            }
            auto is = integrals(spec, st);
            if (one && is.F[0] >= 0)
            {
                continue;
            }
            RotationNumber rn;
            try
            {
                rn = rotation_number(build_spectral_curve(spec, is), spec.kind());
            }
            catch (Error const&)
            {
                // Two-sheeted case II has no rotation formula
                ++case_ii;
                continue;
            }
            double frac = rn.ratio - std::round(rn.ratio);
            if (std::fabs(frac) < 1e-3)
            {
                ++excluded;
                continue;
            }
            auto traj = integrate_geodesic(spec, st, -1e5, 1e5, opts);
            auto rep = winding_and_crossings(traj);
            if (rep.nonterminal)
            {
                ++excluded;
                continue;
            }
            ++done;
            max_n = std::max(max_n, rn.N);
            worst_offset = std::max(worst_offset,
                                    std::fabs(std::fabs(rep.total_angle) / (2 * pi) - rn.ratio));
            if (rep.windings != rn.N)
            {
                ++mismatch;
                v.detail << " {ratio " << rn.ratio << " angle/2pi "
                         << std::fabs(rep.total_angle) / (2 * pi) << "}";
            }
        }
        v.detail << " " << to_cstring(spec.kind()) << ": " << done << " geodesics, "
                 << mismatch << " mismatches, " << excluded << " excluded, " << case_ii
                 << " case II, max N " << max_n << ", max |angle/2pi - ratio| "
                 << worst_offset << ";";
        v.check(mismatch == 0, std::string("N matches windings (") + to_cstring(spec.kind()) + ")");
        if (one)
        {
            v.check(max_n >= 1, "nonzero rotation numbers sampled");
        }
    }
}

//---------------------------------------------------------------------------//
// 6. Neumann linearization and Dubrovin equations
void linearization(Verdict& v)
{
    double slope_err = 0, const_err = 0, lin_err = 0, dub_err = 0;
    Rng rng(606);
    for (Vec b : {Vec{{1.0, 2.0, 3.5}}, Vec{{0.5, 1.5, 2.0, 4.0}}})
    {
        NeumannSpec ns{b, 1};
        int const dim = b.size();
        NeumannState s0{random_unit(dim, rng), Vec::Zero(dim)};
        Vec p = random_unit(dim, rng);
        s0.p = p - s0.q * s0.q.dot(p);
        auto times = linspace(0, 20, 2001);
        auto tr = neumann_linearization(ns, s0, times);
        std::vector<double> xi1;
        for (auto const& xi : tr.xi)
        {
            xi1.push_back(xi[0]);
            for (int k = 1; k < xi.size(); ++k)
            {
                const_err = std::max(const_err, std::fabs(xi[k] - tr.xi[0][k]));
            }
        }
        auto fit = fit_line(tr.tau, xi1);
        slope_err = std::max(slope_err, std::fabs(fit.slope - 1));
        for (std::size_t i = 0; i < xi1.size(); ++i)
        {
            lin_err = std::max(lin_err, std::fabs(xi1[i] - xi1[0] - tr.tau[i]));
        }

        auto curve = spectral_curve_from_neumann(ns, s0);
        double const h = times[1] - times[0];
        int const n = curve.n();
        for (std::size_t i = 2; i + 2 < tr.divisors.size(); ++i)
        {
            std::vector<double> u(n);
            std::vector<int> signs(n);
            for (int j = 0; j < n; ++j)
            {
                auto const& pt = tr.divisors[i].points[j];
                u[j] = pt.u;
                signs[j] = pt.w >= 0 ? 1 : -1;
            }
            auto rhs = dubrovin_rhs(curve, u, signs);
            for (int j = 0; j < n; ++j)
            {
                auto at = [&](std::size_t m) { return tr.divisors[m].points[j].u; };
                double fd = (at(i - 2) - 8 * at(i - 1) + 8 * at(i + 1) - at(i + 2)) / (12 * h);
                dub_err = std::max(dub_err, std::fabs(fd - rhs[j]));
            }
        }
    }
    v.detail << "slope err " << slope_err << ", xi1 - tau err " << lin_err
             << ", xi_k drift " << const_err << ", Dubrovin err " << dub_err;
    v.check(slope_err < 1e-4, "slope 1 +- 1e-4");
    v.check(const_err < 1e-5, "xi_2..n constant to 1e-5");
    v.check(dub_err < 1e-5, "Dubrovin matches finite differences");
}

//---------------------------------------------------------------------------//
// 7. Symmetric hyperboloid
double measured_delta_phi(QuadricSpec const& spec, PhaseState const& st, double S)
{
    GeodesicOptions opts;
    auto traj = integrate_geodesic(spec, st, -S, S, opts);
    double angle = 0;
    auto az = [](Vec const& w) { return std::atan2(w[2], w[1]); };
    double prev = az(traj.states.front().x);
    for (auto const& s : traj.states)
    {
        angle += wrap_pi(az(s.x) - prev);
        prev = az(s.x);
    }
    auto const& first = traj.states.front();
    auto const& last = traj.states.back();
    angle += wrap_pi(az(last.y) - az(last.x));
    angle -= wrap_pi(az(-first.y) - az(first.x));
    return angle;
}

void symmetric(Verdict& v)
{
    double const a = 1, c = 1;
    auto spec = symmetric_quadric(a, c);
    double dphi_err = 0;
    for (double I : {0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.3, 1.6, 2.0, 3.0})
    {
        PhaseState st;
        DeltaPhiMode mode;
        if (I < a)
        {
            st.x = Vec{{0, a, 0}};
            st.y = Vec{{std::sqrt(1 - I * I / (a * a)), 0, I / a}};
            mode = DeltaPhiMode::transmission;
        }
        else
        {
            double rho = std::sqrt(I * I / (a * a) - 1);
            st.x = Vec{{c * rho, a * std::sqrt(1 + rho * rho), 0}};
            st.y = Vec{{0, 0, 1}};
            mode = DeltaPhiMode::reflection;
        }
        double predicted = symmetric_delta_phi(a, c, I, mode);
        double measured = measured_delta_phi(spec, st, 3000);
        dphi_err = std::max(dphi_err, std::fabs(predicted - measured));
    }
    Rng rng(707);
    double closed_err = 0;
    for (int i = 0; i < 100; ++i)
    {
        auto st = random_state(spec, rng);
        double H = 0.5 * st.y.squaredNorm();
        double I = st.x[1] * st.y[2] - st.x[2] * st.y[1];
        auto sc = symmetric_classify(a, c, H, I);
        double J = joachimsthal(spec, st.x, st.y);
        double F0 = uhlenbeck_devaney(spec, st.x, st.y, 0);
        closed_err = std::max(closed_err, std::fabs(sc.J - J) / std::max(1.0, std::fabs(J)));
        closed_err = std::max(closed_err, std::fabs(sc.F0 - F0) / std::max(1.0, std::fabs(F0)));
    }
    v.detail << "delta phi err " << dphi_err << ", closed forms err " << closed_err;
    v.check(dphi_err < 1e-5, "delta phi < 1e-5");
    v.check(closed_err < 1e-12, "J, F0 closed forms < 1e-12");
}

//---------------------------------------------------------------------------//
// 8. Cone
void cone(Verdict& v)
{
    QuadricSpec spec({-3, 1, 1}, QuadricKind::cone);
    double alpha = cone_angle(spec);
    double angle_err = std::fabs(alpha - pi);
    Rng rng(808);
    std::uniform_real_distribution<double> unif(0, 1);
    double shift_err = 0;
    int done = 0;
    while (done < 10)
    {
        double rho = 1 + unif(rng);
        double phi = 2 * pi * unif(rng);
        Vec x{{std::sqrt(3.0) * rho, rho * std::cos(phi), rho * std::sin(phi)}};
        Mat T = tangent_basis(spec, x);
        double t = 2 * pi * unif(rng);
        Vec y = std::cos(t) * T.col(0) + std::sin(t) * T.col(1);
        double p = Eigen::Vector3d(x).cross(Eigen::Vector3d(y)).norm();
        if (p < 0.2)
        {
            continue;
        }
        auto traj = integrate_geodesic(spec, {x, y}, -2000, 2000);
        double turn = 0;
        double prev = std::atan2(traj.states.front().x[2], traj.states.front().x[1]);
        for (auto const& s : traj.states)
        {
            double az = std::atan2(s.x[2], s.x[1]);
            turn += wrap_pi(az - prev);
            prev = az;
        }
        double const scale = alpha / (2 * pi);
        double sgn = turn > 0 ? 1 : -1;
        double r0 = traj.states.front().x.norm(), r1 = traj.states.back().x.norm();
        double theta0 = scale * std::atan2(traj.states.front().x[2], traj.states.front().x[1]);
        double in = theta0 - sgn * std::asin(p / r0);
        double out = theta0 + scale * turn + sgn * std::asin(p / r1);
        // Mirror clockwise passes so the corner rule applies
        double predicted = sgn > 0 ? cone_scatter(alpha, in) : -cone_scatter(alpha, -in);
        double diff = std::remainder(out - predicted, alpha);
        shift_err = std::max(shift_err, std::fabs(diff));
        ++done;
    }
    v.detail << "alpha err " << angle_err << ", shift err " << shift_err;
    v.check(angle_err < 1e-10, "alpha = pi to 1e-10");
    v.check(shift_err < 1e-6, "shift by pi to 1e-6");
}

//---------------------------------------------------------------------------//
// 9. Projective metrics
void projective(Verdict& v)
{
    auto spec = one_sheeted();
    Vec const b = spec.b();
    Rng rng(909);
    std::uniform_real_distribution<double> box(-2, 2);

    double iso = 0;
    int samples = 0;
    while (samples < 100)
    {
        Vec x{{box(rng), box(rng), box(rng)}};
        if (std::fabs(b.dot(x.cwiseProduct(x))) < 0.1)
        {
            continue;
        }
        Vec w = random_unit(3, rng);
        Vec sx = involution_sigma(b, x);
        Vec sw = involution_jacobian(b, x) * w;
        double g0 = w.dot(metric1_at(b, x).g * w);
        double g1 = sw.dot(metric1_at(b, sx).g * sw);
        iso = std::max(iso, std::fabs(g1 - g0) / std::max(1.0, std::fabs(g0)));
        ++samples;
    }

    // Totally geodesic, projective equivalence and parametrization
    double drift = 0, haus = 0, param = 0;
    for (int g = 0; g < 5; ++g)
    {
        auto st = random_state(spec, rng, 1.5);
        double J = joachimsthal(spec, st.x, st.y);
        GeodesicOptions gopts;
        gopts.ode.max_step = 2e-3;
        auto traj = integrate_geodesic(spec, st, 0, 4, gopts);
        knoerrer_reparametrize(spec, traj);
        double c = b.cwiseProduct(st.x).squaredNorm() / std::sqrt(std::fabs(J));
        std::vector<double> t;
        for (double tau : traj.tau)
        {
            t.push_back(c * tau);
        }
        auto m1 = integrate_metric1_geodesic(b, st.x, st.y, t, {1e-13, 1e-15});
        for (std::size_t i = 0; i < m1.x.size(); ++i)
        {
            drift = std::max(drift, std::fabs(eval_constraint(spec, m1.x[i])));
            param = std::max(param, (m1.x[i] - traj.states[i].x).norm());
        }
        std::vector<Vec> ds0;
        for (auto const& s : traj.states)
        {
            ds0.push_back(s.x);
        }
        haus = std::max(haus, hausdorff_distance(ds0, m1.x));
    }

    // Regularity at infinity
    double const b0 = std::fabs(b[0]);
    double const bmin = b.tail(2).minCoeff(), bmax = b.tail(2).maxCoeff();
    double const wmin = b0 * b0 + bmin * b0, wmax = b0 * b0 + bmax * b0;
    double const lo = std::min(bmin, 1.0) / wmax, hi = std::max(bmax, 1.0) / wmin;
    bool regular = true;
    for (int i = 0; i < 100; ++i)
    {
        double t = 2 * pi * i / 100.0;
        Vec y{{std::cos(t) * std::sqrt(b0 / b[1]), std::sin(t) * std::sqrt(b0 / b[2]), 0}};
        auto m = restricted_infinity_metric(spec, y);
        Eigen::SelfAdjointEigenSolver<Mat> es(m.g);
        for (int k = 0; k < es.eigenvalues().size(); ++k)
        {
            double e = std::fabs(es.eigenvalues()[k]);
            regular = regular && std::isfinite(e) && e >= lo * (1 - 1e-12)
                      && e <= hi * (1 + 1e-12);
        }
        regular = regular && m.zero == 0;
    }

    // Neumann image of a chart geodesic crossing infinity
    double nresid = 0;
    for (int i = 0; i < 3; ++i)
    {
        double t0 = 2 * pi * (i + 0.3) / 3.0;
        Vec y0{{std::cos(t0) * std::sqrt(b0 / b[1]), std::sin(t0) * std::sqrt(b0 / b[2]), 0}};
        Mat T = chart_tangent_basis(spec, y0);
        Vec yd = 0.6 * T.col(0) + T.col(1);
        auto G = chart_ambient_metric(spec, y0).g;
        double norm2 = yd.dot(G * yd);
        int eps = norm2 > 0 ? 1 : -1;
        yd /= std::sqrt(std::fabs(norm2));
        // Back up to t = -0.5 so the sampled span crosses y_3 = 0 at t = 0
        auto back = integrate_chart_geodesic(spec, y0, yd, {0.0, -0.5}, {1e-13, 1e-15});
        auto times = linspace(-0.5, 0.5, 1001);
        auto ct = integrate_chart_geodesic(
            spec, back.y.back(), back.ydot.back(), times, {1e-13, 1e-15});
        double const h = times[1] - times[0];
        std::vector<Vec> q;
        for (auto const& y : ct.y)
        {
            Vec w{{b[0], b[1] * y[0], b[2] * y[1]}};
            q.push_back(w.normalized());
        }
        for (std::size_t k = 2; k + 2 < q.size(); ++k)
        {
            Vec acc = (-q[k - 2] + 16 * q[k - 1] - 30 * q[k] + 16 * q[k + 1] - q[k + 2])
                      / (12 * h * h);
            Vec r = acc + eps * b.cwiseProduct(q[k]);
            r -= q[k] * q[k].dot(r);
            nresid = std::max(nresid, r.norm());
        }
        v.detail << " crossing y3 " << ct.y.front()[2] << ".." << ct.y.back()[2];
    }
    v.detail << "; isometry " << iso << ", drift " << drift << ", Hausdorff " << haus
             << ", tau param " << param << ", Neumann residual " << nresid;
    v.check(iso < 1e-10, "isometry < 1e-10");
    v.check(drift < 1e-8, "totally geodesic drift < 1e-8");
    v.check(haus < 1e-6, "Hausdorff < 1e-6");
    v.check(regular, "dr^2 regular at infinity");
    v.check(nresid < 1e-5, "Neumann residual < 1e-5");
}

//---------------------------------------------------------------------------//
// 10. Quantum reduction
void quantum(Verdict& v)
{
    SymmetricSpec spec{1, 1, 10};
    double a2 = spec.a * spec.a, c2 = spec.c * spec.c;
    double v0 = double(spec.k) * spec.k / (2 * a2) + a2 / (4 * c2 * c2);
    double v0_err = std::fabs(potential_V(spec, 0) - v0) / v0;

    double flux = 0;
    for (double E : {5.0, 20.0, 40.0, 48.0, 50.0, 55.0, 70.0, 120.0})
    {
        auto r = transmission(spec, E);
        flux = std::max(flux, std::fabs(r.R + r.T - 1));
    }
    double Estar = transmission_half_crossing(spec, 30, 80);
    double rel = std::fabs(Estar - 50) / 50;
    double roundtrip = liouville_roundtrip_residual(spec, 60, 5, 4001);
    v.detail << "V(0) err " << v0_err << ", |R+T-1| " << flux << ", E* " << Estar
             << " (rel " << rel << "), round trip " << roundtrip;
    v.check(v0_err < 1e-12, "V(0)");
    v.check(flux < 1e-8, "R + T = 1");
    v.check(rel < 0.2, "T = 1/2 crossing within 20%");
    v.check(roundtrip < 1e-6, "Liouville round trip");
}
}  // namespace

//---------------------------------------------------------------------------//
int main(int argc, char** argv)
{
    std::vector<std::pair<char const*, std::function<void(Verdict&)>>> suites = {
        {"conservation", conservation},
        {"neck crossing", neck_crossing},
        {"knoerrer", knoerrer},
        {"abel scattering", abel_scattering},
        {"rotation number", rotation},
        {"neumann linearization", linearization},
        {"symmetric closed forms", symmetric},
        {"cone", cone},
        {"projective", projective},
        {"quantum", quantum},
    };
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    for (std::size_t i = 0; i < suites.size(); ++i)
    {
        if (only && only != static_cast<int>(i + 1))
        {
            continue;
        }
        Verdict v;
        auto start = std::chrono::steady_clock::now();
        try
        {
            suites[i].second(v);
        }
        catch (std::exception const& e)
        {
            v.check(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        std::printf("criterion %zu (%s): %s (%.1fs)%s\n",
                    i + 1,
                    suites[i].first,
                    v.pass ? "PASS" : "FAIL",
                    secs,
                    v.detail.str().c_str());
        std::fflush(stdout);
        failures += !v.pass;
    }
    return failures ? 1 : 0;
}
