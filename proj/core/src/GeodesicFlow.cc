//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file GeodesicFlow.cc
//---------------------------------------------------------------------------//
#include "quadscat/GeodesicFlow.hh"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "quadscat/Error.hh"

namespace quadscat
{
namespace
{
//---------------------------------------------------------------------------//
void unpack(OdeState const& y, int dim, Vec& x, Vec& v)
{
    x = Eigen::Map<Vec const>(y.data(), dim);
    v = Eigen::Map<Vec const>(y.data() + dim, dim);
}

void pack(Vec const& x, Vec const& v, OdeState& y)
{
    int dim = x.size();
    y.resize(2 * dim);
    Eigen::Map<Vec>(y.data(), dim) = x;
    Eigen::Map<Vec>(y.data() + dim, dim) = v;
}

//---------------------------------------------------------------------------//
/*!
 * Newton projection along Bx, then remove the normal velocity component.
 */
double constraint_scale(QuadricSpec const& spec, Vec const& x)
{
    return std::max(1.0, spec.b().cwiseAbs().dot(x.cwiseProduct(x)));
}

bool project_state(QuadricSpec const& spec, Vec& x, Vec& v, GeodesicOptions const& opts)
{
    auto const& b = spec.b();
    double const scale = constraint_scale(spec, x);
    for (int iter = 0; iter < 3; ++iter)
    {
        double r = eval_constraint(spec, x);
        if (std::fabs(r) < 1e-15 * scale)
        {
            break;
        }
        Vec n = b.cwiseProduct(x);
        x -= n * (r / (2 * n.squaredNorm()));
    }
    if (!(std::fabs(eval_constraint(spec, x)) < opts.constraint_tol * scale))
    {
        return false;
    }
    Vec n = b.cwiseProduct(x);
    v -= n * (n.dot(v) / n.squaredNorm());
    if (opts.unit_speed)
    {
        v /= v.norm();
    }
    return true;
}

//---------------------------------------------------------------------------//
struct HalfRun
{
    std::vector<double> s;
    std::vector<PhaseState> states;
    TrajectoryStats stats;
    bool escaped = false;
};

HalfRun integrate_half(QuadricSpec const& spec,
                       PhaseState const& state0,
                       double s_end,
                       GeodesicOptions const& opts,
                       double escape_radius)
{
    int const dim = spec.n() + 1;
    Vec const b = spec.b();
    double const min_axis
        = std::sqrt(spec.axes().cwiseAbs().minCoeff());
    double const dir = s_end >= 0 ? 1 : -1;

    OdeRhs rhs = [&](OdeState const& st, OdeState& dst, double) {
        dst.resize(2 * dim);
        double bxx = 0, byy = 0;
        for (int k = 0; k < dim; ++k)
        {
            double bx = b[k] * st[k];
            bxx += bx * bx;
            byy += b[k] * st[dim + k] * st[dim + k];
        }
        if (!(bxx > 0))
        {
            throw Error(ErrorKind::step_failure, "normal vanishes (cone vertex)");
        }
        double lambda = byy / bxx;
        for (int k = 0; k < dim; ++k)
        {
            dst[k] = st[dim + k];
            dst[dim + k] = -lambda * b[k] * st[k];
        }
    };

    HalfRun run;
    run.s.push_back(0);
    run.states.push_back(state0);

    OdeHooks hooks;
    hooks.step_limit = [&](double, OdeState const& st) {
        double rho2 = 0;
        for (int k = 1; k < dim; ++k)
        {
            rho2 += st[k] * st[k];
        }
        double scale = std::max(std::sqrt(rho2), 0.1 * min_axis);
        if (spec.kind() == QuadricKind::cone)
        {
            double r = Eigen::Map<Vec const>(st.data(), dim).norm();
            if (r < 1e-10 * min_axis)
            {
                throw Error(ErrorKind::step_failure, "reached the cone vertex");
            }
            scale = std::min(scale, r);
        }
        return opts.angle_step * scale;
    };
    hooks.after_step = [&](double s, OdeState& st) {
        Vec x, v;
        unpack(st, dim, x, v);
        if (opts.project)
        {
            if (!project_state(spec, x, v, opts))
            {
                throw Error(ErrorKind::constraint_lost,
                            "projection onto the quadric diverged");
            }
            pack(x, v, st);
        }
        double drift = std::fabs(eval_constraint(spec, x)) / constraint_scale(spec, x);
        double tang = std::fabs(b.cwiseProduct(x).dot(v));
        run.stats.max_constraint_drift
            = std::max(run.stats.max_constraint_drift, drift);
        run.stats.max_tangency_drift
            = std::max(run.stats.max_tangency_drift, tang);
        run.s.push_back(s);
        run.states.push_back({x, v});
        if (opts.stop_on_escape && x.norm() > escape_radius && x.dot(v) * dir > 0)
        {
            run.escaped = true;
            return false;
        }
        return true;
    };

    OdeState st;
    pack(state0.x, state0.y, st);
    OdeOptions ode = opts.ode;
    auto stats = integrate_adaptive(rhs, st, 0, s_end, ode, hooks);
    run.stats.steps = stats.steps;
    run.stats.rejections = stats.rejections;
    if (!run.escaped)
    {
        auto const& last = run.states.back();
        run.escaped = last.x.norm() > escape_radius
                      && last.x.dot(last.y) * dir > 0;
    }
    return run;
}
}  // namespace

//---------------------------------------------------------------------------//
double default_escape_radius(QuadricSpec const& spec)
{
    return 1e3 * std::sqrt(spec.axes().cwiseAbs().maxCoeff());
}

//---------------------------------------------------------------------------//
/*!
 * Integrate the geodesic equation on both sides of s = 0.
 */
Trajectory integrate_geodesic(QuadricSpec const& spec,
                              PhaseState const& state0,
                              double s_min,
                              double s_max,
                              GeodesicOptions const& opts)
{
    require(s_min <= 0 && s_max >= 0 && std::isfinite(s_min)
                && std::isfinite(s_max),
            ErrorKind::invalid_argument,
            "span must be finite and contain s = 0");
    check_state(spec, state0, std::max(opts.constraint_tol, 1e-9));

    Trajectory traj;
    traj.escape_radius = opts.escape_radius > 0 ? opts.escape_radius
                                                : default_escape_radius(spec);
    HalfRun back;
    if (s_min < 0)
    {
        back = integrate_half(spec, state0, s_min, opts, traj.escape_radius);
    }
    HalfRun fwd;
    if (s_max > 0)
    {
        fwd = integrate_half(spec, state0, s_max, opts, traj.escape_radius);
    }
    else
    {
        fwd.s.push_back(0);
        fwd.states.push_back(state0);
    }

    for (std::size_t i = back.s.size(); i-- > 1;)
    {
        traj.s.push_back(back.s[i]);
        traj.states.push_back(back.states[i]);
    }
    traj.s.insert(traj.s.end(), fwd.s.begin(), fwd.s.end());
    traj.states.insert(traj.states.end(), fwd.states.begin(), fwd.states.end());

    traj.stats.steps = back.stats.steps + fwd.stats.steps;
    traj.stats.rejections = back.stats.rejections + fwd.stats.rejections;
    traj.stats.max_constraint_drift = std::max(
        back.stats.max_constraint_drift, fwd.stats.max_constraint_drift);
    traj.stats.max_tangency_drift = std::max(back.stats.max_tangency_drift,
                                             fwd.stats.max_tangency_drift);
    traj.escaped_minus = back.escaped;
    traj.escaped_plus = fwd.escaped;
    return traj;
}

//---------------------------------------------------------------------------//
double knoerrer_alpha(QuadricSpec const& spec, Vec const& x, double J)
{
    return std::sqrt(std::fabs(J)) / spec.b().cwiseProduct(x).squaredNorm();
}

/*!
 * Integrate alpha over the sample grid with the cubic Hermite rule.
 *
 * alpha' = -2 sqrt|J| (Bx, By) / |Bx|^4 is exact, so each interval is
 * integrated to fourth order.
 */
void knoerrer_reparametrize(QuadricSpec const& spec, Trajectory& traj, double iso_tol)
{
    require(!traj.s.empty(), ErrorKind::invalid_argument, "empty trajectory");
    auto const& b = spec.b();
    // Anchor J at the sample nearest s = 0
    std::size_t i0 = 0;
    for (std::size_t i = 0; i < traj.s.size(); ++i)
    {
        if (std::fabs(traj.s[i]) < std::fabs(traj.s[i0]))
        {
            i0 = i;
        }
    }
    double const J
        = joachimsthal(spec, traj.states[i0].x, traj.states[i0].y);
    require(std::fabs(J) >= iso_tol,
            ErrorKind::isotropic,
            "Knoerrer time is undefined for isotropic geodesics");
    double const sqj = std::sqrt(std::fabs(J));

    std::size_t const m = traj.s.size();
    std::vector<double> alpha(m), dalpha(m);
    for (std::size_t i = 0; i < m; ++i)
    {
        Vec bx = b.cwiseProduct(traj.states[i].x);
        Vec by = b.cwiseProduct(traj.states[i].y);
        double n2 = bx.squaredNorm();
        alpha[i] = sqj / n2;
        dalpha[i] = -2 * sqj * bx.dot(by) / (n2 * n2);
    }
    traj.tau.assign(m, 0.0);
    for (std::size_t i = i0 + 1; i < m; ++i)
    {
        double h = traj.s[i] - traj.s[i - 1];
        traj.tau[i] = traj.tau[i - 1] + h * (alpha[i - 1] + alpha[i]) / 2
                      + h * h * (dalpha[i - 1] - dalpha[i]) / 12;
    }
    for (std::size_t i = i0; i-- > 0;)
    {
        double h = traj.s[i + 1] - traj.s[i];
        traj.tau[i] = traj.tau[i + 1] - h * (alpha[i] + alpha[i + 1]) / 2
                      - h * h * (dalpha[i] - dalpha[i + 1]) / 12;
    }
}

//---------------------------------------------------------------------------//
NeumannImage gauss_map(QuadricSpec const& spec,
                       PhaseState const& state,
                       double J,
                       double iso_tol)
{
    require(std::fabs(J) >= iso_tol,
            ErrorKind::isotropic,
            "Gauss map time change is undefined for isotropic geodesics");
    Vec bx = spec.b().cwiseProduct(state.x);
    Vec by = spec.b().cwiseProduct(state.y);
    double nbx = bx.norm();
    NeumannImage img;
    img.q = bx / nbx;
    img.p = (by - img.q * img.q.dot(by)) * (nbx / std::sqrt(std::fabs(J)));
    return img;
}

//---------------------------------------------------------------------------//
/*!
 * Unwrapped azimuth about the x_0 axis and sign changes of x_0.
 */
WindingReport winding_and_crossings(Trajectory const& traj, double graze_tol)
{
    require(!traj.states.empty(), ErrorKind::invalid_argument, "empty trajectory");
    require(traj.states.front().x.size() == 3,
            ErrorKind::dimension,
            "windings are defined for n = 2");
    WindingReport rep;
    double angle = 0;
    double prev = std::atan2(traj.states[0].x[2], traj.states[0].x[1]);
    int last_sign = 0;
    double min_abs = std::numeric_limits<double>::infinity();
    for (auto const& st : traj.states)
    {
        double phi = std::atan2(st.x[2], st.x[1]);
        double d = phi - prev;
        d -= 2 * std::numbers::pi * std::round(d / (2 * std::numbers::pi));
        angle += d;
        prev = phi;

        double x0 = st.x[0];
        if (std::fabs(x0) > graze_tol)
        {
            int sign = x0 > 0 ? 1 : -1;
            if (last_sign != 0 && sign != last_sign)
            {
                ++rep.crossings;
            }
            else if (last_sign != 0 && min_abs <= graze_tol)
            {
                ++rep.grazes;
            }
            last_sign = sign;
            min_abs = std::numeric_limits<double>::infinity();
        }
        else
        {
            min_abs = std::min(min_abs, std::fabs(x0));
        }
    }
    rep.total_angle = angle;
    rep.windings = static_cast<long>(
        std::floor(std::fabs(angle) / (2 * std::numbers::pi)));
    rep.nonterminal = !(traj.escaped_minus && traj.escaped_plus);
    return rep;
}

//---------------------------------------------------------------------------//
AsymptoticDirection
asymptotic_direction(QuadricSpec const& spec, Trajectory const& traj, End end)
{
    require(!traj.states.empty(), ErrorKind::invalid_argument, "empty trajectory");
    auto const& st = end == End::plus ? traj.states.back() : traj.states.front();
    double radius = traj.escape_radius > 0 ? traj.escape_radius
                                           : default_escape_radius(spec);
    require(st.x.norm() >= radius,
            ErrorKind::not_escaped,
            "trajectory has not reached the escape radius");
    AsymptoticDirection out;
    out.y = st.y / st.y.norm();
    out.cone_residual = std::fabs(spec.b().dot(out.y.cwiseProduct(out.y)));
    return out;
}

//---------------------------------------------------------------------------//
ScatterRecord scatter_geodesic(QuadricSpec const& spec,
                               PhaseState const& state0,
                               double s_limit,
                               GeodesicOptions opts,
                               Tolerances const& tol)
{
    opts.stop_on_escape = true;
    auto traj = integrate_geodesic(spec, state0, -s_limit, s_limit, opts);
    ScatterRecord rec;
    if (spec.kind() == QuadricKind::one_sheeted)
    {
        rec.label = classify_state(spec, state0, tol).label;
    }
    else
    {
        auto is = integrals(spec, state0, tol);
        rec.label = is.F[0] < -tol.classification ? CaseLabel::reflection
                    : is.F[0] > tol.classification ? CaseLabel::transmission
                                                   : CaseLabel::critical;
    }
    if (traj.escaped_minus)
    {
        rec.y_minus = asymptotic_direction(spec, traj, End::minus).y;
    }
    if (traj.escaped_plus)
    {
        rec.y_plus = asymptotic_direction(spec, traj, End::plus).y;
    }
    if (spec.n() == 2)
    {
        rec.winding = winding_and_crossings(traj);
    }
    return rec;
}

//---------------------------------------------------------------------------//
}  // namespace quadscat
