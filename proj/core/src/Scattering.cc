//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Scattering.cc
//---------------------------------------------------------------------------//
#include "quadscat/Scattering.hh"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quadscat/Error.hh"
#include "quadscat/GeodesicFlow.hh"
#include "quadscat/Quadrature.hh"

namespace quadscat
{
namespace
{
constexpr double pi = std::numbers::pi;

//---------------------------------------------------------------------------//
double wrap_pi(double a)
{
    return a - 2 * pi * std::round(a / (2 * pi));
}

//! Refuse singular curves with the appropriate error
void require_regular(SpectralCurve const& curve)
{
    if (!curve.singular())
    {
        return;
    }
    auto const& e = curve.roots();
    int dist = curve.distinguished();
    for (std::size_t i = 1; i < e.size(); ++i)
    {
        if (e[i] - e[i - 1] >= SpectralCurve::double_root_tol)
        {
            continue;
        }
        if (dist >= 0)
        {
            auto const& ov = curve.ovals()[dist];
            for (double r : {e[i], e[i - 1]})
            {
                if (r == ov.lo || r == ov.hi)
                {
                    throw Error(ErrorKind::critical_divergence,
                                "distinguished oval touches a double root");
                }
            }
        }
    }
    throw Error(ErrorKind::degenerate_curve, "spectral curve has a double root");
}

double power(double u, int m)
{
    double v = 1;
    for (int i = 0; i < m; ++i)
    {
        v *= u;
    }
    return v;
}
}  // namespace

//---------------------------------------------------------------------------//
Vec PeriodLattice::reduce(Vec const& v) const
{
    if (generators.size() == 0)
    {
        return v;
    }
    Vec k = generators.fullPivLu().solve(v);
    for (int i = 0; i < k.size(); ++i)
    {
        k[i] = std::round(k[i]);
    }
    return v - generators * k;
}

//---------------------------------------------------------------------------//
double oval_angle(SpectralCurve const& curve, int oval, double u, double w)
{
    auto const& ov = curve.ovals().at(oval);
    double c = std::clamp((ov.mid() - u) / ov.radius(), -1.0, 1.0);
    double theta = std::acos(c);
    if (w < 0 && theta > 0)
    {
        theta = 2 * pi - theta;
    }
    return theta;
}

/*!
 * With u = m - r cos(theta), du / sqrt R = dtheta / sqrt G(u), so the
 * integrand is smooth and periodic in theta.
 */
double oval_integral(SpectralCurve const& curve,
                     int oval,
                     int j,
                     double theta0,
                     double theta1,
                     int nodes)
{
    require(j >= 1, ErrorKind::invalid_argument, "differential index starts at 1");
    if (theta0 == theta1)
    {
        return 0;
    }
    auto const& ov = curve.ovals().at(oval);
    double const m = ov.mid(), r = ov.radius();
    GaussLegendre gl(nodes);
    auto f = [&](double t) {
        double u = m - r * std::cos(t);
        return power(u, j - 1) / std::sqrt(curve.G(oval, u));
    };
    int panels = std::max(1, static_cast<int>(std::ceil(std::fabs(theta1 - theta0) / (pi / 4))));
    return gl.composite(f, theta0, theta1, panels);
}

double oval_loop_integral(SpectralCurve const& curve, int oval, int j, int nodes)
{
    return 2 * oval_integral(curve, oval, j, 0, pi, nodes);
}

double abelian_integral(SpectralCurve const& curve,
                        int j,
                        double from,
                        double to,
                        int sheet,
                        int nodes)
{
    if (from == to)
    {
        return 0;
    }
    int oval = curve.oval_of(from, 1e-12);
    require(oval >= 0 && oval == curve.oval_of(to, 1e-12),
            ErrorKind::interval,
            "integration interval leaves the oval");
    auto const& ov = curve.ovals()[oval];
    double const m = ov.mid(), r = ov.radius();
    auto angle = [&](double u) {
        return std::asin(std::clamp((u - m) / r, -1.0, 1.0));
    };
    GaussLegendre gl(nodes);
    auto f = [&](double t) {
        double u = m + r * std::sin(t);
        return power(u, j - 1) / std::sqrt(curve.G(oval, u));
    };
    double t0 = angle(from), t1 = angle(to);
    int panels = std::max(1, static_cast<int>(std::ceil(std::fabs(t1 - t0) / (pi / 4))));
    return (sheet >= 0 ? 1 : -1) * gl.composite(f, t0, t1, panels);
}

//---------------------------------------------------------------------------//
PeriodLattice period_lattice(SpectralCurve const& curve, int nodes)
{
    require_regular(curve);
    auto cyc = curve.cycle_ovals();
    int const g = static_cast<int>(cyc.size());
    require(g == curve.n() - 1 && curve.distinguished() >= 0,
            ErrorKind::degenerate_curve,
            "curve has no distinguished oval");
    PeriodLattice lat;
    lat.generators.resize(g, g);
    for (int i = 0; i < g; ++i)
    {
        for (int j = 1; j <= g; ++j)
        {
            lat.generators(j - 1, i) = oval_loop_integral(curve, cyc[i], j, nodes);
        }
    }
    return lat;
}

Divisor partial_divisor(SpectralCurve const& curve, Divisor const& full)
{
    Divisor D;
    for (auto const& pt : full.points)
    {
        if (pt.oval != curve.distinguished())
        {
            D.points.push_back(pt);
        }
    }
    return D;
}

/*!
 * Each point is reached from the left branch point of its oval by
 * increasing oval angle.
 */
AbelPoint abel_map(SpectralCurve const& curve, Divisor const& D, int nodes)
{
    auto cyc = curve.cycle_ovals();
    int const g = static_cast<int>(cyc.size());
    require(static_cast<int>(D.points.size()) == g,
            ErrorKind::divisor_shape,
            "divisor needs one point per cycle oval");
    std::vector<bool> seen(curve.n(), false);
    AbelPoint A;
    A.coords = Vec::Zero(g);
    for (auto const& pt : D.points)
    {
        require(pt.oval >= 0 && pt.oval < curve.n() && pt.oval != curve.distinguished()
                    && !seen[pt.oval],
                ErrorKind::divisor_shape,
                "divisor points must occupy distinct cycle ovals");
        seen[pt.oval] = true;
        double theta = oval_angle(curve, pt.oval, pt.u, pt.w);
        for (int j = 1; j <= g; ++j)
        {
            A.coords[j - 1] += oval_integral(curve, pt.oval, j, 0, theta, nodes);
        }
    }
    A.lattice = period_lattice(curve, nodes);
    return A;
}

Vec scattering_shift(SpectralCurve const& curve, int nodes)
{
    require_regular(curve);
    int const dist = curve.distinguished();
    require(dist >= 0, ErrorKind::degenerate_curve, "no oval ends at u = 0");
    int const g = curve.n() - 1;
    Vec delta(g);
    for (int j = 1; j <= g; ++j)
    {
        delta[j - 1] = curve.orientation(dist) * oval_loop_integral(curve, dist, j, nodes);
    }
    return delta;
}

//---------------------------------------------------------------------------//
LinearizationTrace neumann_linearization(NeumannSpec const& nspec,
                                         NeumannState const& state0,
                                         std::vector<double> const& times,
                                         int nodes)
{
    auto curve = spectral_curve_from_neumann(nspec, state0);
    require_regular(curve);
    int const n = curve.n();
    auto traj = integrate_neumann_grid(nspec, state0, times);

    LinearizationTrace out;
    std::vector<double> raw(n, 0), unwrapped(n, 0);
    for (std::size_t s = 0; s < traj.states.size(); ++s)
    {
        auto D = lifted_divisor(nspec, traj.states[s], curve);
        require(static_cast<int>(D.points.size()) == n,
                ErrorKind::divisor_shape,
                "divisor needs one point per oval");
        Vec xi = Vec::Zero(n);
        for (auto const& pt : D.points)
        {
            require(pt.oval >= 0, ErrorKind::divisor_shape, "divisor point off the ovals");
            double theta = oval_angle(curve, pt.oval, pt.u, pt.w);
            unwrapped[pt.oval] = s == 0 ? theta
                                        : unwrapped[pt.oval]
                                              + wrap_pi(theta - raw[pt.oval]);
            raw[pt.oval] = theta;
            for (int k = 1; k <= n; ++k)
            {
                xi[k - 1] += oval_integral(
                    curve, pt.oval, n - k + 1, 0, unwrapped[pt.oval], nodes);
            }
        }
        out.tau.push_back(traj.tau[s]);
        out.xi.push_back(xi);
        out.divisors.push_back(std::move(D));
    }
    return out;
}

//---------------------------------------------------------------------------//
/*!
 * Rotation count from the two oval periods of du / sqrt R.
 *
 * One-sheeted reflection: the distinguished oval is [d, 0] and the other
 * oval is bounded by two of the b_k. Two-sheeted: [0, b] and [d, b'].
 */
RotationNumber rotation_number(SpectralCurve const& curve, QuadricKind kind, int nodes)
{
    require(curve.n() == 2, ErrorKind::dimension, "rotation number needs n = 2");
    require_regular(curve);
    int const dist = curve.distinguished();
    require(dist >= 0, ErrorKind::case_mismatch, "no oval ends at u = 0");
    int const other = 1 - dist;
    auto const& od = curve.ovals()[dist];
    auto const& oo = curve.ovals()[other];
    auto is_b = [&](double v) {
        return std::find(curve.b().begin(), curve.b().end(), v) != curve.b().end();
    };
    auto is_d = [&](double v) {
        return std::find(curve.d().begin(), curve.d().end(), v) != curve.d().end();
    };
    bool ok = false;
    if (kind == QuadricKind::one_sheeted)
    {
        ok = od.hi == 0 && is_d(od.lo) && is_b(oo.lo) && is_b(oo.hi) && oo.lo > 0;
    }
    else if (kind == QuadricKind::two_sheeted)
    {
        ok = od.lo == 0 && is_b(od.hi) && is_d(oo.lo) && is_b(oo.hi);
    }
    require(ok, ErrorKind::case_mismatch, "curve topology does not match a reflected geodesic");
    RotationNumber rn;
    rn.I1 = oval_loop_integral(curve, dist, 1, nodes);
    rn.I2 = oval_loop_integral(curve, other, 1, nodes);
    rn.ratio = rn.I1 / (2 * rn.I2);
    rn.N = static_cast<long>(std::floor(rn.ratio));
    return rn;
}

//---------------------------------------------------------------------------//
namespace
{
struct EventState
{
    NeumannState state;
    double tau = 0;
};

/*!
 * Follow the Neumann image until the divisor point on the distinguished
 * oval reaches the branch point u = 0.
 */
EventState find_contact(NeumannSpec const& ns,
                        SpectralCurve const& curve,
                        NeumannState const& s0,
                        double dir)
{
    int const dist = curve.distinguished();
    auto const& ov = curve.ovals()[dist];
    double const theta_b = std::fabs(ov.hi) <= std::fabs(ov.lo) ? pi : 0;
    double const motion = curve.orientation(dist) * dir;

    auto theta_of = [&](NeumannState const& st) {
        auto D = lifted_divisor(ns, st, curve);
        for (auto const& pt : D.points)
        {
            if (pt.oval == dist)
            {
                return oval_angle(curve, dist, pt.u, pt.w);
            }
        }
        throw Error(ErrorKind::degenerate_coordinate,
                    "no divisor point on the distinguished oval");
    };
    auto theta_rate = [&](NeumannState const& st) {
        auto c = sphere_elliptic_coords(ns, st.q);
        double rate = 0;
        for (std::size_t i = 0; i < c.u.size(); ++i)
        {
            int oval = curve.oval_of(c.u[i], 1e-7);
            if (oval < 0)
            {
                continue;
            }
            double den = 1;
            for (std::size_t l = 0; l < c.u.size(); ++l)
            {
                if (l != i)
                {
                    den *= c.u[i] - c.u[l];
                }
            }
            double G = std::max(curve.G(oval, c.u[i]), 0.0);
            rate = std::max(rate, std::sqrt(G) / std::fabs(den));
        }
        return rate;
    };

    double const theta0 = theta_of(s0);
    double target;
    if (motion > 0)
    {
        target = theta_b + 2 * pi * (std::floor((theta0 - theta_b) / (2 * pi)) + 1);
    }
    else
    {
        target = theta_b + 2 * pi * (std::ceil((theta0 - theta_b) / (2 * pi)) - 1);
    }

    EventState prev{s0, 0};
    double prev_raw = theta0;
    double prev_unwrapped = theta0;
    bool found = false;
    EventState after;
    OdeOptions opts;
    opts.rtol = 1e-12;
    opts.atol = 1e-13;
    opts.max_step = 0.05;
    OdeHooks hooks;
    hooks.step_limit = [&](double, OdeState const& y) {
        int dim = ns.b.size();
        NeumannState st{Eigen::Map<Vec const>(y.data(), dim),
                        Eigen::Map<Vec const>(y.data() + dim, dim)};
        double rate = theta_rate(st);
        return rate > 0 ? 0.3 / rate : opts.max_step;
    };
    hooks.after_step = [&](double t, OdeState& y) {
        int dim = ns.b.size();
        NeumannState st{Eigen::Map<Vec const>(y.data(), dim),
                        Eigen::Map<Vec const>(y.data() + dim, dim)};
        normalize_neumann_state(st);
        Eigen::Map<Vec>(y.data(), dim) = st.q;
        Eigen::Map<Vec>(y.data() + dim, dim) = st.p;
        double raw = theta_of(st);
        double unwrapped = prev_unwrapped + wrap_pi(raw - prev_raw);
        if ((unwrapped - target) * motion >= 0)
        {
            found = true;
            after = {st, t};
            return false;
        }
        prev = {st, t};
        prev_raw = raw;
        prev_unwrapped = unwrapped;
        return true;
    };
    OdeState y(2 * ns.b.size());
    int dim = ns.b.size();
    Eigen::Map<Vec>(y.data(), dim) = s0.q;
    Eigen::Map<Vec>(y.data() + dim, dim) = s0.p;
    integrate_adaptive(neumann_rhs(ns), y, 0, dir * 1e4, opts, hooks);
    require(found, ErrorKind::not_escaped, "divisor never reached u = 0");

    // Bisection on the sub-step length from the last state before the event
    auto rhs = neumann_rhs(ns);
    auto advance = [&](double h) {
        OdeState z(2 * dim);
        Eigen::Map<Vec>(z.data(), dim) = prev.state.q;
        Eigen::Map<Vec>(z.data() + dim, dim) = prev.state.p;
        dopri5_step(rhs, z, prev.tau, h);
        NeumannState st{Eigen::Map<Vec const>(z.data(), dim),
                        Eigen::Map<Vec const>(z.data() + dim, dim)};
        normalize_neumann_state(st);
        return st;
    };
    double lo = 0, hi = after.tau - prev.tau;
    for (int iter = 0; iter < 80; ++iter)
    {
        double mid = 0.5 * (lo + hi);
        double unwrapped = prev_unwrapped + wrap_pi(theta_of(advance(mid)) - prev_raw);
        if ((unwrapped - target) * motion >= 0)
        {
            hi = mid;
        }
        else
        {
            lo = mid;
        }
    }
    double h = 0.5 * (lo + hi);
    return {advance(h), prev.tau + h};
}
}  // namespace

AbelScattering measure_abel_scattering(QuadricSpec const& spec,
                                       PhaseState const& state,
                                       Tolerances const& tol,
                                       int nodes)
{
    require(spec.n() >= 2, ErrorKind::dimension, "Abel map needs n >= 2");
    auto iset = integrals(spec, state, tol);
    require(!iset.isotropic, ErrorKind::isotropic, "isotropic geodesic");
    auto curve = build_spectral_curve(spec, iset);
    require_regular(curve);
    require(curve.distinguished() >= 0, ErrorKind::degenerate_curve, "no distinguished oval");

    auto ns = NeumannSpec::from_quadric(spec, iset.eps);
    auto img = gauss_map(spec, state, iset.J, tol.isotropic);
    NeumannState s0{img.q, img.p};

    AbelScattering out;
    out.delta = scattering_shift(curve, nodes);
    out.lattice = period_lattice(curve, nodes);
    auto minus = find_contact(ns, curve, s0, -1);
    auto plus = find_contact(ns, curve, s0, 1);
    out.tau_minus = minus.tau;
    out.tau_plus = plus.tau;
    out.minus = abel_map(curve, partial_divisor(curve, lifted_divisor(ns, minus.state, curve)), nodes);
    out.plus = abel_map(curve, partial_divisor(curve, lifted_divisor(ns, plus.state, curve)), nodes);
    out.residual = out.lattice.reduce(out.plus.coords - out.minus.coords + out.delta);
    return out;
}

//---------------------------------------------------------------------------//
}  // namespace quadscat
