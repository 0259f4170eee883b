//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file support/Support.cc
//---------------------------------------------------------------------------//
#include "Support.hh"

#include <cmath>
#include <numbers>

#include "quadscat/Error.hh"

namespace quadscat
{
namespace test
{
//---------------------------------------------------------------------------//
LineFit fit_line(std::vector<double> const& x, std::vector<double> const& y)
{
    double const n = x.size();
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        sx += x[i];
        sy += y[i];
    }
    double const mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r2 = syy > 0 ? sxy * sxy / (sxx * syy) : 1;
    return fit;
}

std::vector<double> linspace(double a, double b, int n)
{
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i)
    {
        out[i] = a + (b - a) * i / (n - 1);
    }
    out.back() = b;
    return out;
}

double wrap_pi(double a)
{
    constexpr double pi = std::numbers::pi;
    return a - 2 * pi * std::round(a / (2 * pi));
}

Mat tangent_basis(QuadricSpec const& spec, Vec const& x)
{
    Vec n = spec.b().cwiseProduct(x);
    Eigen::HouseholderQR<Mat> qr(n);
    Mat Q = qr.householderQ();
    return Q.rightCols(n.size() - 1);
}

std::optional<PhaseState> critical_state(QuadricSpec const& spec, Vec const& x, int root)
{
    Mat T = tangent_basis(spec, x);
    require(T.cols() == 2, ErrorKind::dimension, "critical_state needs n = 2");
    auto f0 = [&](Vec const& y) { return uhlenbeck_devaney(spec, x, y, 0); };
    Vec t1 = T.col(0), t2 = T.col(1);
    double A = f0(t1), C = f0(t2);
    double B = 0.5 * (f0(t1 + t2) - A - C);
    // A cos^2 + 2B cos sin + C sin^2 = 0, solved for cot
    double disc = B * B - A * C;
    if (disc <= 0 || A == 0)
    {
        return std::nullopt;
    }
    double sq = std::sqrt(disc);
    double tan_theta = (-B + (root ? sq : -sq)) / C;
    Vec y = t1 + tan_theta * t2;
    y.normalize();
    return PhaseState{x, y};
}

PhaseState random_state_away_from_critical(QuadricSpec const& spec,
                                           Rng& rng,
                                           double f0_floor,
                                           double extent)
{
    while (true)
    {
        auto st = random_state(spec, rng, extent);
        if (std::fabs(uhlenbeck_devaney(spec, st.x, st.y, 0)) > f0_floor)
        {
            return st;
        }
    }
}

Vec nonuniform_derivative(std::vector<double> const& t, std::vector<Vec> const& f, std::size_t i)
{
    double h0 = t[i] - t[i - 1], h1 = t[i + 1] - t[i];
    return (-h1 / (h0 * (h0 + h1))) * f[i - 1] + ((h1 - h0) / (h0 * h1)) * f[i]
           + (h0 / (h1 * (h0 + h1))) * f[i + 1];
}

Vec neumann_acceleration(Vec const& b, Vec const& q, Vec const& p)
{
    Vec bq = b.cwiseProduct(q);
    return -bq + (bq.dot(q) - p.squaredNorm()) * q;
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace quadscat

#include <array>
#include <boost/numeric/odeint.hpp>

namespace quadscat
{
namespace test
{
//---------------------------------------------------------------------------//
CriticalOrbit critical_decay_long_double(QuadricSpec const& spec,
                                         double x0_in,
                                         double x1_in,
                                         double s_max,
                                         double cutoff)
{
    using real = long double;
    using State = std::array<real, 6>;
    require(spec.n() == 2 && spec.kind() == QuadricKind::one_sheeted,
            ErrorKind::kind,
            "needs an n = 2 one-sheeted hyperboloid");
    real a[3], b[3];
    for (int k = 0; k < 3; ++k)
    {
        a[k] = spec.axes()[k];
        b[k] = 1 / a[k];
    }
    // Point on the quadric
    real x[3] = {x0_in, x1_in, 0};
    real rest = 1 - b[0] * x[0] * x[0] - b[1] * x[1] * x[1];
    require(rest >= 0, ErrorKind::invalid_argument, "no point with these x0, x1");
    x[2] = std::sqrt(rest / b[2]);

    // Orthonormal tangent basis: t1 = e0 x n normalized, t2 = n x t1
    real n[3] = {b[0] * x[0], b[1] * x[1], b[2] * x[2]};
    real nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    for (auto& c : n)
    {
        c /= nn;
    }
    real t1[3] = {0, -n[2], n[1]};
    real t1n = std::sqrt(t1[1] * t1[1] + t1[2] * t1[2]);
    t1[1] /= t1n;
    t1[2] /= t1n;
    real t2[3] = {n[1] * t1[2] - n[2] * t1[1], n[2] * t1[0] - n[0] * t1[2],
                  n[0] * t1[1] - n[1] * t1[0]};

    auto f0 = [&](real const* y) {
        real f = y[0] * y[0];
        for (int j = 1; j < 3; ++j)
        {
            real m = x[0] * y[j] - x[j] * y[0];
            f += m * m / (a[0] - a[j]);
        }
        return f;
    };
    real A = f0(t1), C = f0(t2);
    real sum[3] = {t1[0] + t2[0], t1[1] + t2[1], t1[2] + t2[2]};
    real B = (f0(sum) - A - C) / 2;
    real disc = B * B - A * C;
    require(disc > 0, ErrorKind::invalid_argument, "no critical direction here");
    real tn = (-B - std::sqrt(disc)) / C;
    real y[3];
    real yn = 0;
    for (int k = 0; k < 3; ++k)
    {
        y[k] = t1[k] + tn * t2[k];
        yn += y[k] * y[k];
    }
    yn = std::sqrt(yn);
    for (auto& c : y)
    {
        c /= yn;
    }
    // Head towards the neck
    if (x[0] * y[0] > 0)
    {
        for (auto& c : y)
        {
            c = -c;
        }
    }

    auto rhs = [&](State const& s, State& ds, real) {
        real bxx = 0, byy = 0;
        for (int k = 0; k < 3; ++k)
        {
            bxx += b[k] * b[k] * s[k] * s[k];
            byy += b[k] * s[3 + k] * s[3 + k];
        }
        real lambda = byy / bxx;
        for (int k = 0; k < 3; ++k)
        {
            ds[k] = s[3 + k];
            ds[3 + k] = -lambda * b[k] * s[k];
        }
    };
    State s{x[0], x[1], x[2], y[0], y[1], y[2]};
    namespace odeint = boost::numeric::odeint;
    auto stepper = odeint::make_controlled(
        real(1e-18), real(1e-18), odeint::runge_kutta_fehlberg78<State, real>());
    CriticalOrbit orbit;
    orbit.initial.x = Vec{{double(x[0]), double(x[1]), double(x[2])}};
    orbit.initial.y = Vec{{double(y[0]), double(y[1]), double(y[2])}};
    auto& out = orbit.samples;
    real t = 0, dt = 1e-3L;
    real const t_end = s_max;
    real const h_max = 0.05L;
    out.push_back({0, double(std::fabs(s[0])), double(s[1]), double(s[2])});
    while (t < t_end && std::fabs(s[0]) >= cutoff)
    {
        dt = std::min({dt, h_max, t_end - t});
        if (stepper.try_step(rhs, s, t, dt) == odeint::success)
        {
            out.push_back({double(t), double(std::fabs(s[0])), double(s[1]), double(s[2])});
        }
    }
    return orbit;
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace quadscat
