//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Ode.cc
//---------------------------------------------------------------------------//
#include "quadscat/Ode.hh"

#include <algorithm>
#include <cmath>
#include <boost/numeric/odeint.hpp>

#include "quadscat/Error.hh"

namespace odeint = boost::numeric::odeint;

namespace quadscat
{
namespace
{
using Stepper = odeint::runge_kutta_dopri5<OdeState>;

//---------------------------------------------------------------------------//
/*!
 * Forward-time driver on sigma in [0, len] with t = t0 + dir * sigma.
 */
OdeStats drive(OdeRhs const& f,
               OdeState& y,
               double t0,
               double len,
               double dir,
               OdeOptions const& opts,
               OdeHooks const& hooks)
{
    auto sys = [&](OdeState const& x, OdeState& dxdt, double sigma) {
        f(x, dxdt, t0 + dir * sigma);
        if (dir < 0)
        {
            for (auto& v : dxdt)
            {
                v = -v;
            }
        }
    };
    auto ctrl = odeint::make_controlled<Stepper>(opts.atol, opts.rtol);

    OdeStats stats;
    double sigma = 0;
    double h = std::min(opts.initial_step, len);
    while (sigma < len)
    {
        if (stats.steps + stats.rejections >= opts.max_steps)
        {
            throw Error(ErrorKind::step_failure, "maximum step count exceeded");
        }
        double hmax = opts.max_step;
        if (hooks.step_limit)
        {
            hmax = std::min(hmax, hooks.step_limit(t0 + dir * sigma, y));
        }
        h = std::min({h, hmax, len - sigma});
        bool const last = (h == len - sigma);
        double const sigma_before = sigma;
        auto result = ctrl.try_step(sys, y, sigma, h);
        if (result == odeint::fail)
        {
            ++stats.rejections;
            if (!(h >= opts.min_step) || !std::isfinite(h))
            {
                throw Error(ErrorKind::step_failure, "step size underflow");
            }
            continue;
        }
        ++stats.steps;
        if (last)
        {
            // Avoid roundoff leaving a sliver at the end
            sigma = len;
        }
        for (double v : y)
        {
            if (!std::isfinite(v))
            {
                throw Error(ErrorKind::step_failure, "non-finite state");
            }
        }
        if (hooks.after_step)
        {
            bool cont = hooks.after_step(t0 + dir * sigma, y);
            // Cached FSAL derivative is stale after projection
            ctrl.reset();
            if (!cont)
            {
                break;
            }
        }
        if (sigma <= sigma_before)
        {
            throw Error(ErrorKind::step_failure, "no progress");
        }
    }
    return stats;
}
}  // namespace

//---------------------------------------------------------------------------//
/*!
 * Integrate with Dormand-Prince 5(4) error control.
 *
 * Backward integration (t1 < t0) runs the reflected system so the
 * controller always sees positive steps.
 */
OdeStats integrate_adaptive(OdeRhs const& f,
                            OdeState& y,
                            double t0,
                            double t1,
                            OdeOptions const& opts,
                            OdeHooks const& hooks)
{
    if (t1 == t0)
    {
        return {};
    }
    double const dir = t1 > t0 ? 1.0 : -1.0;
    return drive(f, y, t0, std::fabs(t1 - t0), dir, opts, hooks);
}

//---------------------------------------------------------------------------//
/*!
 * Integrate through a monotone grid of times, reporting each grid state.
 *
 * The integrator restarts at each grid point, so outputs are exact
 * integrator states rather than interpolants.
 */
OdeStats integrate_grid(OdeRhs const& f,
                        OdeState& y,
                        std::vector<double> const& times,
                        OdeOptions const& opts,
                        std::function<void(std::size_t, OdeState const&)> const&
                            observe)
{
    OdeStats total;
    if (times.empty())
    {
        return total;
    }
    observe(0, y);
    OdeOptions local = opts;
    for (std::size_t i = 1; i < times.size(); ++i)
    {
        local.initial_step = std::min(opts.initial_step,
                                      std::fabs(times[i] - times[i - 1]));
        auto s = integrate_adaptive(f, y, times[i - 1], times[i], local);
        total.steps += s.steps;
        total.rejections += s.rejections;
        observe(i, y);
    }
    return total;
}

//---------------------------------------------------------------------------//
void dopri5_step(OdeRhs const& f, OdeState& y, double t, double h)
{
    Stepper stepper;
    auto sys = [&](OdeState const& x, OdeState& dxdt, double tt) {
        f(x, dxdt, tt);
    };
    stepper.do_step(sys, y, t, h);
}

//---------------------------------------------------------------------------//
}  // namespace quadscat
