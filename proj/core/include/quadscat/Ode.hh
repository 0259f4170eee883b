//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Ode.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace quadscat
{
//---------------------------------------------------------------------------//
using OdeState = std::vector<double>;
//! dy/dt = f(y, t)
using OdeRhs = std::function<void(OdeState const&, OdeState&, double)>;

//---------------------------------------------------------------------------//
//! Adaptive integrator controls
struct OdeOptions
{
    double rtol = 1e-11;
    double atol = 1e-12;
    double initial_step = 1e-3;
    double max_step = std::numeric_limits<double>::infinity();
    double min_step = 1e-14;
    std::size_t max_steps = 50'000'000;
};

//! Integrator statistics
struct OdeStats
{
    std::size_t steps = 0;
    std::size_t rejections = 0;
};

//---------------------------------------------------------------------------//
/*!
 * Hooks called by the adaptive driver.
 *
 * \c step_limit bounds the next step from the current state (for example to
 * keep an angle increment small). \c after_step receives every accepted
 * state and may modify it in place (manifold projection); returning false
 * stops the integration at that point.
 */
struct OdeHooks
{
    std::function<double(double, OdeState const&)> step_limit;
    std::function<bool(double, OdeState&)> after_step;
};

// Integrate from t0 to t1 (either direction) with dopri5 error control
OdeStats integrate_adaptive(OdeRhs const& f,
                            OdeState& y,
                            double t0,
                            double t1,
                            OdeOptions const& opts,
                            OdeHooks const& hooks = {});

// Integrate with a fixed grid of output times, observing each grid point
OdeStats integrate_grid(OdeRhs const& f,
                        OdeState& y,
                        std::vector<double> const& times,
                        OdeOptions const& opts,
                        std::function<void(std::size_t, OdeState const&)> const&
                            observe);

// One explicit dopri5 step of size h (used for event refinement)
void dopri5_step(OdeRhs const& f, OdeState& y, double t, double h);

//---------------------------------------------------------------------------//
}  // namespace quadscat
