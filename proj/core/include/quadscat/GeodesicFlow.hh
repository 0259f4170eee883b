//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/GeodesicFlow.hh
//---------------------------------------------------------------------------//
#pragma once

#include <vector>

#include "Ode.hh"
#include "Quadric.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
struct GeodesicOptions
{
    OdeOptions ode{.rtol = 1e-11, .atol = 1e-12, .max_step = 1.0};
    //! Step bound as a fraction of the distance to the x_0 axis
    double angle_step = 0.25;
    //! Escape radius; zero selects 1e3 * max sqrt|a_k|
    double escape_radius = 0;
    //! Stop each direction once |x| exceeds the escape radius moving out
    bool stop_on_escape = false;
    //! Project onto the quadric after every accepted step
    bool project = true;
    //! Renormalize |y| = 1 after projection
    bool unit_speed = true;
    //! Relative to max(1, sum |b_k| x_k^2)
    double constraint_tol = 1e-9;
};

struct TrajectoryStats
{
    std::size_t steps = 0;
    std::size_t rejections = 0;
    double max_constraint_drift = 0;
    double max_tangency_drift = 0;
};

//---------------------------------------------------------------------------//
/*!
 * Sampled geodesic: every accepted integrator step in increasing s.
 */
struct Trajectory
{
    std::vector<double> s;
    std::vector<PhaseState> states;
    //! Knoerrer time at each sample, empty until reparametrized
    std::vector<double> tau;
    TrajectoryStats stats;
    bool escaped_minus = false;
    bool escaped_plus = false;
    double escape_radius = 0;

    std::size_t size() const { return s.size(); }
};

//! Winding diagnostics about the x_0 axis
struct WindingReport
{
    long windings = 0;
    long crossings = 0;
    //! Near-contacts with the neck plane without a sign change
    long grazes = 0;
    double total_angle = 0;
    //! Trajectory did not escape at both ends (e.g. asymptotic to the neck)
    bool nonterminal = false;
};

struct AsymptoticDirection
{
    Vec y;
    double cone_residual = 0;  //!< |(By, y)| of the unit direction
};

//! Image of a geodesic state under the Gauss map
struct NeumannImage
{
    Vec q;
    Vec p;
};

//! Summary of one scattering geodesic
struct ScatterRecord
{
    CaseLabel label = CaseLabel::critical;
    Vec y_minus;
    Vec y_plus;
    WindingReport winding;
};

//---------------------------------------------------------------------------//
// Default escape radius for this quadric
double default_escape_radius(QuadricSpec const& spec);

// x'' = -lambda B x with projection; span must contain zero
Trajectory integrate_geodesic(QuadricSpec const& spec,
                              PhaseState const& state0,
                              double s_min,
                              double s_max,
                              GeodesicOptions const& opts = {});

// Fill tau(s) with tau(0) = 0 using alpha = sqrt|J| / |Bx|^2
void knoerrer_reparametrize(QuadricSpec const& spec,
                            Trajectory& traj,
                            double iso_tol = Tolerances{}.isotropic);

// Time-change factor alpha = dtau/ds
double knoerrer_alpha(QuadricSpec const& spec, Vec const& x, double J);

// q = Bx/|Bx| and p = dq/dtau
NeumannImage gauss_map(QuadricSpec const& spec,
                       PhaseState const& state,
                       double J,
                       double iso_tol = Tolerances{}.isotropic);

// Windings and neck crossings for n = 2
WindingReport
winding_and_crossings(Trajectory const& traj, double graze_tol = 1e-9);

// Unit velocity at the escaped end
AsymptoticDirection asymptotic_direction(QuadricSpec const& spec,
                                         Trajectory const& traj,
                                         End end);

// Integrate both ways to escape and summarize
ScatterRecord scatter_geodesic(QuadricSpec const& spec,
                               PhaseState const& state0,
                               double s_limit,
                               GeodesicOptions opts = {},
                               Tolerances const& tol = {});

//---------------------------------------------------------------------------//
}  // namespace quadscat
