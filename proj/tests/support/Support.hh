//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file support/Support.hh
//! \brief Shared oracles and generators for tests
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <vector>

#include "quadscat/Quadric.hh"
#include "quadscat/Sampling.hh"

namespace quadscat
{
namespace test
{
//---------------------------------------------------------------------------//
struct LineFit
{
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
};

// Least-squares line with coefficient of determination
LineFit fit_line(std::vector<double> const& x, std::vector<double> const& y);

std::vector<double> linspace(double a, double b, int n);

// Wrap an angle to (-pi, pi]
double wrap_pi(double a);

// Euclidean-orthonormal basis of the tangent space at x (columns)
Mat tangent_basis(QuadricSpec const& spec, Vec const& x);

// Unit tangent at x with F_0 = 0, from the roots of the quadratic form
std::optional<PhaseState> critical_state(QuadricSpec const& spec, Vec const& x, int root = 0);

// Random state with |F_0| above a floor
PhaseState random_state_away_from_critical(QuadricSpec const& spec,
                                           Rng& rng,
                                           double f0_floor,
                                           double extent = 2.0);

// Central difference on a nonuniform grid (second order)
Vec nonuniform_derivative(std::vector<double> const& t, std::vector<Vec> const& f, std::size_t i);

// Neumann acceleration -Bq + (Bq,q) q - |p|^2 q, with b already signed
Vec neumann_acceleration(Vec const& b, Vec const& q, Vec const& p);

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace quadscat

namespace quadscat
{
namespace test
{
//---------------------------------------------------------------------------//
/*!
 * Extended-precision critical orbit on an n = 2 one-sheeted hyperboloid.
 *
 * The point is placed on the quadric and the F_0 = 0 direction is solved in
 * long double, then the geodesic equation is integrated with a Fehlberg 7(8)
 * stepper. Samples (s, |x_0|) run until |x_0| < cutoff or s > s_max.
 */
struct DecaySample
{
    double s;
    double abs_x0;
    double x1;
    double x2;
};

struct CriticalOrbit
{
    PhaseState initial;  //!< Starting state rounded to double
    std::vector<DecaySample> samples;
};

CriticalOrbit critical_decay_long_double(QuadricSpec const& spec,
                                         double x0,
                                         double x1,
                                         double s_max,
                                         double cutoff);

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace quadscat
