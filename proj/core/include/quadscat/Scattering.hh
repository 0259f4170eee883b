//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Scattering.hh
//---------------------------------------------------------------------------//
#pragma once

#include <vector>

#include "Neumann.hh"
#include "SpectralCurve.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
/*!
 * Lattice generated by the columns of a square matrix.
 *
 * Column i holds the periods (oint_{alpha_i} omega_j)_j of the cycle oval
 * alpha_i; a full turn of a divisor point on alpha_i shifts the Abel map by
 * exactly that column.
 */
struct PeriodLattice
{
    Mat generators;

    // v minus the nearest lattice vector (coefficient rounding)
    Vec reduce(Vec const& v) const;
};

struct AbelPoint
{
    Vec coords;
    PeriodLattice lattice;
};

struct RotationNumber
{
    long N = 0;
    double I1 = 0;  //!< loop integral of du/sqrt R over the distinguished oval
    double I2 = 0;  //!< loop integral over the other oval
    double ratio = 0;  //!< I1 / (2 I2)
};

//! Measured displacement of the Abel map over one scattering event
struct AbelScattering
{
    Vec delta;
    PeriodLattice lattice;
    AbelPoint minus;
    AbelPoint plus;
    Vec residual;  //!< A(D+) - A(D-) + delta reduced modulo the lattice
    double tau_minus = 0;
    double tau_plus = 0;
};

//---------------------------------------------------------------------------//
// Oval angle in [0, 2pi) of (u, w) with u = mid - radius cos(theta)
double oval_angle(SpectralCurve const& curve, int oval, double u, double w);

// int u^{j-1} / sqrt G dtheta along the oval angle from theta0 to theta1
double oval_integral(SpectralCurve const& curve,
                     int oval,
                     int j,
                     double theta0,
                     double theta1,
                     int nodes = 64);

// Full loop of omega_j = u^{j-1} du / sqrt R, twice the branch-to-branch value
double oval_loop_integral(SpectralCurve const& curve, int oval, int j, int nodes = 64);

// sheet * int_from^to u^{j-1} / sqrt R du inside one oval
double abelian_integral(SpectralCurve const& curve,
                        int j,
                        double from,
                        double to,
                        int sheet,
                        int nodes = 64);

PeriodLattice period_lattice(SpectralCurve const& curve, int nodes = 64);

// Drop the point on the distinguished oval from a full divisor
Divisor partial_divisor(SpectralCurve const& curve, Divisor const& full);

AbelPoint abel_map(SpectralCurve const& curve, Divisor const& D, int nodes = 64);

// Oriented loop integrals of omega_1..omega_{n-1} over the distinguished oval
Vec scattering_shift(SpectralCurve const& curve, int nodes = 64);

// Full rotations for n = 2 reflected geodesics
RotationNumber
rotation_number(SpectralCurve const& curve, QuadricKind kind, int nodes = 64);

// Abel map before and after the divisor passes u = 0, from Neumann flow
/*!
 * Abel coordinates xi_k = sum_i int^{P_i} u^{n-k} du / sqrt R of a Neumann
 * trajectory, k = 1..n, along a sampled time grid.
 *
 * Oval angles are unwrapped between samples, so consecutive grid points
 * must be closer than half a turn of any divisor point.
 */
struct LinearizationTrace
{
    std::vector<double> tau;
    std::vector<Vec> xi;
    std::vector<Divisor> divisors;
};

LinearizationTrace neumann_linearization(NeumannSpec const& nspec,
                                         NeumannState const& state0,
                                         std::vector<double> const& times,
                                         int nodes = 64);

AbelScattering measure_abel_scattering(QuadricSpec const& spec,
                                       PhaseState const& state,
                                       Tolerances const& tol = {},
                                       int nodes = 64);

//---------------------------------------------------------------------------//
}  // namespace quadscat
