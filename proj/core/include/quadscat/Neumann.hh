//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Neumann.hh
//---------------------------------------------------------------------------//
#pragma once

#include <vector>

#include "Ode.hh"
#include "Quadric.hh"
#include "SpectralCurve.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
/*!
 * Potential of the Neumann problem H = |p|^2/2 + (Bq, q)/2.
 *
 * The sign eps is folded into b: b_k = eps / a_k for the image of a
 * geodesic with Joachimsthal sign eps. Entries keep coordinate order and
 * need not be sorted.
 */
struct NeumannSpec
{
    Vec b;
    int eps = 1;

    static NeumannSpec from_quadric(QuadricSpec const& spec, int eps);
    int n() const { return static_cast<int>(b.size()) - 1; }
    //! b sorted ascending
    std::vector<double> sorted_b() const;
};

struct NeumannState
{
    Vec q;
    Vec p;
};

struct NeumannTrajectory
{
    std::vector<double> tau;
    std::vector<NeumannState> states;
    OdeStats stats;
};

//! Spherical elliptic coordinates u_1 < ... < u_n
struct SphereCoords
{
    std::vector<double> u;
    std::vector<bool> degenerate;
};

//! Point (u, w) with w^2 = R(u) on a given oval
struct DivisorPoint
{
    double u = 0;
    double w = 0;
    int oval = -1;
};

struct Divisor
{
    std::vector<DivisorPoint> points;
};

//---------------------------------------------------------------------------//
// ODE right-hand side on the packed state (q, p)
OdeRhs neumann_rhs(NeumannSpec const& nspec);

// Adaptive integration from t0 to t1 (either direction), one sample per step
NeumannTrajectory integrate_neumann(NeumannSpec const& nspec,
                                    NeumannState const& state0,
                                    double t0,
                                    double t1,
                                    OdeOptions const& opts = {});

// Integration sampled on a monotone time grid starting at times[0]
NeumannTrajectory integrate_neumann_grid(NeumannSpec const& nspec,
                                         NeumannState const& state0,
                                         std::vector<double> const& times,
                                         OdeOptions const& opts = {});

// Restore |q| = 1 and (p, q) = 0
void normalize_neumann_state(NeumannState& state);

double neumann_hamiltonian(NeumannSpec const& nspec, NeumannState const& state);

Vec neumann_integrals(NeumannSpec const& nspec, NeumannState const& state);

double psi_u(NeumannSpec const& nspec,
             NeumannState const& state,
             double u,
             double pole_tol = Tolerances{}.pole);

double psi_u_partial_fractions(NeumannSpec const& nspec, Vec const& F, double u);

// Curve with branch points {roots of the Psi numerator} and {b_k}
SpectralCurve spectral_curve_from_neumann(NeumannSpec const& nspec,
                                          NeumannState const& state);

SphereCoords sphere_elliptic_coords(NeumannSpec const& nspec, Vec const& q);

// q_i^2 = prod_j (b_i - u_j) / prod_{k != i} (b_i - b_k)
Vec reconstruct_q_squared(NeumannSpec const& nspec, std::vector<double> const& u);

// du_i/dtau = sign_i sqrt R(u_i) / prod_{j != i} (u_i - u_j)
std::vector<double> dubrovin_rhs(SpectralCurve const& curve,
                                 std::vector<double> const& u,
                                 std::vector<int> const& signs,
                                 double collision_tol = 1e-10);

// Sheet-resolved divisor; w_j = -2 (R_u p, q) prod_k (u_j - b_k)
Divisor lifted_divisor(NeumannSpec const& nspec,
                       NeumannState const& state,
                       SpectralCurve const& curve);
Divisor lifted_divisor(NeumannSpec const& nspec, NeumannState const& state);

// max_z | |Bx|^4 Psi_{eps/z}(p, q) - Phi_z(x, dx/dtau) | / max(1, |Phi_z|)
double verify_knoerrer_identity(QuadricSpec const& spec,
                                PhaseState const& state,
                                std::vector<double> const& z_samples,
                                double iso_tol = Tolerances{}.isotropic);

//---------------------------------------------------------------------------//
}  // namespace quadscat
