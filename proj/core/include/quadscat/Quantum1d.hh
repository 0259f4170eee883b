//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Quantum1d.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <vector>

#include "Ode.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
/*!
 * Separated radial problem on the hyperboloid of revolution
 * x^2 + y^2/a^2 - z^2/c^2 = 1 with angular quantum number k.
 *
 * The radial operator is
 * \verbatim
   L_k = (1/2) [ -(1+rho^2)/(c^2+b^2 rho^2) d^2/drho^2 + k^2/(a^2 (1+rho^2)) ]
 * \endverbatim
 * and the Liouville variable tau has d tau/d rho = alpha with
 * alpha^2 = 2(c^2+b^2 rho^2)/(1+rho^2).
 */
struct SymmetricSpec
{
    double a = 1;
    double c = 1;
    int k = 0;

    double b2() const { return a * a + c * c; }
    void validate() const;
};

struct LiouvilleGrid
{
    std::vector<double> rho;
    std::vector<double> tau;
};

struct TransmissionOptions
{
    double tau_max = 0;  //!< Zero selects the boundary adaptively
    double tau_cap = 1e5;
    double v_tol = 1e-6;  //!< Required |V| / E at the boundary
    bool angular_term = true;
    bool curvature_term = true;
    OdeOptions ode{1e-12, 1e-14};
};

enum class Incidence
{
    left,
    right
};

struct TransmissionResult
{
    double R = 0;
    double T = 0;
    double rho_max = 0;
    double tau_max = 0;
    OdeStats stats;
};

struct InceCoefficients
{
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
};

//---------------------------------------------------------------------------//
// Liouville factor alpha(rho)
double liouville_alpha(SymmetricSpec const& spec, double rho);

// tau(rho) = int_0^rho alpha
double liouville_tau(SymmetricSpec const& spec, double rho);

// Uniform rho grid on [-rho_max, rho_max] with tau values
LiouvilleGrid liouville_grid(SymmetricSpec const& spec, double rho_max, int n_points);

// Schrodinger potential at the tau corresponding to rho
double potential_V(SymmetricSpec const& spec, double rho);
double potential_V(SymmetricSpec const& spec,
                   double rho,
                   bool angular_term,
                   bool curvature_term);

// Reflection and transmission probabilities at energy E
TransmissionResult transmission(SymmetricSpec const& spec,
                                double E,
                                TransmissionOptions const& opts = {},
                                Incidence side = Incidence::left);

// Energy in [E_lo, E_hi] where T crosses 1/2 (bisection)
double transmission_half_crossing(SymmetricSpec const& spec,
                                  double E_lo,
                                  double E_hi,
                                  TransmissionOptions const& opts = {},
                                  double tol = 1e-6);

// Coefficients of the trigonometric-hyperbolic form in u (rho = sinh u)
InceCoefficients ince_coefficients(SymmetricSpec const& spec, double E);

// Max |L_k psi - E psi| / max |psi| for psi = alpha^{-1/2} phi
double liouville_roundtrip_residual(SymmetricSpec const& spec,
                                    double E,
                                    double rho_max,
                                    int n_points);

// Relative residual of the u-form equation on a radial solution
double ince_residual(SymmetricSpec const& spec,
                     double E,
                     InceCoefficients const& coeffs,
                     double u_max,
                     int n_points);

//---------------------------------------------------------------------------//
}  // namespace quadscat
