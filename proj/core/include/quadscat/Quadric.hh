//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Quadric.hh
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <vector>

#include "Types.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
//! Quadric (A^{-1} x, x) = rhs with A = diag(a_0..a_n)
enum class QuadricKind
{
    one_sheeted,  //!< a_0 < 0 < a_1 < ... < a_n, rhs 1
    two_sheeted,  //!< a_0 < 0 < a_1 < ... < a_n, rhs -1
    ellipsoid,  //!< 0 < a_0 < ... < a_n, rhs 1
    cone,  //!< a_0 < 0 < a_1 <= ... <= a_n, rhs 0
};

char const* to_cstring(QuadricKind kind);

//---------------------------------------------------------------------------//
/*!
 * Axes and kind of a central quadric in R^{n+1}.
 *
 * Axes must be strictly increasing, except that equal positive axes are
 * accepted to represent surfaces of revolution and round cones. Operations
 * that divide by a_k - a_j reject such specs.
 */
class QuadricSpec
{
  public:
    QuadricSpec(std::vector<double> axes, QuadricKind kind);

    //! Surface dimension n (ambient is n+1)
    int n() const { return static_cast<int>(axes_.size()) - 1; }
    Vec const& axes() const { return axes_; }
    //! Diagonal of B = A^{-1}
    Vec const& b() const { return b_; }
    QuadricKind kind() const { return kind_; }
    //! Right-hand side of (Bx, x) = rhs
    double rhs() const;
    bool has_repeated_axes() const { return repeated_; }

  private:
    Vec axes_;
    Vec b_;
    QuadricKind kind_;
    bool repeated_ = false;
};

//---------------------------------------------------------------------------//
//! Point on the quadric with tangent velocity
struct PhaseState
{
    Vec x;
    Vec y;
};

//---------------------------------------------------------------------------//
//! Conserved quantities of the geodesic flow
struct IntegralSet
{
    Vec F;  //!< F_0..F_n
    double J = 0;  //!< Joachimsthal integral |Bx|^2 (By, y)
    std::vector<double> c;  //!< confocal parameters, ascending
    int eps = 0;  //!< sign of J; 0 when isotropic
    bool isotropic = false;
};

//---------------------------------------------------------------------------//
enum class CaseLabel
{
    transmission,
    reflection,
    critical,
    isotropic,
    case_i,
    case_ii,
    case_iii,
    case_iv,
};

char const* to_cstring(CaseLabel label);

//! Classification of a one-sheeted geodesic
struct Classification
{
    CaseLabel label = CaseLabel::critical;
    //! Sign-pattern refinement for n = 2, if any pattern matched
    std::optional<CaseLabel> refined;
    //! Confocal parameter lies in the interval its case requires
    bool c_interval_ok = true;
    //! Confocal parameter within tolerance of an interval endpoint
    bool c_on_boundary = false;
    IntegralSet integrals;
};

//! Jacobi elliptic coordinates z_1 <= ... <= z_n
struct EllipticCoords
{
    std::vector<double> z;
    //! Root sits on a pole a_k (point on a symmetry plane)
    std::vector<bool> degenerate;
};

//---------------------------------------------------------------------------//
// FREE FUNCTIONS
//---------------------------------------------------------------------------//

// (Bx, x) - rhs
double eval_constraint(QuadricSpec const& spec, Vec const& x);

// (Bx, y)
double tangency(QuadricSpec const& spec, PhaseState const& state);

// Throw unless the state is on the quadric and tangent to it
void check_state(QuadricSpec const& spec,
                 PhaseState const& state,
                 double tol = Tolerances{}.constraint);

// Generating function Phi_z from resolvents
double phi_z(QuadricSpec const& spec,
             Vec const& x,
             Vec const& y,
             double z,
             double pole_tol = Tolerances{}.pole);

// Sum_k F_k / (z - a_k)
double phi_z_partial_fractions(QuadricSpec const& spec, Vec const& F, double z);

// (sum F) z prod(z - c_i) / prod(z - a_k)
double phi_z_rational(QuadricSpec const& spec,
                      IntegralSet const& iset,
                      double z);

// Single integral F_k(x, y)
double uhlenbeck_devaney(QuadricSpec const& spec,
                         Vec const& x,
                         Vec const& y,
                         int k);

// |Bx|^2 (By, y)
double joachimsthal(QuadricSpec const& spec, Vec const& x, Vec const& y);

// All integrals, with confocal parameters from the numerator polynomial
IntegralSet integrals(QuadricSpec const& spec,
                      PhaseState const& state,
                      Tolerances const& tol = {});

// Confocal parameters from integrals: nonzero roots of the numerator
std::vector<double> confocal_parameters(QuadricSpec const& spec, Vec const& F);

// Nonzero roots of ((zI - A)^{-1} x, x) + rhs-sign
EllipticCoords
jacobi_elliptic_coords(QuadricSpec const& spec, Vec const& x);

// Crossing prediction and case refinement (one-sheeted only)
Classification classify_state(QuadricSpec const& spec,
                              PhaseState const& state,
                              Tolerances const& tol = {});

//---------------------------------------------------------------------------//
// POLYNOMIAL HELPERS
//---------------------------------------------------------------------------//

// Coefficients (ascending) of prod_k (z - r_k)
std::vector<double> poly_from_roots(std::vector<double> const& roots);

// Horner evaluation of ascending coefficients
double poly_eval(std::vector<double> const& coeffs, double z);

// Real roots of a polynomial known to have only real roots, ascending
std::vector<double> real_poly_roots(std::vector<double> const& coeffs);

//---------------------------------------------------------------------------//
}  // namespace quadscat
