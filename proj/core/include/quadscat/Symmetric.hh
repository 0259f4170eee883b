//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Symmetric.hh
//---------------------------------------------------------------------------//
#pragma once

#include "Quadric.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
/*!
 * Hyperboloid of revolution (x_1^2 + x_2^2)/a^2 - x_0^2/c^2 = 1.
 *
 * Geodesics carry the Clairaut integral I = x_1 y_2 - x_2 y_1 and energy
 * H = |y|^2/2; b^2 = a^2 + c^2.
 */
struct SymmetricClassification
{
    CaseLabel label = CaseLabel::critical;
    double J = 0;
    double F0 = 0;
    double C = 0;  //!< I / sqrt(2H)
};

enum class DeltaPhiMode
{
    transmission,
    reflection
};

SymmetricClassification symmetric_classify(double a,
                                           double c,
                                           double H,
                                           double I,
                                           double tol = Tolerances{}.classification);

// Total change of the azimuth along a unit-speed geodesic
double symmetric_delta_phi(double a,
                           double c,
                           double I,
                           DeltaPhiMode mode,
                           double tol = 1e-10,
                           int nodes = 64);

// Embedding as a one-sheeted spec with axes (-c^2, a^2, a^2)
QuadricSpec symmetric_quadric(double a, double c);

//---------------------------------------------------------------------------//
}  // namespace quadscat
