//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Cone.hh
//---------------------------------------------------------------------------//
#pragma once

#include "Quadric.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
/*!
 * Total intrinsic angle of the cone x_0^2/a_0 + x_1^2/a_1 + x_2^2/a_2 = 0.
 *
 * With k1 = (a2 - a1)/a2 and k2 = (a2 - a0)/a2,
 * \verbatim
   alpha = 4/sqrt(k2) int_0^{pi/2} sqrt((1 - k1 sin^2 t) / (1 - k1/k2 sin^2 t)) dt
 * \endverbatim
 */
double cone_angle(QuadricSpec const& spec, int nodes = 64);

// Outgoing direction angle (incoming + pi) mod alpha, in [0, alpha)
double cone_scatter(double alpha, double incoming_angle);

//---------------------------------------------------------------------------//
}  // namespace quadscat
