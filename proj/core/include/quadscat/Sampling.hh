//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Sampling.hh
//---------------------------------------------------------------------------//
#pragma once

#include <random>

#include "Quadric.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
using Rng = std::mt19937_64;

// Random point on the quadric; `extent` bounds |x_0| (hyperboloids)
Vec random_point(QuadricSpec const& spec, Rng& rng, double extent = 2.0);

// Random unit tangent vector at x
Vec random_tangent(QuadricSpec const& spec, Vec const& x, Rng& rng);

// Random arc-length phase state
PhaseState
random_state(QuadricSpec const& spec, Rng& rng, double extent = 2.0);

// Point on the sphere from Gaussian sampling
Vec random_unit(int dim, Rng& rng);

//---------------------------------------------------------------------------//
}  // namespace quadscat
