//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Cone.cc
//---------------------------------------------------------------------------//
#include "quadscat/Cone.hh"

#include <cmath>
#include <numbers>

#include "quadscat/Error.hh"
#include "quadscat/Quadrature.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
/*!
 * The t = sin(theta) substitution removes the endpoint singularity, leaving
 * a smooth integrand on [0, pi/2].
 */
double cone_angle(QuadricSpec const& spec, int nodes)
{
    require(spec.kind() == QuadricKind::cone, ErrorKind::kind, "cone spec required");
    require(spec.n() == 2, ErrorKind::dimension, "cone angle needs n = 2");
    auto const& a = spec.axes();
    double const k1 = (a[2] - a[1]) / a[2];
    double const k2 = (a[2] - a[0]) / a[2];
    GaussLegendre gl(nodes);
    auto f = [&](double t) {
        double s2 = std::sin(t) * std::sin(t);
        return std::sqrt((1 - k1 * s2) / (1 - (k1 / k2) * s2));
    };
    return 4 / std::sqrt(k2) * gl.composite(f, 0, std::numbers::pi / 2, 2);
}

double cone_scatter(double alpha, double incoming_angle)
{
    require(alpha > 0, ErrorKind::invalid_argument, "cone angle must be positive");
    double out = std::fmod(incoming_angle + std::numbers::pi, alpha);
    if (out < 0)
    {
        out += alpha;
    }
    if (out >= alpha)
    {
        out -= alpha;
    }
    return out;
}

//---------------------------------------------------------------------------//
}  // namespace quadscat
