//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Symmetric.cc
//---------------------------------------------------------------------------//
#include "quadscat/Symmetric.hh"

#include <cmath>
#include <numbers>

#include "quadscat/Error.hh"
#include "quadscat/Quadrature.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
QuadricSpec symmetric_quadric(double a, double c)
{
    require(a > 0 && c > 0, ErrorKind::invalid_argument, "a and c must be positive");
    return QuadricSpec({-c * c, a * a, a * a}, QuadricKind::one_sheeted);
}

SymmetricClassification
symmetric_classify(double a, double c, double H, double I, double tol)
{
    require(a > 0 && c > 0 && H > 0,
            ErrorKind::invalid_argument,
            "need a, c, H > 0");
    double const a2 = a * a, c2 = c * c, b2 = a2 + c2;
    SymmetricClassification out;
    out.C = I / std::sqrt(2 * H);
    out.J = (b2 * I * I / a2 - 2 * a2 * H) / (a2 * a2 * c2);
    out.F0 = (2 * c2 * H / (a2 * b2)) * (a2 - out.C * out.C);
    double gap = out.C * out.C - a2;
    if (gap > tol * a2)
    {
        out.label = CaseLabel::reflection;
    }
    else if (gap < -tol * a2)
    {
        out.label = CaseLabel::transmission;
    }
    else
    {
        out.label = CaseLabel::critical;
    }
    return out;
}

//---------------------------------------------------------------------------//
/*!
 * Quadrature in u = arctan(rho).
 *
 * Transmission integrates over (-pi/2, pi/2). Reflection starts at the
 * turning point tan u* = sqrt(I^2 - a^2)/a where the integrand has an
 * inverse square root; u = u* + L v^2 cancels it. Both integrands are
 * multiplied through by cos^2 u so nothing blows up at u = pi/2.
 */
double symmetric_delta_phi(double a, double c, double I, DeltaPhiMode mode, double tol, int nodes)
{
    require(a > 0 && c > 0, ErrorKind::invalid_argument, "a and c must be positive");
    double const a2 = a * a, c2 = c * c, b2 = a2 + c2;
    double const gap = I * I - a2;
    if (std::fabs(gap) < tol * a2)
    {
        throw Error(ErrorKind::critical_divergence,
                    "azimuth change diverges at the critical Clairaut value");
    }
    require((mode == DeltaPhiMode::reflection) == (gap > 0),
            ErrorKind::invalid_argument,
            "mode does not match the Clairaut integral");
    GaussLegendre gl(nodes);
    double const half_pi = std::numbers::pi / 2;
    if (mode == DeltaPhiMode::transmission)
    {
        auto f = [&](double u) {
            double cu = std::cos(u), su = std::sin(u);
            return std::sqrt((c2 * cu * cu + b2 * su * su)
                             / ((a2 - I * I) * cu * cu + a2 * su * su));
        };
        return (I / a) * gl.composite(f, -half_pi, half_pi, 4);
    }
    double const ustar = std::atan(std::sqrt(gap) / a);
    double const L = half_pi - ustar;
    double const cs = std::cos(ustar);
    auto f = [&](double v) {
        if (v == 0)
        {
            return 0.0;
        }
        double u = ustar + L * v * v;
        double cu = std::cos(u), su = std::sin(u);
        double num = (c2 * cu * cu + b2 * su * su) * cs * cs;
        double den = a2 * std::sin(u - ustar) * std::sin(u + ustar);
        return 2 * L * v * std::sqrt(num / den);
    };
    return (2 * I / a) * gl.composite(f, 0, 1, 4);
}

//---------------------------------------------------------------------------//
}  // namespace quadscat
