//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Sampling.cc
//---------------------------------------------------------------------------//
#include "quadscat/Sampling.hh"

#include <cmath>

#include "quadscat/Error.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
Vec random_unit(int dim, Rng& rng)
{
    std::normal_distribution<double> normal;
    Vec v(dim);
    do
    {
        for (int i = 0; i < dim; ++i)
        {
            v[i] = normal(rng);
        }
    } while (v.norm() < 1e-6);
    return v / v.norm();
}

//---------------------------------------------------------------------------//
/*!
 * Sample the ellipsoidal cross-section at a random height.
 *
 * For hyperboloids x_0 is uniform in [-extent, extent] and the remaining
 * coordinates lie on the section sum x_i^2/a_i = rhs - x_0^2/a_0.
 */
Vec random_point(QuadricSpec const& spec, Rng& rng, double extent)
{
    int const n = spec.n();
    auto const& a = spec.axes();
    Vec x(n + 1);
    switch (spec.kind())
    {
        case QuadricKind::ellipsoid: {
            Vec u = random_unit(n + 1, rng);
            for (int k = 0; k <= n; ++k)
            {
                x[k] = u[k] * std::sqrt(a[k]);
            }
            break;
        }
        case QuadricKind::one_sheeted:
        case QuadricKind::cone: {
            std::uniform_real_distribution<double> height(-extent, extent);
            double x0 = height(rng);
            double r = spec.rhs() - x0 * x0 / a[0];
            if (r <= 0)
            {
                // Cone vertex: move away from it
                x0 = extent;
                r = -x0 * x0 / a[0];
            }
            Vec u = random_unit(n, rng);
            x[0] = x0;
            for (int i = 1; i <= n; ++i)
            {
                x[i] = u[i - 1] * std::sqrt(a[i] * r);
            }
            break;
        }
        case QuadricKind::two_sheeted: {
            std::uniform_real_distribution<double> radius(0, extent);
            std::bernoulli_distribution sheet;
            double t = radius(rng);
            Vec u = random_unit(n, rng);
            for (int i = 1; i <= n; ++i)
            {
                x[i] = u[i - 1] * t * std::sqrt(a[i]);
            }
            double x0 = std::sqrt(-a[0] * (1 + t * t));
            x[0] = sheet(rng) ? x0 : -x0;
            break;
        }
    }
    return x;
}

//---------------------------------------------------------------------------//
Vec random_tangent(QuadricSpec const& spec, Vec const& x, Rng& rng)
{
    Vec normal = spec.b().cwiseProduct(x);
    require(normal.norm() > 0, ErrorKind::singular_point, "no tangent plane");
    Vec y;
    do
    {
        y = random_unit(x.size(), rng);
        y -= normal * (normal.dot(y) / normal.squaredNorm());
    } while (y.norm() < 1e-3);
    return y / y.norm();
}

PhaseState random_state(QuadricSpec const& spec, Rng& rng, double extent)
{
    PhaseState s;
    s.x = random_point(spec, rng, extent);
    s.y = random_tangent(spec, s.x, rng);
    return s;
}

//---------------------------------------------------------------------------//
}  // namespace quadscat
