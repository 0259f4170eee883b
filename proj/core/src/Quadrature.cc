//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Quadrature.cc
//---------------------------------------------------------------------------//
#include "quadscat/Quadrature.hh"

#include <cmath>
#include <numbers>

#include "quadscat/Error.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
GaussLegendre::GaussLegendre(int order)
{
    require(order >= 1, ErrorKind::invalid_argument, "quadrature order < 1");
    nodes_.resize(order);
    weights_.resize(order);
    int const m = (order + 1) / 2;
    for (int i = 0; i < m; ++i)
    {
        // Tricomi initial guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; ++iter)
        {
            double p0 = 1;
            double p1 = x;
            for (int k = 2; k <= order; ++k)
            {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16)
            {
                break;
            }
        }
        // Recompute derivative at the converged node
        double p0 = 1;
        double p1 = x;
        for (int k = 2; k <= order; ++k)
        {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = order * (x * p1 - p0) / (x * x - 1);
        double w = 2 / ((1 - x * x) * dp * dp);
        nodes_[i] = -x;
        nodes_[order - 1 - i] = x;
        weights_[i] = w;
        weights_[order - 1 - i] = w;
    }
    if (order % 2 == 1)
    {
        nodes_[m - 1] = 0;
    }
}

//---------------------------------------------------------------------------//
}  // namespace quadscat
