//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Quadrature.hh
//---------------------------------------------------------------------------//
#pragma once

#include <vector>

namespace quadscat
{
//---------------------------------------------------------------------------//
/*!
 * Gauss-Legendre nodes and weights on [-1, 1].
 *
 * Nodes are found by Newton iteration on the Legendre recurrence, so any
 * order is available at runtime.
 */
class GaussLegendre
{
  public:
    explicit GaussLegendre(int order);

    int order() const { return static_cast<int>(nodes_.size()); }
    std::vector<double> const& nodes() const { return nodes_; }
    std::vector<double> const& weights() const { return weights_; }

    //! Integrate f over [a, b]
    template<class F>
    double operator()(F&& f, double a, double b) const
    {
        double const half = 0.5 * (b - a);
        double const mid = 0.5 * (b + a);
        double sum = 0;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
        {
            sum += weights_[i] * f(mid + half * nodes_[i]);
        }
        return half * sum;
    }

    //! Composite rule over equal panels
    template<class F>
    double composite(F&& f, double a, double b, int panels) const
    {
        double const h = (b - a) / panels;
        double sum = 0;
        for (int p = 0; p < panels; ++p)
        {
            sum += (*this)(f, a + p * h, a + (p + 1) * h);
        }
        return sum;
    }

  private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

//---------------------------------------------------------------------------//
}  // namespace quadscat
