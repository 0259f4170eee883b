//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/SpectralCurve.hh
//---------------------------------------------------------------------------//
#pragma once

#include <vector>

#include "Quadric.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
//! Bounded real component [lo, hi] of the curve, where R >= 0
struct Oval
{
    double lo = 0;
    double hi = 0;
    //! Has u = 0 as a branch point
    bool distinguished = false;

    double mid() const { return 0.5 * (lo + hi); }
    double radius() const { return 0.5 * (hi - lo); }
};

//---------------------------------------------------------------------------//
/*!
 * Real hyperelliptic curve w^2 = R(u) = -4 prod_{i}(u - e_i).
 *
 * The 2n+1 branch points are sorted ascending; R > 0 on (-inf, e_0) and on
 * the n ovals [e_1, e_2], [e_3, e_4], ... . For curves built from geodesics
 * the branch points are {0, d_i, b_k} and one oval ends at u = 0.
 */
class SpectralCurve
{
  public:
    //! Threshold on branch-point gaps below which the curve is singular
    static constexpr double double_root_tol = 1e-8;

    SpectralCurve(std::vector<double> branch_points,
                  std::vector<double> b,
                  std::vector<double> d);

    int n() const { return static_cast<int>(ovals_.size()); }
    std::vector<double> const& roots() const { return roots_; }
    std::vector<double> const& b() const { return b_; }
    std::vector<double> const& d() const { return d_; }
    std::vector<Oval> const& ovals() const { return ovals_; }
    //! Index into ovals() of the oval ending at 0, or -1
    int distinguished() const { return distinguished_; }
    //! Ovals other than the distinguished one, ascending
    std::vector<int> cycle_ovals() const;
    //! Direction of the oval angle along the flow, +1 or -1
    int orientation(int oval) const { return (n() - 1 - oval) % 2 ? -1 : 1; }
    //! Two branch points closer than double_root_tol
    bool singular() const { return min_gap_ < double_root_tol; }
    double min_gap() const { return min_gap_; }

    double R(double u) const;
    //! R(u) / ((u - lo)(hi - u)) on the given oval, positive inside
    double G(int oval, double u) const;
    //! Oval containing u within a relative tolerance, or -1
    int oval_of(double u, double tol = 1e-9) const;

  private:
    std::vector<double> roots_;
    std::vector<double> b_;
    std::vector<double> d_;
    std::vector<Oval> ovals_;
    int distinguished_ = -1;
    double min_gap_ = 0;
};

// Curve of a geodesic: b_k = eps/a_k, d_i = eps/c_i, plus the root 0
SpectralCurve build_spectral_curve(QuadricSpec const& spec,
                                   IntegralSet const& iset);

//---------------------------------------------------------------------------//
}  // namespace quadscat
