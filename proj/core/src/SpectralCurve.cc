//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file SpectralCurve.cc
//---------------------------------------------------------------------------//
#include "quadscat/SpectralCurve.hh"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quadscat/Error.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
SpectralCurve::SpectralCurve(std::vector<double> branch_points,
                             std::vector<double> b,
                             std::vector<double> d)
    : roots_(std::move(branch_points)), b_(std::move(b)), d_(std::move(d))
{
    require(roots_.size() >= 3 && roots_.size() % 2 == 1,
            ErrorKind::invalid_argument,
            "a spectral curve needs 2n+1 branch points");
    for (double e : roots_)
    {
        require(std::isfinite(e), ErrorKind::invalid_argument, "non-finite root");
    }
    std::sort(roots_.begin(), roots_.end());
    std::sort(b_.begin(), b_.end());
    std::sort(d_.begin(), d_.end());
    min_gap_ = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < roots_.size(); ++i)
    {
        min_gap_ = std::min(min_gap_, roots_[i] - roots_[i - 1]);
    }
    int const n = static_cast<int>(roots_.size() - 1) / 2;
    double scale = 0;
    for (double e : roots_)
    {
        scale = std::max(scale, std::fabs(e));
    }
    for (int i = 0; i < n; ++i)
    {
        Oval ov;
        ov.lo = roots_[2 * i + 1];
        ov.hi = roots_[2 * i + 2];
        double ztol = 1e-10 * std::max(1.0, scale);
        ov.distinguished = std::fabs(ov.lo) <= ztol || std::fabs(ov.hi) <= ztol;
        if (ov.distinguished && distinguished_ < 0)
        {
            distinguished_ = i;
        }
        else
        {
            ov.distinguished = false;
        }
        ovals_.push_back(ov);
    }
}

//---------------------------------------------------------------------------//
std::vector<int> SpectralCurve::cycle_ovals() const
{
    std::vector<int> result;
    for (int i = 0; i < n(); ++i)
    {
        if (i != distinguished_)
        {
            result.push_back(i);
        }
    }
    return result;
}

double SpectralCurve::R(double u) const
{
    double v = -4;
    for (double e : roots_)
    {
        v *= u - e;
    }
    return v;
}

double SpectralCurve::G(int oval, double u) const
{
    require(oval >= 0 && oval < n(), ErrorKind::invalid_argument, "oval index");
    double v = 4;
    for (int i = 0; i < static_cast<int>(roots_.size()); ++i)
    {
        if (i == 2 * oval + 1 || i == 2 * oval + 2)
        {
            continue;
        }
        v *= u - roots_[i];
    }
    return v;
}

int SpectralCurve::oval_of(double u, double tol) const
{
    for (int i = 0; i < n(); ++i)
    {
        double pad = tol * std::max(1.0, std::fabs(u));
        if (u >= ovals_[i].lo - pad && u <= ovals_[i].hi + pad)
        {
            return i;
        }
    }
    return -1;
}

//---------------------------------------------------------------------------//
SpectralCurve
build_spectral_curve(QuadricSpec const& spec, IntegralSet const& iset)
{
    require(!iset.isotropic && iset.eps != 0,
            ErrorKind::isotropic,
            "isotropic geodesics have no spectral curve");
    require(static_cast<int>(iset.c.size()) == spec.n() - 1,
            ErrorKind::invalid_argument,
            "confocal parameters missing");
    std::vector<double> b, d, roots{0.0};
    for (int k = 0; k <= spec.n(); ++k)
    {
        b.push_back(iset.eps / spec.axes()[k]);
    }
    for (double c : iset.c)
    {
        require(c != 0, ErrorKind::degenerate_curve, "zero confocal parameter");
        d.push_back(iset.eps / c);
    }
    roots.insert(roots.end(), b.begin(), b.end());
    roots.insert(roots.end(), d.begin(), d.end());
    return SpectralCurve(roots, b, d);
}

//---------------------------------------------------------------------------//
}  // namespace quadscat
