//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Types.hh
//---------------------------------------------------------------------------//
#pragma once

#include <Eigen/Dense>

namespace quadscat
{
//---------------------------------------------------------------------------//
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

//! Which end of a trajectory
enum class End
{
    minus,
    plus
};

//---------------------------------------------------------------------------//
//! Default tolerances; every field may be overridden by callers.
struct Tolerances
{
    double constraint = 1e-9;  //!< |Q(x) - rhs| and tangency
    double classification = 1e-6;  //!< |F0| at or below this is critical
    double isotropic = 1e-10;  //!< |J| below this is a generator line
    double pole = 1e-12;  //!< distance from a pole treated as singular
};

//---------------------------------------------------------------------------//
}  // namespace quadscat
