//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Error.cc
//---------------------------------------------------------------------------//
#include "quadscat/Error.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
char const* to_cstring(ErrorKind kind)
{
    switch (kind)
    {
        case ErrorKind::invalid_argument:
            return "InvalidArgument";
        case ErrorKind::kind:
            return "KindError";
        case ErrorKind::dimension:
            return "DimensionError";
        case ErrorKind::pole:
            return "PoleError";
        case ErrorKind::isotropic:
            return "IsotropicError";
        case ErrorKind::step_failure:
            return "StepFailure";
        case ErrorKind::constraint_lost:
            return "ConstraintLost";
        case ErrorKind::not_escaped:
            return "NotEscaped";
        case ErrorKind::degenerate_coordinate:
            return "DegenerateCoordinate";
        case ErrorKind::collision:
            return "CollisionError";
        case ErrorKind::degenerate_curve:
            return "DegenerateCurveError";
        case ErrorKind::interval:
            return "IntervalError";
        case ErrorKind::divisor_shape:
            return "DivisorShapeError";
        case ErrorKind::case_mismatch:
            return "CaseError";
        case ErrorKind::critical_divergence:
            return "CriticalDivergence";
        case ErrorKind::singular_point:
            return "SingularPoint";
        case ErrorKind::asymptotic_cone:
            return "AsymptoticConeError";
        case ErrorKind::chart:
            return "ChartError";
        case ErrorKind::domain_too_small:
            return "DomainTooSmall";
    }
    return "Error";
}

//---------------------------------------------------------------------------//
}  // namespace quadscat
