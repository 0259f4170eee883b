//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Error.hh
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace quadscat
{
//---------------------------------------------------------------------------//
//! Failure categories raised by the library.
enum class ErrorKind
{
    invalid_argument,
    kind,  //!< Operation not defined for this quadric kind
    dimension,
    pole,
    isotropic,
    step_failure,
    constraint_lost,
    not_escaped,
    degenerate_coordinate,
    collision,
    degenerate_curve,
    interval,
    divisor_shape,
    case_mismatch,
    critical_divergence,
    singular_point,
    asymptotic_cone,
    chart,
    domain_too_small,
};

//---------------------------------------------------------------------------//
/*!
 * Exception carrying an error category.
 *
 * Numerical failures (step underflow, lost constraint) and contract
 * violations share this type so that the CLI can map them to exit codes.
 */
class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, std::string const& msg)
        : std::runtime_error(msg), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

// Name used in machine-readable error reports, e.g. "PoleError"
char const* to_cstring(ErrorKind kind);

//! Throw unless the condition holds
inline void require(bool cond, ErrorKind kind, char const* msg)
{
    if (!cond)
    {
        throw Error(kind, msg);
    }
}

//---------------------------------------------------------------------------//
}  // namespace quadscat
