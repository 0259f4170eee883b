//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Commands.hh
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>

#include "Config.hh"
#include "json.hpp"

namespace quadscat
{
namespace app
{
struct RunContext
{
    std::filesystem::path out_dir = ".";
    int jobs = 1;
};

/*!
 * Run one command and write its outputs.
 *
 * All instances are computed before anything is written, so a numerical
 * failure leaves no partial output. Returns a summary for stdout.
 */
nlohmann::json run_command(RunConfig const& cfg, RunContext const& ctx);

// Check command/quadric compatibility before any work (throws ConfigError)
void check_command(RunConfig const& cfg);

}  // namespace app
}  // namespace quadscat
