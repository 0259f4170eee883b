//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Config.hh
//! \brief Run configuration for the command-line driver
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "quadscat/GeodesicFlow.hh"
#include "quadscat/Quadric.hh"

namespace quadscat
{
namespace app
{
//---------------------------------------------------------------------------//
//! Invalid or malformed configuration; maps to exit code 2
class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::string field, std::string const& msg, int line = 0)
        : std::runtime_error(msg), field_(std::move(field)), line_(line)
    {
    }

    std::string const& field() const { return field_; }
    //! One-based line in the config text, zero if not applicable
    int line() const { return line_; }

  private:
    std::string field_;
    int line_;
};

//---------------------------------------------------------------------------//
/*!
 * Everything a command needs, validated before any output is written.
 *
 * Explicit states come first and are followed by \c count sampled states.
 * Explicit velocities are rescaled to unit length.
 */
struct RunConfig
{
    std::string command;
    std::optional<QuadricSpec> quadric;
    std::uint64_t seed = 0;
    std::vector<PhaseState> states;
    int count = 0;
    double extent = 2.0;
    Tolerances tol;
    GeodesicOptions geodesic;
    double s_limit = 1e5;
    std::array<double, 2> span{-50.0, 50.0};
    //! Command-specific block, e.g. the object under "quantum"
    nlohmann::json params = nlohmann::json::object();
};

// Parse and validate a JSON document for the given command
RunConfig parse_config(std::string const& text, std::string const& command);

// Apply KEY=VAL from the command line
void apply_override(RunConfig& cfg, std::string const& key_value);

// Check that all tolerances are positive and spans ordered
void validate(RunConfig const& cfg);

// Explicit states followed by sampled ones (deterministic in the seed)
std::vector<PhaseState> instance_states(RunConfig const& cfg);

// Typed access to params with a default and a field path for diagnostics
double param_double(RunConfig const& cfg, char const* key, double fallback);
int param_int(RunConfig const& cfg, char const* key, int fallback);
std::vector<double> param_doubles(RunConfig const& cfg,
                                  char const* key,
                                  std::vector<double> fallback);

//---------------------------------------------------------------------------//
}  // namespace app
}  // namespace quadscat
