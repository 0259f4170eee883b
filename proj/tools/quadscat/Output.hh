//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Output.hh
//! \brief CSV formatting and atomic file output
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace quadscat
{
namespace app
{
//---------------------------------------------------------------------------//
// Seventeen significant digits; "nan" and "inf" spelled out
std::string format_double(double v);

//! RFC-4180 table with a mandatory header row
class CsvTable
{
  public:
    explicit CsvTable(std::vector<std::string> header);

    std::size_t columns() const { return header_.size(); }
    void add_row(std::vector<std::string> row);
    std::string str() const;

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

// Write to a sibling temporary file and rename over the target
void write_atomic(std::filesystem::path const& path, std::string const& content);

//---------------------------------------------------------------------------//
}  // namespace app
}  // namespace quadscat
