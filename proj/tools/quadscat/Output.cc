//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Output.cc
//---------------------------------------------------------------------------//
#include "Output.hh"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace quadscat
{
namespace app
{
namespace
{
std::string quote_field(std::string const& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
    {
        return s;
    }
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
        {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}
}  // namespace

//---------------------------------------------------------------------------//
std::string format_double(double v)
{
    if (std::isnan(v))
    {
        return "nan";
    }
    if (std::isinf(v))
    {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

//---------------------------------------------------------------------------//
CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> row)
{
    if (row.size() != header_.size())
    {
        throw std::logic_error("CSV row width does not match header");
    }
    rows_.push_back(std::move(row));
}

std::string CsvTable::str() const
{
    std::string out;
    auto emit = [&out](std::vector<std::string> const& row) {
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i)
            {
                out += ',';
            }
            out += quote_field(row[i]);
        }
        out += "\r\n";
    };
    emit(header_);
    for (auto const& r : rows_)
    {
        emit(r);
    }
    return out;
}

//---------------------------------------------------------------------------//
void write_atomic(std::filesystem::path const& path, std::string const& content)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        os << content;
        os.flush();
        if (!os)
        {
            throw std::runtime_error("cannot write " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

//---------------------------------------------------------------------------//
}  // namespace app
}  // namespace quadscat
