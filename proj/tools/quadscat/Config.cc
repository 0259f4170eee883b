//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Config.cc
//---------------------------------------------------------------------------//
#include "Config.hh"

#include <algorithm>
#include <cmath>
#include <set>

#include "quadscat/Error.hh"
#include "quadscat/Sampling.hh"

using nlohmann::json;

namespace quadscat
{
namespace app
{
namespace
{
//---------------------------------------------------------------------------//
//! Line of the first occurrence of a quoted key, or zero
int line_of_key(std::string const& text, std::string const& key)
{
    auto pos = text.find('"' + key + '"');
    if (pos == std::string::npos)
    {
        return 0;
    }
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + pos, '\n'));
}

struct Reader
{
    std::string const& text;

    [[noreturn]] void fail(std::string const& field, std::string const& msg) const
    {
        auto dot = field.find_last_of('.');
        auto leaf = dot == std::string::npos ? field : field.substr(dot + 1);
        throw ConfigError(field, field + ": " + msg, line_of_key(text, leaf));
    }

    double number(json const& j, std::string const& field) const
    {
        if (!j.is_number())
        {
            fail(field, "expected a number");
        }
        double v = j.get<double>();
        if (!std::isfinite(v))
        {
            fail(field, "must be finite");
        }
        return v;
    }

    std::vector<double> numbers(json const& j, std::string const& field) const
    {
        if (!j.is_array())
        {
            fail(field, "expected an array of numbers");
        }
        std::vector<double> out;
        for (std::size_t i = 0; i < j.size(); ++i)
        {
            out.push_back(number(j[i], field + "[" + std::to_string(i) + "]"));
        }
        return out;
    }

    json const& object(json const& j, std::string const& field) const
    {
        if (!j.is_object())
        {
            fail(field, "expected an object");
        }
        return j;
    }

    void known_keys(json const& j,
                    std::string const& field,
                    std::set<std::string> const& keys) const
    {
        for (auto const& [k, v] : j.items())
        {
            if (!keys.count(k))
            {
                fail(field.empty() ? k : field + "." + k, "unknown key");
            }
        }
    }
};

QuadricKind parse_kind(Reader const& rd, json const& j)
{
    if (!j.is_string())
    {
        rd.fail("quadric.kind", "expected a string");
    }
    auto s = j.get<std::string>();
    for (auto kind : {QuadricKind::one_sheeted,
                      QuadricKind::two_sheeted,
                      QuadricKind::ellipsoid,
                      QuadricKind::cone})
    {
        if (s == to_cstring(kind))
        {
            return kind;
        }
    }
    rd.fail("quadric.kind", "expected one-sheeted, two-sheeted, ellipsoid or cone");
}

std::set<std::string> const& commands()
{
    static std::set<std::string> const names{"classify",
                                             "scatter",
                                             "trace",
                                             "neumann-check",
                                             "projective-check",
                                             "quantum",
                                             "cone"};
    return names;
}
}  // namespace

//---------------------------------------------------------------------------//
RunConfig parse_config(std::string const& text, std::string const& command)
{
    if (!commands().count(command))
    {
        throw ConfigError("command", "unknown command '" + command + "'");
    }
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (json::parse_error const& e)
    {
        auto end = std::min(e.byte, text.size());
        int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + end, '\n'));
        throw ConfigError("", std::string("malformed JSON: ") + e.what(), line);
    }
    Reader rd{text};
    rd.object(doc, "(root)");

    auto keys = commands();
    keys.insert({"quadric", "seed", "states", "count", "extent", "integrator", "tolerances"});
    rd.known_keys(doc, "", keys);

    RunConfig cfg;
    cfg.command = command;

    if (doc.contains("quadric"))
    {
        auto const& q = rd.object(doc["quadric"], "quadric");
        rd.known_keys(q, "quadric", {"axes", "kind"});
        if (!q.contains("axes") || !q.contains("kind"))
        {
            rd.fail("quadric", "needs axes and kind");
        }
        auto axes = rd.numbers(q["axes"], "quadric.axes");
        auto kind = parse_kind(rd, q["kind"]);
        try
        {
            cfg.quadric.emplace(axes, kind);
        }
        catch (Error const& e)
        {
            rd.fail("quadric.axes", e.what());
        }
    }
    else if (command != "quantum")
    {
        rd.fail("quadric", "required for " + command);
    }

    if (doc.contains("seed"))
    {
        if (!doc["seed"].is_number_unsigned())
        {
            rd.fail("seed", "expected a nonnegative integer");
        }
        cfg.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("count"))
    {
        if (!doc["count"].is_number_integer() || doc["count"].get<long>() < 0)
        {
            rd.fail("count", "expected a nonnegative integer");
        }
        cfg.count = doc["count"].get<int>();
    }
    if (doc.contains("extent"))
    {
        cfg.extent = rd.number(doc["extent"], "extent");
    }

    if (doc.contains("integrator"))
    {
        auto const& in = rd.object(doc["integrator"], "integrator");
        rd.known_keys(in,
                      "integrator",
                      {"rtol", "atol", "max_step", "s_limit", "escape_radius", "span"});
        auto& ode = cfg.geodesic.ode;
        if (in.contains("rtol"))
            ode.rtol = rd.number(in["rtol"], "integrator.rtol");
        if (in.contains("atol"))
            ode.atol = rd.number(in["atol"], "integrator.atol");
        if (in.contains("max_step"))
            ode.max_step = rd.number(in["max_step"], "integrator.max_step");
        if (in.contains("s_limit"))
            cfg.s_limit = rd.number(in["s_limit"], "integrator.s_limit");
        if (in.contains("escape_radius"))
            cfg.geodesic.escape_radius = rd.number(in["escape_radius"], "integrator.escape_radius");
        if (in.contains("span"))
        {
            auto sp = rd.numbers(in["span"], "integrator.span");
            if (sp.size() != 2)
            {
                rd.fail("integrator.span", "expected [s_min, s_max]");
            }
            cfg.span = {sp[0], sp[1]};
        }
    }

    if (doc.contains("tolerances"))
    {
        auto const& t = rd.object(doc["tolerances"], "tolerances");
        rd.known_keys(t, "tolerances", {"constraint", "classification", "isotropic", "pole"});
        if (t.contains("constraint"))
            cfg.tol.constraint = rd.number(t["constraint"], "tolerances.constraint");
        if (t.contains("classification"))
            cfg.tol.classification = rd.number(t["classification"], "tolerances.classification");
        if (t.contains("isotropic"))
            cfg.tol.isotropic = rd.number(t["isotropic"], "tolerances.isotropic");
        if (t.contains("pole"))
            cfg.tol.pole = rd.number(t["pole"], "tolerances.pole");
    }

    if (doc.contains("states"))
    {
        if (!cfg.quadric)
        {
            rd.fail("states", "needs a quadric");
        }
        if (!doc["states"].is_array())
        {
            rd.fail("states", "expected an array");
        }
        int const dim = cfg.quadric->n() + 1;
        for (std::size_t i = 0; i < doc["states"].size(); ++i)
        {
            std::string field = "states[" + std::to_string(i) + "]";
            auto const& s = rd.object(doc["states"][i], field);
            rd.known_keys(s, field, {"x", "y"});
            if (!s.contains("x") || !s.contains("y"))
            {
                rd.fail(field, "needs x and y");
            }
            auto x = rd.numbers(s["x"], field + ".x");
            auto y = rd.numbers(s["y"], field + ".y");
            if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
            {
                rd.fail(field, "x and y need " + std::to_string(dim) + " entries");
            }
            PhaseState st{Eigen::Map<Vec>(x.data(), dim), Eigen::Map<Vec>(y.data(), dim)};
            if (st.y.norm() == 0)
            {
                rd.fail(field + ".y", "zero velocity");
            }
            st.y.normalize();
            try
            {
                check_state(*cfg.quadric, st, cfg.tol.constraint * std::max(1.0, st.x.squaredNorm()));
            }
            catch (Error const& e)
            {
                rd.fail(field, e.what());
            }
            cfg.states.push_back(st);
        }
    }

    if (doc.contains(command))
    {
        cfg.params = rd.object(doc[command], command);
    }
    validate(cfg);
    return cfg;
}

//---------------------------------------------------------------------------//
void apply_override(RunConfig& cfg, std::string const& key_value)
{
    auto eq = key_value.find('=');
    if (eq == std::string::npos)
    {
        throw ConfigError("--tol-override", "expected KEY=VAL, got '" + key_value + "'");
    }
    std::string key = key_value.substr(0, eq);
    double val = 0;
    try
    {
        std::size_t used = 0;
        val = std::stod(key_value.substr(eq + 1), &used);
        if (used != key_value.size() - eq - 1)
        {
            throw std::invalid_argument("trailing characters");
        }
    }
    catch (std::exception const&)
    {
        throw ConfigError("--tol-override", "bad number in '" + key_value + "'");
    }
    if (key == "constraint")
        cfg.tol.constraint = val;
    else if (key == "classification")
        cfg.tol.classification = val;
    else if (key == "isotropic")
        cfg.tol.isotropic = val;
    else if (key == "pole")
        cfg.tol.pole = val;
    else if (key == "rtol")
        cfg.geodesic.ode.rtol = val;
    else if (key == "atol")
        cfg.geodesic.ode.atol = val;
    else if (key == "max_step")
        cfg.geodesic.ode.max_step = val;
    else
        throw ConfigError("--tol-override", "unknown key '" + key + "'");
    validate(cfg);
}

//---------------------------------------------------------------------------//
void validate(RunConfig const& cfg)
{
    auto positive = [](double v, char const* field) {
        if (!(v > 0))
        {
            throw ConfigError(field, std::string(field) + ": must be positive");
        }
    };
    positive(cfg.tol.constraint, "tolerances.constraint");
    positive(cfg.tol.classification, "tolerances.classification");
    positive(cfg.tol.isotropic, "tolerances.isotropic");
    positive(cfg.tol.pole, "tolerances.pole");
    positive(cfg.geodesic.ode.rtol, "integrator.rtol");
    positive(cfg.geodesic.ode.atol, "integrator.atol");
    positive(cfg.geodesic.ode.max_step, "integrator.max_step");
    positive(cfg.s_limit, "integrator.s_limit");
    positive(cfg.extent, "extent");
    if (cfg.geodesic.escape_radius < 0)
    {
        throw ConfigError("integrator.escape_radius", "integrator.escape_radius: must be >= 0");
    }
    if (!(cfg.span[0] <= 0 && cfg.span[1] >= 0 && cfg.span[0] < cfg.span[1]))
    {
        throw ConfigError("integrator.span", "integrator.span: need s_min <= 0 <= s_max");
    }
}

//---------------------------------------------------------------------------//
std::vector<PhaseState> instance_states(RunConfig const& cfg)
{
    std::vector<PhaseState> result = cfg.states;
    if (cfg.count > 0)
    {
        Rng rng(cfg.seed);
        for (int i = 0; i < cfg.count; ++i)
        {
            result.push_back(random_state(*cfg.quadric, rng, cfg.extent));
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
double param_double(RunConfig const& cfg, char const* key, double fallback)
{
    if (!cfg.params.contains(key))
    {
        return fallback;
    }
    auto const& j = cfg.params[key];
    if (!j.is_number() || !std::isfinite(j.get<double>()))
    {
        throw ConfigError(cfg.command + "." + key,
                          cfg.command + "." + key + ": expected a finite number");
    }
    return j.get<double>();
}

int param_int(RunConfig const& cfg, char const* key, int fallback)
{
    if (!cfg.params.contains(key))
    {
        return fallback;
    }
    auto const& j = cfg.params[key];
    if (!j.is_number_integer())
    {
        throw ConfigError(cfg.command + "." + key,
                          cfg.command + "." + key + ": expected an integer");
    }
    return j.get<int>();
}

std::vector<double> param_doubles(RunConfig const& cfg,
                                  char const* key,
                                  std::vector<double> fallback)
{
    if (!cfg.params.contains(key))
    {
        return fallback;
    }
    auto const& j = cfg.params[key];
    std::vector<double> out;
    if (!j.is_array())
    {
        throw ConfigError(cfg.command + "." + key,
                          cfg.command + "." + key + ": expected an array of numbers");
    }
    for (auto const& v : j)
    {
        if (!v.is_number() || !std::isfinite(v.get<double>()))
        {
            throw ConfigError(cfg.command + "." + key,
                              cfg.command + "." + key + ": expected an array of numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

//---------------------------------------------------------------------------//
}  // namespace app
}  // namespace quadscat
