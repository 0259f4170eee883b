//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file benchmarks/QuadscatBench.cc
//---------------------------------------------------------------------------//
#include <benchmark/benchmark.h>

#include "quadscat/GeodesicFlow.hh"
#include "quadscat/Neumann.hh"
#include "quadscat/Quadric.hh"
#include "quadscat/Quantum1d.hh"
#include "quadscat/Sampling.hh"
#include "quadscat/Scattering.hh"
#include "quadscat/SpectralCurve.hh"

using namespace quadscat;

namespace
{
QuadricSpec const& one_sheeted()
{
    static QuadricSpec const spec({-1, 1, 2}, QuadricKind::one_sheeted);
    return spec;
}

//! First sampled state whose refined label is case I
PhaseState case_i_state()
{
    Rng rng(12345);
    for (;;)
    {
        auto st = random_state(one_sheeted(), rng);
        if (classify_state(one_sheeted(), st).refined == CaseLabel::case_i)
        {
            return st;
        }
    }
}
}  // namespace

//---------------------------------------------------------------------------//
static void BM_integrate_geodesic(benchmark::State& state)
{
    Rng rng(1);
    auto st = random_state(one_sheeted(), rng);
    double const s = static_cast<double>(state.range(0));
    for (auto _ : state)
    {
        auto traj = integrate_geodesic(one_sheeted(), st, -s, s);
        benchmark::DoNotOptimize(traj.states.back().x.data());
    }
}
BENCHMARK(BM_integrate_geodesic)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMillisecond);

static void BM_scatter_geodesic(benchmark::State& state)
{
    auto st = case_i_state();
    GeodesicOptions opts;
    opts.stop_on_escape = true;
    for (auto _ : state)
    {
        auto rec = scatter_geodesic(one_sheeted(), st, 1e5, opts);
        benchmark::DoNotOptimize(rec.winding.windings);
    }
}
BENCHMARK(BM_scatter_geodesic)->Unit(benchmark::kMillisecond);

static void BM_period_lattice(benchmark::State& state)
{
    auto curve = build_spectral_curve(one_sheeted(), integrals(one_sheeted(), case_i_state()));
    int const nodes = static_cast<int>(state.range(0));
    for (auto _ : state)
    {
        auto lat = period_lattice(curve, nodes);
        benchmark::DoNotOptimize(lat.generators.data());
    }
}
BENCHMARK(BM_period_lattice)->Arg(32)->Arg(64)->Arg(128);

static void BM_abel_map(benchmark::State& state)
{
    auto st = case_i_state();
    auto is = integrals(one_sheeted(), st);
    auto ns = NeumannSpec::from_quadric(one_sheeted(), is.eps);
    auto img = gauss_map(one_sheeted(), st, is.J);
    NeumannState nst{img.q, img.p};
    auto curve = spectral_curve_from_neumann(ns, nst);
    auto D = partial_divisor(curve, lifted_divisor(ns, nst, curve));
    for (auto _ : state)
    {
        auto A = abel_map(curve, D);
        benchmark::DoNotOptimize(A.coords.data());
    }
}
BENCHMARK(BM_abel_map);

static void BM_rotation_number(benchmark::State& state)
{
    auto curve = build_spectral_curve(one_sheeted(), integrals(one_sheeted(), case_i_state()));
    for (auto _ : state)
    {
        auto rn = rotation_number(curve, QuadricKind::one_sheeted);
        benchmark::DoNotOptimize(rn.ratio);
    }
}
BENCHMARK(BM_rotation_number);

static void BM_measure_abel_scattering(benchmark::State& state)
{
    auto st = case_i_state();
    for (auto _ : state)
    {
        auto ab = measure_abel_scattering(one_sheeted(), st);
        benchmark::DoNotOptimize(ab.residual.data());
    }
}
BENCHMARK(BM_measure_abel_scattering)->Unit(benchmark::kMillisecond);

static void BM_transmission(benchmark::State& state)
{
    SymmetricSpec spec;
    spec.k = static_cast<int>(state.range(0));
    double const E = 0.5 * spec.k * spec.k + 1;
    for (auto _ : state)
    {
        auto res = transmission(spec, E);
        benchmark::DoNotOptimize(res.T);
    }
}
BENCHMARK(BM_transmission)->Arg(0)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
