//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file unit/ScatteringTest.cc
//---------------------------------------------------------------------------//
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>

#include "quadscat/Cone.hh"
#include "quadscat/Error.hh"
#include "quadscat/Scattering.hh"
#include "quadscat/SpectralCurve.hh"
#include "quadscat/Symmetric.hh"
#include "support/Support.hh"

using namespace quadscat;
using std::numbers::pi;

namespace
{
QuadricSpec one_sheeted() { return {{-1, 1, 2}, QuadricKind::one_sheeted}; }

// Case I curves from random reflected states
std::vector<SpectralCurve> case_i_curves(int count, unsigned seed)
{
    auto spec = one_sheeted();
    Rng rng(seed);
    std::vector<SpectralCurve> result;
    while (static_cast<int>(result.size()) < count)
    {
        auto st = test::random_state_away_from_critical(spec, rng, 0.02);
        auto is = integrals(spec, st);
        if (is.F[0] < 0)
        {
            result.push_back(build_spectral_curve(spec, is));
        }
    }
    return result;
}

// 2 int_lo^hi u^{j-1} / sqrt R du by double-exponential quadrature in u
double oracle_loop(SpectralCurve const& curve, int oval, int j)
{
    auto const& ov = curve.ovals()[oval];
    boost::math::quadrature::tanh_sinh<double> ts;
    double const len = ov.hi - ov.lo;
    // xc is the signed distance to the nearer endpoint, exact near the ends
    auto f = [&](double u, double xc) {
        double from_lo = xc < 0 ? -xc : len - xc;
        double to_hi = xc < 0 ? len + xc : xc;
        double r = curve.G(oval, u) * from_lo * to_hi;
        return std::pow(u, j - 1) / std::sqrt(r);
    };
    return 2 * ts.integrate(f, ov.lo, ov.hi, 1e-14);
}
}  // namespace

//---------------------------------------------------------------------------//
TEST(SpectralCurve, case_i_structure)
{
    for (auto const& curve : case_i_curves(30, 111))
    {
        ASSERT_EQ(curve.n(), 2);
        ASSERT_GE(curve.distinguished(), 0);
        int containing_zero = 0;
        for (int i = 0; i < curve.n(); ++i)
        {
            auto const& ov = curve.ovals()[i];
            containing_zero += (ov.lo <= 0 && 0 <= ov.hi);
            for (double t : {0.01, 0.25, 0.5, 0.75, 0.99})
            {
                EXPECT_GE(curve.R(ov.lo + t * (ov.hi - ov.lo)), 0);
            }
            if (i > 0)
            {
                EXPECT_LT(curve.ovals()[i - 1].hi, ov.lo);
            }
        }
        EXPECT_EQ(containing_zero, 1);
        auto const& dist = curve.ovals()[curve.distinguished()];
        EXPECT_TRUE(dist.lo == 0 || dist.hi == 0);
    }
}

TEST(SpectralCurve, planar_state_is_singular)
{
    // d = -1/2 collides with b_2 = -1/2
    auto spec = one_sheeted();
    Vec x(3), y(3);
    x << 0, 1, 0;
    y << 1, 0, 0;
    auto curve = build_spectral_curve(spec, integrals(spec, {x, y}));
    EXPECT_TRUE(curve.singular());
    ASSERT_EQ(curve.d().size(), 1u);
    EXPECT_NEAR(curve.d()[0], -0.5, 1e-12);
    EXPECT_THROW(period_lattice(curve), Error);
}

TEST(Periods, match_independent_quadrature)
{
    for (auto const& curve : case_i_curves(10, 113))
    {
        for (int oval = 0; oval < curve.n(); ++oval)
        {
            for (int j = 1; j <= 2; ++j)
            {
                double lib = oval_loop_integral(curve, oval, j);
                double ref = oracle_loop(curve, oval, j);
                EXPECT_NEAR(std::fabs(lib), std::fabs(ref), 1e-9 * std::max(1.0, std::fabs(ref)));
                // Node doubling
                EXPECT_NEAR(oval_loop_integral(curve, oval, j, 128), lib, 1e-12 * std::max(1.0, std::fabs(lib)));
            }
        }
    }
}

TEST(Periods, lattice_regular_and_stable)
{
    for (auto const& curve : case_i_curves(10, 127))
    {
        auto L = period_lattice(curve);
        ASSERT_EQ(L.generators.rows(), curve.n() - 1);
        ASSERT_EQ(L.generators.cols(), curve.n() - 1);
        EXPECT_GT(std::fabs(L.generators.determinant()), 1e-8);
        auto L2 = period_lattice(curve, 128);
        EXPECT_LT((L2.generators - L.generators).cwiseAbs().maxCoeff(), 1e-10);
        // Lattice vectors reduce to zero
        Vec v = 3 * L.generators.col(0);
        EXPECT_LT(L.reduce(v).norm(), 1e-10);
        Vec w = L.generators.col(0) * 0.25;
        EXPECT_NEAR(L.reduce(w).norm(), w.norm(), 1e-12);
    }
}

TEST(AbelMap, full_turn_is_one_period)
{
    for (auto const& curve : case_i_curves(10, 131))
    {
        for (int oval = 0; oval < curve.n(); ++oval)
        {
            for (int j = 1; j <= 2; ++j)
            {
                double turn = oval_integral(curve, oval, j, 0.3, 0.3 + 2 * pi);
                EXPECT_NEAR(std::fabs(turn), std::fabs(oval_loop_integral(curve, oval, j)), 1e-11);
            }
        }
    }
}

TEST(AbelMap, continuous_across_branch_point)
{
    for (auto const& curve : case_i_curves(5, 137))
    {
        int oval = curve.cycle_ovals().at(0);
        // theta = pi is the upper branch point of the oval
        double lo = oval_integral(curve, oval, 1, 0, pi - 1e-7);
        double hi = oval_integral(curve, oval, 1, 0, pi + 1e-7);
        EXPECT_LT(std::fabs(hi - lo), 1e-5);
    }
}

TEST(ScatteringShift, finite_then_divergent)
{
    auto spec = one_sheeted();
    Vec x(3);
    x << 0.4, 0.7, std::sqrt(2 * (1 + 0.16 - 0.49));
    auto cs = test::critical_state(spec, x);
    ASSERT_TRUE(cs);
    Mat T = test::tangent_basis(spec, x);
    double prev = 0;
    int grew = 0, checked = 0;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6})
    {
        for (double sgn : {1.0, -1.0})
        {
            Vec y = (cs->y + sgn * eps * T.col(0)).normalized();
            Vec bx = spec.b().cwiseProduct(x);
            y = (y - bx * (bx.dot(y) / bx.squaredNorm())).normalized();
            auto is = integrals(spec, {x, y});
            if (is.F[0] >= 0)
            {
                continue;
            }
            double d = std::fabs(scattering_shift(build_spectral_curve(spec, is))[0]);
            EXPECT_TRUE(std::isfinite(d));
            ++checked;
            grew += d > prev;
            prev = d;
        }
    }
    EXPECT_EQ(checked, 6);
    EXPECT_EQ(grew, checked);

    // Exactly critical: double root at b_0 on the distinguished oval
    auto is = integrals(spec, *cs);
    try
    {
        scattering_shift(build_spectral_curve(spec, is));
        ADD_FAILURE() << "expected a divergence error";
    }
    catch (Error const& e)
    {
        EXPECT_EQ(e.kind(), ErrorKind::critical_divergence);
    }
}

TEST(RotationNumber, floor_of_ratio)
{
    for (auto const& curve : case_i_curves(20, 139))
    {
        auto rn = rotation_number(curve, QuadricKind::one_sheeted);
        EXPECT_NEAR(rn.ratio, rn.I1 / (2 * rn.I2), 1e-14 * std::max(1.0, rn.ratio));
        EXPECT_EQ(rn.N, static_cast<long>(std::floor(rn.ratio)));
        EXPECT_NEAR(std::fabs(rn.I1),
                    std::fabs(oracle_loop(curve, curve.distinguished(), 1)),
                    1e-9 * std::fabs(rn.I1));
    }
}

//---------------------------------------------------------------------------//
TEST(Cone, round_cone_angle)
{
    EXPECT_NEAR(cone_angle(QuadricSpec({-3, 1, 1}, QuadricKind::cone)), pi, 1e-13);
    double a0 = -0.7, a2 = 2.5;
    EXPECT_NEAR(cone_angle(QuadricSpec({a0, a2, a2}, QuadricKind::cone)),
                2 * pi * std::sqrt(a2 / (a2 - a0)),
                1e-13);
}

TEST(Cone, quadrature_converges_and_monotone)
{
    double prev = 0;
    for (double a0 : {-10.0, -3.0, -1.0, -0.3, -0.1, -0.01})
    {
        QuadricSpec spec({a0, 1, 2}, QuadricKind::cone);
        double alpha = cone_angle(spec);
        EXPECT_NEAR(cone_angle(spec, 128), alpha, 1e-12);
        EXPECT_GT(alpha, prev);
        EXPECT_LT(alpha, 2 * pi);
        prev = alpha;
    }
}

TEST(Cone, corner_shift)
{
    double alpha = 3.0;
    EXPECT_NEAR(cone_scatter(alpha, 0.5), std::fmod(0.5 + pi, alpha), 1e-15);
    for (double in : {-7.0, -1.0, 0.0, 0.3, 2.9, 11.0})
    {
        double out = cone_scatter(alpha, in);
        EXPECT_GE(out, 0);
        EXPECT_LT(out, alpha);
        EXPECT_NEAR(std::remainder(out - in - pi, alpha), 0, 1e-12);
    }
}

//---------------------------------------------------------------------------//
TEST(Symmetric, classification_threshold)
{
    double a = 1.3, c = 0.8;
    // C^2 = a^2 is critical
    auto crit = symmetric_classify(a, c, 0.5, a);
    EXPECT_NEAR(crit.F0, 0, 1e-14);
    EXPECT_EQ(crit.label, CaseLabel::critical);
    EXPECT_EQ(symmetric_classify(a, c, 0.5, 0.5 * a).label, CaseLabel::transmission);
    EXPECT_EQ(symmetric_classify(a, c, 0.5, 1.5 * a).label, CaseLabel::reflection);
}

TEST(Symmetric, closed_forms_match_embedding)
{
    double a = 1.3, c = 0.8;
    auto spec = symmetric_quadric(a, c);
    Rng rng(149);
    for (int i = 0; i < 50; ++i)
    {
        auto st = random_state(spec, rng);
        double I = st.x[1] * st.y[2] - st.x[2] * st.y[1];
        auto sc = symmetric_classify(a, c, 0.5 * st.y.squaredNorm(), I);
        double J = joachimsthal(spec, st.x, st.y);
        double F0 = uhlenbeck_devaney(spec, st.x, st.y, 0);
        EXPECT_NEAR(sc.J, J, 1e-12 * std::max(1.0, std::fabs(J)));
        EXPECT_NEAR(sc.F0, F0, 1e-12 * std::max(1.0, std::fabs(F0)));
    }
}

TEST(Symmetric, delta_phi_diverges_at_threshold)
{
    double a = 1, c = 1;
    double prev_t = 0, prev_r = 0;
    for (double gap : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5})
    {
        double t = symmetric_delta_phi(a, c, a - gap, DeltaPhiMode::transmission);
        double r = symmetric_delta_phi(a, c, a + gap, DeltaPhiMode::reflection);
        EXPECT_GT(t, prev_t);
        EXPECT_GT(r, prev_r);
        prev_t = t;
        prev_r = r;
    }
    // Logarithmic growth: a decade in the gap adds a bounded amount
    double t4 = symmetric_delta_phi(a, c, a - 1e-4, DeltaPhiMode::transmission);
    double t5 = symmetric_delta_phi(a, c, a - 1e-5, DeltaPhiMode::transmission);
    double t6 = symmetric_delta_phi(a, c, a - 1e-6, DeltaPhiMode::transmission);
    EXPECT_NEAR(t6 - t5, t5 - t4, 0.05 * (t5 - t4));
}
