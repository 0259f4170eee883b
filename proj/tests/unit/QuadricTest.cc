//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file unit/QuadricTest.cc
//---------------------------------------------------------------------------//
#include <cmath>

#include <gtest/gtest.h>

#include "quadscat/Error.hh"
#include "quadscat/Quadric.hh"
#include "quadscat/Sampling.hh"

using namespace quadscat;

namespace
{
QuadricSpec one_sheeted() { return {{-1, 1, 2}, QuadricKind::one_sheeted}; }

Vec vec3(double a, double b, double c)
{
    Vec v(3);
    v << a, b, c;
    return v;
}

// Hand-written F_k, independent of the library loop
double oracle_f(std::vector<double> const& a, Vec const& x, Vec const& y, int k, double sign)
{
    double f = sign * y[k] * y[k];
    for (int j = 0; j < static_cast<int>(a.size()); ++j)
    {
        if (j != k)
        {
            double m = x[k] * y[j] - x[j] * y[k];
            f += m * m / (a[k] - a[j]);
        }
    }
    return f;
}
}  // namespace

//---------------------------------------------------------------------------//
TEST(QuadricSpec, rejects_bad_axes)
{
    EXPECT_THROW(QuadricSpec({1}, QuadricKind::ellipsoid), Error);
    EXPECT_THROW(QuadricSpec({2, 1}, QuadricKind::ellipsoid), Error);
    EXPECT_THROW(QuadricSpec({1, 2, 3}, QuadricKind::one_sheeted), Error);
    EXPECT_THROW(QuadricSpec({-1, 0, 2}, QuadricKind::one_sheeted), Error);
    EXPECT_NO_THROW(QuadricSpec({-3, 1, 1}, QuadricKind::one_sheeted));
}

TEST(Constraint, hand_values)
{
    auto spec = one_sheeted();
    EXPECT_DOUBLE_EQ(eval_constraint(spec, vec3(0, 1, 0)), 0);
    EXPECT_DOUBLE_EQ(eval_constraint(spec, vec3(1, 1, 1)), -0.5);
}

TEST(Integrals, neck_state)
{
    auto spec = one_sheeted();
    auto is = integrals(spec, {vec3(0, 1, 0), vec3(0, 0, 1)});
    EXPECT_NEAR(is.F[0], 0, 1e-15);
    EXPECT_NEAR(is.F[1], -1, 1e-15);
    EXPECT_NEAR(is.F[2], 2, 1e-15);
    EXPECT_NEAR(is.J, 0.5, 1e-15);
    ASSERT_EQ(is.c.size(), 1u);
    EXPECT_NEAR(is.c[0], -1, 1e-12);
    EXPECT_NEAR(phi_z(spec, vec3(0, 1, 0), vec3(0, 0, 1), 3), 1.5, 1e-14);
}

TEST(Integrals, planar_state)
{
    auto spec = one_sheeted();
    PhaseState st{vec3(0, 1, 0), vec3(1, 0, 0)};
    auto is = integrals(spec, st);
    EXPECT_NEAR(is.F[0], 0.5, 1e-15);
    EXPECT_NEAR(is.F[1], 0.5, 1e-15);
    EXPECT_NEAR(is.F[2], 0, 1e-15);
    EXPECT_NEAR(is.J, -1, 1e-15);
    EXPECT_EQ(is.eps, -1);
    ASSERT_EQ(is.c.size(), 1u);
    EXPECT_NEAR(is.c[0], 2, 1e-12);

    auto cls = classify_state(spec, st);
    EXPECT_EQ(cls.label, CaseLabel::transmission);
    ASSERT_TRUE(cls.refined);
    EXPECT_EQ(*cls.refined, CaseLabel::case_iv);
    EXPECT_TRUE(cls.c_interval_ok);
    EXPECT_TRUE(cls.c_on_boundary);
}

TEST(EllipticCoords, symmetry_plane_point)
{
    auto ec = jacobi_elliptic_coords(one_sheeted(), vec3(0, 1, 0));
    ASSERT_EQ(ec.z.size(), 2u);
    EXPECT_NEAR(ec.z[0], -1, 1e-10);
    EXPECT_NEAR(ec.z[1], 2, 1e-10);
}

TEST(Classify, requires_one_sheeted)
{
    QuadricSpec ell({1, 2, 3}, QuadricKind::ellipsoid);
    Rng rng(3);
    EXPECT_THROW(classify_state(ell, random_state(ell, rng)), Error);
}

//---------------------------------------------------------------------------//
// Property tests over random states
class IntegralProperties : public ::testing::TestWithParam<QuadricKind>
{
};

TEST_P(IntegralProperties, identities)
{
    QuadricKind kind = GetParam();
    std::vector<std::vector<double>> axes_sets;
    switch (kind)
    {
        case QuadricKind::one_sheeted:
            axes_sets = {{-1, 1, 2}, {-2.5, 0.5, 3}, {-1, 1, 2, 4}};
            break;
        case QuadricKind::two_sheeted:
            axes_sets = {{-1, 1, 2}, {-0.5, 1.5, 2}, {-1, 0.5, 2, 3}};
            break;
        default:
            axes_sets = {{1, 2, 3}, {0.5, 1, 4, 9}};
    }
    double const sign = kind == QuadricKind::two_sheeted ? -1 : 1;
    Rng rng(17);
    for (auto const& a : axes_sets)
    {
        QuadricSpec spec(a, kind);
        for (int i = 0; i < 50; ++i)
        {
            auto st = random_state(spec, rng);
            ASSERT_NO_THROW(check_state(spec, st));
            auto is = integrals(spec, st);
            double sum = 0, sum_a = 0, sum_a2 = 0;
            for (std::size_t k = 0; k < a.size(); ++k)
            {
                double f = oracle_f(a, st.x, st.y, k, sign);
                EXPECT_NEAR(is.F[k], f, 1e-12 * std::max(1.0, std::fabs(f)));
                sum += is.F[k];
                sum_a += is.F[k] / a[k];
                sum_a2 += is.F[k] / (a[k] * a[k]);
            }
            double scale = std::max(1.0, is.F.cwiseAbs().maxCoeff());
            EXPECT_NEAR(sum, sign * st.y.squaredNorm(), 1e-12 * scale);
            EXPECT_NEAR(sum_a, 0, 1e-12 * scale);
            EXPECT_NEAR(is.J, -sum_a2, 1e-11 * scale);
            EXPECT_NEAR(is.J, joachimsthal(spec, st.x, st.y), 1e-12 * scale);

            for (double z : {-7.3, 0.37, 1.7, 11.0})
            {
                double pf = phi_z_partial_fractions(spec, is.F, z);
                EXPECT_NEAR(phi_z(spec, st.x, st.y, z), pf, 1e-11 * std::max(1.0, std::fabs(pf)));
                EXPECT_NEAR(phi_z_rational(spec, is, z), pf, 1e-9 * std::max(1.0, std::fabs(pf)));
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Kinds,
                         IntegralProperties,
                         ::testing::Values(QuadricKind::one_sheeted,
                                           QuadricKind::two_sheeted,
                                           QuadricKind::ellipsoid));

TEST(Classify, sign_pattern_matches_interval)
{
    auto spec = one_sheeted();
    Rng rng(23);
    int refined = 0;
    for (int i = 0; i < 300; ++i)
    {
        auto st = random_state(spec, rng, 3.0);
        auto cls = classify_state(spec, st);
        if (!cls.refined)
        {
            continue;
        }
        ++refined;
        EXPECT_TRUE(cls.c_interval_ok) << to_cstring(*cls.refined) << " c=" << cls.integrals.c[0];
        bool reflect = *cls.refined == CaseLabel::case_i;
        EXPECT_EQ(reflect, cls.label == CaseLabel::reflection);
        // c = a_0 a_1 a_2 J
        EXPECT_NEAR(cls.integrals.c[0], -2 * cls.integrals.J, 1e-9 * std::max(1.0, std::fabs(cls.integrals.J)));
    }
    EXPECT_GT(refined, 250);
}

TEST(Classify, two_sheeted_always_negative_f0)
{
    QuadricSpec spec({-1, 1, 2}, QuadricKind::two_sheeted);
    Rng rng(29);
    for (int i = 0; i < 200; ++i)
    {
        EXPECT_LT(integrals(spec, random_state(spec, rng, 4.0)).F[0], 0);
    }
}

TEST(EllipticCoords, interlace_and_solve)
{
    QuadricSpec spec({-2, 1, 3}, QuadricKind::one_sheeted);
    Rng rng(31);
    for (int i = 0; i < 100; ++i)
    {
        Vec x = random_point(spec, rng);
        auto ec = jacobi_elliptic_coords(spec, x);
        ASSERT_EQ(ec.z.size(), 2u);
        EXPECT_LE(ec.z[0], ec.z[1]);
        for (double z : ec.z)
        {
            // sum x_k^2 / (a_k - z) = 1
            double s = 0;
            for (int k = 0; k < 3; ++k)
            {
                s += x[k] * x[k] / (spec.axes()[k] - z);
            }
            EXPECT_NEAR(s, 1, 1e-8);
        }
    }
}

TEST(Poly, roots_round_trip)
{
    std::vector<double> roots{-3.5, -0.25, 0.125, 2, 7};
    auto c = poly_from_roots(roots);
    auto r = real_poly_roots(c);
    ASSERT_EQ(r.size(), roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i)
    {
        EXPECT_NEAR(r[i], roots[i], 1e-12);
        EXPECT_NEAR(poly_eval(c, roots[i]), 0, 1e-11);
    }
}
