//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadscat/Projective.hh
//---------------------------------------------------------------------------//
#pragma once

#include <vector>

#include "Ode.hh"
#include "Quadric.hh"

namespace quadscat
{
//---------------------------------------------------------------------------//
//! Metric at a point, with its signature
struct MetricTensor
{
    Mat g;
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

//! Homogeneous coordinates, unit norm, first nonzero entry positive
struct ProjectivePoint
{
    Vec xi;

    static ProjectivePoint from(Vec const& v);
    // Sign-free distance between two classes
    double distance(ProjectivePoint const& other) const;
};

//! Gamma^i_{jk} stored densely
class Christoffel
{
  public:
    explicit Christoffel(int dim) : dim_(dim), data_(dim * dim * dim, 0.0) {}

    int dim() const { return dim_; }
    double& operator()(int i, int j, int k) { return data_[(i * dim_ + j) * dim_ + k]; }
    double operator()(int i, int j, int k) const
    {
        return data_[(i * dim_ + j) * dim_ + k];
    }
    //! Gamma^i_{jk} v^j v^k
    Vec contract(Vec const& v) const;

  private:
    int dim_;
    std::vector<double> data_;
};

struct Metric1Trajectory
{
    std::vector<double> t;
    std::vector<Vec> x;
    std::vector<Vec> v;
    OdeStats stats;
};

//! Trajectory in the chart at infinity, coordinates (y_1..y_{n+1})
struct ChartTrajectory
{
    std::vector<double> t;
    std::vector<Vec> y;
    std::vector<Vec> ydot;
    OdeStats stats;
    double max_constraint_drift = 0;
};

//---------------------------------------------------------------------------//
// Signature count of a symmetric matrix
void fill_signature(MetricTensor& m, double tol = 1e-12);

// g = diag(b) / |Bx|^2
MetricTensor metric1_at(Vec const& b, Vec const& x);

// x / (Bx, x)
Vec involution_sigma(Vec const& b, Vec const& x, double tol = 1e-12);

// Jacobian of the involution
Mat involution_jacobian(Vec const& b, Vec const& x);

// Closed-form Christoffel symbols of the conformally flat metric
Christoffel christoffel(Vec const& b, Vec const& x);

// Geodesic equation x'' = -Gamma(x', x')
OdeRhs metric1_rhs(Vec const& b);

Metric1Trajectory integrate_metric1_geodesic(Vec const& b,
                                             Vec const& x0,
                                             Vec const& v0,
                                             std::vector<double> const& times,
                                             OdeOptions const& opts = {});

// Chart xi_0 != 0: y_k = xi_k/xi_0 (k = 1..n), y_{n+1} = xi_{n+1}/xi_0
Vec chart_from_affine(Vec const& x);
Vec chart_velocity_from_affine(Vec const& x, Vec const& v);
Vec affine_from_chart(Vec const& y);

// b_0 + sum b_i y_i^2 -/+ y_{n+1}^2 (one-/two-sheeted)
double chart_equation(QuadricSpec const& spec, Vec const& y);

// Ambient chart tensor diag(b_1..b_n, -/+1) / (b_0^2 + sum b_i^2 y_i^2)
MetricTensor chart_ambient_metric(QuadricSpec const& spec, Vec const& y);

// Tensor restricted to the tangent space of the quadric, orthonormal basis
MetricTensor restricted_infinity_metric(QuadricSpec const& spec,
                                        Vec const& y,
                                        double tol = 1e-10);

// Euclidean-orthonormal basis (columns) of the tangent space in the chart
Mat chart_tangent_basis(QuadricSpec const& spec, Vec const& y);

// Geodesic of the restricted metric in the chart at infinity
ChartTrajectory integrate_chart_geodesic(QuadricSpec const& spec,
                                         Vec const& y0,
                                         Vec const& ydot0,
                                         std::vector<double> const& times,
                                         OdeOptions const& opts = {});

// [B (xi_0..xi_n)] in RP^n
ProjectivePoint projective_knoerrer(QuadricSpec const& spec, ProjectivePoint const& xi);

// Homogeneous point of an affine point x
ProjectivePoint projective_from_affine(Vec const& x);

// Homogeneous point of a chart point y
ProjectivePoint projective_from_chart(Vec const& y);

// Symmetric Hausdorff distance between polylines (point to segment)
double hausdorff_distance(std::vector<Vec> const& a, std::vector<Vec> const& b);

//---------------------------------------------------------------------------//
}  // namespace quadscat
