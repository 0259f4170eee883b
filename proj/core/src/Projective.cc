//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Projective.cc
//---------------------------------------------------------------------------//
#include "quadscat/Projective.hh"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quadscat/Error.hh"

namespace quadscat
{
namespace
{
//---------------------------------------------------------------------------//
double chart_sign(QuadricSpec const& spec)
{
    require(spec.kind() == QuadricKind::one_sheeted
                || spec.kind() == QuadricKind::two_sheeted,
            ErrorKind::kind,
            "charts at infinity are defined for hyperboloids");
    // Coefficient of y_{n+1}^2 in the chart equation and metric
    return spec.kind() == QuadricKind::one_sheeted ? -1 : 1;
}

double chart_weight(QuadricSpec const& spec, Vec const& y)
{
    auto const& b = spec.b();
    double w = b[0] * b[0];
    for (int i = 1; i <= spec.n(); ++i)
    {
        w += b[i] * b[i] * y[i - 1] * y[i - 1];
    }
    return w;
}

Vec chart_gradient(QuadricSpec const& spec, Vec const& y)
{
    int const n = spec.n();
    Vec g(n + 1);
    for (int i = 1; i <= n; ++i)
    {
        g[i - 1] = 2 * spec.b()[i] * y[i - 1];
    }
    g[n] = 2 * chart_sign(spec) * y[n];
    return g;
}

//! Diagonal of eta' = diag(b_1..b_n, sign)
Vec chart_eta(QuadricSpec const& spec)
{
    int const n = spec.n();
    Vec eta(n + 1);
    for (int i = 1; i <= n; ++i)
    {
        eta[i - 1] = spec.b()[i];
    }
    eta[n] = chart_sign(spec);
    return eta;
}
}  // namespace

//---------------------------------------------------------------------------//
ProjectivePoint ProjectivePoint::from(Vec const& v)
{
    double norm = v.norm();
    require(norm > 0, ErrorKind::invalid_argument, "zero homogeneous vector");
    ProjectivePoint p{v / norm};
    for (int i = 0; i < p.xi.size(); ++i)
    {
        if (p.xi[i] != 0)
        {
            if (p.xi[i] < 0)
            {
                p.xi = -p.xi;
            }
            break;
        }
    }
    return p;
}

double ProjectivePoint::distance(ProjectivePoint const& other) const
{
    return std::min((xi - other.xi).norm(), (xi + other.xi).norm());
}

//---------------------------------------------------------------------------//
void fill_signature(MetricTensor& m, double tol)
{
    Eigen::SelfAdjointEigenSolver<Mat> es(m.g);
    double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    m.positive = m.negative = m.zero = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
    {
        double e = es.eigenvalues()[i];
        if (e > tol * scale)
        {
            ++m.positive;
        }
        else if (e < -tol * scale)
        {
            ++m.negative;
        }
        else
        {
            ++m.zero;
        }
    }
}

MetricTensor metric1_at(Vec const& b, Vec const& x)
{
    double n2 = b.cwiseProduct(x).squaredNorm();
    require(n2 > 0, ErrorKind::singular_point, "metric is singular where Bx = 0");
    MetricTensor m;
    m.g = (b / n2).asDiagonal();
    fill_signature(m);
    return m;
}

Vec involution_sigma(Vec const& b, Vec const& x, double tol)
{
    double q = b.dot(x.cwiseProduct(x));
    require(std::fabs(q) > tol * std::max(1.0, x.squaredNorm()),
            ErrorKind::asymptotic_cone,
            "involution is undefined on the asymptotic cone");
    return x / q;
}

//! D sigma v = v/(Bx,x) - 2 x (Bx,v)/(Bx,x)^2
Mat involution_jacobian(Vec const& b, Vec const& x)
{
    double q = b.dot(x.cwiseProduct(x));
    require(q != 0, ErrorKind::asymptotic_cone, "involution is undefined on the cone");
    int dim = x.size();
    Mat J = Mat::Identity(dim, dim) / q;
    J -= 2 * x * b.cwiseProduct(x).transpose() / (q * q);
    return J;
}

//---------------------------------------------------------------------------//
/*!
 * g = gamma^2 diag(b) with gamma = |Bx|^{-1}, so with f = log gamma
 * \verbatim
   Gamma^i_{jk} = delta^i_j f_k + delta^i_k f_j - delta_{jk} (b_j/b_i) f_i
 * \endverbatim
 * and f_k = -b_k^2 x_k / |Bx|^2.
 */
Christoffel christoffel(Vec const& b, Vec const& x)
{
    int const dim = x.size();
    double n2 = b.cwiseProduct(x).squaredNorm();
    require(n2 > 0, ErrorKind::singular_point, "metric is singular where Bx = 0");
    Vec df(dim);
    for (int k = 0; k < dim; ++k)
    {
        df[k] = -b[k] * b[k] * x[k] / n2;
    }
    Christoffel G(dim);
    for (int i = 0; i < dim; ++i)
    {
        for (int j = 0; j < dim; ++j)
        {
            for (int k = 0; k < dim; ++k)
            {
                double v = 0;
                if (i == j)
                {
                    v += df[k];
                }
                if (i == k)
                {
                    v += df[j];
                }
                if (j == k)
                {
                    v -= b[j] / b[i] * df[i];
                }
                G(i, j, k) = v;
            }
        }
    }
    return G;
}

Vec Christoffel::contract(Vec const& v) const
{
    Vec out = Vec::Zero(dim_);
    for (int i = 0; i < dim_; ++i)
    {
        for (int j = 0; j < dim_; ++j)
        {
            for (int k = 0; k < dim_; ++k)
            {
                out[i] += (*this)(i, j, k) * v[j] * v[k];
            }
        }
    }
    return out;
}

//---------------------------------------------------------------------------//
/*!
 * Contracted form x'' = -2 (gamma'/gamma) x' - ((Bx', x')/|Bx|^2) Bx with
 * gamma'/gamma = -(Bx, Bx')/|Bx|^2.
 */
OdeRhs metric1_rhs(Vec const& b)
{
    return [b](OdeState const& s, OdeState& ds, double) {
        int const dim = b.size();
        ds.resize(2 * dim);
        double n2 = 0, bxbv = 0, bvv = 0;
        for (int k = 0; k < dim; ++k)
        {
            double bx = b[k] * s[k];
            n2 += bx * bx;
            bxbv += bx * b[k] * s[dim + k];
            bvv += b[k] * s[dim + k] * s[dim + k];
        }
        if (!(n2 > 0))
        {
            throw Error(ErrorKind::singular_point, "metric is singular where Bx = 0");
        }
        double gdot = -bxbv / n2;
        for (int k = 0; k < dim; ++k)
        {
            ds[k] = s[dim + k];
            ds[dim + k] = -2 * gdot * s[dim + k] - bvv / n2 * b[k] * s[k];
        }
    };
}

Metric1Trajectory integrate_metric1_geodesic(Vec const& b,
                                             Vec const& x0,
                                             Vec const& v0,
                                             std::vector<double> const& times,
                                             OdeOptions const& opts)
{
    int const dim = b.size();
    OdeState s(2 * dim);
    Eigen::Map<Vec>(s.data(), dim) = x0;
    Eigen::Map<Vec>(s.data() + dim, dim) = v0;
    Metric1Trajectory traj;
    traj.stats = integrate_grid(metric1_rhs(b), s, times, opts, [&](std::size_t i, OdeState const& st) {
        traj.t.push_back(times[i]);
        traj.x.push_back(Eigen::Map<Vec const>(st.data(), dim));
        traj.v.push_back(Eigen::Map<Vec const>(st.data() + dim, dim));
    });
    return traj;
}

//---------------------------------------------------------------------------//
Vec chart_from_affine(Vec const& x)
{
    require(x[0] != 0, ErrorKind::chart, "x_0 = 0 is outside the chart");
    int const n = x.size() - 1;
    Vec y(n + 1);
    for (int i = 1; i <= n; ++i)
    {
        y[i - 1] = x[i] / x[0];
    }
    y[n] = 1 / x[0];
    return y;
}

Vec chart_velocity_from_affine(Vec const& x, Vec const& v)
{
    require(x[0] != 0, ErrorKind::chart, "x_0 = 0 is outside the chart");
    int const n = x.size() - 1;
    Vec yd(n + 1);
    for (int i = 1; i <= n; ++i)
    {
        yd[i - 1] = (v[i] * x[0] - x[i] * v[0]) / (x[0] * x[0]);
    }
    yd[n] = -v[0] / (x[0] * x[0]);
    return yd;
}

Vec affine_from_chart(Vec const& y)
{
    int const n = y.size() - 1;
    require(y[n] != 0, ErrorKind::chart, "point at infinity has no affine image");
    Vec x(n + 1);
    x[0] = 1 / y[n];
    for (int i = 1; i <= n; ++i)
    {
        x[i] = y[i - 1] / y[n];
    }
    return x;
}

double chart_equation(QuadricSpec const& spec, Vec const& y)
{
    int const n = spec.n();
    double v = spec.b()[0];
    for (int i = 1; i <= n; ++i)
    {
        v += spec.b()[i] * y[i - 1] * y[i - 1];
    }
    return v - (-chart_sign(spec)) * y[n] * y[n];
}

MetricTensor chart_ambient_metric(QuadricSpec const& spec, Vec const& y)
{
    MetricTensor m;
    m.g = (chart_eta(spec) / chart_weight(spec, y)).asDiagonal();
    fill_signature(m);
    return m;
}

Mat chart_tangent_basis(QuadricSpec const& spec, Vec const& y)
{
    Vec g = chart_gradient(spec, y);
    require(g.norm() > 0, ErrorKind::chart, "chart equation is singular here");
    // Orthogonal complement of the gradient via full QR
    Eigen::HouseholderQR<Mat> qr(g);
    Mat Q = qr.householderQ();
    return Q.rightCols(g.size() - 1);
}

MetricTensor
restricted_infinity_metric(QuadricSpec const& spec, Vec const& y, double tol)
{
    require(y.size() == spec.n() + 1, ErrorKind::dimension, "chart point size");
    double res = chart_equation(spec, y);
    require(std::fabs(res) < tol * std::max(1.0, y.squaredNorm()),
            ErrorKind::chart,
            "point violates the chart equation");
    Mat T = chart_tangent_basis(spec, y);
    MetricTensor m;
    m.g = T.transpose() * chart_ambient_metric(spec, y).g * T;
    m.g = 0.5 * (m.g + m.g.transpose());
    fill_signature(m);
    return m;
}

//---------------------------------------------------------------------------//
/*!
 * Constrained geodesic of the chart metric G = eta'/W.
 *
 * The G-normal of the quadric is proportional to y itself, so
 * y'' = -Gamma(y', y') + mu y with mu keeping the chart equation.
 */
ChartTrajectory integrate_chart_geodesic(QuadricSpec const& spec,
                                         Vec const& y0,
                                         Vec const& ydot0,
                                         std::vector<double> const& times,
                                         OdeOptions const& opts)
{
    int const dim = spec.n() + 1;
    Vec const eta = chart_eta(spec);
    auto const& b = spec.b();
    OdeRhs rhs = [&](OdeState const& s, OdeState& ds, double) {
        ds.resize(2 * dim);
        Eigen::Map<Vec const> y(s.data(), dim);
        Eigen::Map<Vec const> v(s.data() + dim, dim);
        double W = chart_weight(spec, y);
        Vec df = Vec::Zero(dim);
        for (int i = 1; i < dim; ++i)
        {
            df[i - 1] = -b[i] * b[i] * y[i - 1] / W;
        }
        double dfv = df.dot(v);
        double ev = eta.dot(v.cwiseProduct(v));
        Vec gam = 2 * dfv * v - ev * df.cwiseQuotient(eta);
        Vec grad = chart_gradient(spec, y);
        double mu = (grad.dot(gam) - 2 * ev) / grad.dot(y);
        for (int i = 0; i < dim; ++i)
        {
            ds[i] = v[i];
            ds[dim + i] = -gam[i] + mu * y[i];
        }
    };
    ChartTrajectory traj;
    OdeState s(2 * dim);
    Eigen::Map<Vec>(s.data(), dim) = y0;
    Eigen::Map<Vec>(s.data() + dim, dim) = ydot0;
    traj.stats = integrate_grid(rhs, s, times, opts, [&](std::size_t i, OdeState const& st) {
        Vec y = Eigen::Map<Vec const>(st.data(), dim);
        traj.t.push_back(times[i]);
        traj.y.push_back(y);
        traj.ydot.push_back(Eigen::Map<Vec const>(st.data() + dim, dim));
        traj.max_constraint_drift
            = std::max(traj.max_constraint_drift, std::fabs(chart_equation(spec, y)));
    });
    return traj;
}

//---------------------------------------------------------------------------//
ProjectivePoint projective_knoerrer(QuadricSpec const& spec, ProjectivePoint const& xi)
{
    int const dim = spec.n() + 1;
    require(xi.xi.size() == dim + 1, ErrorKind::dimension, "homogeneous point size");
    Vec v(dim);
    for (int k = 0; k < dim; ++k)
    {
        v[k] = spec.b()[k] * xi.xi[k];
    }
    return ProjectivePoint::from(v);
}

ProjectivePoint projective_from_affine(Vec const& x)
{
    Vec xi(x.size() + 1);
    xi.head(x.size()) = x;
    xi[x.size()] = 1;
    return ProjectivePoint::from(xi);
}

ProjectivePoint projective_from_chart(Vec const& y)
{
    int const n = y.size() - 1;
    Vec xi(n + 2);
    xi[0] = 1;
    for (int i = 1; i <= n; ++i)
    {
        xi[i] = y[i - 1];
    }
    xi[n + 1] = y[n];
    return ProjectivePoint::from(xi);
}

//---------------------------------------------------------------------------//
namespace
{
double point_to_polyline(Vec const& p, std::vector<Vec> const& line)
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < line.size(); ++i)
    {
        Vec d = line[i + 1] - line[i];
        double len2 = d.squaredNorm();
        double t = len2 > 0 ? std::clamp((p - line[i]).dot(d) / len2, 0.0, 1.0) : 0.0;
        best = std::min(best, (p - line[i] - t * d).norm());
    }
    if (line.size() == 1)
    {
        best = (p - line[0]).norm();
    }
    return best;
}
}  // namespace

double hausdorff_distance(std::vector<Vec> const& a, std::vector<Vec> const& b)
{
    require(!a.empty() && !b.empty(), ErrorKind::invalid_argument, "empty curve");
    double h = 0;
    for (auto const& p : a)
    {
        h = std::max(h, point_to_polyline(p, b));
    }
    for (auto const& p : b)
    {
        h = std::max(h, point_to_polyline(p, a));
    }
    return h;
}

//---------------------------------------------------------------------------//
}  // namespace quadscat
