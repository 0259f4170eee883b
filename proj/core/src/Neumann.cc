//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Neumann.cc
//---------------------------------------------------------------------------//
#include "quadscat/Neumann.hh"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "quadscat/Error.hh"
#include "quadscat/GeodesicFlow.hh"

namespace quadscat
{
namespace
{
//---------------------------------------------------------------------------//
void pack(NeumannState const& s, OdeState& y)
{
    int dim = s.q.size();
    y.resize(2 * dim);
    Eigen::Map<Vec>(y.data(), dim) = s.q;
    Eigen::Map<Vec>(y.data() + dim, dim) = s.p;
}

NeumannState unpack(OdeState const& y)
{
    int dim = static_cast<int>(y.size()) / 2;
    return {Eigen::Map<Vec const>(y.data(), dim),
            Eigen::Map<Vec const>(y.data() + dim, dim)};
}

//! Permutation sorting b ascending
std::vector<int> sort_order(Vec const& b)
{
    std::vector<int> idx(b.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return b[i] < b[j]; });
    return idx;
}

void require_distinct(Vec const& b)
{
    auto sb = std::vector<double>(b.data(), b.data() + b.size());
    std::sort(sb.begin(), sb.end());
    for (std::size_t i = 1; i < sb.size(); ++i)
    {
        require(sb[i] != sb[i - 1], ErrorKind::pole, "b entries must be distinct");
    }
}
}  // namespace

//---------------------------------------------------------------------------//
NeumannSpec NeumannSpec::from_quadric(QuadricSpec const& spec, int eps)
{
    require(eps == 1 || eps == -1, ErrorKind::invalid_argument, "eps must be +-1");
    NeumannSpec ns;
    ns.eps = eps;
    ns.b = spec.b() * static_cast<double>(eps);
    return ns;
}

std::vector<double> NeumannSpec::sorted_b() const
{
    std::vector<double> sb(b.data(), b.data() + b.size());
    std::sort(sb.begin(), sb.end());
    return sb;
}

//---------------------------------------------------------------------------//
/*!
 * The multiplier is divided by |q|^2 so that (q, p) is conserved exactly
 * off the sphere; with the bare multiplier the constraint grows like
 * exp(sqrt(2 nu) t).
 */
OdeRhs neumann_rhs(NeumannSpec const& nspec)
{
    Vec b = nspec.b;
    return [b](OdeState const& y, OdeState& dy, double) {
        int dim = b.size();
        dy.resize(2 * dim);
        double bqq = 0, pp = 0, qq = 0;
        for (int k = 0; k < dim; ++k)
        {
            bqq += b[k] * y[k] * y[k];
            pp += y[dim + k] * y[dim + k];
            qq += y[k] * y[k];
        }
        double nu = (bqq - pp) / qq;
        for (int k = 0; k < dim; ++k)
        {
            dy[k] = y[dim + k];
            dy[dim + k] = -b[k] * y[k] + nu * y[k];
        }
    };
}

void normalize_neumann_state(NeumannState& state)
{
    state.q /= state.q.norm();
    state.p -= state.q * state.q.dot(state.p);
}

NeumannTrajectory integrate_neumann(NeumannSpec const& nspec,
                                    NeumannState const& state0,
                                    double t0,
                                    double t1,
                                    OdeOptions const& opts)
{
    require(state0.q.size() == nspec.b.size() && state0.p.size() == nspec.b.size(),
            ErrorKind::dimension,
            "state size does not match b");
    NeumannTrajectory traj;
    traj.tau.push_back(t0);
    traj.states.push_back(state0);
    OdeHooks hooks;
    hooks.after_step = [&](double t, OdeState& y) {
        auto s = unpack(y);
        normalize_neumann_state(s);
        pack(s, y);
        traj.tau.push_back(t);
        traj.states.push_back(s);
        return true;
    };
    OdeState y;
    pack(state0, y);
    traj.stats = integrate_adaptive(neumann_rhs(nspec), y, t0, t1, opts, hooks);
    return traj;
}

NeumannTrajectory integrate_neumann_grid(NeumannSpec const& nspec,
                                         NeumannState const& state0,
                                         std::vector<double> const& times,
                                         OdeOptions const& opts)
{
    NeumannTrajectory traj;
    OdeState y;
    pack(state0, y);
    auto rhs = neumann_rhs(nspec);
    traj.stats = integrate_grid(rhs, y, times, opts, [&](std::size_t i, OdeState const& st) {
        traj.tau.push_back(times[i]);
        traj.states.push_back(unpack(st));
    });
    return traj;
}

//---------------------------------------------------------------------------//
double neumann_hamiltonian(NeumannSpec const& nspec, NeumannState const& state)
{
    return 0.5 * state.p.squaredNorm()
           + 0.5 * nspec.b.dot(state.q.cwiseProduct(state.q));
}

Vec neumann_integrals(NeumannSpec const& nspec, NeumannState const& state)
{
    require_distinct(nspec.b);
    auto const& b = nspec.b;
    auto const& q = state.q;
    auto const& p = state.p;
    int const dim = b.size();
    Vec F(dim);
    for (int k = 0; k < dim; ++k)
    {
        double f = q[k] * q[k];
        for (int j = 0; j < dim; ++j)
        {
            if (j != k)
            {
                double m = p[k] * q[j] - p[j] * q[k];
                f += m * m / (b[k] - b[j]);
            }
        }
        F[k] = f;
    }
    return F;
}

double
psi_u(NeumannSpec const& nspec, NeumannState const& state, double u, double pole_tol)
{
    double rpp = 0, rqq = 0, rpq = 0;
    for (int k = 0; k < nspec.b.size(); ++k)
    {
        double d = u - nspec.b[k];
        if (std::fabs(d) <= pole_tol * std::max(1.0, std::fabs(nspec.b[k])))
        {
            throw Error(ErrorKind::pole, "u coincides with some b_k");
        }
        rpp += state.p[k] * state.p[k] / d;
        rqq += state.q[k] * state.q[k] / d;
        rpq += state.p[k] * state.q[k] / d;
    }
    return (1 + rpp) * rqq - rpq * rpq;
}

double psi_u_partial_fractions(NeumannSpec const& nspec, Vec const& F, double u)
{
    double sum = 0;
    for (int k = 0; k < nspec.b.size(); ++k)
    {
        sum += F[k] / (u - nspec.b[k]);
    }
    return sum;
}

SpectralCurve spectral_curve_from_neumann(NeumannSpec const& nspec,
                                          NeumannState const& state)
{
    Vec F = neumann_integrals(nspec, state);
    int const dim = nspec.b.size();
    std::vector<double> num(dim, 0.0);
    for (int k = 0; k < dim; ++k)
    {
        std::vector<double> others;
        for (int j = 0; j < dim; ++j)
        {
            if (j != k)
            {
                others.push_back(nspec.b[j]);
            }
        }
        auto p = poly_from_roots(others);
        for (std::size_t i = 0; i < p.size(); ++i)
        {
            num[i] += F[k] * p[i];
        }
    }
    // Degree n with leading coefficient sum F = 1
    auto e = real_poly_roots(num);
    std::vector<double> b = nspec.sorted_b();
    std::vector<double> roots = e;
    roots.insert(roots.end(), b.begin(), b.end());
    return SpectralCurve(roots, b, e);
}

//---------------------------------------------------------------------------//
/*!
 * Roots of sum q_i^2/(u - b_i) in the gaps of the sorted b.
 *
 * Bisection runs on the cleared numerator f(u) = sum_i q_i^2 prod_{k != i}
 * (u - b_k), which has no poles and alternates in sign at the b_k, so
 * coordinates next to a pole are still resolved.
 */
SphereCoords sphere_elliptic_coords(NeumannSpec const& nspec, Vec const& q)
{
    require_distinct(nspec.b);
    auto order = sort_order(nspec.b);
    int const dim = nspec.b.size();
    std::vector<double> b(dim), q2(dim);
    for (int i = 0; i < dim; ++i)
    {
        b[i] = nspec.b[order[i]];
        q2[i] = q[order[i]] * q[order[i]];
    }
    auto f = [&](double u) {
        double v = 0;
        for (int i = 0; i < dim; ++i)
        {
            double t = q2[i];
            for (int k = 0; k < dim; ++k)
            {
                if (k != i)
                {
                    t *= u - b[k];
                }
            }
            v += t;
        }
        return v;
    };
    SphereCoords out;
    for (int i = 1; i < dim; ++i)
    {
        double lo = b[i - 1], hi = b[i];
        double flo = f(lo);
        double fhi = f(hi);
        double u;
        bool degen = false;
        if (flo == 0 || fhi == 0 || (flo > 0) == (fhi > 0))
        {
            u = flo == 0 ? lo : hi;
            degen = true;
        }
        else
        {
            bool const lo_positive = flo > 0;
            for (int iter = 0; iter < 200; ++iter)
            {
                double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi)
                {
                    break;
                }
                ((f(mid) > 0) == lo_positive ? lo : hi) = mid;
            }
            u = 0.5 * (lo + hi);
        }
        out.u.push_back(u);
        out.degenerate.push_back(degen);
    }
    return out;
}

Vec reconstruct_q_squared(NeumannSpec const& nspec, std::vector<double> const& u)
{
    auto const& b = nspec.b;
    int const dim = b.size();
    Vec q2(dim);
    for (int i = 0; i < dim; ++i)
    {
        double num = 1, den = 1;
        for (double uj : u)
        {
            num *= b[i] - uj;
        }
        for (int k = 0; k < dim; ++k)
        {
            if (k != i)
            {
                den *= b[i] - b[k];
            }
        }
        q2[i] = num / den;
    }
    return q2;
}

//---------------------------------------------------------------------------//
std::vector<double> dubrovin_rhs(SpectralCurve const& curve,
                                 std::vector<double> const& u,
                                 std::vector<int> const& signs,
                                 double collision_tol)
{
    require(u.size() == signs.size(),
            ErrorKind::invalid_argument,
            "one sign per coordinate");
    std::vector<double> rhs(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
    {
        double den = 1;
        for (std::size_t j = 0; j < u.size(); ++j)
        {
            if (j == i)
            {
                continue;
            }
            double diff = u[i] - u[j];
            if (std::fabs(diff) < collision_tol)
            {
                throw Error(ErrorKind::collision, "coordinates collide");
            }
            den *= diff;
        }
        double r = std::max(curve.R(u[i]), 0.0);
        rhs[i] = (signs[i] >= 0 ? 1 : -1) * std::sqrt(r) / den;
    }
    return rhs;
}

//---------------------------------------------------------------------------//
/*!
 * Sign-resolved points of the divisor from (p, q).
 *
 * The sum is expanded without dividing by u - b_k so that points near a
 * branch point b_k stay accurate.
 */
Divisor lifted_divisor(NeumannSpec const& nspec,
                       NeumannState const& state,
                       SpectralCurve const& curve)
{
    auto coords = sphere_elliptic_coords(nspec, state.q);
    auto const& b = nspec.b;
    int const dim = b.size();
    Divisor D;
    for (std::size_t j = 0; j < coords.u.size(); ++j)
    {
        require(!coords.degenerate[j],
                ErrorKind::degenerate_coordinate,
                "coordinate sits on a pole b_k");
        double u = coords.u[j];
        double sum = 0;
        for (int k = 0; k < dim; ++k)
        {
            double prod = state.p[k] * state.q[k];
            for (int l = 0; l < dim; ++l)
            {
                if (l != k)
                {
                    prod *= u - b[l];
                }
            }
            sum += prod;
        }
        DivisorPoint pt;
        pt.u = u;
        pt.w = -2 * sum;
        pt.oval = curve.oval_of(u, 1e-7);
        D.points.push_back(pt);
    }
    return D;
}

Divisor lifted_divisor(NeumannSpec const& nspec, NeumannState const& state)
{
    return lifted_divisor(nspec, state, spectral_curve_from_neumann(nspec, state));
}

//---------------------------------------------------------------------------//
double verify_knoerrer_identity(QuadricSpec const& spec,
                                PhaseState const& state,
                                std::vector<double> const& z_samples,
                                double iso_tol)
{
    double J = joachimsthal(spec, state.x, state.y);
    require(std::fabs(J) >= iso_tol,
            ErrorKind::isotropic,
            "identity needs a non-isotropic geodesic");
    int eps = J > 0 ? 1 : -1;
    auto ns = NeumannSpec::from_quadric(spec, eps);
    auto img = gauss_map(spec, state, J, iso_tol);
    NeumannState ps{img.q, img.p};
    Vec xdot = state.y / knoerrer_alpha(spec, state.x, J);
    double bx4 = std::pow(spec.b().cwiseProduct(state.x).squaredNorm(), 2);
    double worst = 0;
    for (double z : z_samples)
    {
        double lhs = bx4 * psi_u(ns, ps, eps / z);
        double rhs = phi_z(spec, state.x, xdot, z);
        worst = std::max(worst, std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)));
    }
    return worst;
}

//---------------------------------------------------------------------------//
}  // namespace quadscat
