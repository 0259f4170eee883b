//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Quantum1d.cc
//---------------------------------------------------------------------------//
#include "quadscat/Quantum1d.hh"

#include <algorithm>
#include <cmath>
#include <complex>

#include "quadscat/Error.hh"
#include "quadscat/Quadrature.hh"

namespace quadscat
{
namespace
{
//---------------------------------------------------------------------------//
GaussLegendre const& tau_rule()
{
    static GaussLegendre const rule(20);
    return rule;
}

//! Smallest rho with |V| <= tol for all larger rho (V decays monotonically)
double find_rho_max(SymmetricSpec const& spec,
                    double bound,
                    TransmissionOptions const& opts)
{
    auto small = [&](double r) {
        return std::fabs(potential_V(spec, r, opts.angular_term, opts.curvature_term))
               <= bound;
    };
    double hi = 1;
    while (!small(hi) || !small(2 * hi))
    {
        hi *= 2;
        if (hi > 1e12)
        {
            throw Error(ErrorKind::domain_too_small, "potential does not decay");
        }
    }
    double lo = hi / 2;
    if (small(lo))
    {
        return std::max(lo, 1.0);
    }
    for (int i = 0; i < 60; ++i)
    {
        double mid = 0.5 * (lo + hi);
        (small(mid) ? hi : lo) = mid;
    }
    return hi;
}

//! Inverse of tau(rho) for rho >= 0
double rho_of_tau(SymmetricSpec const& spec, double tau)
{
    double hi = tau / liouville_alpha(spec, 0) + 1;
    double lo = 0;
    while (liouville_tau(spec, hi) < tau)
    {
        hi *= 2;
    }
    for (int i = 0; i < 100 && hi - lo > 1e-14 * hi; ++i)
    {
        double mid = 0.5 * (lo + hi);
        (liouville_tau(spec, mid) < tau ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

//! Fourth-order central differences (first and second derivative)
void central_diff(std::vector<double> const& f,
                  double h,
                  std::size_t j,
                  double& d1,
                  double& d2)
{
    d1 = (f[j - 2] - 8 * f[j - 1] + 8 * f[j + 1] - f[j + 2]) / (12 * h);
    d2 = (-f[j - 2] + 16 * f[j - 1] - 30 * f[j] + 16 * f[j + 1] - f[j + 2])
         / (12 * h * h);
}

std::vector<double> uniform(double lo, double hi, int n)
{
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i)
    {
        out[i] = lo + (hi - lo) * i / (n - 1);
    }
    out.back() = hi;
    return out;
}
}  // namespace

//---------------------------------------------------------------------------//
void SymmetricSpec::validate() const
{
    require(a > 0 && c > 0, ErrorKind::invalid_argument, "a and c must be positive");
    require(k >= 0, ErrorKind::invalid_argument, "k must be a nonnegative integer");
}

double liouville_alpha(SymmetricSpec const& spec, double rho)
{
    double r2 = rho * rho;
    return std::sqrt(2 * (spec.c * spec.c + spec.b2() * r2) / (1 + r2));
}

/*!
 * Panels [0,1], [1,2], [2,4], ... keep the quadrature accurate for large rho
 * where alpha is nearly constant.
 */
double liouville_tau(SymmetricSpec const& spec, double rho)
{
    double r = std::fabs(rho);
    auto alpha = [&spec](double x) { return liouville_alpha(spec, x); };
    double sum = 0;
    double lo = 0;
    double hi = std::min(r, 1.0);
    while (lo < r)
    {
        sum += tau_rule()(alpha, lo, hi);
        lo = hi;
        hi = std::min(r, 2 * hi);
    }
    return std::copysign(sum, rho);
}

LiouvilleGrid liouville_grid(SymmetricSpec const& spec, double rho_max, int n_points)
{
    spec.validate();
    require(rho_max > 0, ErrorKind::invalid_argument, "rho_max must be positive");
    require(n_points >= 16, ErrorKind::invalid_argument, "need at least 16 points");
    LiouvilleGrid g;
    g.rho = uniform(-rho_max, rho_max, n_points);
    g.tau.resize(n_points);
    for (int i = 0; i < n_points; ++i)
    {
        // Mirror so the grid is exactly odd
        int j = n_points - 1 - i;
        if (j < i)
        {
            g.rho[i] = -g.rho[j];
            g.tau[i] = -g.tau[j];
        }
        else
        {
            g.tau[i] = liouville_tau(spec, g.rho[i]);
        }
    }
    return g;
}

double potential_V(SymmetricSpec const& spec, double rho)
{
    return potential_V(spec, rho, true, true);
}

double potential_V(SymmetricSpec const& spec,
                   double rho,
                   bool angular_term,
                   bool curvature_term)
{
    double const a2 = spec.a * spec.a;
    double const c2 = spec.c * spec.c;
    double const b2 = spec.b2();
    double const r2 = rho * rho;
    double v = 0;
    if (angular_term)
    {
        v += double(spec.k) * spec.k / (2 * a2 * (1 + r2));
    }
    if (curvature_term)
    {
        double w = c2 + b2 * r2;
        v -= a2 * (6 * b2 * r2 * r2 + (3 * b2 + c2) * r2 - 2 * c2)
             / (8 * w * w * w * (1 + r2));
    }
    return v;
}

//---------------------------------------------------------------------------//
/*!
 * Two real solutions are started at the far boundary with unit Wronskian
 * and integrated in rho across the barrier. The transmitted wave is their
 * combination; its amplitudes at the near boundary give R and T. Constant
 * phase factors drop out of the probabilities.
 */
TransmissionResult transmission(SymmetricSpec const& spec,
                                double E,
                                TransmissionOptions const& opts,
                                Incidence side)
{
    spec.validate();
    require(E > 0, ErrorKind::invalid_argument, "energy must be positive");
    double const bound = opts.v_tol * E;

    TransmissionResult result;
    if (opts.tau_max > 0)
    {
        result.tau_max = opts.tau_max;
        result.rho_max = rho_of_tau(spec, opts.tau_max);
        double v = potential_V(
            spec, result.rho_max, opts.angular_term, opts.curvature_term);
        require(std::fabs(v) <= bound,
                ErrorKind::domain_too_small,
                "potential is not negligible at the boundary");
    }
    else
    {
        result.rho_max = find_rho_max(spec, bound, opts);
        result.tau_max = liouville_tau(spec, result.rho_max);
    }
    require(result.tau_max <= opts.tau_cap,
            ErrorKind::domain_too_small,
            "required boundary exceeds the tau cap");

    double const kw = std::sqrt(E);
    OdeRhs rhs = [&](OdeState const& s, OdeState& ds, double rho) {
        double al = liouville_alpha(spec, rho);
        double q = al
                   * (potential_V(spec, rho, opts.angular_term, opts.curvature_term)
                      - E);
        ds.resize(4);
        ds[0] = al * s[1];
        ds[1] = q * s[0];
        ds[2] = al * s[3];
        ds[3] = q * s[2];
    };

    // Transmitted wave travels away from the far side: phi' = +-ik phi
    double const far = side == Incidence::left ? result.rho_max : -result.rho_max;
    double const dir = side == Incidence::left ? 1 : -1;
    OdeState s{1, 0, 0, 1};
    result.stats = integrate_adaptive(rhs, s, far, -far, opts.ode);

    using cd = std::complex<double>;
    cd const ik(0, dir * kw);
    cd phi = s[0] + ik * s[2];
    cd dphi = s[1] + ik * s[3];
    cd incoming = 0.5 * (phi + dphi / ik);
    cd reflected = 0.5 * (phi - dphi / ik);
    double ai = std::norm(incoming);
    result.T = 1 / ai;
    result.R = std::norm(reflected) / ai;
    return result;
}

double transmission_half_crossing(SymmetricSpec const& spec,
                                  double E_lo,
                                  double E_hi,
                                  TransmissionOptions const& opts,
                                  double tol)
{
    auto f = [&](double E) { return transmission(spec, E, opts).T - 0.5; };
    double flo = f(E_lo);
    double fhi = f(E_hi);
    require(flo * fhi <= 0, ErrorKind::interval, "T - 1/2 does not change sign");
    while (E_hi - E_lo > tol * std::max(1.0, E_hi))
    {
        double mid = 0.5 * (E_lo + E_hi);
        double fm = f(mid);
        if ((fm < 0) == (flo < 0))
        {
            E_lo = mid;
            flo = fm;
        }
        else
        {
            E_hi = mid;
        }
    }
    return 0.5 * (E_lo + E_hi);
}

//---------------------------------------------------------------------------//
/*!
 * Obtained from the radial equation by rho = sinh u, multiplying through by
 * -4 cosh^2 u (c^2 + b^2 sinh^2 u) and expanding in cosh 2u, cosh 4u.
 */
InceCoefficients ince_coefficients(SymmetricSpec const& spec, double E)
{
    double const a2 = spec.a * spec.a;
    double const c2 = spec.c * spec.c;
    double const b2 = spec.b2();
    double const k2 = double(spec.k) * spec.k;
    InceCoefficients r;
    r.alpha = E * (2 * c2 - b2 / 2) - k2 / a2 * (2 * c2 - b2);
    r.beta = 2 * c2 * E - k2 * b2 / a2;
    r.gamma = b2 * E / 2;
    return r;
}

//---------------------------------------------------------------------------//
double liouville_roundtrip_residual(SymmetricSpec const& spec,
                                    double E,
                                    double rho_max,
                                    int n_points)
{
    spec.validate();
    require(n_points >= 16, ErrorKind::invalid_argument, "need at least 16 points");
    auto rho = uniform(-rho_max, rho_max, n_points);
    OdeRhs rhs = [&](OdeState const& s, OdeState& ds, double r) {
        double al = liouville_alpha(spec, r);
        ds.resize(2);
        ds[0] = al * s[1];
        ds[1] = al * (potential_V(spec, r) - E) * s[0];
    };
    OdeState s{1, 0.3};
    std::vector<double> psi(n_points);
    integrate_grid(rhs, s, rho, OdeOptions{1e-13, 1e-15}, [&](std::size_t i, OdeState const& st) {
        psi[i] = st[0] / std::sqrt(liouville_alpha(spec, rho[i]));
    });

    double const h = rho[1] - rho[0];
    double const a2 = spec.a * spec.a;
    double const c2 = spec.c * spec.c;
    double scale = 0;
    for (double p : psi)
    {
        scale = std::max(scale, std::fabs(p));
    }
    double worst = 0;
    for (std::size_t j = 2; j + 2 < psi.size(); ++j)
    {
        double d1, d2;
        central_diff(psi, h, j, d1, d2);
        double r2 = rho[j] * rho[j];
        double lk = 0.5
                    * (-(1 + r2) / (c2 + spec.b2() * r2) * d2
                       + double(spec.k) * spec.k / (a2 * (1 + r2)) * psi[j]);
        worst = std::max(worst, std::fabs(lk - E * psi[j]));
    }
    return worst / scale;
}

double ince_residual(SymmetricSpec const& spec,
                     double E,
                     InceCoefficients const& coeffs,
                     double u_max,
                     int n_points)
{
    spec.validate();
    require(n_points >= 16, ErrorKind::invalid_argument, "need at least 16 points");
    double const a2 = spec.a * spec.a;
    double const c2 = spec.c * spec.c;
    double const b2 = spec.b2();
    double const k2 = double(spec.k) * spec.k;

    // Radial equation in rho, sampled on a uniform u grid
    auto u = uniform(-u_max, u_max, n_points);
    std::vector<double> rho(n_points);
    std::transform(u.begin(), u.end(), rho.begin(), [](double x) { return std::sinh(x); });
    OdeRhs rhs = [&](OdeState const& s, OdeState& ds, double r) {
        double r2 = r * r;
        ds.resize(2);
        ds[0] = s[1];
        ds[1] = (c2 + b2 * r2) / (1 + r2) * (k2 / (a2 * (1 + r2)) - 2 * E) * s[0];
    };
    OdeState s{1, 0.3};
    std::vector<double> psi(n_points);
    integrate_grid(rhs, s, rho, OdeOptions{1e-13, 1e-15}, [&](std::size_t i, OdeState const& st) {
        psi[i] = st[0];
    });

    double const h = u[1] - u[0];
    double worst = 0;
    double scale = 0;
    for (std::size_t j = 2; j + 2 < psi.size(); ++j)
    {
        double d1, d2;
        central_diff(psi, h, j, d1, d2);
        double t1 = (1 + std::cosh(2 * u[j])) * d2;
        double t2 = -std::sinh(2 * u[j]) * d1;
        double t3 = (coeffs.alpha + coeffs.beta * std::cosh(2 * u[j])
                     + coeffs.gamma * std::cosh(4 * u[j]))
                    * psi[j];
        worst = std::max(worst, std::fabs(t1 + t2 + t3));
        scale = std::max(scale, std::fabs(t1) + std::fabs(t2) + std::fabs(t3));
    }
    return worst / scale;
}

//---------------------------------------------------------------------------//
}  // namespace quadscat
