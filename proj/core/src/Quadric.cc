//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 quadscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Quadric.cc
//---------------------------------------------------------------------------//
#include "quadscat/Quadric.hh"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quadscat/Error.hh"

namespace quadscat
{
namespace
{
//---------------------------------------------------------------------------//
void require_distinct(QuadricSpec const& spec)
{
    require(!spec.has_repeated_axes(),
            ErrorKind::pole,
            "operation needs pairwise distinct axes");
}

double square(double v)
{
    return v * v;
}

//---------------------------------------------------------------------------//
/*!
 * Bisect g (decreasing) on [lo, hi] given g(lo) > 0 > g(hi), then polish.
 */
template<class G, class DG>
double bisect_decreasing(G&& g, DG&& dg, double lo, double hi)
{
    for (int iter = 0; iter < 400 && hi - lo > 1e-13 * std::max(1.0, std::fabs(lo));
         ++iter)
    {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
        {
            break;
        }
        if (g(mid) > 0)
        {
            lo = mid;
        }
        else
        {
            hi = mid;
        }
    }
    double z = 0.5 * (lo + hi);
    double gz = g(z);
    double d = dg(z);
    if (d != 0 && std::isfinite(d))
    {
        double zn = z - gz / d;
        if (zn > lo && zn < hi && std::fabs(g(zn)) < std::fabs(gz))
        {
            z = zn;
        }
    }
    return z;
}
}  // namespace

//---------------------------------------------------------------------------//
char const* to_cstring(QuadricKind kind)
{
    switch (kind)
    {
        case QuadricKind::one_sheeted:
            return "one-sheeted";
        case QuadricKind::two_sheeted:
            return "two-sheeted";
        case QuadricKind::ellipsoid:
            return "ellipsoid";
        case QuadricKind::cone:
            return "cone";
    }
    return "?";
}

char const* to_cstring(CaseLabel label)
{
    switch (label)
    {
        case CaseLabel::transmission:
            return "Transmission";
        case CaseLabel::reflection:
            return "Reflection";
        case CaseLabel::critical:
            return "Critical";
        case CaseLabel::isotropic:
            return "Isotropic";
        case CaseLabel::case_i:
            return "CaseI";
        case CaseLabel::case_ii:
            return "CaseII";
        case CaseLabel::case_iii:
            return "CaseIII";
        case CaseLabel::case_iv:
            return "CaseIV";
    }
    return "?";
}

//---------------------------------------------------------------------------//
/*!
 * Validate axes against the kind.
 */
QuadricSpec::QuadricSpec(std::vector<double> axes, QuadricKind kind)
    : kind_(kind)
{
    require(axes.size() >= 2, ErrorKind::invalid_argument, "need n >= 1");
    for (double a : axes)
    {
        require(std::isfinite(a) && a != 0,
                ErrorKind::invalid_argument,
                "axes must be finite and nonzero");
    }
    for (std::size_t i = 1; i < axes.size(); ++i)
    {
        require(axes[i] >= axes[i - 1],
                ErrorKind::invalid_argument,
                "axes must be increasing");
        if (axes[i] == axes[i - 1])
        {
            repeated_ = true;
        }
    }
    if (kind == QuadricKind::ellipsoid)
    {
        require(axes[0] > 0,
                ErrorKind::invalid_argument,
                "ellipsoid axes must be positive");
    }
    else
    {
        require(axes[0] < 0 && axes[1] > 0,
                ErrorKind::invalid_argument,
                "hyperboloid and cone axes need a_0 < 0 < a_1");
    }
    // Only equal positive axes (surfaces of revolution) are representable
    require(!repeated_ || axes[0] != axes[1],
            ErrorKind::invalid_argument,
            "repeated a_0");

    axes_ = Eigen::Map<Vec const>(axes.data(), axes.size());
    b_ = axes_.cwiseInverse();
}

double QuadricSpec::rhs() const
{
    switch (kind_)
    {
        case QuadricKind::one_sheeted:
        case QuadricKind::ellipsoid:
            return 1;
        case QuadricKind::two_sheeted:
            return -1;
        case QuadricKind::cone:
            return 0;
    }
    return 0;
}

//---------------------------------------------------------------------------//
double eval_constraint(QuadricSpec const& spec, Vec const& x)
{
    require(x.size() == spec.n() + 1, ErrorKind::dimension, "point size");
    return spec.b().dot(x.cwiseProduct(x)) - spec.rhs();
}

double tangency(QuadricSpec const& spec, PhaseState const& state)
{
    return spec.b().cwiseProduct(state.x).dot(state.y);
}

void check_state(QuadricSpec const& spec, PhaseState const& state, double tol)
{
    require(state.x.size() == spec.n() + 1 && state.y.size() == spec.n() + 1,
            ErrorKind::dimension,
            "state size does not match quadric dimension");
    require(state.x.allFinite() && state.y.allFinite(),
            ErrorKind::invalid_argument,
            "non-finite state");
    require(std::fabs(eval_constraint(spec, state.x)) < tol,
            ErrorKind::invalid_argument,
            "point is not on the quadric");
    double scale = std::max(1.0, state.y.norm());
    require(std::fabs(tangency(spec, state)) < tol * scale,
            ErrorKind::invalid_argument,
            "velocity is not tangent to the quadric");
}

//---------------------------------------------------------------------------//
/*!
 * Generating function from resolvents R_z = (zI - A)^{-1}.
 *
 * The rhs enters as (rhs + (R_z x, x)), which gives both hyperboloid
 * variants and the ellipsoid.
 */
double
phi_z(QuadricSpec const& spec, Vec const& x, Vec const& y, double z, double pole_tol)
{
    auto const& a = spec.axes();
    double rxx = 0, ryy = 0, rxy = 0;
    for (int k = 0; k <= spec.n(); ++k)
    {
        double d = z - a[k];
        if (std::fabs(d) <= pole_tol * std::max(1.0, std::fabs(a[k])))
        {
            throw Error(ErrorKind::pole, "z coincides with an axis");
        }
        rxx += x[k] * x[k] / d;
        ryy += y[k] * y[k] / d;
        rxy += x[k] * y[k] / d;
    }
    return (spec.rhs() + rxx) * ryy - rxy * rxy;
}

double phi_z_partial_fractions(QuadricSpec const& spec, Vec const& F, double z)
{
    double sum = 0;
    for (int k = 0; k <= spec.n(); ++k)
    {
        sum += F[k] / (z - spec.axes()[k]);
    }
    return sum;
}

double
phi_z_rational(QuadricSpec const& spec, IntegralSet const& iset, double z)
{
    double num = iset.F.sum() * z;
    for (double c : iset.c)
    {
        num *= z - c;
    }
    double den = 1;
    for (int k = 0; k <= spec.n(); ++k)
    {
        den *= z - spec.axes()[k];
    }
    return num / den;
}

//---------------------------------------------------------------------------//
double uhlenbeck_devaney(QuadricSpec const& spec, Vec const& x, Vec const& y, int k)
{
    auto const& a = spec.axes();
    double f = spec.rhs() * y[k] * y[k];
    for (int j = 0; j <= spec.n(); ++j)
    {
        if (j == k)
        {
            continue;
        }
        require(a[j] != a[k], ErrorKind::pole, "F_k needs distinct a_k");
        f += square(x[k] * y[j] - x[j] * y[k]) / (a[k] - a[j]);
    }
    return f;
}

double joachimsthal(QuadricSpec const& spec, Vec const& x, Vec const& y)
{
    Vec bx = spec.b().cwiseProduct(x);
    return bx.squaredNorm() * spec.b().dot(y.cwiseProduct(y));
}

//---------------------------------------------------------------------------//
std::vector<double> poly_from_roots(std::vector<double> const& roots)
{
    std::vector<double> c{1.0};
    for (double r : roots)
    {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i)
        {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return c;
}

double poly_eval(std::vector<double> const& coeffs, double z)
{
    double v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    {
        v = v * z + *it;
    }
    return v;
}

/*!
 * Companion-matrix eigenvalues followed by Newton polishing.
 */
std::vector<double> real_poly_roots(std::vector<double> const& coeffs)
{
    int m = static_cast<int>(coeffs.size()) - 1;
    require(m >= 0 && coeffs.back() != 0,
            ErrorKind::invalid_argument,
            "polynomial leading coefficient is zero");
    std::vector<double> roots;
    if (m == 0)
    {
        return roots;
    }
    if (m == 1)
    {
        roots.push_back(-coeffs[0] / coeffs[1]);
        return roots;
    }
    Mat comp = Mat::Zero(m, m);
    for (int i = 1; i < m; ++i)
    {
        comp(i, i - 1) = 1;
    }
    for (int i = 0; i < m; ++i)
    {
        comp(i, m - 1) = -coeffs[i] / coeffs[m];
    }
    Eigen::EigenSolver<Mat> solver(comp, false);
    std::vector<double> deriv(m);
    for (int i = 1; i <= m; ++i)
    {
        deriv[i - 1] = i * coeffs[i];
    }
    for (int i = 0; i < m; ++i)
    {
        double r = solver.eigenvalues()[i].real();
        for (int iter = 0; iter < 3; ++iter)
        {
            double d = poly_eval(deriv, r);
            if (d == 0)
            {
                break;
            }
            double rn = r - poly_eval(coeffs, r) / d;
            if (!(std::fabs(poly_eval(coeffs, rn))
                  < std::fabs(poly_eval(coeffs, r))))
            {
                break;
            }
            r = rn;
        }
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

//---------------------------------------------------------------------------//
/*!
 * Clear denominators of sum F_k/(z - a_k), drop the root z = 0.
 */
std::vector<double> confocal_parameters(QuadricSpec const& spec, Vec const& F)
{
    int const n = spec.n();
    auto const& a = spec.axes();
    std::vector<double> num(n + 1, 0.0);
    for (int k = 0; k <= n; ++k)
    {
        std::vector<double> others;
        for (int j = 0; j <= n; ++j)
        {
            if (j != k)
            {
                others.push_back(a[j]);
            }
        }
        auto p = poly_from_roots(others);
        for (std::size_t i = 0; i < p.size(); ++i)
        {
            num[i] += F[k] * p[i];
        }
    }
    // num[0] vanishes for tangent states; the remaining factor has the c_i
    std::vector<double> reduced(num.begin() + 1, num.end());
    require(reduced.back() != 0,
            ErrorKind::invalid_argument,
            "zero velocity has no confocal parameters");
    return real_poly_roots(reduced);
}

IntegralSet
integrals(QuadricSpec const& spec, PhaseState const& state, Tolerances const& tol)
{
    require_distinct(spec);
    int const n = spec.n();
    IntegralSet result;
    result.F.resize(n + 1);
    for (int k = 0; k <= n; ++k)
    {
        result.F[k] = uhlenbeck_devaney(spec, state.x, state.y, k);
    }
    result.J = joachimsthal(spec, state.x, state.y);
    result.isotropic = std::fabs(result.J) < tol.isotropic;
    result.eps = result.isotropic ? 0 : (result.J > 0 ? 1 : -1);
    if (spec.kind() != QuadricKind::cone)
    {
        result.c = confocal_parameters(spec, result.F);
    }
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * Roots of g(z) = sum x_k^2/(z - a_k) + s, s = rhs.
 *
 * g decreases between poles, so each pole interval holds at most one root.
 * The interval containing z = 0 is skipped. When x_k = 0 the pole at a_k
 * is removable and the displaced root is reported at a_k, flagged.
 */
EllipticCoords jacobi_elliptic_coords(QuadricSpec const& spec, Vec const& x)
{
    require_distinct(spec);
    require(spec.kind() != QuadricKind::cone,
            ErrorKind::kind,
            "elliptic coordinates on the cone are not supported");
    int const n = spec.n();
    auto const& a = spec.axes();
    double const s = spec.rhs();
    double const x2 = x.squaredNorm();

    auto g = [&](double z) {
        double v = s;
        for (int k = 0; k <= n; ++k)
        {
            v += x[k] * x[k] / (z - a[k]);
        }
        return v;
    };
    auto dg = [&](double z) {
        double v = 0;
        for (int k = 0; k <= n; ++k)
        {
            v -= x[k] * x[k] / square(z - a[k]);
        }
        return v;
    };

    // Interval i spans (a_{i-1}, a_i) with a_{-1} = -inf and a_{n+1} = +inf
    int first, last, skip;
    if (s > 0)
    {
        first = 0;
        last = n;
        skip = spec.kind() == QuadricKind::ellipsoid ? 0 : 1;
    }
    else
    {
        first = 1;
        last = n + 1;
        skip = 1;
    }
    double const guard = 1e-9;
    EllipticCoords result;
    for (int i = first; i <= last; ++i)
    {
        if (i == skip)
        {
            continue;
        }
        double lo = i == 0 ? a[0] - x2 - 1 : a[i - 1];
        double hi = i == n + 1 ? a[n] + x2 + 1 : a[i];
        double glo = g(i == 0 ? lo : lo + guard * std::max(1.0, std::fabs(lo)));
        double ghi = g(i == n + 1 ? hi
                                  : hi - guard * std::max(1.0, std::fabs(hi)));
        double z;
        bool degen = false;
        if (glo > 0 && ghi < 0)
        {
            z = bisect_decreasing(g, dg, lo, hi);
        }
        else if (glo <= 0)
        {
            z = lo;
            degen = true;
        }
        else
        {
            z = hi;
            degen = true;
        }
        result.z.push_back(z);
        result.degenerate.push_back(degen);
    }
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * Crossing prediction from the sign of F_0, refined for n = 2.
 */
Classification classify_state(QuadricSpec const& spec,
                              PhaseState const& state,
                              Tolerances const& tol)
{
    require(spec.kind() == QuadricKind::one_sheeted,
            ErrorKind::kind,
            "classification is defined for one-sheeted hyperboloids");
    Classification result;
    result.integrals = integrals(spec, state, tol);
    auto const& is = result.integrals;
    double const f0 = is.F[0];

    if (is.isotropic)
    {
        result.label = CaseLabel::isotropic;
    }
    else if (f0 > tol.classification)
    {
        result.label = CaseLabel::transmission;
    }
    else if (f0 < -tol.classification)
    {
        result.label = CaseLabel::reflection;
    }
    else
    {
        result.label = CaseLabel::critical;
    }

    if (spec.n() != 2 || is.isotropic
        || result.label == CaseLabel::critical)
    {
        return result;
    }

    auto const& a = spec.axes();
    double const f1 = is.F[1];
    double lo = 0, hi = 0;
    if (f0 < 0 && f1 < 0 && is.J > 0)
    {
        result.refined = CaseLabel::case_i;
        lo = -std::numeric_limits<double>::infinity();
        hi = a[0];
    }
    else if (f0 > 0 && f1 < 0 && is.J > 0)
    {
        result.refined = CaseLabel::case_ii;
        lo = a[0];
        hi = 0;
    }
    else if (f0 > 0 && f1 < 0 && is.J < 0)
    {
        result.refined = CaseLabel::case_iii;
        lo = 0;
        hi = a[1];
    }
    else if (f0 > 0 && f1 > 0 && is.J < 0)
    {
        result.refined = CaseLabel::case_iv;
        lo = a[1];
        hi = a[2];
    }
    if (!result.refined)
    {
        result.c_interval_ok = false;
        return result;
    }
    double const c = is.c.at(0);
    double const ctol = tol.classification * std::max(1.0, std::fabs(c));
    result.c_interval_ok = c >= lo - ctol && c <= hi + ctol;
    result.c_on_boundary = std::fabs(c - lo) <= ctol || std::fabs(c - hi) <= ctol;
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace quadscat
