#include "fgl/cutoff.hpp"

#include <cmath>
#include <stdexcept>

#include "fgl/potential.hpp"

namespace fgl {

CutoffChi::CutoffChi(double rho, int profile_order) : rho_(rho), order_(profile_order)
{
    if (rho <= 0.0) throw std::invalid_argument("CutoffChi: rho must be positive");
    if (profile_order < 4) throw std::invalid_argument("CutoffChi: profile order must be >= 4");
    rc_ = std::pow(rho, -1.0 / 3.0);
}

// chi(r) = S((2 - r/rc)), with S the C^inf smooth step on [0,1].
double CutoffChi::chi(double r) const
{
    double s = r / rc_;
    if (s <= 1.0) return 1.0;
    if (s >= 2.0) return 0.0;
    return smooth_step(2.0 - s);
}

double CutoffChi::dchi(double r) const
{
    double s = r / rc_;
    if (s <= 1.0 || s >= 2.0) return 0.0;
    return -smooth_step_d1(2.0 - s) / rc_;
}

double CutoffChi::d2chi(double r) const
{
    double s = r / rc_;
    if (s <= 1.0 || s >= 2.0) return 0.0;
    return smooth_step_d2(2.0 - s) / (rc_ * rc_);
}

double CutoffChi::d3chi(double r) const
{
    double s = r / rc_;
    if (s <= 1.0 || s >= 2.0) return 0.0;
    // 4th-order central stencil on the analytic d2chi.
    double h = 1e-4 * rc_;
    return (-d2chi(r + 2 * h) + 8 * d2chi(r + h) - 8 * d2chi(r - h) + d2chi(r - 2 * h)) / (12 * h);
}

double CutoffChi::laplacian(double r) const
{
    if (r <= 0.0) return 0.0;
    return d2chi(r) + 2.0 * dchi(r) / r;
}

double CutoffChi::grad_sup(int n_samples) const
{
    double m = 0.0;
    for (int i = 0; i <= n_samples; ++i) {
        double r = rc_ * (1.0 + static_cast<double>(i) / n_samples);
        m = std::max(m, std::abs(dchi(r)));
    }
    return m;
}

} // namespace fgl
