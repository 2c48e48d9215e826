#include "fgl/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "fgl/quadrature.hpp"

namespace fgl {

LocalizedKernel::LocalizedKernel(ScatteringSolution sol, CutoffChi chi)
    : sol_(std::move(sol)), chi_(std::move(chi))
{
    if (chi_.inner_radius() <= sol_.support_radius())
        throw std::invalid_argument("LocalizedKernel: cutoff overlaps potential support "
                                    "(need rho^{-1/3} > R0)");
}

double LocalizedKernel::phi(double r) const { return sol_.phi0(r) * chi_.chi(r); }

double LocalizedKernel::dphi(double r) const
{
    return sol_.dphi0(r) * chi_.chi(r) + sol_.phi0(r) * chi_.dchi(r);
}

double LocalizedKernel::d2phi(double r) const
{
    return sol_.d2phi0(r) * chi_.chi(r) + 2.0 * sol_.dphi0(r) * chi_.dchi(r) +
           sol_.phi0(r) * chi_.d2chi(r);
}

double LocalizedKernel::d3phi(double r) const
{
    return sol_.d3phi0(r) * chi_.chi(r) + 3.0 * sol_.d2phi0(r) * chi_.dchi(r) +
           3.0 * sol_.dphi0(r) * chi_.d2chi(r) + sol_.phi0(r) * chi_.d3chi(r);
}

double LocalizedKernel::lap_phi(double r) const
{
    const RadialPotential& v = sol_.potential();
    double lap_phi0 = -0.5 * v(r) * (1.0 - sol_.phi0(r));
    return lap_phi0 * chi_.chi(r) + 2.0 * sol_.dphi0(r) * chi_.dchi(r) +
           sol_.phi0(r) * chi_.laplacian(r);
}

double LocalizedKernel::renorm(double r) const
{
    if (r <= chi_.inner_radius() || r >= chi_.outer_radius()) return 0.0;
    return 4.0 * sol_.dphi0(r) * chi_.dchi(r) + 2.0 * sol_.phi0(r) * chi_.laplacian(r);
}

namespace {

// Radial integral 4 pi Int r^2 f(r) dr split at the natural breakpoints
// (R0, rc, 2rc), log-spaced on [R0, rc] where the integrand is a/r-like.
double radial_l1(const std::function<double(double)>& f, double r0, double rc)
{
    auto g = [&](double r) { return 4.0 * M_PI * r * r * f(r); };
    double s = integrate(g, 0.0, r0, 48, 16);
    auto glog = [&](double u) {
        double r = std::exp(u);
        return g(r) * r;
    };
    s += integrate(glog, std::log(r0), std::log(rc), 64, 16);
    s += integrate(g, rc, 2.0 * rc, 64, 16);
    return s;
}

} // namespace

LocalizedKernel::Norms LocalizedKernel::norms() const
{
    const double r0 = sol_.support_radius();
    const double rc = chi_.inner_radius();
    Norms n{};
    double sup = 0.0;
    for (int i = 0; i <= 4096; ++i) {
        double r = 2.0 * rc * i / 4096.0;
        sup = std::max(sup, std::abs(phi(r)));
    }
    n.sup = sup;
    n.l1 = radial_l1([this](double r) { return std::abs(phi(r)); }, r0, rc);
    n.l2 = std::sqrt(radial_l1([this](double r) { return phi(r) * phi(r); }, r0, rc));
    n.grad_l1 = radial_l1([this](double r) { return std::abs(dphi(r)); }, r0, rc);
    n.grad_l2 = std::sqrt(radial_l1([this](double r) { return dphi(r) * dphi(r); }, r0, rc));
    n.lap_l1 = radial_l1([this](double r) { return std::abs(lap_phi(r)); }, r0, rc);
    // |D^2 f| and |D^3 f| for radial f via the operator norm of the
    // derivative tensor: max(|f''|, |f'/r|) resp. max(|f'''|, |(f''-f'/r)/r|).
    n.d2_l1 = radial_l1(
        [this](double r) {
            return std::max(std::abs(d2phi(r)), r > 0 ? std::abs(dphi(r) / r) : 0.0);
        },
        r0, rc);
    n.d3_l1 = radial_l1(
        [this](double r) {
            double t = r > 0 ? std::abs((d2phi(r) - dphi(r) / r) / r) : 0.0;
            return std::max(std::abs(d3phi(r)), t);
        },
        r0, rc);
    // Renormalized interaction norms (supported on [rc, 2rc]).
    auto e = [this](double r) { return renorm(r); };
    auto de = [this, &e](double r) {
        double h = 1e-5 * chi_.inner_radius();
        return (-e(r + 2 * h) + 8 * e(r + h) - 8 * e(r - h) + e(r - 2 * h)) / (12 * h);
    };
    auto lap_e = [this, &e](double r) {
        double h = 2e-4 * chi_.inner_radius();
        double d2 = (-e(r + 2 * h) + 16 * e(r + h) - 30 * e(r) + 16 * e(r - h) - e(r + -2 * h)) /
                    (12 * h * h);
        double h1 = 1e-5 * chi_.inner_radius();
        double d1 = (-e(r + 2 * h1) + 8 * e(r + h1) - 8 * e(r - h1) + e(r - 2 * h1)) / (12 * h1);
        return d2 + 2.0 * d1 / r;
    };
    auto seg = [&](const std::function<double(double)>& f) {
        auto g = [&](double r) { return 4.0 * M_PI * r * r * std::abs(f(r)); };
        return integrate(g, rc, 2.0 * rc, 96, 16);
    };
    n.renorm_l1 = seg(e);
    n.renorm_grad_l1 = seg(de);
    n.renorm_lap_l1 = seg(lap_e);
    return n;
}

double cancellation_residual(const LocalizedKernel& kern, const RadialPotential& pot,
                             double h_rel, int n_samples)
{
    if (pot.is_zero() && kern.scattering_length() == 0.0) return 0.0;
    const double r0 = pot.support_radius();
    const double outer = kern.outer_radius();
    double res = 0.0;
    for (int i = 1; i < n_samples; ++i) {
        double r = 0.02 * r0 + (outer * 1.02 - 0.02 * r0) * i / n_samples;
        double scale = (r < 1.5 * r0) ? r0 : kern.inner_radius();
        double h = h_rel * scale;
        if (r - 2 * h <= 0.0) continue;
        auto f = [&](double x) { return kern.phi(x); };
        double d2 = (-f(r + 2 * h) + 16 * f(r + h) - 30 * f(r) + 16 * f(r - h) - f(r - 2 * h)) /
                    (12 * h * h);
        double d1 = (-f(r + 2 * h) + 8 * f(r + h) - 8 * f(r - h) + f(r - 2 * h)) / (12 * h);
        double lap = d2 + 2.0 * d1 / r;
        double g = 2.0 * lap + pot(r) * (1.0 - kern.phi(r)) - kern.renorm(r);
        res = std::max(res, std::abs(g));
    }
    return res;
}

PeriodicKernel::PeriodicKernel(LocalizedKernel kern, double L, double shell_cutoff,
                               double dense_cutoff)
    : kern_(std::move(kern)), L_(L), cutoff_(shell_cutoff)
{
    const double need = 4.0 * std::pow(kern_.rho(), -1.0 / 3.0);
    if (L <= need)
        throw std::invalid_argument("PeriodicKernel: box too small, need L > 4 rho^{-1/3} "
                                    "for the single-image periodization");
    const double dk = 2.0 * M_PI / L_;
    if (dense_cutoff <= 0.0) dense_cutoff = std::min(cutoff_, 64.0 * dk);
    dense_cutoff = std::min(dense_cutoff, cutoff_);
    dense_n2_ = static_cast<std::int64_t>(std::floor(std::pow(dense_cutoff / dk, 2.0) + 1e-9));

    for (std::int64_t n2 = 0; n2 <= dense_n2_; ++n2)
        shells_[n2] = radial_transform(dk * std::sqrt(static_cast<double>(n2)));
    // Geometric sampling of the far shells, snapped to integer norms.
    double p = dense_n2_ > 0 ? dk * std::sqrt(static_cast<double>(dense_n2_)) : dk;
    while (p < cutoff_) {
        p *= 1.07;
        auto n2 = static_cast<std::int64_t>(std::llround(std::pow(p / dk, 2.0)));
        if (n2 > dense_n2_ && dk * std::sqrt(static_cast<double>(n2)) <= cutoff_)
            shells_.emplace(n2, radial_transform(dk * std::sqrt(static_cast<double>(n2))));
    }
    norms_ = kern_.norms();
}

double PeriodicKernel::radial_transform(double p) const
{
    const double r0 = kern_.scattering().support_radius();
    const double rc = kern_.inner_radius();
    auto f = [&](double r) {
        double pr = p * r;
        double sinc = (pr < 1e-8) ? 1.0 - pr * pr / 6.0 : std::sin(pr) / pr;
        return 4.0 * M_PI * r * r * kern_.phi(r) * sinc;
    };
    double s = integrate_oscillatory(f, 0.0, r0, p, 48);
    s += integrate_oscillatory(f, r0, rc, p, 64);
    s += integrate_oscillatory(f, rc, 2.0 * rc, p, 64);
    return s;
}

double PeriodicKernel::fourier_by_norm2(std::int64_t n2) const
{
    auto it = shells_.find(n2);
    if (it != shells_.end()) return it->second;
    if (n2 <= dense_n2_) throw std::logic_error("PeriodicKernel: dense shell missing");
    throw std::out_of_range("PeriodicKernel: shell beyond the stored cutoff");
}

double PeriodicKernel::fourier(double p) const
{
    const double dk = 2.0 * M_PI / L_;
    auto n2 = static_cast<std::int64_t>(std::llround(std::pow(p / dk, 2.0)));
    auto it = shells_.lower_bound(n2);
    if (it == shells_.end()) --it;
    return it->second;
}

double PeriodicKernel::v_phi_fourier(double p) const
{
    const RadialPotential& v = kern_.scattering().potential();
    if (v.is_zero()) return 0.0;
    auto f = [&](double r) {
        double pr = p * r;
        double sinc = (pr < 1e-8) ? 1.0 - pr * pr / 6.0 : std::sin(pr) / pr;
        return 4.0 * M_PI * r * r * v(r) * kern_.phi(r) * sinc;
    };
    return integrate_oscillatory(f, 0.0, v.support_radius(), p, 48);
}

double PeriodicKernel::renorm_fourier(double p) const
{
    const double rc = kern_.inner_radius();
    auto f = [&](double r) {
        double pr = p * r;
        double sinc = (pr < 1e-8) ? 1.0 - pr * pr / 6.0 : std::sin(pr) / pr;
        return 4.0 * M_PI * r * r * kern_.renorm(r) * sinc;
    };
    return integrate_oscillatory(f, rc, 2.0 * rc, p, 96);
}

double PeriodicKernel::int_v_phi() const { return v_phi_fourier(0.0); }

double PeriodicKernel::decay_profile(int n) const
{
    if (n < 2) throw std::invalid_argument("decay_profile: need n >= 2");
    const double dk = 2.0 * M_PI / L_;
    const double s = std::pow(rho(), -2.0 / 3.0);
    double c = 0.0;
    for (const auto& [n2, val] : shells_) {
        double p = dk * std::sqrt(static_cast<double>(n2));
        c = std::max(c, std::abs(val) * (1.0 + s * std::pow(p, n)) / s);
    }
    return c;
}

PeriodicKernel periodize(const LocalizedKernel& kern, double L, double shell_cutoff,
                         double dense_cutoff)
{
    return PeriodicKernel(kern, L, shell_cutoff, dense_cutoff);
}

} // namespace fgl
