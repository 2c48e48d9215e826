#include "fgl/potential.hpp"

#include <cmath>
#include <stdexcept>

#include "fgl/quadrature.hpp"

namespace fgl {

namespace {

// f(t) = exp(-1/t) for t > 0, 0 otherwise, with derivatives.
double moll(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
double moll_d1(double t) { return t > 0.0 ? std::exp(-1.0 / t) / (t * t) : 0.0; }
double moll_d2(double t)
{
    if (t <= 0.0) return 0.0;
    return std::exp(-1.0 / t) * (1.0 - 2.0 * t) / (t * t * t * t);
}

} // namespace

double smooth_step(double t)
{
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double a = moll(t), b = moll(1.0 - t);
    return a / (a + b);
}

double smooth_step_d1(double t)
{
    if (t <= 0.0 || t >= 1.0) return 0.0;
    double a = moll(t), b = moll(1.0 - t);
    double ap = moll_d1(t), bp = -moll_d1(1.0 - t);
    double s = a + b, sp = ap + bp;
    return (ap * s - a * sp) / (s * s);
}

double smooth_step_d2(double t)
{
    if (t <= 0.0 || t >= 1.0) return 0.0;
    double a = moll(t), b = moll(1.0 - t);
    double ap = moll_d1(t), bp = -moll_d1(1.0 - t);
    double app = moll_d2(t), bpp = moll_d2(1.0 - t);
    double s = a + b, sp = ap + bp, spp = app + bpp;
    // d2/dt2 of a/s
    return (app * s - a * spp) / (s * s) - 2.0 * sp * (ap * s - a * sp) / (s * s * s);
}

RadialPotential RadialPotential::zero(double r0)
{
    RadialPotential p;
    p.family_ = "zero";
    p.v0_ = 0.0;
    p.r0_ = r0;
    p.smoothness_ = -1;
    return p;
}

RadialPotential RadialPotential::bump(double v0, double r0)
{
    if (v0 < 0.0 || r0 <= 0.0) throw std::invalid_argument("bump: need V0 >= 0 and R0 > 0");
    RadialPotential p;
    p.family_ = "bump";
    p.v0_ = v0;
    p.r0_ = r0;
    p.smoothness_ = -1;
    return p;
}

RadialPotential RadialPotential::soft_sphere(double v0, double r0, double edge_fraction)
{
    if (v0 < 0.0 || r0 <= 0.0) throw std::invalid_argument("soft_sphere: need V0 >= 0 and R0 > 0");
    if (edge_fraction <= 0.0 || edge_fraction >= 1.0)
        throw std::invalid_argument("soft_sphere: edge_fraction in (0,1)");
    RadialPotential p;
    p.family_ = "soft_sphere";
    p.v0_ = v0;
    p.r0_ = r0;
    p.edge_ = edge_fraction;
    p.smoothness_ = -1;
    return p;
}

RadialPotential RadialPotential::tabulated(std::vector<double> r, std::vector<double> v)
{
    RadialPotential p;
    p.family_ = "tabulated";
    p.r0_ = r.back();
    double vmax = 0.0;
    for (double vi : v) {
        if (vi < 0.0) throw std::invalid_argument("tabulated: V must be non-negative");
        vmax = std::max(vmax, vi);
    }
    if (std::abs(v.back()) > 1e-12 * std::max(1.0, vmax))
        throw std::invalid_argument("tabulated: last sample must vanish (compact support)");
    p.v0_ = vmax;
    p.smoothness_ = 1;
    p.table_ = PchipInterpolant(std::move(r), std::move(v));
    p.has_table_ = true;
    return p;
}

RadialPotential RadialPotential::from_name(const std::string& family, double v0, double r0)
{
    if (family == "zero") return zero(r0 > 0 ? r0 : 1.0);
    if (family == "bump") return bump(v0, r0);
    if (family == "soft_sphere") return soft_sphere(v0, r0);
    throw std::invalid_argument("unknown potential family: " + family);
}

double RadialPotential::operator()(double r) const
{
    r = std::abs(r);
    if (r >= r0_) return 0.0;
    if (family_ == "zero") return 0.0;
    if (family_ == "bump") {
        double s = r / r0_;
        return v0_ * std::exp(1.0 - 1.0 / (1.0 - s * s));
    }
    if (family_ == "soft_sphere") {
        double re = edge_ * r0_;
        if (r <= re) return v0_;
        return v0_ * smooth_step((r0_ - r) / (r0_ - re));
    }
    return std::max(0.0, table_(r));
}

double RadialPotential::derivative(double r) const
{
    r = std::abs(r);
    if (r >= r0_) return 0.0;
    if (family_ == "zero") return 0.0;
    if (family_ == "bump") {
        double s = r / r0_;
        double g = 1.0 - s * s;
        return (*this)(r) * (-2.0 * s / (g * g)) / r0_;
    }
    if (family_ == "soft_sphere") {
        double re = edge_ * r0_;
        if (r <= re) return 0.0;
        return -v0_ * smooth_step_d1((r0_ - r) / (r0_ - re)) / (r0_ - re);
    }
    return table_.derivative(r);
}

bool RadialPotential::is_zero() const { return family_ == "zero" || v0_ == 0.0; }

double RadialPotential::fourier(double p) const
{
    if (is_zero()) return 0.0;
    p = std::abs(p);
    auto f = [&](double r) {
        double sinc = (p * r < 1e-8) ? 1.0 - (p * r) * (p * r) / 6.0 : std::sin(p * r) / (p * r);
        return 4.0 * M_PI * r * r * (*this)(r) * sinc;
    };
    return integrate_oscillatory(f, 0.0, r0_, p, 32);
}

void RadialPotential::validate(int n_samples) const
{
    for (int i = 0; i <= n_samples; ++i) {
        double r = (2.0 * r0_) * i / n_samples;
        double v = (*this)(r);
        if (v < 0.0) throw std::runtime_error("potential invariant violated: V < 0");
        if (r >= r0_ && v != 0.0)
            throw std::runtime_error("potential invariant violated: V != 0 beyond R0");
    }
}

} // namespace fgl
