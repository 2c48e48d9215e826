#include "fgl/scattering.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "fgl/quadrature.hpp"

namespace fgl {

namespace {

struct State {
    double w, wp, p;
};

State axpy(const State& y, double h, const State& k)
{
    return {y.w + h * k.w, y.wp + h * k.wp, y.p + h * k.p};
}

// Cash-Karp embedded Runge-Kutta 5(4) tableau.
constexpr double A21 = 1.0 / 5.0;
constexpr double A31 = 3.0 / 40.0, A32 = 9.0 / 40.0;
constexpr double A41 = 3.0 / 10.0, A42 = -9.0 / 10.0, A43 = 6.0 / 5.0;
constexpr double A51 = -11.0 / 54.0, A52 = 5.0 / 2.0, A53 = -70.0 / 27.0, A54 = 35.0 / 27.0;
constexpr double A61 = 1631.0 / 55296.0, A62 = 175.0 / 512.0, A63 = 575.0 / 13824.0,
                 A64 = 44275.0 / 110592.0, A65 = 253.0 / 4096.0;
constexpr double C2 = 1.0 / 5.0, C3 = 3.0 / 10.0, C4 = 3.0 / 5.0, C5 = 1.0, C6 = 7.0 / 8.0;
constexpr double B1 = 37.0 / 378.0, B3 = 250.0 / 621.0, B4 = 125.0 / 594.0, B6 = 512.0 / 1771.0;
constexpr double E1 = B1 - 2825.0 / 27648.0, E3 = B3 - 18575.0 / 48384.0,
                 E4 = B4 - 13525.0 / 55296.0, E5 = -277.0 / 14336.0, E6 = B6 - 1.0 / 4.0;

} // namespace

ScatteringSolution solve_zero_energy(const RadialPotential& pot, const GridConfig& cfg)
{
    const double r0 = pot.support_radius();
    if (cfg.r_max <= r0)
        throw std::invalid_argument("solve_zero_energy: grid r_max must exceed the potential support R0");
    if (cfg.n_points < 16) throw std::invalid_argument("solve_zero_energy: too few grid points");

    auto rhs = [&pot](double r, const State& y) -> State {
        double v = pot(r);
        return {y.wp, 0.5 * v * y.w, 0.5 * r * v * y.w};
    };

    const double h_max = cfg.r_max / (cfg.n_points - 1);
    const double h_min = 1e-14 * cfg.r_max;

    // Accepted step endpoints with values and derivatives (for dense output).
    std::vector<double> sr, sw, swp, sp;
    sr.reserve(2 * cfg.n_points);
    auto push = [&](double r, const State& y) {
        sr.push_back(r);
        sw.push_back(y.w);
        swp.push_back(y.wp);
        sp.push_back(y.p);
    };

    State y{0.0, 1.0, 0.0};
    double r = 0.0, h = h_max;
    push(r, y);
    while (r < cfg.r_max) {
        h = std::min(h, cfg.r_max - r);
        State k1 = rhs(r, y);
        State k2 = rhs(r + C2 * h, axpy(y, h, {A21 * k1.w, A21 * k1.wp, A21 * k1.p}));
        State k3 = rhs(r + C3 * h, {y.w + h * (A31 * k1.w + A32 * k2.w),
                                    y.wp + h * (A31 * k1.wp + A32 * k2.wp),
                                    y.p + h * (A31 * k1.p + A32 * k2.p)});
        State k4 = rhs(r + C4 * h, {y.w + h * (A41 * k1.w + A42 * k2.w + A43 * k3.w),
                                    y.wp + h * (A41 * k1.wp + A42 * k2.wp + A43 * k3.wp),
                                    y.p + h * (A41 * k1.p + A42 * k2.p + A43 * k3.p)});
        State k5 = rhs(r + C5 * h,
                       {y.w + h * (A51 * k1.w + A52 * k2.w + A53 * k3.w + A54 * k4.w),
                        y.wp + h * (A51 * k1.wp + A52 * k2.wp + A53 * k3.wp + A54 * k4.wp),
                        y.p + h * (A51 * k1.p + A52 * k2.p + A53 * k3.p + A54 * k4.p)});
        State k6 = rhs(r + C6 * h,
                       {y.w + h * (A61 * k1.w + A62 * k2.w + A63 * k3.w + A64 * k4.w + A65 * k5.w),
                        y.wp + h * (A61 * k1.wp + A62 * k2.wp + A63 * k3.wp + A64 * k4.wp + A65 * k5.wp),
                        y.p + h * (A61 * k1.p + A62 * k2.p + A63 * k3.p + A64 * k4.p + A65 * k5.p)});
        State y5 = {y.w + h * (B1 * k1.w + B3 * k3.w + B4 * k4.w + B6 * k6.w),
                    y.wp + h * (B1 * k1.wp + B3 * k3.wp + B4 * k4.wp + B6 * k6.wp),
                    y.p + h * (B1 * k1.p + B3 * k3.p + B4 * k4.p + B6 * k6.p)};
        double err = std::abs(h * (E1 * k1.w + E3 * k3.w + E4 * k4.w + E5 * k5.w + E6 * k6.w));
        err = std::max(err, std::abs(h * (E1 * k1.wp + E3 * k3.wp + E4 * k4.wp + E5 * k5.wp + E6 * k6.wp)));
        double scale = 1.0 + std::abs(y.w) + std::abs(y.wp);
        if (err <= cfg.tol * scale) {
            r += h;
            y = y5;
            push(r, y);
            double grow = (err > 0.0) ? 0.9 * std::pow(cfg.tol * scale / err, 0.2) : 5.0;
            h = std::min(h * std::min(5.0, grow), h_max);
        } else {
            h *= std::max(0.1, 0.9 * std::pow(cfg.tol * scale / err, 0.25));
            if (h < h_min)
                throw std::runtime_error("solve_zero_energy: step underflow, integration did not converge");
        }
    }

    const double slope = y.wp;
    if (std::abs(slope) < 1e-12 * std::max(1.0, std::abs(y.w) / cfg.r_max))
        throw std::runtime_error("solve_zero_energy: zero-energy resonance (w' vanishes at the support edge)");

    ScatteringSolution sol;
    sol.pot_ = pot;
    sol.r0_ = r0;
    sol.tol_ = cfg.tol;
    // Normalize to unit tail slope: w(r) -> r - a.
    sol.r_ = std::move(sr);
    sol.w_.resize(sol.r_.size());
    sol.wp_.resize(sol.r_.size());
    sol.pint_.resize(sol.r_.size());
    for (std::size_t i = 0; i < sol.r_.size(); ++i) {
        sol.w_[i] = sw[i] / slope;
        sol.wp_[i] = swp[i] / slope;
        sol.pint_[i] = sp[i] / slope;
    }
    sol.a_ = cfg.r_max - y.w / y.wp;

    // Extraction-point agreement: a from the dense output at R0 vs at r_max.
    double w_r0 = sol.w(r0), wp_r0 = sol.wp(r0);
    if (std::abs(wp_r0) < 1e-12)
        throw std::runtime_error("solve_zero_energy: zero-energy resonance (w'(R0) = 0)");
    sol.a_r0_ = r0 - w_r0 / wp_r0;
    double agree_tol = 1e-6 * std::max(r0, std::abs(sol.a_));
    if (std::abs(sol.a_r0_ - sol.a_) > agree_tol)
        throw std::runtime_error("solve_zero_energy: scattering length extraction disagrees between R0 and r_max "
                                 "(unresolved potential; refine the grid)");
    return sol;
}

std::size_t ScatteringSolution::locate(double r) const
{
    auto it = std::upper_bound(r_.begin(), r_.end(), r);
    std::size_t i = (it == r_.begin()) ? 0 : static_cast<std::size_t>(it - r_.begin()) - 1;
    return std::min(i, r_.size() - 2);
}

double ScatteringSolution::w(double r) const
{
    if (r <= 0.0) return 0.0;
    if (r >= r_.back()) return r - a_;
    std::size_t i = locate(r);
    double h = r_[i + 1] - r_[i], t = (r - r_[i]) / h;
    double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * w_[i] + h * (t3 - 2 * t2 + t) * wp_[i] +
           (-2 * t3 + 3 * t2) * w_[i + 1] + h * (t3 - t2) * wp_[i + 1];
}

double ScatteringSolution::wp(double r) const
{
    if (r <= 0.0) return wp_.front();
    if (r >= r_.back()) return 1.0;
    std::size_t i = locate(r);
    double h = r_[i + 1] - r_[i], t = (r - r_[i]) / h;
    // Hermite quintic not needed: w'' = V w / 2 is available directly.
    double dh00 = (6 * t * t - 6 * t) / h, dh10 = 3 * t * t - 4 * t + 1;
    double dh01 = (-6 * t * t + 6 * t) / h, dh11 = 3 * t * t - 2 * t;
    return dh00 * w_[i] + dh10 * wp_[i] + dh01 * w_[i + 1] + dh11 * wp_[i + 1];
}

double ScatteringSolution::P(double r) const
{
    if (r <= 0.0) return 0.0;
    if (r >= r_.back()) return pint_.back();
    std::size_t i = locate(r);
    double h = r_[i + 1] - r_[i], t = (r - r_[i]) / h;
    double t2 = t * t, t3 = t2 * t;
    // P' = r V w / 2 at the nodes.
    double d0 = 0.5 * r_[i] * pot_(r_[i]) * w_[i];
    double d1 = 0.5 * r_[i + 1] * pot_(r_[i + 1]) * w_[i + 1];
    return (2 * t3 - 3 * t2 + 1) * pint_[i] + h * (t3 - 2 * t2 + t) * d0 +
           (-2 * t3 + 3 * t2) * pint_[i + 1] + h * (t3 - t2) * d1;
}

double ScatteringSolution::phi0(double r) const
{
    r = std::abs(r);
    if (r > r0_) return a_ / r;
    if (r < 1e-12) return 1.0 - wp_.front();
    return 1.0 - w(r) / r;
}

double ScatteringSolution::dphi0(double r) const
{
    r = std::abs(r);
    if (r > r0_) return -a_ / (r * r);
    if (r < 1e-12) return 0.0;
    return -P(r) / (r * r);
}

double ScatteringSolution::d2phi0(double r) const
{
    r = std::abs(r);
    if (r > r0_) return 2.0 * a_ / (r * r * r);
    if (r < 1e-12) return -pot_(0.0) * (1.0 - wp_.front()) / 3.0; // limit of -Vw/2r + 2P/r^3
    return -0.5 * pot_(r) * w(r) / r + 2.0 * P(r) / (r * r * r);
}

double ScatteringSolution::d3phi0(double r) const
{
    r = std::abs(r);
    if (r > r0_) return -6.0 * a_ / (r * r * r * r);
    if (r < 1e-2 * r0_) return 0.0; // odd derivative of an even function
    double v = pot_(r), dv = pot_.derivative(r);
    double ww = w(r), wpp = wp(r);
    double w3 = 0.5 * (dv * ww + v * wpp);
    return -w3 / r + 1.5 * v * ww / (r * r) - 6.0 * P(r) / (r * r * r * r);
}

double ScatteringSolution::tail_deviation() const
{
    double dev = 0.0;
    for (std::size_t i = 0; i < r_.size(); ++i) {
        double r = r_[i];
        if (r <= r0_ || r <= 0.0) continue;
        dev = std::max(dev, std::abs((1.0 - w_[i] / r) - a_ / r));
    }
    return dev;
}

double ScatteringSolution::born_residual() const
{
    if (pot_.is_zero()) return 0.0;
    auto f = [this](double r) { return 0.5 * r * pot_(r) * w(r); };
    double born = integrate(f, 0.0, r0_, 64, 16);
    return std::abs(born - a_) / std::max(std::abs(a_), 1e-300);
}

} // namespace fgl
