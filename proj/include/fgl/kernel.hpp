#ifndef FGL_KERNEL_HPP
#define FGL_KERNEL_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "fgl/cutoff.hpp"
#include "fgl/scattering.hpp"

namespace fgl {

/// phi_inf = phi0 * chi(rho^{1/3} x) together with the renormalized
/// interaction E = 4 grad(phi0).grad(chi) + 2 phi0 Lap(chi), so that
/// 2 Lap(phi_inf) + V (1 - phi_inf) = E holds identically. E is supported
/// on the shell rho^{-1/3} <= r <= 2 rho^{-1/3} where phi0 = a/r.
class LocalizedKernel {
public:
    LocalizedKernel(ScatteringSolution sol, CutoffChi chi);

    double rho() const { return chi_.rho(); }
    double inner_radius() const { return chi_.inner_radius(); }
    double outer_radius() const { return chi_.outer_radius(); }
    double scattering_length() const { return sol_.scattering_length(); }
    const ScatteringSolution& scattering() const { return sol_; }
    const CutoffChi& chi() const { return chi_; }

    double phi(double r) const;   ///< phi_inf
    double dphi(double r) const;  ///< radial derivative (product rule)
    double d2phi(double r) const;
    double d3phi(double r) const;
    double lap_phi(double r) const; ///< chi*Lap(phi0) + 2 phi0' chi' + phi0 Lap(chi)

    double renorm(double r) const; ///< E(r), closed form on supp grad(chi)

    struct Norms {
        double sup, l1, l2, grad_l1, grad_l2, lap_l1, d2_l1, d3_l1;
        double renorm_l1, renorm_grad_l1, renorm_lap_l1;
    };
    Norms norms() const;

private:
    ScatteringSolution sol_;
    CutoffChi chi_;
};

/// Sup over a radial verification grid of |2 Lap(phi_inf) + V(1-phi_inf) - E|
/// with the Laplacian rebuilt by 4th-order finite differences of step
/// h_rel * (local scale); decreases at 4th order as h_rel is refined.
double cancellation_residual(const LocalizedKernel& kern, const RadialPotential& pot,
                             double h_rel = 3e-3, int n_samples = 400);

/// Periodization of phi_inf on the torus of side L (single image regime,
/// L > 4 rho^{-1/3}). Fourier coefficients are radial, stored per shell:
/// every integer shell up to a dense bound, then geometrically sampled
/// shells up to the cutoff.
class PeriodicKernel {
public:
    PeriodicKernel(LocalizedKernel kern, double L, double shell_cutoff,
                   double dense_cutoff = 0.0);

    double box_side() const { return L_; }
    double rho() const { return kern_.rho(); }
    double shell_cutoff() const { return cutoff_; }
    const LocalizedKernel& localized() const { return kern_; }

    /// Fourier coefficient at |p|^2 = (2 pi/L)^2 * n2; exact shell lookup for
    /// the dense range, throws beyond it.
    double fourier_by_norm2(std::int64_t n2) const;
    /// Fourier coefficient at continuous radius p (nearest stored shell).
    double fourier(double p) const;
    std::int64_t dense_norm2_limit() const { return dense_n2_; }
    const std::map<std::int64_t, double>& shells() const { return shells_; }

    /// hat(V phi)(p) by radial quadrature over supp V (phi = phi0 there).
    double v_phi_fourier(double p) const;
    /// hat(E)(p) by radial quadrature over the renormalization shell.
    double renorm_fourier(double p) const;
    /// Int V phi d3x (the first-order correlation constant).
    double int_v_phi() const;

    const LocalizedKernel::Norms& norms() const { return norms_; }

    /// Empirical decay constant: sup over stored shells of
    /// |phi^(p)| (1 + rho^{-2/3} |p|^n) / rho^{-2/3}.
    double decay_profile(int n) const;

private:
    LocalizedKernel kern_;
    double L_, cutoff_;
    std::int64_t dense_n2_;
    std::map<std::int64_t, double> shells_; // integer |p|^2 -> phi^(p)
    LocalizedKernel::Norms norms_;
    double radial_transform(double p) const;
};

PeriodicKernel periodize(const LocalizedKernel& kern, double L, double shell_cutoff,
                         double dense_cutoff = 0.0);

} // namespace fgl

#endif
