#ifndef FGL_SCATTERING_HPP
#define FGL_SCATTERING_HPP

#include <vector>

#include "fgl/potential.hpp"

namespace fgl {

struct GridConfig {
    double r_max = 8.0;   ///< outer radius of the radial grid (must exceed R0)
    int n_points = 4001;  ///< output nodes; also caps the integrator step at r_max/(n-1)
    double tol = 1e-10;   ///< local error tolerance of the adaptive stepper
};

/// Radial solution of  2 w'' = V w,  w(0) = 0, normalized so w -> r - a.
/// phi0(r) = 1 - w(r)/r solves  2*Lap(phi0) + V (1 - phi0) = 0  with phi0 -> 0.
///
/// Besides (w, w') the integrator carries P(r) = Int_0^r s V(s) w(s)/2 ds
/// = r w'(r) - w(r); the derivative evaluators below are written in terms of
/// P to avoid the cancellation that the naive r w' - w suffers near r = 0.
class ScatteringSolution {
public:
    double scattering_length() const { return a_; }
    double a_at_support_edge() const { return a_r0_; }
    double support_radius() const { return r0_; }
    double tolerance() const { return tol_; }
    const std::vector<double>& grid() const { return r_; }
    const RadialPotential& potential() const { return pot_; }

    double w(double r) const;
    double wp(double r) const;
    double P(double r) const;

    double phi0(double r) const;   ///< in [0, 1); equals a/r beyond the grid
    double dphi0(double r) const;
    double d2phi0(double r) const;
    double d3phi0(double r) const; ///< clamped to 0 below r = 0.01 R0 (even parity)

    /// max over stored nodes r > R0 of |phi0(r) - a/r|.
    double tail_deviation() const;
    /// |(1/8pi) Int V (1-phi0) d3x - a| / max(|a|, 1e-300), independent quadrature.
    double born_residual() const;

    friend ScatteringSolution solve_zero_energy(const RadialPotential&, const GridConfig&);

private:
    RadialPotential pot_;
    std::vector<double> r_, w_, wp_, pint_;
    double a_ = 0.0, a_r0_ = 0.0, r0_ = 0.0, tol_ = 0.0;
    std::size_t locate(double r) const;
};

/// Adaptive embedded Runge-Kutta solve of the zero-energy scattering equation.
/// Throws on: r_max <= R0, step underflow, zero-energy resonance (w'(R0) ~ 0),
/// and disagreement between the a extracted at R0 and at r_max.
ScatteringSolution solve_zero_energy(const RadialPotential& pot, const GridConfig& cfg = {});

} // namespace fgl

#endif
