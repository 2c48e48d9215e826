#ifndef FGL_POTENTIAL_HPP
#define FGL_POTENTIAL_HPP

#include <string>
#include <vector>

#include "fgl/interp.hpp"

namespace fgl {

/// Radial, non-negative, compactly supported pair interaction.
///
/// Closed-form families:
///   zero          V = 0
///   bump          V0 * exp(1 - 1/(1 - (r/R0)^2)) on [0,R0), C^inf
///   soft_sphere   V0 * plateau with a C^inf shoulder ending at R0
/// plus tabulated samples interpolated monotonically (pchip).
class RadialPotential {
public:
    static RadialPotential zero(double r0 = 1.0);
    static RadialPotential bump(double v0, double r0);
    static RadialPotential soft_sphere(double v0, double r0, double edge_fraction = 0.5);
    static RadialPotential tabulated(std::vector<double> r, std::vector<double> v);
    static RadialPotential from_name(const std::string& family, double v0, double r0);

    double operator()(double r) const;
    double derivative(double r) const;

    double support_radius() const { return r0_; }
    /// Number of continuous derivatives guaranteed by the family
    /// (-1 meaning C^inf; tabulated data is only C^1).
    int smoothness_order() const { return smoothness_; }
    bool is_zero() const;
    const std::string& family() const { return family_; }
    double strength() const { return v0_; }

    /// Radial Fourier transform  V^(p) = 4*pi Int r^2 V(r) sin(pr)/(pr) dr.
    double fourier(double p) const;

    /// Checks V >= 0 and V(r) = 0 for r >= R0 by sampling; throws on failure.
    void validate(int n_samples = 2000) const;

private:
    RadialPotential() = default;
    std::string family_;
    double v0_ = 0.0, r0_ = 1.0, edge_ = 0.5;
    int smoothness_ = -1;
    PchipInterpolant table_;
    bool has_table_ = false;
};

/// C^inf transition h: h(t)=0 for t<=0, h(t)=1 for t>=1, built from exp(-1/t).
double smooth_step(double t);
double smooth_step_d1(double t);
double smooth_step_d2(double t);

} // namespace fgl

#endif
