#ifndef FGL_CUTOFF_HPP
#define FGL_CUTOFF_HPP

namespace fgl {

/// Radial C^inf cutoff at the density scale: chi = 1 for r <= rho^{-1/3},
/// chi = 0 for r >= 2 rho^{-1/3}, mollifier transition between. First and
/// second radial derivatives are closed-form; third uses a high-order stencil
/// on the analytic second derivative.
class CutoffChi {
public:
    CutoffChi(double rho, int profile_order = 4);

    double rho() const { return rho_; }
    int profile_order() const { return order_; }
    double inner_radius() const { return rc_; }       ///< rho^{-1/3}
    double outer_radius() const { return 2.0 * rc_; } ///< support edge

    double chi(double r) const;
    double dchi(double r) const;   ///< radial derivative
    double d2chi(double r) const;
    double d3chi(double r) const;
    double laplacian(double r) const; ///< chi'' + 2 chi'/r

    /// max |chi'| over the transition region (grid maximization).
    double grad_sup(int n_samples = 4096) const;

private:
    double rho_, rc_;
    int order_;
};

} // namespace fgl

#endif
