#ifndef FGL_QUADRATURE_HPP
#define FGL_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace fgl {

/// Gauss-Legendre rule on [-1,1]. Nodes/weights are computed once per order
/// by Newton iteration on the Legendre recurrence and cached.
struct GaussLegendre {
    explicit GaussLegendre(int order);
    std::vector<double> nodes;
    std::vector<double> weights;

    /// Integrate f over [a,b] with a single panel.
    double panel(const std::function<double(double)>& f, double a, double b) const;
};

/// Composite Gauss-Legendre: n_panels equal panels of the given order over [a,b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 int n_panels = 32, int order = 16);

/// Composite rule for oscillatory integrands: panel count is chosen so that
/// each panel spans at most half a period of the target frequency omega.
double integrate_oscillatory(const std::function<double(double)>& f, double a, double b,
                             double omega, int min_panels = 16, int order = 16);

} // namespace fgl

#endif
