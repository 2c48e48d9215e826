#ifndef FGL_INTERP_HPP
#define FGL_INTERP_HPP

#include <vector>

namespace fgl {

/// Monotone cubic interpolant (Fritsch-Carlson). Used for tabulated
/// potentials; preserves monotonicity of the data between nodes.
class PchipInterpolant {
public:
    PchipInterpolant() = default;
    PchipInterpolant(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double derivative(double x) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::vector<double> x_, y_, d_; // nodes, values, node derivatives
    std::size_t locate(double x) const;
};

} // namespace fgl

#endif
