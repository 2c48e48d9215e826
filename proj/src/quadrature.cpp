#include "fgl/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fgl {

namespace {

// Legendre P_n and P_n' at x via the three-term recurrence.
std::pair<double, double> legendre(int n, double x)
{
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

} // namespace

GaussLegendre::GaussLegendre(int order)
{
    if (order < 2) throw std::invalid_argument("GaussLegendre: order must be >= 2");
    nodes.resize(order);
    weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-like initial guess, then Newton.
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        for (int it = 0; it < 100; ++it) {
            auto [p, dp] = legendre(order, x);
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        auto [p, dp] = legendre(order, x);
        (void)p;
        nodes[i] = -x;
        nodes[order - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
}

double GaussLegendre::panel(const std::function<double(double)>& f, double a, double b) const
{
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(c + h * nodes[i]);
    return s * h;
}

namespace {

const GaussLegendre& cached_rule(int order)
{
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, GaussLegendre(order)).first;
    return it->second;
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 int n_panels, int order)
{
    if (b == a) return 0.0;
    const GaussLegendre& gl = cached_rule(order);
    double s = 0.0;
    const double h = (b - a) / n_panels;
    for (int p = 0; p < n_panels; ++p) s += gl.panel(f, a + p * h, a + (p + 1) * h);
    return s;
}

double integrate_oscillatory(const std::function<double(double)>& f, double a, double b,
                             double omega, int min_panels, int order)
{
    int n = min_panels;
    if (omega > 0.0) {
        double periods = std::abs(omega) * (b - a) / (2.0 * M_PI);
        n = std::max<int>(min_panels, static_cast<int>(std::ceil(2.0 * periods)) + 1);
    }
    return integrate(f, a, b, n, order);
}

} // namespace fgl
