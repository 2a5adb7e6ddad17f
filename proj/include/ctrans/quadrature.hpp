#ifndef CTRANS_QUADRATURE_HPP
#define CTRANS_QUADRATURE_HPP

#include <cmath>
#include <vector>

#include "ctrans/geometry.hpp"

namespace ctrans {

class Expr;

// Nodes on a carrier plus complex weights that absorb the dz line element and
// the orientation sign, so that  integral f dz  ~=  sum f(node) * weight.
struct QuadratureRule {
    std::vector<Complex> nodes;
    std::vector<Complex> weights;
    Carrier carrier;
    double spacing = 0.0; // max arc distance between adjacent nodes

    double guard_distance() const { return kGuardFactor * spacing; }
    std::size_t size() const { return nodes.size(); }
};

// Equispaced-angle trapezoidal rule; spectrally accurate for integrands
// analytic in an annulus around the circle. n >= 8.
QuadratureRule circle_rule(const Circle& circle, int n);

// Composite Gauss-Legendre rule with n nodes total, panels of order <= 16.
// Exact for polynomials of degree < 2 * (panel order). n >= 8.
QuadratureRule segment_rule(const Segment& segment, int n);

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

namespace detail {
// Neumaier compensated accumulation; summation order stays fixed.
inline void accumulate(double v, double& sum, double& comp) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
}
} // namespace detail

template <class F>
Complex apply_rule(const QuadratureRule& rule, F&& f) {
    double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const Complex term = f(rule.nodes[k]) * rule.weights[k];
        detail::accumulate(term.real(), sr, cr);
        detail::accumulate(term.imag(), si, ci);
    }
    return Complex{sr + cr, si + ci};
}

// sum f(node) * weight, with a guard check: any identifiable singularity of f
// within guard distance of the carrier is refused. eval_nodes controls the
// quadrature of cauchy_of sub-evaluations.
Complex contour_integral(const Expr& f, const QuadratureRule& rule,
                         int eval_nodes = kDefaultNodes);

} // namespace ctrans

#endif
