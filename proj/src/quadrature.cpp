#include "ctrans/quadrature.hpp"

#include <cmath>

#include "ctrans/expr.hpp"
#include "ctrans/singularities.hpp"

namespace ctrans {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    // Newton iteration in extended precision so the double weights carry no
    // accumulated error beyond the final rounding.
    for (int i = 0; i < m; ++i) {
        long double z = std::cos(static_cast<long double>(kPi) * (i + 0.75L) / (n + 0.5L));
        long double z1, pp;
        do {
            long double p1 = 1.0L, p2 = 0.0L;
            for (int j = 0; j < n; ++j) {
                const long double p3 = p2;
                p2 = p1;
                p1 = ((2.0L * j + 1.0L) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0L);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::abs(static_cast<double>(z - z1)) > 1e-17);
        x[i] = static_cast<double>(-z);
        x[n - 1 - i] = static_cast<double>(z);
        w[i] = static_cast<double>(2.0L / ((1.0L - z * z) * pp * pp));
        w[n - 1 - i] = w[i];
    }
}

QuadratureRule circle_rule(const Circle& circle, int n) {
    if (n < 8) throw PreconditionError("circle_rule: n must be >= 8");
    QuadratureRule rule;
    rule.carrier = circle;
    rule.spacing = circle.circumference() / n;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double dt = 2.0 * kPi / n;
    const double sign = circle.orientation == Orientation::ccw ? 1.0 : -1.0;
    for (int k = 0; k < n; ++k) {
        const double t = dt * k;
        const Complex e{std::cos(t), std::sin(t)};
        rule.nodes[k] = circle.center + circle.radius * e;
        // dz = i R e^{it} dt, orientation folded into the sign
        rule.weights[k] = sign * Complex{0.0, 1.0} * circle.radius * e * dt;
    }
    return rule;
}

QuadratureRule segment_rule(const Segment& segment, int n) {
    if (n < 8) throw PreconditionError("segment_rule: n must be >= 8");
    QuadratureRule rule;
    rule.carrier = segment;
    rule.spacing = segment.length() / n;
    rule.nodes.reserve(n);
    rule.weights.reserve(n);

    // Split n nodes into panels of order <= 16, as evenly as possible.
    const int panels = (n + 15) / 16;
    const Complex d = segment.b - segment.a;
    int assigned = 0;
    for (int p = 0; p < panels; ++p) {
        const int order = (n - assigned) / (panels - p);
        assigned += order;
        const double u0 = static_cast<double>(p) / panels;
        const double u1 = static_cast<double>(p + 1) / panels;
        std::vector<double> x, w;
        gauss_legendre(order, x, w);
        for (int k = 0; k < order; ++k) {
            const double u = 0.5 * (u0 + u1) + 0.5 * (u1 - u0) * x[k];
            rule.nodes.push_back(segment.a + u * d);
            rule.weights.push_back(0.5 * (u1 - u0) * w[k] * d);
        }
    }
    return rule;
}

Complex contour_integral(const Expr& f, const QuadratureRule& rule, int eval_nodes) {
    const SingularitySet sing = singularities(f);
    const double d = sing.distance_to(rule.carrier);
    if (d < rule.guard_distance())
        throw GuardDistanceError("integrand singularity at distance " + format_double(d) +
                                 " from the contour (guard " +
                                 format_double(rule.guard_distance()) + ")");
    return apply_rule(rule, [&](Complex w) { return f.eval(w, eval_nodes); });
}

} // namespace ctrans
