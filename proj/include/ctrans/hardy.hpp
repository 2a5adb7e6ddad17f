#ifndef CTRANS_HARDY_HPP
#define CTRANS_HARDY_HPP

#include <utility>

#include "ctrans/measure.hpp"

namespace ctrans {

// Geometric schedule of contour offsets for boundary-norm limits.
struct EpsilonSchedule {
    double eps0 = 1e-2;
    double ratio = 0.5;
    int max_steps = 30;

    void validate(const CircularDomain& d) const;
    double eps_at(int step) const;
};

struct H1Report {
    double raw = 0.0;        // tail value of integral |kappa| |dw| over shrunken boundaries
    double normalized = 0.0; // raw / (2 pi)
    bool converged = false;  // last two values differ relatively by < 1e-6
    bool node_cap_hit = false;
    double tail_eps = 0.0;   // offset of the last contour evaluated
    std::vector<double> eps_used;
    std::vector<double> values;
};

// Boundary L1 norm of kappa over contours shrunk into the domain: outer circle
// radius - eps, hole radii + eps. Node counts scale with the distance of
// kappa's singularities to each contour; divergence is reported, never
// truncated into a number.
H1Report h1_norm(const Expr& kappa, const CircularDomain& d,
                 const EpsilonSchedule& sched = {});

// The boundary measure (1/(2 pi i)) kappa(w) dw on the eps-shrunken boundary
// of d (outer ccw, holes cw). Its transform is kappa inside the domain and 0
// outside; total variation equals the normalized H1 norm at the same eps.
// Refuses kappa whose H1 norm did not converge; eps must lie in the
// schedule's converged tail.
MeasureSpec nu_kappa(const Expr& kappa, const CircularDomain& d, double eps,
                     const EpsilonSchedule& sched = {}, std::string name = {});

// Circles the decomposition integrates over: one inside the outer boundary,
// one around each hole, all strictly inside the domain.
std::vector<Circle> decompose_contours(const CircularDomain& d);

// Splits F holomorphic in d as F = F1 + ... + Fp with F1 holomorphic in the
// outer disk and Fj (j >= 2) holomorphic outside hole j, vanishing at
// infinity. Each term returns as a Cauchy-integral evaluator over a circle
// inside the domain; Fj(z) is valid between the hole contours and the outer
// contour.
std::vector<Expr> hardy_decompose(const Expr& F, const CircularDomain& d,
                                  int n = kDefaultNodes);

// Concatenation of nu_kappa measures over pairwise-disjoint domains; the
// transform is kappa_i on domain i and 0 off the union of closures, and the
// carrier-disjoint components add total variation exactly.
MeasureSpec riesz_decompose(const std::vector<std::pair<CircularDomain, Expr>>& parts,
                            double eps, const EpsilonSchedule& sched = {},
                            std::string name = {});

// max over r in r_grid of integral |eta_hat(r zeta) - eta_hat(zeta / r)| |d zeta|
// for eta supported on the unit circle. Always <= 2 pi ||eta||; equality for
// eta = dw/(2 pi i) and for unit point masses on the circle.
double tumarkin_functional(const MeasureSpec& eta, const std::vector<double>& r_grid,
                           int n = kDefaultNodes);

std::vector<double> default_r_grid();

} // namespace ctrans

#endif
