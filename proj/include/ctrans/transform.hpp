#ifndef CTRANS_TRANSFORM_HPP
#define CTRANS_TRANSFORM_HPP

#include "ctrans/measure.hpp"
#include "ctrans/quadrature.hpp"

namespace ctrans {

// Grid of transform samples with per-point reliability flags; a point is
// unreliable when it sits inside the guard distance of a density carrier (its
// value is then NaN, never an extrapolation).
struct TransformField {
    std::vector<Complex> grid;
    std::vector<Complex> values;
    std::vector<bool> reliable;

    std::size_t size() const { return grid.size(); }
};

// nu_hat(z) = integral d nu(w) / (w - z). Atoms evaluate in closed form;
// density components by n-node quadrature of density(w)/(w-z). Throws
// UnreliablePointError when z violates the guard distance of a density
// carrier (atoms only reject z exactly at the atom).
Complex transform(const MeasureSpec& m, Complex z, int n = kDefaultNodes);

// Same, but caches the prepared quadrature data per (measure, n); this is the
// path cauchy_of evaluation takes, so nested densities stay O(n) per point.
Complex transform_shared(const std::shared_ptr<const MeasureSpec>& m, Complex z,
                         int n = kDefaultNodes);

// transform at each grid point; guard failures become reliability flags.
TransformField transform_grid(const MeasureSpec& m, const std::vector<Complex>& grid,
                              int n = kDefaultNodes);

// integral w^k d nu(w); closed form for atoms. 0 <= k <= 50.
Complex moment(const MeasureSpec& m, int k, int n = kDefaultNodes);

struct MassReport {
    Complex by_components; // sum of atom masses and density integrals
    Complex by_decay;      // -R nu_hat(R) extrapolated over R = 1e2, 1e3, 1e4
};
MassReport mass_report(const MeasureSpec& m, int n = kDefaultNodes);

// nu(C), computed both ways; throws InconsistencyError when the two routes
// disagree beyond 1e-6.
Complex mass_at_infinity(const MeasureSpec& m, int n = kDefaultNodes);

// T_g(h) = -(1/2 pi i) sum over contours of integral g(z) h(z) dz.
// The contour set must surround the target compact with ccw outer / cw inner
// orientation; pole-on-contour violations surface as GuardDistanceError.
Complex havin_functional(const Expr& g, const Expr& h,
                         const std::vector<QuadratureRule>& contours,
                         int eval_nodes = kDefaultNodes);

// sup |h| over the support of m (dense sampling of carriers, exact atoms).
double sup_on_support(const Expr& h, const MeasureSpec& m, int samples_per_carrier = 2048);

} // namespace ctrans

#endif
