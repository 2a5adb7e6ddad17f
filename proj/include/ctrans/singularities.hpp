#ifndef CTRANS_SINGULARITIES_HPP
#define CTRANS_SINGULARITIES_HPP

#include <vector>

#include "ctrans/expr.hpp"
#include "ctrans/geometry.hpp"

namespace ctrans {

// Everywhere an expression can blow up: isolated poles recovered from its
// rational structure, plus the supports of measures referenced by cauchy_of.
// `complete` is false when some denominator could not be analysed (degree cap
// exceeded or a measure transform inside a denominator).
struct SingularitySet {
    std::vector<Complex> points;
    std::vector<Carrier> carriers;
    bool complete = true;

    bool empty() const { return points.empty() && carriers.empty(); }
    // +infinity when the set is empty.
    double distance_to(const Carrier& curve) const;
    double distance_to(Complex z) const;
};

SingularitySet singularities(const Expr& e);

// Roots of c[0] + c[1] x + ... + c[n] x^n (Durand-Kerner). Intended for the
// small degrees arising from density expressions.
std::vector<Complex> poly_roots(std::vector<Complex> coeffs);

} // namespace ctrans

#endif
