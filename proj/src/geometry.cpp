#include "ctrans/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace ctrans {

Circle::Circle(Complex c, double r, Orientation o)
    : center(c), radius(r), orientation(o) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw PreconditionError("circle radius must be strictly positive");
}

Circle Circle::reversed() const {
    Circle c = *this;
    c.orientation = orientation == Orientation::ccw ? Orientation::cw : Orientation::ccw;
    return c;
}

Complex Circle::point(double t) const {
    return center + radius * Complex{std::cos(t), std::sin(t)};
}

Segment::Segment(Complex a_, Complex b_) : a(a_), b(b_) {
    if (a == b) throw PreconditionError("segment endpoints must differ");
}

double distance(Complex z, const Circle& c) {
    return std::abs(std::abs(z - c.center) - c.radius);
}

double distance(Complex z, const Segment& s) {
    const Complex d = s.b - s.a;
    const double len2 = std::norm(d);
    double t = ((z - s.a) * std::conj(d)).real() / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(z - (s.a + t * d));
}

double distance(Complex z, const Carrier& c) {
    return std::visit([&](const auto& g) { return distance(z, g); }, c);
}

double distance(const Circle& a, const Circle& b) {
    const double d = std::abs(a.center - b.center);
    if (d >= a.radius + b.radius) return d - a.radius - b.radius;
    const double lo = std::min(a.radius, b.radius);
    const double hi = std::max(a.radius, b.radius);
    if (d + lo <= hi) return hi - d - lo; // one curve nested inside the other
    return 0.0;
}

double distance(const Circle& c, const Segment& s) {
    // Radial extent of the segment as seen from the circle center.
    const double da = std::abs(s.a - c.center);
    const double db = std::abs(s.b - c.center);
    const double dmin = distance(c.center, s);
    const double dmax = std::max(da, db); // |z-center| is convex along the segment
    if (dmin >= c.radius) return dmin - c.radius;
    if (dmax <= c.radius) return c.radius - dmax;
    return 0.0; // segment crosses the circle
}

double distance(const Carrier& a, const Carrier& b) {
    return std::visit(
        [](const auto& x, const auto& y) -> double {
            using X = std::decay_t<decltype(x)>;
            using Y = std::decay_t<decltype(y)>;
            if constexpr (std::is_same_v<X, Circle> && std::is_same_v<Y, Circle>)
                return distance(x, y);
            else if constexpr (std::is_same_v<X, Circle> && std::is_same_v<Y, Segment>)
                return distance(x, y);
            else if constexpr (std::is_same_v<X, Segment> && std::is_same_v<Y, Circle>)
                return distance(y, x);
            else {
                // Segment-segment: sample-free bound via endpoint distances.
                const Segment& p = x;
                const Segment& q = y;
                double d = std::min(std::min(distance(p.a, Carrier{q}), distance(p.b, Carrier{q})),
                                    std::min(distance(q.a, Carrier{p}), distance(q.b, Carrier{p})));
                return d;
            }
        },
        a, b);
}

double containment_margin(const Carrier& inner, const Circle& c) {
    return std::visit(
        [&](const auto& g) -> double {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, Circle>)
                return c.radius - (std::abs(g.center - c.center) + g.radius);
            else
                return c.radius - std::max(std::abs(g.a - c.center), std::abs(g.b - c.center));
        },
        inner);
}

double carrier_length(const Carrier& c) {
    return std::visit(
        [](const auto& g) -> double {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, Circle>)
                return g.circumference();
            else
                return g.length();
        },
        c);
}

CircularDomain::CircularDomain(Circle outer_, std::vector<Circle> holes_)
    : outer(std::move(outer_)), holes(std::move(holes_)) {
    for (std::size_t i = 0; i < holes.size(); ++i) {
        if (containment_margin(Carrier{holes[i]}, outer) <= 0.0)
            throw PreconditionError("hole closure not contained in the open outer disk");
        for (std::size_t j = i + 1; j < holes.size(); ++j) {
            const double d = std::abs(holes[i].center - holes[j].center);
            if (d <= holes[i].radius + holes[j].radius)
                throw PreconditionError("hole closures must be pairwise disjoint");
        }
    }
}

double CircularDomain::min_gap() const {
    double gap = outer.radius;
    for (std::size_t i = 0; i < holes.size(); ++i) {
        gap = std::min(gap, outer.radius - std::abs(holes[i].center - outer.center) -
                                holes[i].radius);
        for (std::size_t j = i + 1; j < holes.size(); ++j)
            gap = std::min(gap, std::abs(holes[i].center - holes[j].center) -
                                    holes[i].radius - holes[j].radius);
    }
    return gap;
}

bool CircularDomain::contains(Complex z) const {
    if (std::abs(z - outer.center) >= outer.radius) return false;
    for (const Circle& h : holes)
        if (std::abs(z - h.center) <= h.radius) return false;
    return true;
}

double CircularDomain::boundary_distance(Complex z) const {
    double d = distance(z, outer);
    for (const Circle& h : holes) d = std::min(d, distance(z, h));
    return d;
}

} // namespace ctrans
