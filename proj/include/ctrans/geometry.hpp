#ifndef CTRANS_GEOMETRY_HPP
#define CTRANS_GEOMETRY_HPP

#include <variant>
#include <vector>

#include "ctrans/types.hpp"

namespace ctrans {

enum class Orientation { ccw, cw };

struct Circle {
    Complex center{0.0, 0.0};
    double radius = 1.0;
    Orientation orientation = Orientation::ccw;

    Circle() = default;
    Circle(Complex c, double r, Orientation o = Orientation::ccw);

    Circle reversed() const;
    double circumference() const { return 2.0 * kPi * radius; }
    // w(t) = center + radius * e^{it}
    Complex point(double t) const;
};

inline Circle unit_circle(Orientation o = Orientation::ccw) {
    return Circle{Complex{0.0, 0.0}, 1.0, o};
}

struct Segment {
    Complex a{0.0, 0.0};
    Complex b{1.0, 0.0};

    Segment() = default;
    Segment(Complex a_, Complex b_);

    double length() const { return std::abs(b - a); }
};

// The curves that may carry measure components.
using Carrier = std::variant<Circle, Segment>;

double distance(Complex z, const Circle& c);
double distance(Complex z, const Segment& s);
double distance(Complex z, const Carrier& c);

// Minimum distance between the two curves (0 if they intersect).
double distance(const Circle& a, const Circle& b);
double distance(const Circle& c, const Segment& s);
double distance(const Carrier& a, const Carrier& b);

// Signed margin by which the set {points at distance <= reach from carrier}
// stays inside the open disk bounded by `c`; positive means strictly inside.
double containment_margin(const Carrier& inner, const Circle& c);

double carrier_length(const Carrier& c);

// A bounded disk with finitely many excised inner disks; the boundary is the
// outer circle plus the hole circles.
struct CircularDomain {
    Circle outer;
    std::vector<Circle> holes;

    CircularDomain() = default;
    explicit CircularDomain(Circle outer_, std::vector<Circle> holes_ = {});

    // Smallest gap between boundary circles (outer radius itself for a disk).
    double min_gap() const;
    bool contains(Complex z) const;           // inside outer, outside all hole closures
    double boundary_distance(Complex z) const; // min distance to any boundary circle
};

} // namespace ctrans

#endif
