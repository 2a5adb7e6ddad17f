#include "ctrans/screens.hpp"

#include <cmath>
#include <limits>

#include "ctrans/singularities.hpp"

namespace ctrans {

namespace {

// 1/(2 pi i) and -1/(2 pi i) as literals
const Complex kInvTwoPiI{0.0, -1.0 / (2.0 * kPi)};

double guard_for(const Circle& c, int n) { return kGuardFactor * c.circumference() / n; }

double support_margin_inside(const MeasureSpec& m, const Circle& c) {
    double margin = c.radius;
    for (const MeasureComponent& comp : m.components) {
        if (const auto* a = std::get_if<Atom>(&comp))
            margin = std::min(margin, c.radius - std::abs(a->location - c.center));
        else
            margin = std::min(margin, containment_margin(component_carrier(comp), c));
    }
    return margin;
}

// Distance from a singularity set to the closed disk bounded by c
// (0 when something touches or enters the disk).
double clearance_from_disk(const SingularitySet& s, const Circle& c) {
    double d = std::numeric_limits<double>::infinity();
    for (Complex p : s.points) d = std::min(d, std::abs(p - c.center) - c.radius);
    for (const Carrier& carrier : s.carriers) {
        d = std::min(d, std::visit(
                            [&](const auto& g) -> double {
                                using G = std::decay_t<decltype(g)>;
                                if constexpr (std::is_same_v<G, Circle>)
                                    return std::abs(g.center - c.center) - g.radius - c.radius;
                                else
                                    return distance(c.center, g) - c.radius;
                            },
                            carrier));
    }
    return d;
}

} // namespace

std::vector<MeasureComponent> ScreenPlan::build(int n) const {
    std::vector<MeasureComponent> out;
    out.reserve(screens.size());
    for (const Circle& c : screens) {
        if (side == ScreenSide::kill_exterior) {
            if (!source_measure)
                throw PreconditionError("kill_exterior screens need a source measure");
            out.push_back(outer_screen(source_measure, c, n));
        } else {
            out.push_back(inner_screen(source_function, c, n));
        }
    }
    return out;
}

MeasureComponent outer_screen(const std::shared_ptr<const MeasureSpec>& m, const Circle& c,
                              int n) {
    if (!m) throw PreconditionError("outer_screen: null measure");
    const double margin = support_margin_inside(*m, c);
    const double guard = guard_for(c, n);
    if (margin < guard)
        throw PreconditionError("outer_screen: support must lie strictly inside the circle "
                                "with margin >= " +
                                format_double(guard) + " (have " + format_double(margin) + ")");
    Circle screen = c;
    screen.orientation = Orientation::ccw;
    return CircleDensity{screen, Expr(kInvTwoPiI) * Expr::cauchy_of(m), Differential::dw};
}

MeasureComponent inner_screen(const Expr& g, const Circle& c, int n) {
    const SingularitySet sing = singularities(g);
    if (!sing.complete)
        throw PreconditionError("inner_screen: cannot certify holomorphy of g on the disk");
    const double guard = guard_for(c, n);
    const double clearance = clearance_from_disk(sing, c);
    if (clearance < guard)
        throw PreconditionError(
            "inner_screen: g has a pole or referenced support within the guard margin of "
            "the closed disk (clearance " +
            format_double(clearance) + ", guard " + format_double(guard) + ")");
    Circle screen = c;
    screen.orientation = Orientation::ccw;
    return CircleDensity{screen, Expr(-kInvTwoPiI) * g, Differential::dw};
}

MeasureSpec screened_scenario(const std::shared_ptr<const MeasureSpec>& m, const Circle& screen,
                              std::string name, int n) {
    MeasureSpec out;
    out.name = name.empty() ? m->name + "_screened" : std::move(name);
    out.components = m->components;
    out.components.push_back(outer_screen(m, screen, n));
    return out;
}

MeasureSpec screened_point_scenario(const std::vector<Circle>& disks, std::string name, int n) {
    const auto delta0 = atom_measure("delta0", Complex{0.0, 0.0}, Complex{1.0, 0.0});
    const Circle s1 = unit_circle();
    const double guard = guard_for(s1, n);

    for (std::size_t i = 0; i < disks.size(); ++i) {
        if (std::abs(disks[i].center) - disks[i].radius <= 0.0)
            throw PreconditionError("screen disk contains or touches the point mass at 0");
        if (s1.radius - std::abs(disks[i].center) - disks[i].radius < guard)
            throw PreconditionError("screen disk too close to the unit circle");
        for (std::size_t j = i + 1; j < disks.size(); ++j)
            if (std::abs(disks[i].center - disks[j].center) <=
                disks[i].radius + disks[j].radius)
                throw PreconditionError("screen disks must have pairwise disjoint closures");
    }

    MeasureSpec out;
    out.name = name.empty() ? "screened_point" : std::move(name);
    out.components.push_back(Atom{Complex{0.0, 0.0}, Complex{1.0, 0.0}});
    out.components.push_back(outer_screen(delta0, s1, n));
    for (const Circle& d : disks)
        out.components.push_back(inner_screen(Expr::cauchy_of(delta0), d, n));
    return out;
}

std::vector<Circle> default_screen_disks(int m) {
    if (m < 1) throw PreconditionError("need at least one disk");
    std::vector<Circle> disks;
    disks.reserve(m);
    const double depth = 0.3; // below the segment [0,1]
    double x = 0.0;
    double prev_r = 0.0;
    for (int j = 1; j <= m; ++j) {
        const double r = std::pow(4.0, -j);
        if (j > 1) x += prev_r + r + 0.05;
        disks.push_back(Circle{Complex{x, -depth}, r});
        prev_r = r;
    }
    return disks;
}

MeasureSpec domain_indicator_measure(const std::vector<CircularDomain>& domains,
                                     std::string name) {
    for (std::size_t i = 0; i < domains.size(); ++i)
        for (std::size_t j = i + 1; j < domains.size(); ++j) {
            const Circle& a = domains[i].outer;
            const Circle& b = domains[j].outer;
            if (std::abs(a.center - b.center) <= a.radius + b.radius)
                throw PreconditionError("domain closures must be pairwise disjoint");
        }

    MeasureSpec out;
    out.name = name.empty() ? "indicator" : std::move(name);
    for (const CircularDomain& d : domains) {
        Circle outer = d.outer;
        outer.orientation = Orientation::ccw;
        out.components.push_back(CircleDensity{outer, Expr(kInvTwoPiI), Differential::dw});
        for (const Circle& h : d.holes) {
            Circle hole = h;
            hole.orientation = Orientation::ccw;
            out.components.push_back(CircleDensity{hole, Expr(-kInvTwoPiI), Differential::dw});
        }
    }
    return out;
}

} // namespace ctrans
