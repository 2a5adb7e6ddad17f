#include "ctrans/hardy.hpp"

#include <algorithm>
#include <cmath>

#include "ctrans/quadrature.hpp"
#include "ctrans/singularities.hpp"
#include "ctrans/transform.hpp"

namespace ctrans {

namespace {

constexpr int kNodeCap = 1 << 20;
const Complex kInvTwoPiI{0.0, -1.0 / (2.0 * kPi)};

// Contours of the eps-shrunken boundary (orientation left ccw; callers that
// integrate signed quantities set it themselves).
std::vector<Circle> shrunken_boundary(const CircularDomain& d, double eps) {
    std::vector<Circle> out;
    out.push_back(Circle{d.outer.center, d.outer.radius - eps, Orientation::ccw});
    for (const Circle& h : d.holes)
        out.push_back(Circle{h.center, h.radius + eps, Orientation::ccw});
    return out;
}

// Nodes needed for near-boundary accuracy: the trapezoid error decays like
// exp(-n * delta / r) for a singularity at distance delta from a circle of
// radius r.
int nodes_for(const Circle& c, const SingularitySet& sing) {
    const double delta = sing.distance_to(Carrier{c});
    if (!(delta < std::numeric_limits<double>::infinity())) return kDefaultNodes;
    if (delta <= 0.0) return kNodeCap + 1; // singularity on the contour
    const double needed = 40.0 * c.radius / delta;
    if (needed > static_cast<double>(kNodeCap)) return kNodeCap + 1;
    return std::max(kDefaultNodes, static_cast<int>(std::ceil(needed)));
}

double arc_l1_norm(const Expr& f, const Circle& c, int n) {
    double acc = 0.0;
    const double dt = 2.0 * kPi / n;
    for (int k = 0; k < n; ++k)
        acc += std::abs(f.eval(c.point(dt * k), kDefaultNodes)) * c.radius * dt;
    return acc;
}

} // namespace

void EpsilonSchedule::validate(const CircularDomain& d) const {
    if (!(eps0 > 0.0)) throw PreconditionError("eps0 must be positive");
    if (!(ratio > 0.0 && ratio < 1.0)) throw PreconditionError("ratio must lie in (0,1)");
    if (max_steps < 1) throw PreconditionError("max_steps must be >= 1");
    if (eps0 >= 0.5 * d.min_gap())
        throw PreconditionError("eps0 must be smaller than half the minimal boundary gap");
}

double EpsilonSchedule::eps_at(int step) const { return eps0 * std::pow(ratio, step); }

H1Report h1_norm(const Expr& kappa, const CircularDomain& d, const EpsilonSchedule& sched) {
    sched.validate(d);
    const SingularitySet sing = singularities(kappa);
    H1Report rep;
    for (int step = 0; step < sched.max_steps; ++step) {
        const double eps = sched.eps_at(step);
        double value = 0.0;
        bool capped = false;
        for (const Circle& c : shrunken_boundary(d, eps)) {
            const int n = nodes_for(c, sing);
            if (n > kNodeCap) {
                capped = true;
                break;
            }
            value += arc_l1_norm(kappa, c, n);
        }
        if (capped) {
            rep.node_cap_hit = true;
            break;
        }
        rep.eps_used.push_back(eps);
        rep.values.push_back(value);
        rep.tail_eps = eps;
        const std::size_t k = rep.values.size();
        if (k >= 2) {
            const double prev = rep.values[k - 2];
            const double rel = std::abs(value - prev) / std::max(std::abs(value), 1e-300);
            if (rel < 1e-6) {
                rep.converged = true;
                break;
            }
        }
    }
    if (!rep.values.empty()) {
        rep.raw = rep.values.back();
        rep.normalized = rep.raw / (2.0 * kPi);
    }
    return rep;
}

MeasureSpec nu_kappa(const Expr& kappa, const CircularDomain& d, double eps,
                     const EpsilonSchedule& sched, std::string name) {
    const H1Report rep = h1_norm(kappa, d, sched);
    if (!rep.converged)
        throw PreconditionError("nu_kappa: the H1 norm of kappa did not converge");
    if (!(eps > 0.0) || eps > rep.tail_eps * (1.0 + 1e-12))
        throw PreconditionError("nu_kappa: eps must lie in the schedule's converged tail (0, " +
                                format_double(rep.tail_eps) + "]");

    MeasureSpec out;
    out.name = name.empty() ? "nu_kappa" : std::move(name);
    const Expr density = Expr(kInvTwoPiI) * kappa;
    std::vector<Circle> contours = shrunken_boundary(d, eps);
    for (std::size_t i = 0; i < contours.size(); ++i) {
        contours[i].orientation = i == 0 ? Orientation::ccw : Orientation::cw;
        out.components.push_back(CircleDensity{contours[i], density, Differential::dw});
    }
    return out;
}

std::vector<Circle> decompose_contours(const CircularDomain& d) {
    std::vector<Circle> out;
    double outer_gap = d.outer.radius;
    for (const Circle& h : d.holes)
        outer_gap = std::min(outer_gap,
                             d.outer.radius - std::abs(h.center - d.outer.center) - h.radius);
    out.push_back(Circle{d.outer.center, d.outer.radius - outer_gap / 3.0, Orientation::ccw});
    for (std::size_t j = 0; j < d.holes.size(); ++j) {
        const Circle& h = d.holes[j];
        double gap = d.outer.radius - std::abs(h.center - d.outer.center) - h.radius;
        for (std::size_t k = 0; k < d.holes.size(); ++k)
            if (k != j)
                gap = std::min(gap, std::abs(h.center - d.holes[k].center) - h.radius -
                                        d.holes[k].radius);
        out.push_back(Circle{h.center, h.radius + gap / 3.0, Orientation::ccw});
    }
    return out;
}

std::vector<Expr> hardy_decompose(const Expr& F, const CircularDomain& d, int n) {
    const std::vector<Circle> contours = decompose_contours(d);
    std::vector<Expr> parts;
    for (std::size_t j = 0; j < contours.size(); ++j) {
        // the density must be evaluable on the contour
        (void)contour_integral(F, circle_rule(contours[j], n), n);
        MeasureSpec mj;
        mj.name = "_F" + std::to_string(j + 1);
        const Expr coeff = j == 0 ? Expr(kInvTwoPiI) : Expr(-kInvTwoPiI);
        mj.components.push_back(CircleDensity{contours[j], coeff * F, Differential::dw});
        parts.push_back(Expr::cauchy_of(std::make_shared<const MeasureSpec>(std::move(mj))));
    }
    return parts;
}

MeasureSpec riesz_decompose(const std::vector<std::pair<CircularDomain, Expr>>& parts,
                            double eps, const EpsilonSchedule& sched, std::string name) {
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            const Circle& a = parts[i].first.outer;
            const Circle& b = parts[j].first.outer;
            if (std::abs(a.center - b.center) <= a.radius + b.radius)
                throw PreconditionError("riesz_decompose: domain closures must be disjoint");
        }
    MeasureSpec out;
    out.name = name.empty() ? "riesz" : std::move(name);
    int idx = 1;
    for (const auto& [domain, kappa] : parts) {
        MeasureSpec part = nu_kappa(kappa, domain, eps, sched, "nu_kappa_" + std::to_string(idx++));
        for (MeasureComponent& c : part.components) out.components.push_back(std::move(c));
    }
    return out;
}

double tumarkin_functional(const MeasureSpec& eta, const std::vector<double>& r_grid, int n) {
    bool has_density = false;
    for (const MeasureComponent& c : eta.components) {
        if (const auto* a = std::get_if<Atom>(&c)) {
            if (std::abs(std::abs(a->location) - 1.0) > 1e-9)
                throw PreconditionError("tumarkin_functional: atom off the unit circle");
        } else if (const auto* cd = std::get_if<CircleDensity>(&c)) {
            if (std::abs(cd->circle.center) > 1e-12 || std::abs(cd->circle.radius - 1.0) > 1e-12)
                throw PreconditionError("tumarkin_functional: density carrier is not the unit circle");
            has_density = true;
        } else {
            throw PreconditionError("tumarkin_functional: eta must live on the unit circle");
        }
    }
    const double guard = kGuardFactor * 2.0 * kPi / n;
    auto shared = std::make_shared<const MeasureSpec>(eta);

    double result = 0.0;
    for (const double r : r_grid) {
        if (!(r > 0.0 && r < 1.0))
            throw PreconditionError("tumarkin_functional: radii must lie in (0,1)");
        if (has_density && 1.0 - r < guard)
            throw GuardDistanceError("tumarkin_functional: r too close to 1 for " +
                                     std::to_string(n) + " nodes");
        // The integrand peaks on a scale of 1-r; resolve it.
        const int ntheta =
            std::min(1 << 17, std::max(n, static_cast<int>(std::ceil(40.0 / (1.0 - r)))));
        const double dt = 2.0 * kPi / ntheta;
        double acc = 0.0;
        for (int k = 0; k < ntheta; ++k) {
            const Complex zeta{std::cos(dt * k), std::sin(dt * k)};
            const Complex inner = transform_shared(shared, r * zeta, n);
            const Complex outer = transform_shared(shared, zeta / r, n);
            acc += std::abs(inner - outer) * dt;
        }
        result = std::max(result, acc);
    }

    const double bound = 2.0 * kPi * total_variation(eta, n) + 1e-6;
    if (result > bound)
        throw InconsistencyError("tumarkin functional " + format_double(result) +
                                 " exceeds 2 pi ||eta|| = " + format_double(bound));
    return result;
}

std::vector<double> default_r_grid() {
    return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
}

} // namespace ctrans
