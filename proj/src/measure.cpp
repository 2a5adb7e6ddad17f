#include "ctrans/measure.hpp"

#include <algorithm>
#include <cmath>

#include "ctrans/quadrature.hpp"
#include "ctrans/singularities.hpp"

namespace ctrans {

Carrier component_carrier(const MeasureComponent& c) {
    return std::visit(
        [](const auto& g) -> Carrier {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, Atom>)
                throw Error("atoms carry a point, not a curve; handle them separately");
            else if constexpr (std::is_same_v<G, CircleDensity>)
                return Carrier{g.circle};
            else
                return Carrier{g.segment};
        },
        c);
}

std::vector<std::string> MeasureSpec::requirements() const {
    std::vector<std::string> out;
    auto merge = [&](const Expr& e) {
        for (auto& name : e.reference_names())
            if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    };
    for (const MeasureComponent& c : components) {
        if (const auto* cd = std::get_if<CircleDensity>(&c)) merge(cd->density);
        else if (const auto* sd = std::get_if<SegmentDensity>(&c)) merge(sd->density);
    }
    return out;
}

bool MeasureSpec::fully_resolved() const {
    for (const MeasureComponent& c : components) {
        if (const auto* cd = std::get_if<CircleDensity>(&c)) {
            if (!cd->density.fully_resolved()) return false;
        } else if (const auto* sd = std::get_if<SegmentDensity>(&c)) {
            if (!sd->density.fully_resolved()) return false;
        }
    }
    return true;
}

std::vector<Carrier> MeasureSpec::support() const {
    std::vector<Carrier> out;
    for (const MeasureComponent& c : components)
        if (!std::holds_alternative<Atom>(c)) out.push_back(component_carrier(c));
    return out;
}

void validate(const MeasureSpec& m) {
    for (const MeasureComponent& c : m.components) {
        if (const auto* a = std::get_if<Atom>(&c)) {
            if (a->mass == Complex{0.0, 0.0})
                throw PreconditionError("atom mass must be nonzero");
            if (!std::isfinite(a->mass.real()) || !std::isfinite(a->mass.imag()) ||
                !std::isfinite(a->location.real()) || !std::isfinite(a->location.imag()))
                throw PreconditionError("atom fields must be finite");
        }
    }
}

double distance_to_support(const MeasureSpec& m, Complex z) {
    double d = std::numeric_limits<double>::infinity();
    for (const MeasureComponent& c : m.components) {
        if (const auto* a = std::get_if<Atom>(&c))
            d = std::min(d, std::abs(z - a->location));
        else
            d = std::min(d, distance(z, component_carrier(c)));
    }
    return d;
}

Expr dw_density(const CircleDensity& c) {
    if (c.differential == Differential::dw) return c.density;
    // rho_dt dt = rho_dt / (i (w - center)) dw
    return c.density / (Expr(Complex{0.0, 1.0}) * (Expr::var() - Expr(c.circle.center)));
}

namespace {

void guard_density(const Expr& density, const Carrier& carrier, double guard) {
    const SingularitySet s = singularities(density);
    const double d = s.distance_to(carrier);
    if (d < guard)
        throw GuardDistanceError("density singularity at distance " + format_double(d) +
                                 " from its carrier (guard " + format_double(guard) + ")");
}

} // namespace

double total_variation(const MeasureSpec& m, int n) {
    if (n < 8) throw PreconditionError("total_variation: n must be >= 8");
    double tv = 0.0;
    for (const MeasureComponent& c : m.components) {
        if (const auto* a = std::get_if<Atom>(&c)) {
            tv += std::abs(a->mass);
        } else if (const auto* cd = std::get_if<CircleDensity>(&c)) {
            const QuadratureRule rule = circle_rule(cd->circle, n);
            guard_density(cd->density, rule.carrier, rule.guard_distance());
            if (cd->differential == Differential::dt) {
                const double dt = 2.0 * kPi / n;
                for (Complex w : rule.nodes) tv += std::abs(cd->density.eval(w, n)) * dt;
            } else {
                for (std::size_t k = 0; k < rule.size(); ++k)
                    tv += std::abs(cd->density.eval(rule.nodes[k], n)) * std::abs(rule.weights[k]);
            }
        } else if (const auto* sd = std::get_if<SegmentDensity>(&c)) {
            const QuadratureRule rule = segment_rule(sd->segment, n);
            guard_density(sd->density, rule.carrier, rule.guard_distance());
            for (std::size_t k = 0; k < rule.size(); ++k)
                tv += std::abs(sd->density.eval(rule.nodes[k], n)) * std::abs(rule.weights[k]);
        }
    }
    return tv;
}

MeasureSpec moebius_pushforward(const MeasureSpec& m, Complex x0) {
    const double d0 = distance_to_support(m, x0);
    if (!(d0 > 0.0))
        throw PreconditionError("moebius_pushforward: x0 lies on the support of the measure");

    MeasureSpec out;
    out.name = m.name.empty() ? "transported" : m.name + "_transported";
    for (const MeasureComponent& c : m.components) {
        if (const auto* a = std::get_if<Atom>(&c)) {
            const Complex image = Complex{1.0, 0.0} / (x0 - a->location);
            out.components.push_back(Atom{image, image * a->mass});
        } else if (const auto* cd = std::get_if<CircleDensity>(&c)) {
            // Image of the carrier under w = 1/(x0 - z): invert the circle
            // |u - b| = R, b = x0 - center.
            const Complex b = x0 - cd->circle.center;
            const double s = std::norm(b) - cd->circle.radius * cd->circle.radius;
            const Complex image_center = std::conj(b) / s;
            const double image_radius = cd->circle.radius / std::abs(s);
            // Traversal direction flips exactly when x0 lies inside the circle.
            const bool inside = std::abs(b) < cd->circle.radius;
            Orientation o = cd->circle.orientation;
            if (inside) o = o == Orientation::ccw ? Orientation::cw : Orientation::ccw;
            const Circle image_circle{image_center, image_radius, o};

            // d(m~)(w) = rho(x0 - 1/w) / w dw  for a dw-density rho.
            const Expr rho = dw_density(*cd);
            const Expr pulled =
                rho.substitute_var(Expr(x0) - Expr(1.0) / Expr::var()) / Expr::var();
            out.components.push_back(CircleDensity{image_circle, pulled, Differential::dw});
        } else {
            throw PreconditionError(
                "moebius_pushforward: segment densities are not supported (image is a "
                "circular arc)");
        }
    }
    return out;
}

std::shared_ptr<const MeasureSpec> MeasureRegistry::add(MeasureSpec spec) {
    if (spec.name.empty()) throw PreconditionError("measure name must be non-empty");
    if (by_name_.count(spec.name))
        throw LinkError("measure '" + spec.name + "' already registered");
    validate(spec);
    auto lookup = [&](const std::string& name) { return find(name); };
    for (MeasureComponent& c : spec.components) {
        if (auto* cd = std::get_if<CircleDensity>(&c)) cd->density = cd->density.resolve(lookup);
        else if (auto* sd = std::get_if<SegmentDensity>(&c))
            sd->density = sd->density.resolve(lookup);
    }
    auto ptr = std::make_shared<const MeasureSpec>(std::move(spec));
    by_name_[ptr->name] = ptr;
    return ptr;
}

std::vector<std::shared_ptr<const MeasureSpec>> MeasureRegistry::add_all(
    std::vector<MeasureSpec> specs) {
    std::vector<std::shared_ptr<const MeasureSpec>> out(specs.size());
    std::vector<bool> done(specs.size(), false);
    std::size_t remaining = specs.size();
    while (remaining > 0) {
        bool progress = false;
        for (std::size_t i = 0; i < specs.size(); ++i) {
            if (done[i]) continue;
            bool ready = true;
            for (const std::string& req : specs[i].requirements())
                if (!find(req)) {
                    ready = false;
                    break;
                }
            if (!ready) continue;
            out[i] = add(std::move(specs[i]));
            done[i] = true;
            --remaining;
            progress = true;
        }
        if (!progress) {
            std::string missing;
            for (std::size_t i = 0; i < specs.size(); ++i)
                if (!done[i]) missing += (missing.empty() ? "" : ", ") + specs[i].name;
            throw LinkError("unresolved or cyclic measure references among: " + missing);
        }
    }
    return out;
}

std::shared_ptr<const MeasureSpec> MeasureRegistry::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : it->second;
}

std::shared_ptr<const MeasureSpec> MeasureRegistry::require(const std::string& name) const {
    auto p = find(name);
    if (!p) throw LinkError("measure '" + name + "' not found");
    return p;
}

std::shared_ptr<const MeasureSpec> atom_measure(const std::string& name, Complex location,
                                                Complex mass) {
    MeasureSpec m;
    m.name = name;
    m.components.push_back(Atom{location, mass});
    validate(m);
    return std::make_shared<const MeasureSpec>(std::move(m));
}

} // namespace ctrans
