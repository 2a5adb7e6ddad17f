#include "ctrans/transform.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <thread>
#include <utility>

#include "ctrans/singularities.hpp"

namespace ctrans {

namespace {

// Per-component state reused across evaluation points: quadrature nodes and
// density values (times weights) do not depend on z.
struct PreparedComponent {
    bool is_atom = false;
    int index = 0;
    Complex location, mass;            // atoms
    std::vector<Complex> nodes;        // densities
    std::vector<Complex> fw;           // density(node) * weight
    Carrier carrier{Circle{}};
    double guard = 0.0;
};

struct PreparedMeasure {
    std::vector<PreparedComponent> components;
};

PreparedMeasure prepare(const MeasureSpec& m, int n) {
    if (n < 8) throw PreconditionError("transform: n must be >= 8");
    PreparedMeasure out;
    int index = 0;
    for (const MeasureComponent& c : m.components) {
        PreparedComponent pc;
        pc.index = index++;
        if (const auto* a = std::get_if<Atom>(&c)) {
            pc.is_atom = true;
            pc.location = a->location;
            pc.mass = a->mass;
            out.components.push_back(std::move(pc));
            continue;
        }
        QuadratureRule rule;
        const Expr* density = nullptr;
        bool dt_convention = false;
        if (const auto* cd = std::get_if<CircleDensity>(&c)) {
            rule = circle_rule(cd->circle, n);
            density = &cd->density;
            dt_convention = cd->differential == Differential::dt;
        } else {
            const auto* sd = std::get_if<SegmentDensity>(&c);
            rule = segment_rule(sd->segment, n);
            density = &sd->density;
        }
        const SingularitySet sing = singularities(*density);
        const double d = sing.distance_to(rule.carrier);
        if (d < rule.guard_distance())
            throw GuardDistanceError("density singularity at distance " + format_double(d) +
                                     " from its carrier (guard " +
                                     format_double(rule.guard_distance()) + ")");
        pc.carrier = rule.carrier;
        pc.guard = rule.guard_distance();
        pc.nodes = rule.nodes;
        pc.fw.resize(rule.size());
        const double dt = 2.0 * kPi / n;
        for (std::size_t k = 0; k < rule.size(); ++k) {
            const Complex rho = density->eval(rule.nodes[k], n);
            pc.fw[k] = dt_convention ? rho * dt : rho * rule.weights[k];
        }
        out.components.push_back(std::move(pc));
    }
    return out;
}

Complex eval_prepared(const PreparedMeasure& pm, Complex z) {
    Complex acc{0.0, 0.0};
    for (const PreparedComponent& pc : pm.components) {
        if (pc.is_atom) {
            if (z == pc.location)
                throw UnreliablePointError("evaluation exactly at an atom location", pc.index);
            acc += pc.mass / (pc.location - z);
            continue;
        }
        const double d = distance(z, pc.carrier);
        if (d < pc.guard)
            throw UnreliablePointError("point at distance " + format_double(d) +
                                           " from a density carrier (guard " +
                                           format_double(pc.guard) + ")",
                                       pc.index);
        Complex sum{0.0, 0.0};
        for (std::size_t k = 0; k < pc.nodes.size(); ++k)
            sum += pc.fw[k] / (pc.nodes[k] - z);
        acc += sum;
    }
    return acc;
}

// Prepared-data cache for shared measures. Holding the shared_ptr keeps the
// keyed address alive, so entries can never dangle.
struct PreparedCache {
    std::mutex mu;
    std::map<std::pair<const MeasureSpec*, int>,
             std::pair<std::shared_ptr<const MeasureSpec>, std::shared_ptr<const PreparedMeasure>>>
        entries;
};

PreparedCache& cache() {
    static PreparedCache c;
    return c;
}

std::shared_ptr<const PreparedMeasure> prepare_cached(const std::shared_ptr<const MeasureSpec>& m,
                                                      int n) {
    PreparedCache& c = cache();
    const auto key = std::make_pair(m.get(), n);
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.entries.find(key);
        if (it != c.entries.end()) return it->second.second;
    }
    // Prepare outside the lock: densities may recurse into other measures.
    auto prepared = std::make_shared<const PreparedMeasure>(prepare(*m, n));
    std::lock_guard<std::mutex> lock(c.mu);
    if (c.entries.size() > 128) c.entries.clear();
    auto [it, inserted] = c.entries.emplace(key, std::make_pair(m, prepared));
    return it->second.second;
}

} // namespace

Complex transform(const MeasureSpec& m, Complex z, int n) {
    return eval_prepared(prepare(m, n), z);
}

Complex transform_shared(const std::shared_ptr<const MeasureSpec>& m, Complex z, int n) {
    return eval_prepared(*prepare_cached(m, n), z);
}

TransformField transform_grid(const MeasureSpec& m, const std::vector<Complex>& grid, int n) {
    TransformField field;
    field.grid = grid;
    field.values.assign(grid.size(), Complex{std::numeric_limits<double>::quiet_NaN(),
                                             std::numeric_limits<double>::quiet_NaN()});
    field.reliable.assign(grid.size(), false);
    if (grid.empty()) return field;

    PreparedMeasure pm;
    try {
        pm = prepare(m, n);
    } catch (const GuardDistanceError&) {
        return field; // carrier-level violation: every point is unreliable
    }

    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                field.values[i] = eval_prepared(pm, grid[i]);
                field.reliable[i] = true;
            } catch (const GuardDistanceError&) {
                // flagged, value stays NaN
            }
        }
    };

    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t want = grid.size() / 512; // parallelism only pays off on big grids
    const std::size_t nthreads = std::min<std::size_t>(hw, std::max<std::size_t>(1, want));
    if (nthreads <= 1) {
        run(0, grid.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (grid.size() + nthreads - 1) / nthreads;
        for (std::size_t t = 0; t < nthreads; ++t) {
            const std::size_t b = t * chunk;
            const std::size_t e = std::min(grid.size(), b + chunk);
            if (b < e) pool.emplace_back(run, b, e);
        }
        for (auto& th : pool) th.join();
    }
    return field;
}

Complex moment(const MeasureSpec& m, int k, int n) {
    if (k < 0) throw PreconditionError("moment: k must be >= 0");
    if (k > 50) throw PreconditionError("moment: k > 50 refused (overflow risk)");
    auto ipow = [](Complex base, int e) {
        Complex acc{1.0, 0.0};
        for (int j = 0; j < e; ++j) acc *= base;
        return acc;
    };
    Complex acc{0.0, 0.0};
    const PreparedMeasure pm = prepare(m, n);
    for (const PreparedComponent& pc : pm.components) {
        if (pc.is_atom) {
            acc += ipow(pc.location, k) * pc.mass;
            continue;
        }
        Complex sum{0.0, 0.0};
        for (std::size_t j = 0; j < pc.nodes.size(); ++j)
            sum += ipow(pc.nodes[j], k) * pc.fw[j];
        acc += sum;
    }
    return acc;
}

MassReport mass_report(const MeasureSpec& m, int n) {
    MassReport r;
    r.by_components = moment(m, 0, n);
    const double radii[3] = {1e2, 1e3, 1e4};
    Complex v[3];
    for (int i = 0; i < 3; ++i) {
        const Complex R{radii[i], 0.0};
        v[i] = -R * transform(m, R, n);
    }
    // Richardson extrapolation to x = 1/R -> 0 through the three samples.
    Complex extrap{0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
        double li = 1.0;
        for (int j = 0; j < 3; ++j)
            if (j != i) li *= (0.0 - 1.0 / radii[j]) / (1.0 / radii[i] - 1.0 / radii[j]);
        extrap += li * v[i];
    }
    r.by_decay = extrap;
    return r;
}

Complex mass_at_infinity(const MeasureSpec& m, int n) {
    const MassReport r = mass_report(m, n);
    if (std::abs(r.by_components - r.by_decay) > 1e-6)
        throw InconsistencyError("mass at infinity: component sum " +
                                 format_complex(r.by_components) + " vs decay estimate " +
                                 format_complex(r.by_decay) + " disagree beyond 1e-6");
    return r.by_components;
}

Complex havin_functional(const Expr& g, const Expr& h,
                         const std::vector<QuadratureRule>& contours, int eval_nodes) {
    const Expr product = g * h;
    Complex acc{0.0, 0.0};
    for (const QuadratureRule& rule : contours) acc += contour_integral(product, rule, eval_nodes);
    // -(1/(2 pi i)) acc = acc * i / (2 pi)
    return acc * Complex{0.0, 1.0} / (2.0 * kPi);
}

double sup_on_support(const Expr& h, const MeasureSpec& m, int samples_per_carrier) {
    double sup = 0.0;
    for (const MeasureComponent& c : m.components) {
        if (const auto* a = std::get_if<Atom>(&c)) {
            sup = std::max(sup, std::abs(h.eval(a->location)));
        } else if (const auto* cd = std::get_if<CircleDensity>(&c)) {
            for (int k = 0; k < samples_per_carrier; ++k) {
                const double t = 2.0 * kPi * k / samples_per_carrier;
                sup = std::max(sup, std::abs(h.eval(cd->circle.point(t))));
            }
        } else if (const auto* sd = std::get_if<SegmentDensity>(&c)) {
            for (int k = 0; k <= samples_per_carrier; ++k) {
                const double u = static_cast<double>(k) / samples_per_carrier;
                sup = std::max(sup, std::abs(h.eval(sd->segment.a + u * (sd->segment.b - sd->segment.a))));
            }
        }
    }
    return sup;
}

} // namespace ctrans
