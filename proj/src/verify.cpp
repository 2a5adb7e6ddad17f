#include "ctrans/verify.hpp"

#include <cmath>

namespace ctrans {

namespace {

double van_der_corput(unsigned index, unsigned base) {
    double q = 0.0, bk = 1.0 / base;
    while (index > 0) {
        q += (index % base) * bk;
        index /= base;
        bk /= base;
    }
    return q;
}

Complex polar_sample(Complex center, double r, double theta) {
    return center + r * Complex{std::cos(theta), std::sin(theta)};
}

} // namespace

std::string describe(const Region& r) {
    return std::visit(
        [](const auto& g) -> std::string {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, Annulus>)
                return "annulus " + format_double(g.rmin) + " <= |z - " +
                       format_complex(g.center) + "| <= " + format_double(g.rmax);
            else if constexpr (std::is_same_v<G, DiskRegion>)
                return "disk |z - " + format_complex(g.center) + "| <= " +
                       format_double(g.radius);
            else
                return "point list (" + std::to_string(g.size()) + " points)";
        },
        r);
}

std::vector<Complex> sample_region(const Region& r, int samples) {
    if (const auto* pts = std::get_if<std::vector<Complex>>(&r)) return *pts;
    std::vector<Complex> out;
    out.reserve(samples);
    for (int k = 1; k <= samples; ++k) {
        const double u = van_der_corput(static_cast<unsigned>(k), 2);
        const double v = van_der_corput(static_cast<unsigned>(k), 3);
        const double theta = 2.0 * kPi * v;
        if (const auto* an = std::get_if<Annulus>(&r)) {
            const double rad =
                std::sqrt(an->rmin * an->rmin + u * (an->rmax * an->rmax - an->rmin * an->rmin));
            out.push_back(polar_sample(an->center, rad, theta));
        } else {
            const auto& d = std::get<DiskRegion>(r);
            out.push_back(polar_sample(d.center, d.radius * std::sqrt(u), theta));
        }
    }
    return out;
}

VerificationReport verify_vanishing(const MeasureSpec& m, const Region& region,
                                    const std::optional<Expr>& expected, double tol, int samples,
                                    int n, std::string scenario) {
    if (samples < 50) throw PreconditionError("verify_vanishing: samples must be >= 50");
    VerificationReport rep;
    rep.scenario = std::move(scenario);
    rep.region = describe(region);
    rep.tolerance = tol;

    const std::vector<Complex> pts = sample_region(region, samples);
    const TransformField field = transform_grid(m, pts, n);
    rep.samples = static_cast<int>(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!field.reliable[i]) continue;
        Complex want{0.0, 0.0};
        if (expected) {
            try {
                want = expected->eval(pts[i], n);
            } catch (const Error&) {
                continue; // reference value unavailable here; skip as unreliable
            }
        }
        ++rep.reliable_samples;
        const double err = std::abs(field.values[i] - want);
        if (err > rep.max_error) {
            rep.max_error = err;
            rep.max_error_at = pts[i];
        }
    }
    rep.inconclusive = rep.reliable_samples * 2 < rep.samples;
    rep.pass = rep.max_error <= tol && rep.reliable_samples > 0;
    return rep;
}

} // namespace ctrans
