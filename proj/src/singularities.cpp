#include "ctrans/singularities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "ctrans/measure.hpp"

namespace ctrans {

namespace {

constexpr int kMaxDegree = 24;

// Dense polynomial, ascending coefficients; empty vector = zero polynomial.
struct Poly {
    std::vector<Complex> c;

    void trim() {
        while (!c.empty() && c.back() == Complex{0.0, 0.0}) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

Poly constant(Complex v) {
    Poly p;
    if (v != Complex{0.0, 0.0}) p.c = {v};
    return p;
}

std::optional<Poly> add(const Poly& a, const Poly& b, double sign) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += sign * b.c[i];
    r.trim();
    return r;
}

std::optional<Poly> mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    if (a.degree() + b.degree() > kMaxDegree) return std::nullopt;
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

struct Rational {
    Poly num, den; // den never the zero polynomial
};

// Attempt to view `n` as num/den with polynomial parts; nullopt when the tree
// contains cauchy_of or overflows the degree cap.
std::optional<Rational> extract(const ExprNode& n) {
    switch (n.kind) {
        case ExprKind::literal: return Rational{constant(n.value), constant(Complex{1.0, 0.0})};
        case ExprKind::var: {
            Poly x;
            x.c = {Complex{0.0, 0.0}, Complex{1.0, 0.0}};
            return Rational{x, constant(Complex{1.0, 0.0})};
        }
        case ExprKind::moebius: {
            Poly d;
            d.c = {n.value, Complex{-1.0, 0.0}};
            return Rational{constant(Complex{1.0, 0.0}), d};
        }
        case ExprKind::cauchy_of: return std::nullopt;
        case ExprKind::neg: {
            auto a = extract(*n.lhs);
            if (!a) return std::nullopt;
            for (auto& v : a->num.c) v = -v;
            return a;
        }
        case ExprKind::add:
        case ExprKind::sub: {
            auto a = extract(*n.lhs);
            auto b = extract(*n.rhs);
            if (!a || !b) return std::nullopt;
            auto n1 = mul(a->num, b->den);
            auto n2 = mul(b->num, a->den);
            auto d = mul(a->den, b->den);
            if (!n1 || !n2 || !d) return std::nullopt;
            auto num = add(*n1, *n2, n.kind == ExprKind::add ? 1.0 : -1.0);
            if (!num) return std::nullopt;
            return Rational{*num, *d};
        }
        case ExprKind::mul: {
            auto a = extract(*n.lhs);
            auto b = extract(*n.rhs);
            if (!a || !b) return std::nullopt;
            auto num = mul(a->num, b->num);
            auto den = mul(a->den, b->den);
            if (!num || !den) return std::nullopt;
            return Rational{*num, *den};
        }
        case ExprKind::div: {
            auto a = extract(*n.lhs);
            auto b = extract(*n.rhs);
            if (!a || !b) return std::nullopt;
            if (b->num.is_zero()) return std::nullopt; // division by identically zero
            auto num = mul(a->num, b->den);
            auto den = mul(a->den, b->num);
            if (!num || !den) return std::nullopt;
            return Rational{*num, *den};
        }
        case ExprKind::pow: {
            auto a = extract(*n.lhs);
            if (!a) return std::nullopt;
            int k = n.exponent;
            if (k < 0) {
                if (a->num.is_zero()) return std::nullopt;
                std::swap(a->num, a->den);
                k = -k;
            }
            Rational r{constant(Complex{1.0, 0.0}), constant(Complex{1.0, 0.0})};
            for (int j = 0; j < k; ++j) {
                auto num = mul(r.num, a->num);
                auto den = mul(r.den, a->den);
                if (!num || !den) return std::nullopt;
                r.num = *num;
                r.den = *den;
            }
            return r;
        }
    }
    return std::nullopt;
}

void append_zeros_of(const ExprNode& n, SingularitySet& out) {
    auto r = extract(n);
    if (!r) {
        out.complete = false;
        return;
    }
    if (r->num.is_zero()) {
        out.complete = false; // expression is identically zero: 1/0 everywhere
        return;
    }
    for (Complex root : poly_roots(r->num.c)) out.points.push_back(root);
}

void collect(const ExprNode& n, SingularitySet& out) {
    switch (n.kind) {
        case ExprKind::literal:
        case ExprKind::var: return;
        case ExprKind::moebius:
            out.points.push_back(n.value);
            return;
        case ExprKind::cauchy_of: {
            if (!n.ref) {
                out.complete = false;
                return;
            }
            for (const MeasureComponent& c : n.ref->components) {
                if (const auto* a = std::get_if<Atom>(&c)) {
                    out.points.push_back(a->location);
                } else {
                    out.carriers.push_back(component_carrier(c));
                }
                // referenced densities may recurse through further measures
                if (const auto* cd = std::get_if<CircleDensity>(&c))
                    collect(*cd->density.ptr(), out);
                else if (const auto* sd = std::get_if<SegmentDensity>(&c))
                    collect(*sd->density.ptr(), out);
            }
            return;
        }
        case ExprKind::div:
            collect(*n.lhs, out);
            collect(*n.rhs, out);
            append_zeros_of(*n.rhs, out);
            return;
        case ExprKind::pow:
            collect(*n.lhs, out);
            if (n.exponent < 0) append_zeros_of(*n.lhs, out);
            return;
        case ExprKind::neg:
            collect(*n.lhs, out);
            return;
        default:
            collect(*n.lhs, out);
            collect(*n.rhs, out);
            return;
    }
}

} // namespace

std::vector<Complex> poly_roots(std::vector<Complex> coeffs) {
    while (!coeffs.empty() && coeffs.back() == Complex{0.0, 0.0}) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};
    const int deg = static_cast<int>(coeffs.size()) - 1;
    // normalize monic
    const Complex lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;
    if (deg == 1) return {-coeffs[0]};

    // Durand-Kerner from a non-real seed spiral within the root bound.
    double bound = 0.0;
    for (int i = 0; i < deg; ++i) bound = std::max(bound, std::abs(coeffs[i]));
    bound += 1.0;
    std::vector<Complex> roots(deg);
    const Complex seed{0.4, 0.9};
    Complex p{1.0, 0.0};
    for (int i = 0; i < deg; ++i) {
        p *= seed;
        roots[i] = bound * p;
    }
    auto eval = [&](Complex x) {
        Complex acc{0.0, 0.0};
        Complex xp{1.0, 0.0};
        for (int i = 0; i < deg; ++i) {
            acc += coeffs[i] * xp;
            xp *= x;
        }
        return acc + xp; // monic leading term
    };
    for (int iter = 0; iter < 400; ++iter) {
        double shift = 0.0;
        for (int i = 0; i < deg; ++i) {
            Complex denom{1.0, 0.0};
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            if (denom == Complex{0.0, 0.0}) {
                roots[i] += Complex{1e-8, 1e-8};
                continue;
            }
            const Complex delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-13 * bound) break;
    }
    return roots;
}

double SingularitySet::distance_to(const Carrier& curve) const {
    double d = std::numeric_limits<double>::infinity();
    for (Complex p : points) d = std::min(d, distance(p, curve));
    for (const Carrier& c : carriers) d = std::min(d, distance(c, curve));
    return d;
}

double SingularitySet::distance_to(Complex z) const {
    double d = std::numeric_limits<double>::infinity();
    for (Complex p : points) d = std::min(d, std::abs(z - p));
    for (const Carrier& c : carriers) d = std::min(d, distance(z, c));
    return d;
}

SingularitySet singularities(const Expr& e) {
    SingularitySet out;
    collect(*e.ptr(), out);
    return out;
}

} // namespace ctrans
