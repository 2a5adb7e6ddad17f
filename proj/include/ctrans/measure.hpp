#ifndef CTRANS_MEASURE_HPP
#define CTRANS_MEASURE_HPP

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ctrans/expr.hpp"
#include "ctrans/geometry.hpp"

namespace ctrans {

// Differential convention for circle densities: dt integrates against the arc
// parameter (t in [0,2pi), counterclockwise), dw against the complex line
// element. Conversion: dw = i (w - center) dt.
enum class Differential { dt, dw };

struct Atom {
    Complex location{0.0, 0.0};
    Complex mass{1.0, 0.0};
};

struct CircleDensity {
    Circle circle;
    Expr density;
    Differential differential = Differential::dw;
};

struct SegmentDensity {
    Segment segment;
    Expr density;
};

using MeasureComponent = std::variant<Atom, CircleDensity, SegmentDensity>;

Carrier component_carrier(const MeasureComponent& c);

// A finite complex measure as a list of components. Immutable once linked
// into a registry; all evaluation is pure.
struct MeasureSpec {
    std::string name;
    std::vector<MeasureComponent> components;

    // Names of measures referenced by cauchy_of inside densities.
    std::vector<std::string> requirements() const;
    bool fully_resolved() const;
    std::vector<Carrier> support() const;
};

// Throws PreconditionError on invariant violations (zero atom mass, etc).
void validate(const MeasureSpec& m);

double distance_to_support(const MeasureSpec& m, Complex z);

// Density of a circle component in the dw convention.
Expr dw_density(const CircleDensity& c);

// sum of |mass| over atoms plus integral |density| |d(carrier)| per density
// component, with n quadrature nodes.
double total_variation(const MeasureSpec& m, int n = kDefaultNodes);

// Image of m under M(z) = 1/(x0 - z):  d(m~)(w) = w dm(x0 - 1/w).
// Implemented for atoms and circle densities; x0 must be off supp m.
MeasureSpec moebius_pushforward(const MeasureSpec& m, Complex x0);

// Name registry; linking resolves cauchy_of references at insertion time, so
// reference cycles can never form.
class MeasureRegistry {
public:
    // Links `spec` against the registry contents and stores it.
    std::shared_ptr<const MeasureSpec> add(MeasureSpec spec);

    // Multi-pass insertion of a batch with cross-references in any order;
    // throws LinkError on unresolved names or cycles.
    std::vector<std::shared_ptr<const MeasureSpec>> add_all(std::vector<MeasureSpec> specs);

    std::shared_ptr<const MeasureSpec> find(const std::string& name) const;
    std::shared_ptr<const MeasureSpec> require(const std::string& name) const;

private:
    std::map<std::string, std::shared_ptr<const MeasureSpec>> by_name_;
};

// Convenience for tests and factories: a single-atom measure.
std::shared_ptr<const MeasureSpec> atom_measure(const std::string& name, Complex location,
                                                Complex mass);

} // namespace ctrans

#endif
