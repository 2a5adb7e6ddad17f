#ifndef CTRANS_EXPR_HPP
#define CTRANS_EXPR_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ctrans/types.hpp"

namespace ctrans {

struct MeasureSpec;

enum class ExprKind {
    literal,
    var,      // the free variable z
    neg,
    add,
    sub,
    mul,
    div,
    pow,      // integer exponent
    moebius,  // z -> 1/(x0 - z)
    cauchy_of // z -> transform of a named measure at z
};

struct ExprNode {
    ExprKind kind = ExprKind::literal;
    Complex value{0.0, 0.0}; // literal value, or moebius x0
    int exponent = 0;
    std::string ref_name;                    // cauchy_of target
    std::shared_ptr<const MeasureSpec> ref;  // resolved cauchy_of target
    std::shared_ptr<const ExprNode> lhs;
    std::shared_ptr<const ExprNode> rhs;
};

// Immutable expression tree for densities and test functions.
class Expr {
public:
    Expr() : Expr(literal(Complex{0.0, 0.0})) {}
    Expr(double re) : Expr(literal(Complex{re, 0.0})) {}         // NOLINT(google-explicit-constructor)
    Expr(Complex c) : Expr(literal(c)) {}                        // NOLINT(google-explicit-constructor)

    static Expr literal(Complex c);
    static Expr var();
    static Expr moebius(Complex x0);
    static Expr cauchy_of(std::string name);
    static Expr cauchy_of(std::shared_ptr<const MeasureSpec> m);

    Expr operator-() const;
    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    Expr pow(int k) const;

    explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}

    const ExprNode& node() const { return *node_; }
    const std::shared_ptr<const ExprNode>& ptr() const { return node_; }
    ExprKind kind() const { return node_->kind; }

    // Arithmetic evaluation at z; cauchy_of delegates to transform() with the
    // given quadrature node count.
    Complex eval(Complex z, int nodes = kDefaultNodes) const;

    // Compact text form; parse_density(str()) rebuilds an identical tree.
    std::string str() const;

    bool same_tree(const Expr& other) const;

    // Tree with every occurrence of z replaced by `repl` (moebius nodes are
    // rewritten to their rational form when substituted into).
    Expr substitute_var(const Expr& repl) const;

    // Names of cauchy_of references, deduplicated, unresolved ones included.
    std::vector<std::string> reference_names() const;
    bool fully_resolved() const;

    // Resolved measures referenced by cauchy_of, deduplicated by identity.
    void collect_measures(std::vector<std::shared_ptr<const MeasureSpec>>& out) const;

    using Lookup = std::function<std::shared_ptr<const MeasureSpec>(const std::string&)>;
    // Re-binds every cauchy_of node through `lookup`; throws LinkError when a
    // name cannot be resolved.
    Expr resolve(const Lookup& lookup) const;

    // True when the tree contains no z (safe to fold to a constant).
    bool is_constant() const;

private:
    std::shared_ptr<const ExprNode> node_;
};

std::string format_double(double v); // shortest round-trip decimal form
std::string format_complex(Complex c);

} // namespace ctrans

#endif
