#include "ctrans/expr.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "ctrans/measure.hpp"
#include "ctrans/transform.hpp"

namespace ctrans {

namespace {

Expr node_expr(ExprNode n) { return Expr(std::make_shared<const ExprNode>(std::move(n))); }

Expr binary(ExprKind k, const Expr& a, const Expr& b) {
    ExprNode n;
    n.kind = k;
    n.lhs = a.ptr();
    n.rhs = b.ptr();
    return node_expr(std::move(n));
}

Complex ipow(Complex base, int k) {
    if (k == 0) return Complex{1.0, 0.0};
    const bool inv = k < 0;
    unsigned long e = inv ? static_cast<unsigned long>(-static_cast<long>(k))
                          : static_cast<unsigned long>(k);
    Complex acc{1.0, 0.0};
    Complex b = base;
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    if (inv) {
        if (acc == Complex{0.0, 0.0}) throw EvalError("zero raised to a negative power");
        return Complex{1.0, 0.0} / acc;
    }
    return acc;
}

// add/sub = 1, mul/div = 2, unary minus = 3, pow = 4, atoms = 5
int precedence(ExprKind k) {
    switch (k) {
        case ExprKind::add:
        case ExprKind::sub: return 1;
        case ExprKind::mul:
        case ExprKind::div: return 2;
        case ExprKind::neg: return 3;
        case ExprKind::pow: return 4;
        default: return 5;
    }
}

void print_node(const ExprNode& n, std::string& out);

void print_child(const ExprNode& child, int min_prec, std::string& out) {
    const bool parens = precedence(child.kind) < min_prec;
    if (parens) out += '(';
    print_node(child, out);
    if (parens) out += ')';
}

void print_node(const ExprNode& n, std::string& out) {
    switch (n.kind) {
        case ExprKind::literal: {
            const double re = n.value.real(), im = n.value.imag();
            if (im == 0.0 && !std::signbit(re)) {
                out += format_double(re);
            } else if (re == 0.0 && im != 0.0 && !std::signbit(im)) {
                out += format_double(im);
                out += 'i';
            } else {
                out += "complex(";
                out += format_double(re);
                out += ',';
                out += format_double(im);
                out += ')';
            }
            break;
        }
        case ExprKind::var: out += 'z'; break;
        case ExprKind::neg:
            out += '-';
            print_child(*n.lhs, precedence(ExprKind::neg), out);
            break;
        case ExprKind::add:
            print_child(*n.lhs, 1, out);
            out += '+';
            print_child(*n.rhs, 2, out);
            break;
        case ExprKind::sub:
            print_child(*n.lhs, 1, out);
            out += '-';
            print_child(*n.rhs, 2, out);
            break;
        case ExprKind::mul:
            print_child(*n.lhs, 2, out);
            out += '*';
            print_child(*n.rhs, 3, out);
            break;
        case ExprKind::div:
            print_child(*n.lhs, 2, out);
            out += '/';
            print_child(*n.rhs, 3, out);
            break;
        case ExprKind::pow:
            print_child(*n.lhs, 5, out);
            out += '^';
            if (n.exponent < 0) {
                out += "(";
                out += std::to_string(n.exponent);
                out += ')';
            } else {
                out += std::to_string(n.exponent);
            }
            break;
        case ExprKind::moebius:
            out += "moebius(";
            print_node(Expr::literal(n.value).node(), out);
            out += ')';
            break;
        case ExprKind::cauchy_of:
            out += "cauchy_of(";
            out += n.ref_name;
            out += ')';
            break;
    }
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_complex(Complex c) {
    return "(" + format_double(c.real()) + "," + format_double(c.imag()) + ")";
}

Expr Expr::literal(Complex c) {
    ExprNode n;
    n.kind = ExprKind::literal;
    n.value = c;
    return node_expr(std::move(n));
}

Expr Expr::var() {
    ExprNode n;
    n.kind = ExprKind::var;
    return node_expr(std::move(n));
}

Expr Expr::moebius(Complex x0) {
    ExprNode n;
    n.kind = ExprKind::moebius;
    n.value = x0;
    return node_expr(std::move(n));
}

Expr Expr::cauchy_of(std::string name) {
    ExprNode n;
    n.kind = ExprKind::cauchy_of;
    n.ref_name = std::move(name);
    return node_expr(std::move(n));
}

Expr Expr::cauchy_of(std::shared_ptr<const MeasureSpec> m) {
    if (!m) throw PreconditionError("cauchy_of: null measure");
    ExprNode n;
    n.kind = ExprKind::cauchy_of;
    n.ref_name = m->name;
    n.ref = std::move(m);
    return node_expr(std::move(n));
}

Expr Expr::operator-() const {
    ExprNode n;
    n.kind = ExprKind::neg;
    n.lhs = node_;
    return node_expr(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) { return binary(ExprKind::add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return binary(ExprKind::sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return binary(ExprKind::mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return binary(ExprKind::div, a, b); }

Expr Expr::pow(int k) const {
    ExprNode n;
    n.kind = ExprKind::pow;
    n.exponent = k;
    n.lhs = node_;
    return node_expr(std::move(n));
}

Complex Expr::eval(Complex z, int nodes) const {
    const ExprNode& n = *node_;
    switch (n.kind) {
        case ExprKind::literal: return n.value;
        case ExprKind::var: return z;
        case ExprKind::neg: return -Expr(n.lhs).eval(z, nodes);
        case ExprKind::add: return Expr(n.lhs).eval(z, nodes) + Expr(n.rhs).eval(z, nodes);
        case ExprKind::sub: return Expr(n.lhs).eval(z, nodes) - Expr(n.rhs).eval(z, nodes);
        case ExprKind::mul: return Expr(n.lhs).eval(z, nodes) * Expr(n.rhs).eval(z, nodes);
        case ExprKind::div: {
            const Complex den = Expr(n.rhs).eval(z, nodes);
            if (den == Complex{0.0, 0.0})
                throw EvalError("division by zero at z=" + format_complex(z));
            return Expr(n.lhs).eval(z, nodes) / den;
        }
        case ExprKind::pow: return ipow(Expr(n.lhs).eval(z, nodes), n.exponent);
        case ExprKind::moebius: {
            const Complex den = n.value - z;
            if (den == Complex{0.0, 0.0})
                throw EvalError("moebius pole hit at z=" + format_complex(z));
            return Complex{1.0, 0.0} / den;
        }
        case ExprKind::cauchy_of:
            if (!n.ref)
                throw LinkError("unresolved measure reference '" + n.ref_name + "'");
            return transform_shared(n.ref, z, nodes);
    }
    throw Error("corrupt expression node");
}

std::string Expr::str() const {
    std::string out;
    print_node(*node_, out);
    return out;
}

bool Expr::same_tree(const Expr& other) const {
    const ExprNode& a = *node_;
    const ExprNode& b = *other.node_;
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprKind::literal: return a.value == b.value;
        case ExprKind::var: return true;
        case ExprKind::moebius: return a.value == b.value;
        case ExprKind::cauchy_of: return a.ref_name == b.ref_name;
        case ExprKind::pow:
            return a.exponent == b.exponent && Expr(a.lhs).same_tree(Expr(b.lhs));
        case ExprKind::neg: return Expr(a.lhs).same_tree(Expr(b.lhs));
        default:
            return Expr(a.lhs).same_tree(Expr(b.lhs)) && Expr(a.rhs).same_tree(Expr(b.rhs));
    }
}

Expr Expr::substitute_var(const Expr& repl) const {
    const ExprNode& n = *node_;
    switch (n.kind) {
        case ExprKind::literal:
        case ExprKind::cauchy_of: // references take no argument
            return *this;
        case ExprKind::var: return repl;
        case ExprKind::neg: return -Expr(n.lhs).substitute_var(repl);
        case ExprKind::add: return Expr(n.lhs).substitute_var(repl) + Expr(n.rhs).substitute_var(repl);
        case ExprKind::sub: return Expr(n.lhs).substitute_var(repl) - Expr(n.rhs).substitute_var(repl);
        case ExprKind::mul: return Expr(n.lhs).substitute_var(repl) * Expr(n.rhs).substitute_var(repl);
        case ExprKind::div: return Expr(n.lhs).substitute_var(repl) / Expr(n.rhs).substitute_var(repl);
        case ExprKind::pow: return Expr(n.lhs).substitute_var(repl).pow(n.exponent);
        case ExprKind::moebius:
            if (repl.kind() == ExprKind::var) return *this;
            // 1/(x0 - e(z)) in plain rational form
            return Expr(1.0) / (Expr::literal(n.value) - repl);
    }
    throw Error("corrupt expression node");
}

namespace {
void collect_names(const ExprNode& n, std::vector<std::string>& out) {
    if (n.kind == ExprKind::cauchy_of) {
        if (std::find(out.begin(), out.end(), n.ref_name) == out.end())
            out.push_back(n.ref_name);
        return;
    }
    if (n.lhs) collect_names(*n.lhs, out);
    if (n.rhs) collect_names(*n.rhs, out);
}

bool resolved_rec(const ExprNode& n) {
    if (n.kind == ExprKind::cauchy_of) return n.ref != nullptr;
    if (n.lhs && !resolved_rec(*n.lhs)) return false;
    if (n.rhs && !resolved_rec(*n.rhs)) return false;
    return true;
}

bool constant_rec(const ExprNode& n) {
    if (n.kind == ExprKind::var || n.kind == ExprKind::moebius ||
        n.kind == ExprKind::cauchy_of)
        return false; // all three depend on z
    if (n.lhs && !constant_rec(*n.lhs)) return false;
    if (n.rhs && !constant_rec(*n.rhs)) return false;
    return true;
}
} // namespace

std::vector<std::string> Expr::reference_names() const {
    std::vector<std::string> out;
    collect_names(*node_, out);
    return out;
}

namespace {
void collect_refs_rec(const ExprNode& n, std::vector<std::shared_ptr<const MeasureSpec>>& out) {
    if (n.kind == ExprKind::cauchy_of) {
        if (n.ref && std::find(out.begin(), out.end(), n.ref) == out.end())
            out.push_back(n.ref);
        return;
    }
    if (n.lhs) collect_refs_rec(*n.lhs, out);
    if (n.rhs) collect_refs_rec(*n.rhs, out);
}
} // namespace

void Expr::collect_measures(std::vector<std::shared_ptr<const MeasureSpec>>& out) const {
    collect_refs_rec(*node_, out);
}

bool Expr::fully_resolved() const { return resolved_rec(*node_); }

bool Expr::is_constant() const { return constant_rec(*node_); }

Expr Expr::resolve(const Lookup& lookup) const {
    const ExprNode& n = *node_;
    switch (n.kind) {
        case ExprKind::literal:
        case ExprKind::var:
        case ExprKind::moebius:
            return *this;
        case ExprKind::cauchy_of: {
            auto m = lookup(n.ref_name);
            if (!m) throw LinkError("unresolved measure reference '" + n.ref_name + "'");
            return Expr::cauchy_of(std::move(m));
        }
        case ExprKind::neg: return -Expr(n.lhs).resolve(lookup);
        case ExprKind::add: return Expr(n.lhs).resolve(lookup) + Expr(n.rhs).resolve(lookup);
        case ExprKind::sub: return Expr(n.lhs).resolve(lookup) - Expr(n.rhs).resolve(lookup);
        case ExprKind::mul: return Expr(n.lhs).resolve(lookup) * Expr(n.rhs).resolve(lookup);
        case ExprKind::div: return Expr(n.lhs).resolve(lookup) / Expr(n.rhs).resolve(lookup);
        case ExprKind::pow: return Expr(n.lhs).resolve(lookup).pow(n.exponent);
    }
    throw Error("corrupt expression node");
}

} // namespace ctrans
