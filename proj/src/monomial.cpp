#include "octlin/monomial.hpp"

namespace octlin {

struct MonomialTree::Node {
    enum class Kind { Variable, Constant, Product } kind;
    std::string name;                  // Constant
    std::vector<Octonion> value;       // Constant (one element)
    std::shared_ptr<const Node> left;  // Product
    std::shared_ptr<const Node> right; // Product
    int var_count = 0;
};

MonomialTree MonomialTree::variable() {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Variable;
    n->var_count = 1;
    return MonomialTree(n);
}

MonomialTree MonomialTree::constant(std::string name, Octonion value) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Constant;
    n->name = std::move(name);
    n->value.push_back(std::move(value));
    return MonomialTree(n);
}

MonomialTree MonomialTree::product(MonomialTree left, MonomialTree right) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Product;
    n->var_count = left.node_->var_count + right.node_->var_count;
    n->left = std::move(left.node_);
    n->right = std::move(right.node_);
    return MonomialTree(n);
}

bool MonomialTree::is_variable() const { return node_->kind == Node::Kind::Variable; }
bool MonomialTree::is_constant() const { return node_->kind == Node::Kind::Constant; }
bool MonomialTree::is_product() const { return node_->kind == Node::Kind::Product; }

const std::string& MonomialTree::constant_name() const { return node_->name; }
const Octonion& MonomialTree::constant_value() const { return node_->value.front(); }
MonomialTree MonomialTree::left() const { return MonomialTree(node_->left); }
MonomialTree MonomialTree::right() const { return MonomialTree(node_->right); }

int MonomialTree::variable_count() const { return node_->var_count; }

std::vector<Octonion> MonomialTree::constant_leaves() const {
    std::vector<Octonion> out;
    auto walk = [&out](auto&& self, const Node& n) -> void {
        switch (n.kind) {
            case Node::Kind::Variable: break;
            case Node::Kind::Constant: out.push_back(n.value.front()); break;
            case Node::Kind::Product:
                self(self, *n.left);
                self(self, *n.right);
                break;
        }
    };
    walk(walk, *node_);
    return out;
}

Octonion MonomialTree::evaluate(const Octonion& x) const {
    switch (node_->kind) {
        case Node::Kind::Variable: return x;
        case Node::Kind::Constant: return node_->value.front();
        case Node::Kind::Product: return left().evaluate(x) * right().evaluate(x);
    }
    throw Error("unreachable");
}

LinOp8 MonomialTree::operator_matrix(const Field& f) const {
    if (variable_count() == 0) throw NoVariable("monomial has no variable");
    if (variable_count() > 1) throw MultipleVariables("monomial has several variables");

    LinOp8 m = LinOp8::identity(f);
    MonomialTree node = *this;
    while (node.is_product()) {
        MonomialTree var_side = node.left().variable_count() == 1 ? node.left() : node.right();
        MonomialTree const_side = node.left().variable_count() == 1 ? node.right() : node.left();
        Octonion k = const_side.evaluate(Octonion::zero(f)); // constant-only subtree
        if (k.is_zero()) throw ZeroCoefficient("zero constant coefficient in monomial");
        auto [lop, rop] = mul_operators(k);
        m = m * (node.left().variable_count() == 1 ? rop : lop);
        node = var_side;
    }
    return m;
}

bool MonomialTree::same_shape(const MonomialTree& o) const {
    if (node_->kind != o.node_->kind) return false;
    if (is_product()) return left().same_shape(o.left()) && right().same_shape(o.right());
    return true;
}

std::string MonomialTree::format() const {
    auto fmt = [](auto&& self, const Node& n, bool top) -> std::string {
        switch (n.kind) {
            case Node::Kind::Variable: return "x";
            case Node::Kind::Constant: return n.name;
            case Node::Kind::Product: {
                std::string s = self(self, *n.left, false) + "*" + self(self, *n.right, false);
                return top ? s : "(" + s + ")";
            }
        }
        return {};
    };
    return fmt(fmt, *node_, true);
}

bool MonomialTree::structurally_equal(const MonomialTree& o) const {
    if (node_->kind != o.node_->kind) return false;
    switch (node_->kind) {
        case Node::Kind::Variable: return true;
        case Node::Kind::Constant:
            return node_->name == o.node_->name && constant_value() == o.constant_value();
        case Node::Kind::Product:
            return left().structurally_equal(o.left()) && right().structurally_equal(o.right());
    }
    return false;
}

} // namespace octlin
