#pragma once

// Fully parenthesized nonassociative products with exactly one variable leaf.
// The tree is immutable; nodes are shared.

#include <memory>
#include <string>
#include <vector>

#include "octlin/linop.hpp"
#include "octlin/octonion.hpp"

namespace octlin {

class MonomialTree {
  public:
    static MonomialTree variable();
    static MonomialTree constant(std::string name, Octonion value);
    static MonomialTree product(MonomialTree left, MonomialTree right);

    bool is_variable() const;
    bool is_constant() const;
    bool is_product() const;
    const std::string& constant_name() const;
    const Octonion& constant_value() const;
    MonomialTree left() const;
    MonomialTree right() const;

    // Number of variable leaves in the subtree.
    int variable_count() const;
    // Constant leaves, in-order.
    std::vector<Octonion> constant_leaves() const;

    // Nested Zorn products with x at the variable leaf. Requires every
    // constant-bearing path to be well-formed; works for any variable count
    // as long as there is at most one occurrence (others would be ambiguous).
    Octonion evaluate(const Octonion& x) const;

    // The composed 8x8 operator M with M x = value of the tree at x.
    // Each constant-only subtree collapses to its product first; each step on
    // the path to the variable contributes a left- or right-multiplication
    // operator. Requires exactly one variable leaf and nonzero constants.
    LinOp8 operator_matrix(const Field& f) const;

    // Same parenthesization and variable position; constant names/values may
    // differ.
    bool same_shape(const MonomialTree& o) const;

    // Fully parenthesized text; outermost parentheses are dropped.
    std::string format() const;

    bool structurally_equal(const MonomialTree& o) const;

  private:
    struct Node;
    explicit MonomialTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

} // namespace octlin
