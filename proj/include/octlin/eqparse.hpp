#pragma once

// Parser for fully parenthesized nonassociative monomial equations, e.g.
//   (a*x)*b = c        a*x = c        x = c
// Only the top level may carry an unparenthesized product; chains like
// a*x*b are rejected because the product is nonassociative. Identifiers
// other than the variable x must be bound to octonions.

#include <map>
#include <string>
#include <utility>

#include "octlin/monomial.hpp"

namespace octlin {

struct EquationSource {
    std::string text;
    std::map<std::string, Octonion> bindings;
    Field field;
};

// Returns the left-side tree and the evaluated right side. The variable must
// occur exactly once, on the left; every other identifier needs a binding;
// constants on the left must be nonzero.
std::pair<MonomialTree, Octonion> parse_equation(const EquationSource& src);

// parse(format(tree)) reproduces the tree.
std::string format_equation(const MonomialTree& lhs, const Octonion& rhs);

} // namespace octlin
