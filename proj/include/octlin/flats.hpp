#pragma once

// Affine flats in the 8-dimensional coordinate space: the empty set, a point,
// or point + direction space. Stored in a canonical form (direction basis in
// reduced row echelon form, point cleared on all pivot coordinates) so flat
// equality is plain syntactic comparison. dim is -1 for the empty flat, 0 for
// a point, 8 for the whole space.

#include <vector>

#include "octlin/linop.hpp"
#include "octlin/octonion.hpp"

namespace octlin {

class AffineFlat {
  public:
    static AffineFlat empty(const Field& f);
    static AffineFlat single_point(const Octonion& p);
    // Canonicalizes: reduces the directions, drops dependent ones, clears the
    // point on pivot coordinates.
    static AffineFlat make(const Octonion& point, const std::vector<Octonion>& directions);
    static AffineFlat whole_space(const Field& f);

    const Field& field() const { return field_; }
    bool is_empty() const { return dim_ < 0; }
    int dim() const { return dim_; }
    const Octonion& point() const;                 // canonical representative
    const std::vector<Octonion>& basis() const { return basis_; } // echelon rows

    bool contains(const Octonion& x) const;
    bool operator==(const AffineFlat& o) const;
    bool operator!=(const AffineFlat& o) const { return !(*this == o); }

  private:
    explicit AffineFlat(const Field& f) : field_(f) {}

    Field field_;
    int dim_ = -1;
    std::vector<Octonion> point_;  // empty or one element
    std::vector<Octonion> basis_;
};

// Exact solution set of M x = c.
AffineFlat solve_affine(const LinOp8& M, const Octonion& c);

// Image of a flat under an invertible linear map; throws SingularMap.
AffineFlat flat_map(const AffineFlat& flat, const LinOp8& T);

inline bool flat_equal(const AffineFlat& a, const AffineFlat& b) { return a == b; }
inline bool flat_contains(const AffineFlat& f, const Octonion& x) { return f.contains(x); }

} // namespace octlin
