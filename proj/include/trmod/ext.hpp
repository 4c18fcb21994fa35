#pragma once

#include <vector>

#include "trmod/modmat.hpp"

namespace trmod {

/// coker M as a k-vector space: coordinates at the positions outside the pivots
/// of the image's echelon basis.
class QuotientModule {
public:
    QuotientModule(const Algebra& A, const Matrix& M);

    int generators() const noexcept { return rank_; }
    int length() const noexcept { return int(free_pos_.size()); }
    // R^generators coordinates -> quotient coordinates.
    Vec project(std::span<const Coeff> w) const;
    // Canonical lift of quotient coordinates.
    Vec lift(std::span<const Coeff> v) const;
    const Subspace& relations() const noexcept { return image_; }

private:
    int rank_;
    int ambient_;
    Subspace image_;
    std::vector<int> free_pos_;
};

struct ExtensionClass {
    Vec coords;  // in Hom(F_1, coker M) coordinates
    Matrix lift;  // M.rows x F_1-rank: column j lifts the image of generator j
};

struct ExtSpace {
    Matrix n_presentation;      // d_1 of the resolution of coker N
    Matrix n_syzygy;            // d_2
    Matrix m_presentation;
    int rank = 0;
    std::vector<ExtensionClass> basis;
    // Dimension of the image of the cocycles in Hom(F_1, coker M / m coker M),
    // modulo coboundaries: 1 exactly when some class has a unit lift (cyclic case).
    int unit_part = 0;

    int gamma() const noexcept { return rank - unit_part; }
};

// Ext^1(coker N, coker M) from the first two differentials of the minimal
// resolution of coker N.
ExtSpace ext1(const Algebra& A, const Matrix& N, const Matrix& M);

// Cocycle test and class of a lift; throws ValidationError for non-cocycles.
ExtensionClass extension_class(const Algebra& A, const ExtSpace& E, const Matrix& lift);

// Closed forms for N = S/(x+dy+fz), T = S/(x+by+cz).
int ext1_rank_formula(const FieldElement& b, const FieldElement& c, const FieldElement& d, const FieldElement& f);
int gamma_formula(const FieldElement& b, const FieldElement& c, const FieldElement& d, const FieldElement& f);

struct GammaReport {
    int rank = 0;
    int unit_part = 0;
    int gamma = 0;
};

// Both arguments 1x1 with exact zero divisor entries.
GammaReport gamma(const Algebra& A, const Matrix& N, const Matrix& T);

// [[v, -alpha],[0, u]]: middle term of the extension of S/(u) by S/(v) with
// class alpha. Throws when alpha is not a cocycle.
Matrix pushout_middle(const Algebra& A, const RingElement& u, const RingElement& v, const RingElement& alpha);

struct LESReport {
    int n = 0;  // rows of T_i
    int rank_c_ti = 0;
    int rank_c_c = 0;
    int rank_c_tprev = 0;
    int gamma_c_ti = 0;
    bool subadditive = false;
    bool within_bound = false;  // gamma_c_ti <= 2n
};

// 0 -> T_{i-1} -> T_i -> C -> 0 with T_i = [[T_{i-1}, *],[0, C]].
LESReport les_rank_bound_check(const Algebra& A, const Matrix& C, const Matrix& Tprev, const Matrix& Ti);

}  // namespace trmod
