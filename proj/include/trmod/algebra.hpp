#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trmod/expr.hpp"
#include "trmod/field.hpp"
#include "trmod/linalg.hpp"

namespace trmod {

/// k-coordinates of a vector in some F_p-space.
using Vec = std::vector<Coeff>;

/// Coefficient vector over the algebra basis (1, degree-1 generators, m^2 basis).
struct RingElement {
    Vec c;

    bool operator==(const RingElement&) const = default;
    auto operator<=>(const RingElement&) const = default;
};

struct AlgebraSpec {
    int characteristic = 2;
    std::vector<std::string> variables;
    std::vector<std::string> relations;  // degree-2 polynomials in the entry grammar
};

struct HilbertSeries {
    int h0 = 1;
    int h1 = 0;
    int h2 = 0;
    bool operator==(const HilbertSeries&) const = default;
};

/// Graded local k-algebra R = k + m/m^2 + m^2 with m^3 = 0, stored through the
/// products of pairs of degree-1 generators. Immutable after construction.
class Algebra {
public:
    // Validates the spec. Distinct ValidationError messages for: non-homogeneous
    // relation, m^3 != 0 after reduction, m^2 = 0.
    static Algebra build(const AlgebraSpec& spec);
    // k[x,y,z]/(x^2, y^2, z^2, yz) over F_p.
    static Algebra standard_s(int p);

    const PrimeField& field() const noexcept { return field_; }
    int characteristic() const noexcept { return field_.characteristic(); }
    int dim() const noexcept { return 1 + e_ + s2_; }
    int embedding_dim() const noexcept { return e_; }
    int m2_dim() const noexcept { return s2_; }
    HilbertSeries hilbert_series() const noexcept { return {1, e_, s2_}; }
    const AlgebraSpec& spec() const noexcept { return spec_; }

    const std::vector<std::string>& variables() const noexcept { return spec_.variables; }
    const std::vector<std::string>& basis_names() const noexcept { return basis_names_; }
    int degree_of(int basis_index) const noexcept {
        return basis_index == 0 ? 0 : (basis_index <= e_ ? 1 : 2);
    }
    // c_{ijk}: coefficient of basis k in basis_i * basis_j.
    Coeff structure_constant(int i, int j, int k) const;

    RingElement zero() const { return {Vec(dim(), 0)}; }
    RingElement one() const;
    RingElement scalar(long long v) const;
    RingElement variable(int i) const;
    RingElement basis_element(int b) const;

    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement sub(const RingElement& a, const RingElement& b) const;
    RingElement neg(const RingElement& a) const;
    RingElement scale(Coeff s, const RingElement& a) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;
    // out += a * b, all spans of length dim().
    void mul_add(std::span<const Coeff> a, std::span<const Coeff> b, std::span<Coeff> out) const;

    bool is_zero(const RingElement& a) const noexcept;
    bool is_unit(const RingElement& a) const noexcept { return a.c[0] != 0; }
    bool in_m2(const RingElement& a) const noexcept;
    RingElement degree_part(const RingElement& a, int degree) const;
    // Inverse of a unit: with m^3 = 0, (u(1+n))^{-1} = u^{-1}(1 - n + n^2).
    RingElement inverse(const RingElement& a) const;

    // d x d matrix whose column b holds a * basis_b.
    FpMatrix multiplication_matrix(const RingElement& a) const;

    RingElement from_polynomial(const Polynomial& poly) const;
    RingElement parse(std::string_view text) const;
    std::string format(const RingElement& a) const;

    // Position of the first nonzero coordinate, or -1.
    int leading_index(const RingElement& a) const noexcept;
    // Integer code with coordinate 1 least significant; the constant term is
    // ignored. Orders x < x+y < x+z < x+y+z over S(2).
    long long code(const RingElement& a) const noexcept;

    void check(const RingElement& a) const;

private:
    Algebra(AlgebraSpec spec, PrimeField f) : spec_(std::move(spec)), field_(f) {}

    AlgebraSpec spec_;
    PrimeField field_;
    int e_ = 0;
    int s2_ = 0;
    std::vector<std::string> basis_names_;
    std::vector<Coeff> quad_;  // e*e*s2: x_i * x_j in m^2 coordinates
    std::vector<std::vector<Coeff>> monomial_reduction_;  // per degree-2 monomial index
    std::vector<std::vector<int>> monomial_index_;        // (i, j) -> monomial index
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// ---------------------------------------------------------------------------
// Free-module coordinates. An element of R^n is identified with a vector in
// k^{n*dim R}, coordinate b*n + i holding the basis_b coefficient of entry i.

inline int free_coord(int basis, int entry, int rank) { return basis * rank + entry; }

Vec to_coords(const Algebra& A, std::span<const RingElement> entries);
std::vector<RingElement> from_coords(const Algebra& A, std::span<const Coeff> v, int rank);

// m*K for a k-subspace K of R^n that is an R-submodule.
Subspace maximal_ideal_times(const Algebra& A, const Subspace& K, int rank);

// Canonical minimal generators of the R-submodule K of R^n: a lift of a k-basis
// of K/mK, each reduced modulo mK and scaled to leading coefficient 1.
std::vector<Vec> minimal_generators(const Algebra& A, const Subspace& K, int rank);

// ---------------------------------------------------------------------------

struct RingReport {
    HilbertSeries hilbert;
    int length = 0;
    int socle_dim = 0;
    bool socle_equals_m2 = false;
    bool m2_dim_is_e_minus_1 = false;
    bool length_is_2e = false;
    bool gorenstein = false;
    // all necessary conditions for nontrivial totally reflexive modules hold
    bool admits_nontrivial_tr = false;
    std::vector<std::string> notes;
};

RingReport ring_preconditions(const Algebra& A);

/// An ideal as a k-subspace of R together with minimal generators.
struct Ideal {
    Subspace span;
    std::vector<RingElement> generators;
    bool whole_ring = false;

    int dim() const noexcept { return span.dim(); }
};

Ideal principal_ideal(const Algebra& A, const RingElement& a);
// (0 : a). For a = 0 the whole ring is returned with whole_ring set.
Ideal annihilator(const Algebra& A, const RingElement& a);
bool same_ideal(const Ideal& a, const Ideal& b);

// b with (0:a) = (b) and (0:b) = (a), leading coefficient 1; nullopt if a is
// not an exact zero divisor. Throws for units and for a = 0.
std::optional<RingElement> exact_zero_divisor_partner(const Algebra& A, const RingElement& a);
bool is_exact_zero_divisor(const Algebra& A, const RingElement& a);

class ExactZeroDivisorPair {
public:
    // Verifies (0:a) = (b) and (0:b) = (a); throws ValidationError otherwise.
    ExactZeroDivisorPair(const Algebra& A, RingElement a, RingElement b);

    const RingElement& a() const noexcept { return a_; }
    const RingElement& b() const noexcept { return b_; }

private:
    RingElement a_;
    RingElement b_;
};

// All exact zero divisors up to equality of the generated ideal, each given by
// the representative of smallest code with leading coefficient 1.
std::vector<ExactZeroDivisorPair> enumerate_ezd(const Algebra& A);

}  // namespace trmod
