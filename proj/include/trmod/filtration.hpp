#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trmod/modmat.hpp"

namespace trmod {

struct Filtration {
    std::vector<Matrix> chain;            // T_1 .. T_n, leading principal blocks
    std::vector<RingElement> quotients;   // t_11 .. t_nn
    std::vector<int> lengths;             // length(T_i)
    std::vector<std::string> log;
};

// Saturated filtration of coker M for a square minimal upper triangular M with
// exact zero divisors on the diagonal. Throws ValidationError naming the first
// offending entry otherwise.
Filtration filtrate_ut(const Algebra& A, const Matrix& M);

struct SubmoduleStep {
    Matrix submodule;       // T with the last row and column removed
    RingElement quotient;   // t_nn
    Matrix reduced_syzygy;  // syzygy of T, column-reduced so its last row is (0,...,0,s)
    RingElement partner;    // s
    int length_before = 0;
    int length_after = 0;
};

// T must have last row (0,...,0,t) with t an exact zero divisor.
SubmoduleStep submodule_step(const Algebra& A, const Matrix& T);

struct UTSearch {
    bool found = false;
    std::optional<EquivalenceWitness> witness;  // P*M*Q = form
    std::optional<Matrix> form;
    long long pairs_examined = 0;
    long long pairs_total = 0;
};

// Exhaustive over flag coset representatives of the scalar parts, with one
// linear solve for the correction terms per pair. Throws BudgetExceeded when
// the coset enumeration is too large.
UTSearch find_ut_form(const Algebra& A, const Matrix& M, Budget& budget);
UTSearch find_ut_form(const Algebra& A, const Matrix& M);

// Representatives of B\GL_n (rows) or GL_n/B (columns), B the upper
// triangular invertible matrices, in a canonical echelon form.
std::vector<FpMatrix> flag_representatives(const PrimeField& f, int n, bool left);

Matrix mb_matrix(const Algebra& A, int b, const RingElement& s, const RingElement& t, const RingElement& u,
                 const RingElement& v);

struct MbConditions {
    bool exact_pair = false;        // (s,t)
    bool u_v_linear = false;        // u, v in m outside m^2
    bool uv_zero = false;
    bool condition_a = false;       // s, t, u independent modulo m^2
    bool condition_b = false;       // s in (t)+m^2 and u, v not in (t)+m^2
    std::vector<std::string> warnings;

    bool satisfied() const noexcept { return exact_pair && u_v_linear && uv_zero && (condition_a || condition_b); }
};

MbConditions mb_conditions(const Algebra& A, const RingElement& s, const RingElement& t, const RingElement& u,
                           const RingElement& v);

}  // namespace trmod
