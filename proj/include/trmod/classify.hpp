#pragma once

#include <string>
#include <vector>

#include "trmod/modmat.hpp"

namespace trmod {

struct CyclicTR {
    std::vector<RingElement> generators;  // one per isomorphism class of R/(a)
    std::vector<std::string> warnings;
};

CyclicTR enumerate_cyclic_tr(const Algebra& A);

// Nonzero degree-1 elements without a term in the first variable, by code.
std::vector<RingElement> superdiagonal_candidates(const Algebra& A);

Matrix ut2(const Algebra& A, const RingElement& u, const RingElement& a, const RingElement& t);

// [[u,a],[0,t]] before [[u',a'],[0,t']]: compare u, then t, then a by code.
bool ut2_less(const Algebra& A, const Matrix& X, const Matrix& Y);

struct IsoClass {
    Matrix representative;
    RingElement u, t, a;
    std::vector<Matrix> members;
};

struct ClassTable {
    int characteristic = 0;
    std::vector<RingElement> diagonal;  // u and t range over these
    std::vector<IsoClass> classes;
    int enumerated = 0;
    int indecomposable = 0;
    long long budget_used = 0;

    // cell (u, t): the superdiagonal entries of the representatives
    std::vector<RingElement> cell(const RingElement& u, const RingElement& t) const;
};

// order: a permutation of the enumeration, for stability checks; empty means
// the natural order.
ClassTable classify_ut2(const Algebra& A, Budget& budget, int jobs = 1, const std::vector<int>& order = {});
ClassTable classify_ut2(const Algebra& A);

std::string render_table(const Algebra& A, const ClassTable& table);

struct SwapCase {
    RingElement u, a, t;
    bool isomorphic = false;
};

struct SwapReport {
    std::vector<SwapCase> cases;  // admissible: u != t and [[u,a],[0,t]] indecomposable
    int isomorphic = 0;
    bool all_isomorphic() const noexcept { return isomorphic == int(cases.size()); }
    bool none_isomorphic() const noexcept { return isomorphic == 0; }
};

SwapReport swap_isomorphism_check(const Algebra& A, Budget& budget);
SwapReport swap_isomorphism_check(const Algebra& A);

}  // namespace trmod
