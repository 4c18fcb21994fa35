#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trmod/algebra.hpp"

namespace trmod {

/// r x c matrix of ring elements presenting coker(R^c -> R^r).
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<RingElement> entries;  // row-major

    Matrix() = default;
    Matrix(const Algebra& A, int r, int c) : rows(r), cols(c), entries(std::size_t(r) * c, A.zero()) {}

    RingElement& at(int i, int j) { return entries[std::size_t(i) * cols + j]; }
    const RingElement& at(int i, int j) const { return entries[std::size_t(i) * cols + j]; }

    bool square() const noexcept { return rows == cols; }
    bool operator==(const Matrix&) const = default;
};

Matrix parse_matrix(const Algebra& A, const std::vector<std::vector<std::string>>& rows);
// Same, for the bracket form "[[x,z],[y,x]]".
Matrix parse_matrix(const Algebra& A, std::string_view text);
std::vector<std::vector<std::string>> format_entries(const Algebra& A, const Matrix& M);
std::string to_string(const Algebra& A, const Matrix& M);

Matrix identity_matrix(const Algebra& A, int n);
Matrix scalar_matrix(const Algebra& A, const FpMatrix& m);
Matrix multiply(const Algebra& A, const Matrix& X, const Matrix& Y);
Matrix add(const Algebra& A, const Matrix& X, const Matrix& Y);
Matrix degree_part(const Algebra& A, const Matrix& M, int degree);
// Degree-0 parts as a matrix over k.
FpMatrix scalar_part(const Matrix& M);
void check_matrix(const Algebra& A, const Matrix& M);

bool is_minimal(const Algebra& A, const Matrix& M);
bool is_upper_triangular(const Algebra& A, const Matrix& M);

/// The k-linear map R^c -> R^r, an (r*dim) x (c*dim) matrix in free-module
/// coordinates.
FpMatrix linearize(const Algebra& A, const Matrix& M);
Vec column_coords(const Algebra& A, const Matrix& M, int j);
Subspace image(const Algebra& A, const Matrix& M);

int coker_length(const Algebra& A, const Matrix& M);

// Pivots away unit entries, drops zero columns and columns that are not needed
// to generate the image. A free cokernel of rank n comes back as n x 0.
Matrix minimize(const Algebra& A, const Matrix& M);
// Entries in m and the columns minimally generate the image.
bool is_strictly_minimal(const Algebra& A, const Matrix& M);
// Removes free summands of the cokernel (rows split off by a surjection onto R).
Matrix strip_free_summands(const Algebra& A, const Matrix& M);
int free_rank(const Algebra& A, const Matrix& M);

// Columns minimally generate ker(M) in R^cols, each reduced modulo m*ker and
// scaled to leading coefficient 1.
Matrix syzygy(const Algebra& A, const Matrix& M);
Matrix dual(const Matrix& M);

// Whether column operations produce a column with entries in m^2 that is still
// a minimal generator of the image; the returned scalar vector q gives it as M*q.
std::optional<std::vector<Coeff>> m2_column(const Algebra& A, const Matrix& M);
bool has_m2_column(const Algebra& A, const Matrix& M);

struct EquivalenceWitness {
    Matrix P;
    Matrix Q;
};

struct Budget {
    long long limit = 5'000'000;
    long long used = 0;
    void spend(long long n, const char* what);
};

// P*M1*Q = M2 with P, Q invertible, or nullopt when none exists. Exhaustive over
// the scalar parts of P and one linear solve per left factor. Throws
// BudgetExceeded rather than answering when the search would be too large.
std::optional<EquivalenceWitness> is_equivalent(const Algebra& A, const Matrix& M1, const Matrix& M2,
                                                Budget& budget);
std::optional<EquivalenceWitness> is_equivalent(const Algebra& A, const Matrix& M1, const Matrix& M2);
bool verify_witness(const Algebra& A, const Matrix& M1, const Matrix& M2, const EquivalenceWitness& w);

// Invariant of M under (P, Q) -> P*M*Q that is cheap to compare.
std::vector<int> equivalence_invariant(const Algebra& A, const Matrix& M);

struct Indecomposability {
    bool indecomposable = false;
    int endomorphism_top_dim = 0;  // dim of End(coker M) -> End(k^rows) image
    // For decomposable modules: an idempotent endomorphism, as a matrix acting
    // on the generators, that is neither 0 nor 1 on the cokernel.
    std::optional<Matrix> idempotent;
};

Indecomposability is_indecomposable(const Algebra& A, const Matrix& M, Budget& budget);
Indecomposability is_indecomposable(const Algebra& A, const Matrix& M);

}  // namespace trmod
