#pragma once

#include <optional>
#include <span>
#include <vector>

#include "trmod/field.hpp"

namespace trmod {

/// Dense matrix over F_p, row-major.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}

    static FpMatrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Coeff& operator()(int r, int c) noexcept { return data_[std::size_t(r) * cols_ + c]; }
    Coeff operator()(int r, int c) const noexcept { return data_[std::size_t(r) * cols_ + c]; }

    std::span<Coeff> row(int r) noexcept { return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)}; }
    std::span<const Coeff> row(int r) const noexcept {
        return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)};
    }

    void append_row(std::span<const Coeff> v);
    FpMatrix transpose() const;
    bool is_zero() const noexcept;

    const std::vector<Coeff>& data() const noexcept { return data_; }
    bool operator==(const FpMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Coeff> data_;
};

FpMatrix multiply(const PrimeField& f, const FpMatrix& a, const FpMatrix& b);

// In-place reduced row echelon form. Returns the pivot column of each nonzero row;
// rows past pivots.size() are zero afterwards.
std::vector<int> rref(const PrimeField& f, FpMatrix& m);

int rank(const PrimeField& f, FpMatrix m);

// Rows of the result form a basis of {v : m v = 0}.
FpMatrix nullspace(const PrimeField& f, const FpMatrix& m);

// Some x with a x = b, or nullopt.
std::optional<std::vector<Coeff>> solve(const PrimeField& f, const FpMatrix& a, std::span<const Coeff> b);

std::optional<FpMatrix> inverse(const PrimeField& f, const FpMatrix& a);
bool is_invertible(const PrimeField& f, const FpMatrix& a);

// Every invertible n x n matrix over F_p, in order of the little-endian code of
// the row-major entries. Cached per (p, n); throws BudgetExceeded past 10^6
// candidates.
const std::vector<FpMatrix>& general_linear(const PrimeField& f, int n);

/// A subspace of F_p^n kept as a fully reduced echelon basis. Reduction of a
/// vector modulo the subspace gives a canonical coset representative.
class Subspace {
public:
    Subspace(const PrimeField& f, int ambient) : f_(f), basis_(0, ambient) {}

    int ambient() const noexcept { return basis_.cols(); }
    int dim() const noexcept { return int(pivots_.size()); }
    const FpMatrix& basis() const noexcept { return basis_; }
    const std::vector<int>& pivots() const noexcept { return pivots_; }

    // Returns true when v was not already in the span.
    bool insert(std::span<const Coeff> v);
    bool contains(std::span<const Coeff> v) const;
    // Replaces v by its canonical representative modulo the subspace.
    void reduce(std::span<Coeff> v) const;

    static Subspace row_space(const PrimeField& f, const FpMatrix& m);

private:
    PrimeField f_;
    FpMatrix basis_;
    std::vector<int> pivots_;
};

}  // namespace trmod
