#include "trmod/modmat.hpp"

#include <algorithm>
#include <cctype>

#include "trmod/error.hpp"

namespace trmod {

void Budget::spend(long long n, const char* what) {
    used += n;
    if (used > limit)
        throw BudgetExceeded(std::string(what) + ": search budget of " + std::to_string(limit) + " exceeded");
}

// ---------------------------------------------------------------------------

Matrix parse_matrix(const Algebra& A, const std::vector<std::vector<std::string>>& rows) {
    const int r = int(rows.size());
    const int c = r == 0 ? 0 : int(rows[0].size());
    Matrix M(A, r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw ValidationError("matrix rows have different lengths");
        for (int j = 0; j < c; ++j) M.at(i, j) = A.parse(rows[i][j]);
    }
    return M;
}

Matrix parse_matrix(const Algebra& A, std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    std::size_t pos = 0;
    auto expect = [&](char ch) {
        if (pos >= s.size() || s[pos] != ch)
            throw ParseError("matrix literal: expected '" + std::string(1, ch) + "' at offset " + std::to_string(pos));
        ++pos;
    };
    std::vector<std::vector<std::string>> rows;
    expect('[');
    if (pos < s.size() && s[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            expect('[');
            std::vector<std::string> row;
            std::string cur;
            while (pos < s.size() && s[pos] != ']') {
                if (s[pos] == ',') {
                    row.push_back(cur);
                    cur.clear();
                } else {
                    cur += s[pos];
                }
                ++pos;
            }
            expect(']');
            if (!cur.empty() || !row.empty()) row.push_back(cur);
            rows.push_back(std::move(row));
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            expect(']');
            break;
        }
    }
    if (pos != s.size()) throw ParseError("matrix literal: trailing input at offset " + std::to_string(pos));
    return parse_matrix(A, rows);
}

std::vector<std::vector<std::string>> format_entries(const Algebra& A, const Matrix& M) {
    std::vector<std::vector<std::string>> out(M.rows, std::vector<std::string>(M.cols));
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) out[i][j] = A.format(M.at(i, j));
    return out;
}

std::string to_string(const Algebra& A, const Matrix& M) {
    std::string s = "[";
    for (int i = 0; i < M.rows; ++i) {
        if (i) s += ",";
        s += "[";
        for (int j = 0; j < M.cols; ++j) {
            if (j) s += ",";
            s += A.format(M.at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

void check_matrix(const Algebra& A, const Matrix& M) {
    if (M.rows < 0 || M.cols < 0 || int(M.entries.size()) != M.rows * M.cols)
        throw ValidationError("matrix shape does not match its entries");
    for (const auto& e : M.entries) A.check(e);
}

Matrix identity_matrix(const Algebra& A, int n) {
    Matrix I(A, n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = A.one();
    return I;
}

Matrix scalar_matrix(const Algebra& A, const FpMatrix& m) {
    Matrix M(A, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) M.at(i, j).c[0] = m(i, j);
    return M;
}

FpMatrix scalar_part(const Matrix& M) {
    FpMatrix m(M.rows, M.cols);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) m(i, j) = M.at(i, j).c[0];
    return m;
}

Matrix multiply(const Algebra& A, const Matrix& X, const Matrix& Y) {
    if (X.cols != Y.rows) throw ValidationError("matrix product: shape mismatch");
    Matrix Z(A, X.rows, Y.cols);
    for (int i = 0; i < X.rows; ++i)
        for (int k = 0; k < X.cols; ++k) {
            const auto& x = X.at(i, k);
            if (A.is_zero(x)) continue;
            for (int j = 0; j < Y.cols; ++j) A.mul_add(x.c, Y.at(k, j).c, Z.at(i, j).c);
        }
    return Z;
}

Matrix add(const Algebra& A, const Matrix& X, const Matrix& Y) {
    if (X.rows != Y.rows || X.cols != Y.cols) throw ValidationError("matrix sum: shape mismatch");
    Matrix Z = X;
    for (std::size_t k = 0; k < Z.entries.size(); ++k) Z.entries[k] = A.add(X.entries[k], Y.entries[k]);
    return Z;
}

Matrix degree_part(const Algebra& A, const Matrix& M, int degree) {
    Matrix D = M;
    for (auto& e : D.entries) e = A.degree_part(e, degree);
    return D;
}

bool is_minimal(const Algebra& A, const Matrix& M) {
    return std::none_of(M.entries.begin(), M.entries.end(), [&](const RingElement& e) { return A.is_unit(e); });
}

bool is_upper_triangular(const Algebra& A, const Matrix& M) {
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < std::min(i, M.cols); ++j)
            if (!A.is_zero(M.at(i, j))) return false;
    return true;
}

// ---------------------------------------------------------------------------

FpMatrix linearize(const Algebra& A, const Matrix& M) {
    const int d = A.dim();
    const int r = M.rows, c = M.cols;
    FpMatrix L(r * d, c * d);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            const auto& e = M.at(i, j);
            if (A.is_zero(e)) continue;
            FpMatrix mm = A.multiplication_matrix(e);
            for (int b = 0; b < d; ++b)
                for (int bp = 0; bp < d; ++bp) L(free_coord(b, i, r), free_coord(bp, j, c)) = mm(b, bp);
        }
    return L;
}

Vec column_coords(const Algebra& A, const Matrix& M, int j) {
    Vec v(std::size_t(M.rows) * A.dim(), 0);
    for (int i = 0; i < M.rows; ++i)
        for (int b = 0; b < A.dim(); ++b) v[free_coord(b, i, M.rows)] = M.at(i, j).c[b];
    return v;
}

Subspace image(const Algebra& A, const Matrix& M) {
    return Subspace::row_space(A.field(), linearize(A, M).transpose());
}

int coker_length(const Algebra& A, const Matrix& M) {
    check_matrix(A, M);
    return M.rows * A.dim() - rank(A.field(), linearize(A, M));
}

namespace {

Matrix delete_row_col(const Algebra& A, const Matrix& M, int row, int col) {
    Matrix out(A, M.rows - (row >= 0), M.cols - (col >= 0));
    for (int i = 0, oi = 0; i < M.rows; ++i) {
        if (i == row) continue;
        for (int j = 0, oj = 0; j < M.cols; ++j) {
            if (j == col) continue;
            out.at(oi, oj++) = M.at(i, j);
        }
        ++oi;
    }
    return out;
}

Matrix keep_columns(const Algebra& A, const Matrix& M, const std::vector<int>& cols) {
    Matrix out(A, M.rows, int(cols.size()));
    for (int i = 0; i < M.rows; ++i)
        for (std::size_t k = 0; k < cols.size(); ++k) out.at(i, int(k)) = M.at(i, cols[k]);
    return out;
}

std::vector<int> generating_columns(const Algebra& A, const Matrix& M) {
    Subspace im = image(A, M);
    Subspace G = maximal_ideal_times(A, im, M.rows);
    std::vector<int> keep;
    for (int j = 0; j < M.cols; ++j)
        if (G.insert(column_coords(A, M, j))) keep.push_back(j);
    return keep;
}

}  // namespace

Matrix minimize(const Algebra& A, const Matrix& M) {
    check_matrix(A, M);
    Matrix cur = M;
    while (true) {
        int pi = -1, pj = -1;
        for (int i = 0; i < cur.rows && pi < 0; ++i)
            for (int j = 0; j < cur.cols; ++j)
                if (A.is_unit(cur.at(i, j))) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        RingElement uinv = A.inverse(cur.at(pi, pj));
        for (int k = 0; k < cur.rows; ++k) {
            if (k == pi || A.is_zero(cur.at(k, pj))) continue;
            RingElement factor = A.mul(cur.at(k, pj), uinv);
            for (int j = 0; j < cur.cols; ++j)
                cur.at(k, j) = A.sub(cur.at(k, j), A.mul(factor, cur.at(pi, j)));
        }
        cur = delete_row_col(A, cur, pi, pj);
    }
    return keep_columns(A, cur, generating_columns(A, cur));
}

bool is_strictly_minimal(const Algebra& A, const Matrix& M) {
    check_matrix(A, M);
    return is_minimal(A, M) && int(generating_columns(A, M).size()) == M.cols;
}

Matrix strip_free_summands(const Algebra& A, const Matrix& M) {
    Matrix cur = minimize(A, M);
    while (cur.rows > 0) {
        FpMatrix left = nullspace(A.field(), linearize(A, dual(cur)));
        int found = -1, entry = -1;
        for (int r = 0; r < left.rows() && found < 0; ++r)
            for (int i = 0; i < cur.rows; ++i)
                if (left(r, free_coord(0, i, cur.rows)) != 0) {
                    found = r;
                    entry = i;
                    break;
                }
        if (found < 0) break;
        // replacing row `entry` by y^T * cur, y the left-kernel vector, leaves
        // the other rows alone and zeroes this one: a free summand
        cur = delete_row_col(A, cur, entry, -1);
        cur = minimize(A, cur);
    }
    return cur;
}

int free_rank(const Algebra& A, const Matrix& M) {
    return minimize(A, M).rows - strip_free_summands(A, M).rows;
}

Matrix syzygy(const Algebra& A, const Matrix& M) {
    check_matrix(A, M);
    FpMatrix K = nullspace(A.field(), linearize(A, M));
    Subspace ker = Subspace::row_space(A.field(), K);
    auto gens = minimal_generators(A, ker, M.cols);
    Matrix W(A, M.cols, int(gens.size()));
    for (std::size_t g = 0; g < gens.size(); ++g) {
        auto col = from_coords(A, gens[g], M.cols);
        for (int i = 0; i < M.cols; ++i) W.at(i, int(g)) = col[i];
    }
    return W;
}

Matrix dual(const Matrix& M) {
    Matrix T;
    T.rows = M.cols;
    T.cols = M.rows;
    T.entries.resize(M.entries.size());
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) T.entries[std::size_t(j) * M.rows + i] = M.at(i, j);
    return T;
}

std::optional<std::vector<Coeff>> m2_column(const Algebra& A, const Matrix& M) {
    check_matrix(A, M);
    const int e = A.embedding_dim();
    // columns as vectors of their degree <= 1 coordinates
    FpMatrix low(M.rows * (1 + e), M.cols);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j)
            for (int b = 0; b <= e; ++b) low(b * M.rows + i, j) = M.at(i, j).c[b];
    FpMatrix N = nullspace(A.field(), low);
    if (N.rows() == 0) return std::nullopt;
    Subspace m_im = maximal_ideal_times(A, image(A, M), M.rows);
    for (int r = 0; r < N.rows(); ++r) {
        Vec v(std::size_t(M.rows) * A.dim(), 0);
        for (int j = 0; j < M.cols; ++j) {
            Coeff q = N(r, j);
            if (q == 0) continue;
            auto col = column_coords(A, M, j);
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = A.field().add(v[k], A.field().mul(q, col[k]));
        }
        if (!m_im.contains(v)) return Vec(N.row(r).begin(), N.row(r).end());
    }
    return std::nullopt;
}

bool has_m2_column(const Algebra& A, const Matrix& M) { return m2_column(A, M).has_value(); }

// ---------------------------------------------------------------------------

std::vector<int> equivalence_invariant(const Algebra& A, const Matrix& M) {
    const int e = A.embedding_dim();
    const auto& f = A.field();
    FpMatrix rowflat(M.rows, M.cols * e), colflat(M.cols, M.rows * e);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j)
            for (int v = 0; v < e; ++v) {
                rowflat(i, j * e + v) = M.at(i, j).c[1 + v];
                colflat(j, i * e + v) = M.at(i, j).c[1 + v];
            }
    Subspace ideal(f, A.dim());
    for (const auto& x : M.entries) {
        FpMatrix mm = A.multiplication_matrix(x).transpose();
        for (int b = 0; b < A.dim(); ++b) ideal.insert(mm.row(b));
    }
    return {M.rows, M.cols, coker_length(A, M), rank(f, rowflat), rank(f, colflat), ideal.dim()};
}

bool verify_witness(const Algebra& A, const Matrix& M1, const Matrix& M2, const EquivalenceWitness& w) {
    if (w.P.rows != M1.rows || w.Q.cols != M1.cols) return false;
    if (!is_invertible(A.field(), scalar_part(w.P)) || !is_invertible(A.field(), scalar_part(w.Q))) return false;
    return multiply(A, multiply(A, w.P, M1), w.Q) == M2;
}

std::optional<EquivalenceWitness> is_equivalent(const Algebra& A, const Matrix& M1, const Matrix& M2,
                                                Budget& budget) {
    check_matrix(A, M1);
    check_matrix(A, M2);
    if (!is_minimal(A, M1) || !is_minimal(A, M2))
        throw ValidationError("is_equivalent expects minimal matrices (entries in the maximal ideal)");
    if (M1.rows != M2.rows || M1.cols != M2.cols) return std::nullopt;
    const int r = M1.rows, c = M1.cols;
    if (M1 == M2) return EquivalenceWitness{identity_matrix(A, r), identity_matrix(A, c)};
    if (equivalence_invariant(A, M1) != equivalence_invariant(A, M2)) return std::nullopt;

    const auto& f = A.field();
    const int d = A.dim(), e = A.embedding_dim();
    const int nq = c * c, na = r * r * e, nb = c * c * e;
    const int nvars = nq + na + nb;
    const int neq = r * c * (d - 1);
    const Matrix N1 = degree_part(A, M2, 1);

    // products x_v * N1[k][j], used by both correction terms
    std::vector<RingElement> xv_n1(std::size_t(e) * r * c);
    for (int v = 0; v < e; ++v)
        for (int k = 0; k < r; ++k)
            for (int j = 0; j < c; ++j) xv_n1[(std::size_t(v) * r + k) * c + j] = A.mul(A.variable(v), N1.at(k, j));

    FpMatrix base(neq, nvars + 1);
    // terms independent of P0
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            for (int b = 1; b < d; ++b) {
                const int eq = (i * c + j) * (d - 1) + (b - 1);
                if (A.degree_of(b) == 2) {
                    for (int k = 0; k < r; ++k)
                        for (int v = 0; v < e; ++v)
                            base(eq, nq + (i * r + k) * e + v) = xv_n1[(std::size_t(v) * r + k) * c + j].c[b];
                    for (int k = 0; k < c; ++k)
                        for (int v = 0; v < e; ++v)
                            base(eq, nq + na + (k * c + j) * e + v) = xv_n1[(std::size_t(v) * r + i) * c + k].c[b];
                }
                base(eq, nvars) = M2.at(i, j).c[b];
            }

    std::vector<Coeff> x(nvars);
    for (const FpMatrix& P0 : general_linear(f, r)) {
        budget.spend(1, "is_equivalent");
        Matrix R0 = multiply(A, scalar_matrix(A, P0), M1);
        FpMatrix sys = base;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                for (int b = 1; b < d; ++b) {
                    const int eq = (i * c + j) * (d - 1) + (b - 1);
                    for (int l = 0; l < c; ++l) sys(eq, l * c + j) = R0.at(i, l).c[b];
                }
        auto pivots = rref(f, sys);
        if (!pivots.empty() && pivots.back() == nvars) continue;
        std::fill(x.begin(), x.end(), 0);
        std::vector<char> is_pivot(nvars, 0);
        for (std::size_t t = 0; t < pivots.size(); ++t) {
            x[pivots[t]] = sys(int(t), nvars);
            is_pivot[pivots[t]] = 1;
        }
        // null space, reduced so that rows touching Q0 come first
        FpMatrix null(0, nvars);
        Vec v(nvars);
        for (int fr = 0; fr < nq; ++fr) {
            if (is_pivot[fr]) continue;
            std::fill(v.begin(), v.end(), 0);
            v[fr] = 1;
            for (std::size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = f.neg(sys(int(t), fr));
            null.append_row(v);
        }
        // free variables outside Q0 leave Q0 unchanged only if no pivot in Q0
        // depends on them; collect those dependencies too.
        for (int fr = nq; fr < nvars; ++fr) {
            if (is_pivot[fr]) continue;
            bool touches = false;
            for (std::size_t t = 0; t < pivots.size() && pivots[t] < nq; ++t)
                if (sys(int(t), fr) != 0) touches = true;
            if (!touches) continue;
            std::fill(v.begin(), v.end(), 0);
            v[fr] = 1;
            for (std::size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = f.neg(sys(int(t), fr));
            null.append_row(v);
        }
        auto npiv = rref(f, null);
        std::vector<int> qrows;
        for (std::size_t t = 0; t < npiv.size(); ++t)
            if (npiv[t] < nq) qrows.push_back(int(t));

        const int k = int(qrows.size());
        long long count = 1;
        for (int t = 0; t < k; ++t) {
            count *= f.characteristic();
            if (count > budget.limit) throw BudgetExceeded("is_equivalent: affine search space too large");
        }
        std::vector<Coeff> lambda(k, 0);
        FpMatrix Q0(c, c);
        for (long long code = 0; code < count; ++code) {
            budget.spend(1, "is_equivalent");
            long long cc = code;
            for (int t = 0; t < k; ++t) {
                lambda[t] = static_cast<Coeff>(cc % f.characteristic());
                cc /= f.characteristic();
            }
            for (int l = 0; l < c; ++l)
                for (int j = 0; j < c; ++j) {
                    Coeff val = x[l * c + j];
                    for (int t = 0; t < k; ++t)
                        val = f.add(val, f.mul(lambda[t], null(qrows[t], l * c + j)));
                    Q0(l, j) = val;
                }
            if (!is_invertible(f, Q0)) continue;
            std::vector<Coeff> sol = x;
            for (int t = 0; t < k; ++t)
                for (int col = 0; col < nvars; ++col)
                    sol[col] = f.add(sol[col], f.mul(lambda[t], null(qrows[t], col)));
            Matrix Acorr = identity_matrix(A, r), Bcorr = identity_matrix(A, c);
            for (int i = 0; i < r; ++i)
                for (int kk = 0; kk < r; ++kk)
                    for (int vv = 0; vv < e; ++vv) Acorr.at(i, kk).c[1 + vv] = sol[nq + (i * r + kk) * e + vv];
            for (int kk = 0; kk < c; ++kk)
                for (int j = 0; j < c; ++j)
                    for (int vv = 0; vv < e; ++vv) Bcorr.at(kk, j).c[1 + vv] = sol[nq + na + (kk * c + j) * e + vv];
            EquivalenceWitness w{multiply(A, Acorr, scalar_matrix(A, P0)), multiply(A, scalar_matrix(A, Q0), Bcorr)};
            if (!verify_witness(A, M1, M2, w)) throw Error("is_equivalent: witness failed verification");
            return w;
        }
    }
    return std::nullopt;
}

std::optional<EquivalenceWitness> is_equivalent(const Algebra& A, const Matrix& M1, const Matrix& M2) {
    Budget b;
    return is_equivalent(A, M1, M2, b);
}

// ---------------------------------------------------------------------------

namespace {

bool is_nilpotent(const PrimeField& f, const FpMatrix& a) {
    FpMatrix t = a;
    for (int k = 1; k < a.rows(); ++k) t = multiply(f, t, a);
    return t.is_zero();
}

FpMatrix scalar_shift(const PrimeField& f, const FpMatrix& a, Coeff lambda) {
    FpMatrix b = a;
    for (int i = 0; i < a.rows(); ++i) b(i, i) = f.sub(b(i, i), lambda);
    return b;
}

// a neither nilpotent nor invertible: an idempotent power of a^n.
FpMatrix fitting_idempotent(const PrimeField& f, const FpMatrix& a) {
    FpMatrix c = a;
    for (int k = 1; k < a.rows(); ++k) c = multiply(f, c, a);
    FpMatrix t = c;
    for (long long it = 0; it < 10'000'000; ++it) {
        if (multiply(f, t, t) == t) return t;
        t = multiply(f, t, c);
    }
    throw Error("fitting_idempotent: no idempotent power found");
}

bool splits(const PrimeField& f, const FpMatrix& a) {
    return !is_nilpotent(f, a) && !is_invertible(f, a);
}

Matrix scale_matrix(const Algebra& A, Coeff s, const Matrix& M) {
    Matrix out = M;
    for (auto& e : out.entries) e = A.scale(s, e);
    return out;
}

}  // namespace

Indecomposability is_indecomposable(const Algebra& A, const Matrix& M, Budget& budget) {
    check_matrix(A, M);
    if (!is_minimal(A, M)) throw ValidationError("is_indecomposable expects a minimal matrix");
    if (M.rows == 0) throw ValidationError("is_indecomposable: the cokernel is zero");
    const auto& f = A.field();
    const int d = A.dim(), r = M.rows, c = M.cols;
    const int n0 = r * r * d, n1 = c * c * d;

    // phi0 * M = M * phi1
    std::vector<FpMatrix> mm(M.entries.size());
    for (std::size_t k = 0; k < M.entries.size(); ++k) mm[k] = A.multiplication_matrix(M.entries[k]);
    FpMatrix sys(r * c * d, n0 + n1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            for (int bp = 0; bp < d; ++bp) {
                const int eq = (i * c + j) * d + bp;
                for (int k = 0; k < r; ++k)
                    for (int b = 0; b < d; ++b) sys(eq, (i * r + k) * d + b) = mm[k * c + j](bp, b);
                for (int k = 0; k < c; ++k)
                    for (int b = 0; b < d; ++b)
                        sys(eq, n0 + (k * c + j) * d + b) = f.neg(mm[i * c + k](bp, b));
            }
    FpMatrix sol = nullspace(f, sys);
    FpMatrix top(sol.rows(), r * r);
    for (int t = 0; t < sol.rows(); ++t)
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k) top(t, i * r + k) = sol(t, (i * r + k) * d);
    Subspace bar = Subspace::row_space(f, top);

    Indecomposability out;
    out.endomorphism_top_dim = bar.dim();
    std::vector<FpMatrix> basis;
    for (int t = 0; t < bar.dim(); ++t) {
        FpMatrix a(r, r);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k) a(i, k) = bar.basis()(t, i * r + k);
        basis.push_back(a);
    }

    std::optional<FpMatrix> split;
    bool upper = std::all_of(basis.begin(), basis.end(), [&](const FpMatrix& a) {
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < i; ++k)
                if (a(i, k) != 0) return false;
        return true;
    });
    if (upper) {
        // modulo the strictly upper part the algebra sits inside k^r
        for (const auto& a : basis) {
            for (int i = 0; i < r && !split; ++i) {
                FpMatrix b = scalar_shift(f, a, a(i, i));
                if (splits(f, b)) split = b;
            }
            if (split) break;
        }
    } else {
        for (const auto& a : basis) {
            for (int l = 0; l < f.characteristic() && !split; ++l) {
                FpMatrix b = scalar_shift(f, a, Coeff(l));
                if (splits(f, b)) split = b;
            }
            if (split) break;
        }
        if (!split) {
            long long total = 1;
            for (std::size_t t = 0; t < basis.size(); ++t) {
                total *= f.characteristic();
                if (total > budget.limit) throw BudgetExceeded("is_indecomposable: endomorphism algebra too large");
            }
            for (long long code = 1; code < total && !split; ++code) {
                budget.spend(1, "is_indecomposable");
                FpMatrix a(r, r);
                long long cc = code;
                for (const auto& b : basis) {
                    Coeff l = static_cast<Coeff>(cc % f.characteristic());
                    cc /= f.characteristic();
                    if (l == 0) continue;
                    for (int i = 0; i < r; ++i)
                        for (int k = 0; k < r; ++k) a(i, k) = f.add(a(i, k), f.mul(l, b(i, k)));
                }
                if (splits(f, a)) split = a;
            }
        }
    }
    if (!split) {
        out.indecomposable = true;
        return out;
    }

    FpMatrix ebar = fitting_idempotent(f, *split);
    // lift the idempotent to an endomorphism
    Vec target(ebar.data().begin(), ebar.data().end());
    auto coeffs = solve(f, top.transpose(), target);
    if (!coeffs) throw Error("is_indecomposable: idempotent outside the endomorphism image");
    Matrix phi(A, r, r);
    for (int t = 0; t < sol.rows(); ++t) {
        if ((*coeffs)[t] == 0) continue;
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k)
                for (int b = 0; b < d; ++b) {
                    auto& x = phi.at(i, k).c[b];
                    x = f.add(x, f.mul((*coeffs)[t], sol(t, (i * r + k) * d + b)));
                }
    }
    Subspace im = image(A, M);
    auto maps_into_image = [&](const Matrix& X) {
        for (int j = 0; j < X.cols; ++j)
            if (!im.contains(column_coords(A, X, j))) return false;
        return true;
    };
    const Coeff three = f.from_int(3), two = f.from_int(2);
    for (int it = 0; it < 4; ++it) {
        Matrix sq = multiply(A, phi, phi);
        Matrix diff = add(A, sq, scale_matrix(A, f.neg(1), phi));
        if (maps_into_image(diff)) break;
        Matrix cube = multiply(A, sq, phi);
        phi = add(A, scale_matrix(A, three, sq), scale_matrix(A, f.neg(two), cube));
    }
    Matrix sq = multiply(A, phi, phi);
    if (!maps_into_image(add(A, sq, scale_matrix(A, f.neg(1), phi))) || !maps_into_image(multiply(A, phi, M)))
        throw Error("is_indecomposable: idempotent lift failed verification");
    out.indecomposable = false;
    out.idempotent = phi;
    return out;
}

Indecomposability is_indecomposable(const Algebra& A, const Matrix& M) {
    Budget b;
    return is_indecomposable(A, M, b);
}

}  // namespace trmod
