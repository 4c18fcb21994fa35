#include "trmod/filtration.hpp"

#include <algorithm>
#include <set>

#include "trmod/error.hpp"

namespace trmod {

namespace {

Matrix leading_block(const Algebra& A, const Matrix& M, int k) {
    Matrix out(A, k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out.at(i, j) = M.at(i, j);
    return out;
}

void require_ezd(const Algebra& A, const RingElement& t, int index) {
    if (A.is_zero(t) || A.is_unit(t) || !is_exact_zero_divisor(A, t))
        throw ValidationError("diagonal entry " + std::to_string(index + 1) + " (" + A.format(t) +
                              ") is not an exact zero divisor, so the matrix is not totally reflexive");
}

// r with a = r*s, or nullopt.
std::optional<RingElement> divide(const Algebra& A, const RingElement& a, const RingElement& s) {
    auto r = solve(A.field(), A.multiplication_matrix(s), a.c);
    if (!r) return std::nullopt;
    return RingElement{*r};
}

}  // namespace

Filtration filtrate_ut(const Algebra& A, const Matrix& M) {
    check_matrix(A, M);
    if (!M.square()) throw ValidationError("filtrate_ut expects a square matrix");
    if (!is_upper_triangular(A, M)) throw ValidationError("filtrate_ut expects an upper triangular matrix");
    if (!is_minimal(A, M)) throw ValidationError("filtrate_ut expects a minimal matrix");
    for (int i = 0; i < M.rows; ++i) require_ezd(A, M.at(i, i), i);

    Filtration F;
    const int e = A.embedding_dim();
    int prev_len = 0;
    for (int k = 1; k <= M.rows; ++k) {
        Matrix Tk = leading_block(A, M, k);
        const RingElement& t = M.at(k - 1, k - 1);
        Matrix cyc(A, 1, 1);
        cyc.at(0, 0) = t;
        const int len = coker_length(A, Tk);
        const int qlen = coker_length(A, cyc);
        // the inclusion of the first k-1 generators and the projection onto the
        // last one are well defined because the last row of T_k is (0,...,0,t)
        if (len != prev_len + qlen)
            throw Error("filtrate_ut: lengths are not additive at step " + std::to_string(k));
        if (qlen != e)
            throw Error("filtrate_ut: quotient " + A.format(t) + " has length " + std::to_string(qlen) +
                        ", expected " + std::to_string(e));
        F.log.push_back("T_" + std::to_string(k) + ": length " + std::to_string(len) + " = " +
                        std::to_string(prev_len) + " + " + std::to_string(qlen) + ", quotient R/(" + A.format(t) + ")");
        F.chain.push_back(std::move(Tk));
        F.quotients.push_back(t);
        F.lengths.push_back(len);
        prev_len = len;
    }
    return F;
}

SubmoduleStep submodule_step(const Algebra& A, const Matrix& T) {
    check_matrix(A, T);
    if (!T.square() || T.rows == 0) throw ValidationError("submodule_step expects a nonempty square matrix");
    const int n = T.rows;
    for (int j = 0; j + 1 < n; ++j)
        if (!A.is_zero(T.at(n - 1, j))) throw ValidationError("submodule_step: last row is not (0,...,0,t)");
    const RingElement t = T.at(n - 1, n - 1);
    require_ezd(A, t, n - 1);
    const RingElement s = *exact_zero_divisor_partner(A, t);

    SubmoduleStep out;
    out.quotient = t;
    out.partner = s;
    out.length_before = coker_length(A, T);

    Matrix W = syzygy(A, T);
    // every entry of the last row of W is a multiple of s; find one with a unit factor
    std::vector<RingElement> factors;
    int pivot = -1;
    for (int j = 0; j < W.cols; ++j) {
        auto r = divide(A, W.at(n - 1, j), s);
        if (!r) throw Error("submodule_step: last row of the syzygy is not in (" + A.format(s) + "); input is not TR");
        if (pivot < 0 && A.is_unit(*r)) pivot = j;
        factors.push_back(*r);
    }
    if (pivot < 0) throw Error("submodule_step: reduction cannot isolate " + A.format(s) + "; input is not TR");
    RingElement inv = A.inverse(factors[pivot]);
    for (int j = 0; j < W.cols; ++j) {
        if (j == pivot) continue;
        RingElement c = A.mul(factors[j], inv);
        for (int i = 0; i < n; ++i) W.at(i, j) = A.sub(W.at(i, j), A.mul(c, W.at(i, pivot)));
    }
    // move the pivot column last and scale it to end in s exactly
    Matrix R(A, n, W.cols);
    for (int i = 0; i < n; ++i) {
        for (int j = 0, o = 0; j < W.cols; ++j)
            if (j != pivot) R.at(i, o++) = W.at(i, j);
        R.at(i, W.cols - 1) = A.mul(W.at(i, pivot), inv);
    }
    for (int j = 0; j + 1 < R.cols; ++j)
        if (!A.is_zero(R.at(n - 1, j))) throw Error("submodule_step: column reduction failed");
    out.reduced_syzygy = R;

    out.submodule = leading_block(A, T, n - 1);
    out.length_after = coker_length(A, out.submodule);
    if (out.length_after != out.length_before - A.embedding_dim())
        throw Error("submodule_step: length drop is " + std::to_string(out.length_before - out.length_after) +
                    ", expected " + std::to_string(A.embedding_dim()));
    return out;
}

std::vector<FpMatrix> flag_representatives(const PrimeField& f, int n, bool left) {
    std::set<std::vector<Coeff>> seen;
    std::vector<FpMatrix> out;
    for (const FpMatrix& g0 : general_linear(f, n)) {
        // work on rows; for right cosets use the transpose with reversed order
        FpMatrix g = left ? g0 : g0.transpose();
        FpMatrix c(n, n);
        Subspace below(f, n);
        for (int i = n - 1; i >= 0; --i) {
            const int src = left ? i : n - 1 - i;
            Vec v(g.row(src).begin(), g.row(src).end());
            below.reduce(v);
            auto lead = std::find_if(v.begin(), v.end(), [](Coeff x) { return x != 0; });
            Coeff s = f.inv(*lead);
            for (auto& x : v) x = f.mul(x, s);
            std::copy(v.begin(), v.end(), c.row(src).begin());
            below.insert(g.row(src));
        }
        FpMatrix rep = left ? c : c.transpose();
        if (seen.insert(rep.data()).second) out.push_back(rep);
    }
    return out;
}

namespace {

bool ut_less(const Algebra& A, const Matrix& X, const Matrix& Y) {
    auto key = [&](const Matrix& M) {
        std::vector<long long> k;
        for (int i = 0; i < M.rows; ++i) k.push_back(A.code(M.at(i, i)));
        for (int i = 0; i < M.rows; ++i)
            for (int j = i + 1; j < M.cols; ++j) k.push_back(A.code(M.at(i, j)));
        return k;
    };
    return key(X) < key(Y);
}

// Scale rows so every diagonal entry has leading coefficient 1.
void normalize_rows(const Algebra& A, Matrix& F, Matrix& P) {
    const auto& f = A.field();
    for (int i = 0; i < F.rows; ++i) {
        int lead = A.leading_index(F.at(i, i));
        if (lead < 0) continue;
        Coeff s = f.inv(F.at(i, i).c[lead]);
        for (int j = 0; j < F.cols; ++j) F.at(i, j) = A.scale(s, F.at(i, j));
        for (int j = 0; j < P.cols; ++j) P.at(i, j) = A.scale(s, P.at(i, j));
    }
}

}  // namespace

UTSearch find_ut_form(const Algebra& A, const Matrix& M, Budget& budget) {
    check_matrix(A, M);
    if (!M.square()) throw ValidationError("find_ut_form expects a square matrix");
    if (!is_minimal(A, M)) throw ValidationError("find_ut_form expects a minimal matrix");
    const int n = M.rows;
    UTSearch out;
    if (is_upper_triangular(A, M)) {
        out.found = true;
        out.witness = EquivalenceWitness{identity_matrix(A, n), identity_matrix(A, n)};
        out.form = M;
        return out;
    }
    const auto& f = A.field();
    const int e = A.embedding_dim(), s2 = A.m2_dim();
    const auto& lefts = flag_representatives(f, n, true);
    const auto& rights = flag_representatives(f, n, false);
    out.pairs_total = (long long)lefts.size() * (long long)rights.size();

    const int na = n * n * e;
    const int nvars = 2 * na;
    std::vector<std::pair<int, int>> lower;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) lower.emplace_back(i, j);
    const int neq = int(lower.size()) * s2;

    for (const FpMatrix& P0 : lefts) {
        Matrix LP = multiply(A, scalar_matrix(A, P0), M);
        for (const FpMatrix& Q0 : rights) {
            budget.spend(1, "find_ut_form");
            ++out.pairs_examined;
            Matrix N = multiply(A, LP, scalar_matrix(A, Q0));
            bool linear_ok = true;
            for (auto [i, j] : lower)
                for (int v = 1; v <= e && linear_ok; ++v)
                    if (N.at(i, j).c[v] != 0) linear_ok = false;
            if (!linear_ok) continue;
            Matrix N1 = degree_part(A, N, 1);
            // lower(N2 + X*N1 + N1*Y) = 0 in the unknown degree-1 matrices X, Y
            FpMatrix sys(neq, nvars + 1);
            for (std::size_t q = 0; q < lower.size(); ++q) {
                auto [i, j] = lower[q];
                for (int t = 0; t < s2; ++t) {
                    const int eq = int(q) * s2 + t;
                    const int b = 1 + e + t;
                    for (int k = 0; k < n; ++k)
                        for (int v = 0; v < e; ++v) {
                            RingElement xv = A.variable(v);
                            sys(eq, (i * n + k) * e + v) = A.mul(xv, N1.at(k, j)).c[b];
                            sys(eq, na + (k * n + j) * e + v) = A.mul(N1.at(i, k), xv).c[b];
                        }
                    sys(eq, nvars) = f.neg(N.at(i, j).c[b]);
                }
            }
            auto pivots = rref(f, sys);
            if (!pivots.empty() && pivots.back() == nvars) continue;
            std::vector<Coeff> x(nvars, 0);
            for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = sys(int(r), nvars);
            Matrix X = identity_matrix(A, n), Y = identity_matrix(A, n);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k)
                    for (int v = 0; v < e; ++v) {
                        X.at(i, k).c[1 + v] = x[(i * n + k) * e + v];
                        Y.at(i, k).c[1 + v] = x[na + (i * n + k) * e + v];
                    }
            EquivalenceWitness w{multiply(A, X, scalar_matrix(A, P0)), multiply(A, scalar_matrix(A, Q0), Y)};
            Matrix F = multiply(A, multiply(A, w.P, M), w.Q);
            normalize_rows(A, F, w.P);
            if (!is_upper_triangular(A, F) || !verify_witness(A, M, F, w))
                throw Error("find_ut_form: candidate failed verification");
            if (!out.found || ut_less(A, F, *out.form)) {
                out.found = true;
                out.form = F;
                out.witness = w;
            }
        }
    }
    return out;
}

UTSearch find_ut_form(const Algebra& A, const Matrix& M) {
    Budget b;
    return find_ut_form(A, M, b);
}

Matrix mb_matrix(const Algebra& A, int b, const RingElement& s, const RingElement& t, const RingElement& u,
                 const RingElement& v) {
    if (b < 1) throw ValidationError("mb_matrix: b must be at least 1");
    for (const auto* x : {&s, &t, &u, &v}) A.check(*x);
    Matrix M(A, b, b);
    for (int i = 0; i < b; ++i) {
        M.at(i, i) = i % 2 == 0 ? s : t;
        if (i + 1 < b) M.at(i, i + 1) = i % 2 == 0 ? u : v;
    }
    return M;
}

MbConditions mb_conditions(const Algebra& A, const RingElement& s, const RingElement& t, const RingElement& u,
                           const RingElement& v) {
    MbConditions c;
    const auto& f = A.field();
    const int e = A.embedding_dim();
    try {
        ExactZeroDivisorPair pair(A, s, t);
        c.exact_pair = true;
    } catch (const ValidationError&) {
        c.warnings.push_back("(" + A.format(s) + ", " + A.format(t) + ") is not an exact pair of zero divisors");
    }
    auto linear = [&](const RingElement& a) { return !A.is_unit(a) && !A.in_m2(a); };
    c.u_v_linear = linear(u) && linear(v);
    if (!c.u_v_linear) c.warnings.push_back("u and v must lie in m but not in m^2");
    c.uv_zero = A.is_zero(A.mul(u, v));
    if (!c.uv_zero) c.warnings.push_back("u*v != 0");

    FpMatrix lin(3, e);
    const RingElement* stu[3] = {&s, &t, &u};
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k < e; ++k) lin(r, k) = stu[r]->c[1 + k];
    c.condition_a = rank(f, lin) == 3;

    // (t) + m^2
    Subspace tm2 = principal_ideal(A, t).span;
    for (int k = 1 + e; k < A.dim(); ++k) tm2.insert(A.basis_element(k).c);
    c.condition_b = tm2.contains(s.c) && !tm2.contains(u.c) && !tm2.contains(v.c);
    if (!c.condition_a && !c.condition_b) c.warnings.push_back("neither independence condition (a) nor (b) holds");
    return c;
}

}  // namespace trmod
