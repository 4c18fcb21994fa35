#include "trmod/ext.hpp"

#include <algorithm>

#include "trmod/error.hpp"

namespace trmod {

QuotientModule::QuotientModule(const Algebra& A, const Matrix& M)
    : rank_(M.rows), ambient_(M.rows * A.dim()), image_(image(A, M)) {
    std::vector<char> pivot(ambient_, 0);
    for (int c : image_.pivots()) pivot[c] = 1;
    for (int k = 0; k < ambient_; ++k)
        if (!pivot[k]) free_pos_.push_back(k);
}

Vec QuotientModule::project(std::span<const Coeff> w) const {
    Vec r(w.begin(), w.end());
    image_.reduce(r);
    Vec out(free_pos_.size());
    for (std::size_t t = 0; t < free_pos_.size(); ++t) out[t] = r[free_pos_[t]];
    return out;
}

Vec QuotientModule::lift(std::span<const Coeff> v) const {
    Vec w(ambient_, 0);
    for (std::size_t t = 0; t < free_pos_.size(); ++t) w[free_pos_[t]] = v[t];
    return w;
}

namespace {

// Hom(F_a, V) -> Hom(F_b, V), phi -> phi o D, D an a x b matrix. Domain and
// codomain coordinates are generator-major blocks of quotient coordinates.
FpMatrix precompose(const Algebra& A, const QuotientModule& V, const Matrix& D) {
    const int len = V.length();
    const int m0 = V.generators();
    FpMatrix H(D.cols * len, D.rows * len);
    Vec basis(len, 0);
    for (int j = 0; j < D.rows; ++j)
        for (int t = 0; t < len; ++t) {
            basis[t] = 1;
            auto w = from_coords(A, V.lift(basis), m0);
            basis[t] = 0;
            for (int l = 0; l < D.cols; ++l) {
                const auto& a = D.at(j, l);
                if (A.is_zero(a)) continue;
                std::vector<RingElement> aw(m0);
                for (int g = 0; g < m0; ++g) aw[g] = A.mul(a, w[g]);
                Vec img = V.project(to_coords(A, aw));
                for (int s = 0; s < len; ++s) H(l * len + s, j * len + t) = img[s];
            }
        }
    return H;
}

// Hom(F, V) -> Hom(F, V/mV) in the same block layout.
FpMatrix top_projection(const Algebra& A, const QuotientModule& V, const Matrix& M, int blocks) {
    const int len = V.length();
    // m*V is the image of m*R^m0
    Subspace mR(A.field(), M.rows * A.dim());
    for (int g = 0; g < M.rows; ++g)
        for (int b = 1; b < A.dim(); ++b) {
            Vec w(M.rows * A.dim(), 0);
            w[free_coord(b, g, M.rows)] = 1;
            mR.insert(w);
        }
    Subspace top_rel(A.field(), len);
    for (int r = 0; r < mR.dim(); ++r) top_rel.insert(V.project(mR.basis().row(r)));
    FpMatrix P(blocks * len, blocks * len);
    Vec basis(len, 0);
    for (int t = 0; t < len; ++t) {
        basis[t] = 1;
        Vec red = basis;
        top_rel.reduce(red);
        basis[t] = 0;
        for (int j = 0; j < blocks; ++j)
            for (int s = 0; s < len; ++s) P(j * len + s, j * len + t) = red[s];
    }
    return P;
}

Matrix lift_of(const Algebra& A, const QuotientModule& V, std::span<const Coeff> coords, int blocks) {
    const int len = V.length();
    Matrix L(A, V.generators(), blocks);
    for (int j = 0; j < blocks; ++j) {
        auto w = from_coords(A, V.lift(coords.subspan(std::size_t(j) * len, len)), V.generators());
        for (int g = 0; g < V.generators(); ++g) L.at(g, j) = w[g];
    }
    return L;
}

int span_dim(const PrimeField& f, const FpMatrix& rows) { return rank(f, rows); }

}  // namespace

ExtSpace ext1(const Algebra& A, const Matrix& N, const Matrix& M) {
    check_matrix(A, N);
    check_matrix(A, M);
    const auto& f = A.field();
    ExtSpace E;
    E.n_presentation = minimize(A, N);
    E.n_syzygy = syzygy(A, E.n_presentation);
    E.m_presentation = M;
    QuotientModule V(A, M);
    const int r1 = E.n_presentation.cols;
    const int len = V.length();

    FpMatrix H1 = precompose(A, V, E.n_presentation);
    FpMatrix H2 = precompose(A, V, E.n_syzygy);
    FpMatrix cocycles = nullspace(f, H2);
    Subspace bounds = Subspace::row_space(f, H1.transpose());
    Subspace acc = bounds;
    for (int r = 0; r < cocycles.rows(); ++r) {
        if (!acc.insert(cocycles.row(r))) continue;
        Vec rep(cocycles.row(r).begin(), cocycles.row(r).end());
        bounds.reduce(rep);
        E.basis.push_back({rep, lift_of(A, V, rep, r1)});
    }
    E.rank = int(E.basis.size());

    FpMatrix P = top_projection(A, V, M, r1);
    FpMatrix both(0, r1 * len), only_bounds(0, r1 * len);
    auto push_projected = [&](FpMatrix& dst, std::span<const Coeff> v) {
        Vec img(r1 * len, 0);
        for (int i = 0; i < r1 * len; ++i) {
            int acc2 = 0;
            for (int k = 0; k < r1 * len; ++k) acc2 += P(i, k) * v[k];
            img[i] = f.from_int(acc2);
        }
        dst.append_row(img);
    };
    for (int r = 0; r < bounds.dim(); ++r) {
        push_projected(both, bounds.basis().row(r));
        push_projected(only_bounds, bounds.basis().row(r));
    }
    for (int r = 0; r < cocycles.rows(); ++r) push_projected(both, cocycles.row(r));
    E.unit_part = span_dim(f, both) - span_dim(f, only_bounds);
    return E;
}

ExtensionClass extension_class(const Algebra& A, const ExtSpace& E, const Matrix& lift) {
    QuotientModule V(A, E.m_presentation);
    const int r1 = E.n_presentation.cols;
    if (lift.rows != E.m_presentation.rows || lift.cols != r1)
        throw ValidationError("extension class has the wrong shape");
    Vec coords;
    for (int j = 0; j < r1; ++j) {
        auto part = V.project(column_coords(A, lift, j));
        coords.insert(coords.end(), part.begin(), part.end());
    }
    FpMatrix H2 = precompose(A, V, E.n_syzygy);
    for (int i = 0; i < H2.rows(); ++i) {
        int acc = 0;
        for (int k = 0; k < H2.cols(); ++k) acc += H2(i, k) * coords[k];
        if (A.field().from_int(acc) != 0) throw ValidationError("alpha is not a cocycle");
    }
    return {coords, lift};
}

int ext1_rank_formula(const FieldElement& b, const FieldElement& c, const FieldElement& d, const FieldElement& f) {
    const int p = b.characteristic();
    if (c.characteristic() != p || d.characteristic() != p || f.characteristic() != p)
        throw ValidationError("mixed characteristics in ext1_rank_formula");
    if (p == 2) throw ValidationError("formula requires char != 2");
    if (b.is_zero() && c.is_zero() && d.is_zero() && f.is_zero()) return 3;
    if ((b == -d && c == -f) || (b == d && c == f)) return 2;
    return 1;
}

int gamma_formula(const FieldElement& b, const FieldElement& c, const FieldElement& d, const FieldElement& f) {
    const int p = b.characteristic();
    if (c.characteristic() != p || d.characteristic() != p || f.characteristic() != p)
        throw ValidationError("mixed characteristics in gamma_formula");
    if (p == 2) throw ValidationError("formula requires char != 2");
    const bool zero = b.is_zero() && c.is_zero() && d.is_zero() && f.is_zero();
    return (zero || (b == d && c == f)) ? 2 : 1;
}

GammaReport gamma(const Algebra& A, const Matrix& N, const Matrix& T) {
    for (const Matrix* m : {&N, &T}) {
        if (m->rows != 1 || m->cols != 1) throw ValidationError("gamma expects cyclic presentations (1x1)");
        const auto& a = m->at(0, 0);
        if (A.is_zero(a) || A.is_unit(a) || !is_exact_zero_divisor(A, a))
            throw ValidationError("gamma expects exact zero divisor presentations");
    }
    ExtSpace E = ext1(A, N, T);
    return {E.rank, E.unit_part, E.gamma()};
}

Matrix pushout_middle(const Algebra& A, const RingElement& u, const RingElement& v, const RingElement& alpha) {
    A.check(u);
    A.check(v);
    A.check(alpha);
    Matrix N(A, 1, 1), T(A, 1, 1);
    N.at(0, 0) = u;
    T.at(0, 0) = v;
    ExtSpace E = ext1(A, N, T);
    Matrix lift(A, 1, 1);
    lift.at(0, 0) = alpha;
    extension_class(A, E, lift);
    Matrix out(A, 2, 2);
    out.at(0, 0) = v;
    out.at(0, 1) = A.neg(alpha);
    out.at(1, 1) = u;
    return out;
}

LESReport les_rank_bound_check(const Algebra& A, const Matrix& C, const Matrix& Tprev, const Matrix& Ti) {
    check_matrix(A, C);
    check_matrix(A, Tprev);
    check_matrix(A, Ti);
    const int a = Tprev.rows, b = C.rows;
    bool shaped = Ti.rows == a + b && Ti.cols == Tprev.cols + C.cols;
    for (int i = 0; shaped && i < Ti.rows; ++i)
        for (int j = 0; shaped && j < Ti.cols; ++j) {
            if (i < a && j < Tprev.cols)
                shaped = Ti.at(i, j) == Tprev.at(i, j);
            else if (i >= a && j >= Tprev.cols)
                shaped = Ti.at(i, j) == C.at(i - a, j - Tprev.cols);
            else if (i >= a)
                shaped = A.is_zero(Ti.at(i, j));
        }
    if (!shaped) throw ValidationError("inputs do not form an extension: expected T_i = [[T_prev, *],[0, C]]");
    if (coker_length(A, Ti) != coker_length(A, Tprev) + coker_length(A, C))
        throw ValidationError("inputs do not form an extension: lengths are not additive");
    LESReport rep;
    rep.n = Ti.rows;
    ExtSpace e_ti = ext1(A, C, Ti);
    rep.rank_c_ti = e_ti.rank;
    rep.gamma_c_ti = e_ti.gamma();
    rep.rank_c_c = ext1(A, C, C).rank;
    rep.rank_c_tprev = ext1(A, C, Tprev).rank;
    rep.subadditive = rep.rank_c_ti <= rep.rank_c_c + rep.rank_c_tprev;
    rep.within_bound = rep.gamma_c_ti <= 2 * rep.n;
    return rep;
}

}  // namespace trmod
