#include "trmod/algebra.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "trmod/error.hpp"

namespace trmod {

namespace {

constexpr int kMaxDim = 256;

std::string monomial_name(const std::vector<std::string>& vars, int i, int j) {
    return i == j ? vars[i] + "^2" : vars[i] + "*" + vars[j];
}

}  // namespace

Algebra Algebra::build(const AlgebraSpec& spec) {
    PrimeField f(spec.characteristic);
    const auto& vars = spec.variables;
    if (vars.size() < 2) throw ValidationError("an algebra needs at least 2 variables");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!is_identifier(vars[i])) throw ValidationError("invalid variable name '" + vars[i] + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (vars[i] == vars[j]) throw ValidationError("duplicate variable '" + vars[i] + "'");
    }
    Algebra A(spec, f);
    const int e = int(vars.size());
    A.e_ = e;

    // degree-2 monomials x_i x_j, i <= j
    A.monomial_index_.assign(e, std::vector<int>(e, -1));
    std::vector<std::pair<int, int>> monos;
    for (int i = 0; i < e; ++i)
        for (int j = i; j < e; ++j) {
            A.monomial_index_[i][j] = A.monomial_index_[j][i] = int(monos.size());
            monos.emplace_back(i, j);
        }
    const int nm = int(monos.size());
    // Columns are reversed so pivots land on the largest monomials and the
    // surviving basis of m^2 consists of the smallest ones.
    auto col_of = [nm](int m) { return nm - 1 - m; };

    FpMatrix rel(0, nm);
    for (const auto& text : spec.relations) {
        Polynomial poly = parse_polynomial(text, vars);
        Vec row(nm, 0);
        for (const auto& t : poly) {
            Coeff c = f.from_int(t.coeff);
            if (c == 0) continue;
            if (t.degree() != 2)
                throw ValidationError("relation '" + text + "' is not homogeneous of degree 2");
            int i = -1, j = -1;
            for (int v = 0; v < e; ++v)
                for (int k = 0; k < t.exponents[v]; ++k) (i < 0 ? i : j) = v;
            int m = A.monomial_index_[i][j];
            row[col_of(m)] = f.add(row[col_of(m)], c);
        }
        rel.append_row(row);
    }
    FpMatrix red = rel;
    auto pivots = rref(f, red);
    std::vector<int> pivot_row(nm, -1);
    for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[nm - 1 - pivots[r]] = int(r);

    std::vector<int> m2_basis;  // monomial indices surviving in m^2
    for (int m = 0; m < nm; ++m)
        if (pivot_row[m] < 0) m2_basis.push_back(m);
    A.s2_ = int(m2_basis.size());
    if (A.s2_ == 0) throw ValidationError("m^2 = 0: the relations kill every degree-2 monomial");
    if (A.dim() > kMaxDim) throw ValidationError("algebra dimension too large");

    // m^3 = 0 iff x_l * (relations) spans every degree-3 monomial
    {
        std::vector<std::array<int, 3>> cubics;
        std::vector<std::vector<std::vector<int>>> cidx(e, std::vector<std::vector<int>>(e, std::vector<int>(e, -1)));
        for (int i = 0; i < e; ++i)
            for (int j = i; j < e; ++j)
                for (int k = j; k < e; ++k) {
                    int id = int(cubics.size());
                    cubics.push_back({i, j, k});
                    std::array<int, 3> s{i, j, k};
                    do {
                        cidx[s[0]][s[1]][s[2]] = id;
                    } while (std::next_permutation(s.begin(), s.end()));
                }
        FpMatrix cub(0, int(cubics.size()));
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            for (int l = 0; l < e; ++l) {
                Vec row(cubics.size(), 0);
                for (int m = 0; m < nm; ++m) {
                    Coeff c = red(int(r), col_of(m));
                    if (c == 0) continue;
                    auto [i, j] = monos[m];
                    int id = cidx[i][j][l];
                    row[id] = f.add(row[id], c);
                }
                cub.append_row(row);
            }
        }
        if (rank(f, cub) < int(cubics.size()))
            throw ValidationError("m^3 != 0 after reduction: the relations do not kill every degree-3 monomial");
    }

    A.monomial_reduction_.assign(nm, Vec(A.s2_, 0));
    for (int m = 0; m < nm; ++m) {
        if (pivot_row[m] < 0) {
            int q = int(std::find(m2_basis.begin(), m2_basis.end(), m) - m2_basis.begin());
            A.monomial_reduction_[m][q] = 1;
        } else {
            for (int q = 0; q < A.s2_; ++q)
                A.monomial_reduction_[m][q] = f.neg(red(pivot_row[m], col_of(m2_basis[q])));
        }
    }
    A.quad_.assign(std::size_t(e) * e * A.s2_, 0);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
            for (int q = 0; q < A.s2_; ++q)
                A.quad_[(std::size_t(i) * e + j) * A.s2_ + q] = A.monomial_reduction_[A.monomial_index_[i][j]][q];

    A.basis_names_.push_back("1");
    for (const auto& v : vars) A.basis_names_.push_back(v);
    for (int m : m2_basis) A.basis_names_.push_back(monomial_name(vars, monos[m].first, monos[m].second));
    return A;
}

Algebra Algebra::standard_s(int p) {
    return build({p, {"x", "y", "z"}, {"x^2", "y^2", "z^2", "y*z"}});
}

Coeff Algebra::structure_constant(int i, int j, int k) const {
    RingElement prod = mul(basis_element(i), basis_element(j));
    return prod.c.at(k);
}

RingElement Algebra::one() const {
    RingElement r = zero();
    r.c[0] = 1;
    return r;
}

RingElement Algebra::scalar(long long v) const {
    RingElement r = zero();
    r.c[0] = field_.from_int(v);
    return r;
}

RingElement Algebra::variable(int i) const { return basis_element(1 + i); }

RingElement Algebra::basis_element(int b) const {
    if (b < 0 || b >= dim()) throw ValidationError("basis index out of range");
    RingElement r = zero();
    r.c[b] = 1;
    return r;
}

void Algebra::check(const RingElement& a) const {
    if (int(a.c.size()) != dim()) throw ValidationError("ring element has wrong length for this algebra");
}

RingElement Algebra::add(const RingElement& a, const RingElement& b) const {
    RingElement r = a;
    for (int k = 0; k < dim(); ++k) r.c[k] = field_.add(a.c[k], b.c[k]);
    return r;
}

RingElement Algebra::sub(const RingElement& a, const RingElement& b) const {
    RingElement r = a;
    for (int k = 0; k < dim(); ++k) r.c[k] = field_.sub(a.c[k], b.c[k]);
    return r;
}

RingElement Algebra::neg(const RingElement& a) const {
    RingElement r = a;
    for (auto& x : r.c) x = field_.neg(x);
    return r;
}

RingElement Algebra::scale(Coeff s, const RingElement& a) const {
    RingElement r = a;
    for (auto& x : r.c) x = field_.mul(s, x);
    return r;
}

void Algebra::mul_add(std::span<const Coeff> a, std::span<const Coeff> b, std::span<Coeff> out) const {
    const int p = field_.characteristic();
    const int d = dim();
    std::array<int, kMaxDim> acc;
    for (int k = 0; k < d; ++k) acc[k] = out[k];
    const int a0 = a[0], b0 = b[0];
    acc[0] += a0 * b0;
    for (int k = 1; k < d; ++k) acc[k] += a0 * b[k] + b0 * a[k];
    for (int i = 0; i < e_; ++i) {
        int ai = a[1 + i];
        if (ai == 0) continue;
        for (int j = 0; j < e_; ++j) {
            int bj = b[1 + j];
            if (bj == 0) continue;
            int coef = (ai * bj) % p;
            const Coeff* q = &quad_[(std::size_t(i) * e_ + j) * s2_];
            for (int t = 0; t < s2_; ++t) acc[1 + e_ + t] += coef * q[t];
        }
    }
    for (int k = 0; k < d; ++k) out[k] = static_cast<Coeff>(acc[k] % p);
}

RingElement Algebra::mul(const RingElement& a, const RingElement& b) const {
    RingElement r = zero();
    mul_add(a.c, b.c, r.c);
    return r;
}

bool Algebra::is_zero(const RingElement& a) const noexcept {
    return std::all_of(a.c.begin(), a.c.end(), [](Coeff x) { return x == 0; });
}

bool Algebra::in_m2(const RingElement& a) const noexcept {
    for (int k = 0; k <= e_; ++k)
        if (a.c[k] != 0) return false;
    return true;
}

RingElement Algebra::degree_part(const RingElement& a, int degree) const {
    RingElement r = zero();
    for (int k = 0; k < dim(); ++k)
        if (degree_of(k) == degree) r.c[k] = a.c[k];
    return r;
}

RingElement Algebra::inverse(const RingElement& a) const {
    if (!is_unit(a)) throw Error("element is not a unit");
    Coeff u = field_.inv(a.c[0]);
    RingElement n = scale(u, a);
    n.c[0] = 0;
    RingElement r = sub(add(one(), mul(n, n)), n);
    return scale(u, r);
}

FpMatrix Algebra::multiplication_matrix(const RingElement& a) const {
    const int d = dim();
    FpMatrix m(d, d);
    Vec prod(d);
    Vec basis(d, 0);
    for (int b = 0; b < d; ++b) {
        std::fill(prod.begin(), prod.end(), 0);
        basis[b] = 1;
        mul_add(a.c, basis, prod);
        basis[b] = 0;
        for (int k = 0; k < d; ++k) m(k, b) = prod[k];
    }
    return m;
}

RingElement Algebra::from_polynomial(const Polynomial& poly) const {
    RingElement r = zero();
    for (const auto& t : poly) {
        Coeff c = field_.from_int(t.coeff);
        if (c == 0) continue;
        const int deg = t.degree();
        if (deg == 0) {
            r.c[0] = field_.add(r.c[0], c);
        } else if (deg == 1) {
            int v = int(std::find(t.exponents.begin(), t.exponents.end(), 1) - t.exponents.begin());
            r.c[1 + v] = field_.add(r.c[1 + v], c);
        } else if (deg == 2) {
            int i = -1, j = -1;
            for (int v = 0; v < e_; ++v)
                for (int k = 0; k < t.exponents[v]; ++k) (i < 0 ? i : j) = v;
            const Vec& red = monomial_reduction_[monomial_index_[i][j]];
            for (int q = 0; q < s2_; ++q)
                r.c[1 + e_ + q] = field_.add(r.c[1 + e_ + q], field_.mul(c, red[q]));
        }
        // degree >= 3 vanishes
    }
    return r;
}

RingElement Algebra::parse(std::string_view text) const {
    return from_polynomial(parse_polynomial(text, spec_.variables));
}

std::string Algebra::format(const RingElement& a) const {
    std::string out;
    for (int b = 0; b < dim(); ++b) {
        if (a.c[b] == 0) continue;
        int s = field_.to_signed(a.c[b]);
        int mag = s < 0 ? -s : s;
        if (s < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (b == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += basis_names_[b];
        }
    }
    return out.empty() ? "0" : out;
}

int Algebra::leading_index(const RingElement& a) const noexcept {
    for (int k = 0; k < dim(); ++k)
        if (a.c[k] != 0) return k;
    return -1;
}

long long Algebra::code(const RingElement& a) const noexcept {
    long long v = 0;
    for (int k = dim() - 1; k >= 1; --k) v = v * characteristic() + a.c[k];
    return v;
}

// ---------------------------------------------------------------------------

Vec to_coords(const Algebra& A, std::span<const RingElement> entries) {
    const int n = int(entries.size());
    Vec v(std::size_t(n) * A.dim(), 0);
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < A.dim(); ++b) v[free_coord(b, i, n)] = entries[i].c[b];
    return v;
}

std::vector<RingElement> from_coords(const Algebra& A, std::span<const Coeff> v, int rank) {
    std::vector<RingElement> out(rank, A.zero());
    for (int i = 0; i < rank; ++i)
        for (int b = 0; b < A.dim(); ++b) out[i].c[b] = v[free_coord(b, i, rank)];
    return out;
}

namespace {

// x * v for x given by its multiplication matrix, v in R^n coordinates.
Vec scalar_times(const Algebra& A, const FpMatrix& mul, std::span<const Coeff> v, int n) {
    const int d = A.dim();
    const int p = A.characteristic();
    Vec out(v.size(), 0);
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < d; ++b) {
            int vb = v[free_coord(b, i, n)];
            if (vb == 0) continue;
            for (int k = 0; k < d; ++k)
                if (mul(k, b) != 0) {
                    auto& o = out[free_coord(k, i, n)];
                    o = static_cast<Coeff>((o + vb * mul(k, b)) % p);
                }
        }
    return out;
}

}  // namespace

Subspace maximal_ideal_times(const Algebra& A, const Subspace& K, int rank) {
    Subspace Q(A.field(), K.ambient());
    for (int v = 0; v < A.embedding_dim(); ++v) {
        FpMatrix mul = A.multiplication_matrix(A.variable(v));
        for (int r = 0; r < K.dim(); ++r) Q.insert(scalar_times(A, mul, K.basis().row(r), rank));
    }
    return Q;
}

std::vector<Vec> minimal_generators(const Algebra& A, const Subspace& K, int rank) {
    Subspace Q = maximal_ideal_times(A, K, rank);
    Subspace G = Q;
    std::vector<Vec> gens;
    const auto& f = A.field();
    for (int r = 0; r < K.dim(); ++r) {
        auto row = K.basis().row(r);
        if (!G.insert(row)) continue;
        Vec g(row.begin(), row.end());
        Q.reduce(g);
        auto lead = std::find_if(g.begin(), g.end(), [](Coeff c) { return c != 0; });
        Coeff s = f.inv(*lead);
        for (auto& x : g) x = f.mul(x, s);
        gens.push_back(std::move(g));
    }
    return gens;
}

// ---------------------------------------------------------------------------

RingReport ring_preconditions(const Algebra& A) {
    RingReport rep;
    const int e = A.embedding_dim();
    rep.hilbert = A.hilbert_series();
    rep.length = A.dim();

    FpMatrix stacked(0, A.dim());
    for (int v = 0; v < e; ++v) {
        FpMatrix m = A.multiplication_matrix(A.variable(v));
        for (int r = 0; r < m.rows(); ++r) stacked.append_row(m.row(r));
    }
    FpMatrix soc = nullspace(A.field(), stacked);
    rep.socle_dim = soc.rows();
    bool inside_m2 = true;
    for (int r = 0; r < soc.rows(); ++r)
        for (int k = 0; k <= e; ++k)
            if (soc(r, k) != 0) inside_m2 = false;
    rep.socle_equals_m2 = inside_m2 && rep.socle_dim == A.m2_dim();
    rep.m2_dim_is_e_minus_1 = A.m2_dim() == e - 1;
    rep.length_is_2e = A.dim() == 2 * e;
    rep.gorenstein = rep.socle_dim == 1;
    rep.admits_nontrivial_tr =
        rep.socle_equals_m2 && rep.m2_dim_is_e_minus_1 && rep.length_is_2e && !rep.gorenstein;
    if (rep.gorenstein)
        rep.notes.push_back("Gorenstein: the non-Gorenstein structure results (constant Betti numbers, "
                            "length n*e, k-summand obstruction) are inapplicable");
    if (!rep.socle_equals_m2) rep.notes.push_back("socle differs from m^2");
    if (!rep.m2_dim_is_e_minus_1) rep.notes.push_back("dim m^2 != e-1");
    if (!rep.length_is_2e) rep.notes.push_back("length(R) != 2e");
    return rep;
}

Ideal principal_ideal(const Algebra& A, const RingElement& a) {
    A.check(a);
    Subspace span = Subspace::row_space(A.field(), A.multiplication_matrix(a).transpose());
    Ideal I{span, {}, A.is_unit(a)};
    for (auto& g : minimal_generators(A, I.span, 1)) I.generators.push_back({std::move(g)});
    return I;
}

Ideal annihilator(const Algebra& A, const RingElement& a) {
    A.check(a);
    if (A.is_zero(a)) {
        Ideal I{Subspace::row_space(A.field(), FpMatrix::identity(A.dim())), {A.one()}, true};
        return I;
    }
    Subspace span = Subspace::row_space(A.field(), nullspace(A.field(), A.multiplication_matrix(a)));
    Ideal I{span, {}, false};
    for (auto& g : minimal_generators(A, I.span, 1)) I.generators.push_back({std::move(g)});
    return I;
}

bool same_ideal(const Ideal& a, const Ideal& b) {
    if (a.dim() != b.dim()) return false;
    for (int r = 0; r < a.dim(); ++r)
        if (!b.span.contains(a.span.basis().row(r))) return false;
    return true;
}

std::optional<RingElement> exact_zero_divisor_partner(const Algebra& A, const RingElement& a) {
    A.check(a);
    if (A.is_unit(a)) throw ValidationError("unit is not a zero divisor");
    if (A.is_zero(a)) throw ValidationError("zero is not an exact zero divisor");
    Ideal ann = annihilator(A, a);
    if (ann.generators.size() != 1) return std::nullopt;
    const RingElement& b = ann.generators.front();
    if (!same_ideal(annihilator(A, b), principal_ideal(A, a))) return std::nullopt;
    return b;
}

bool is_exact_zero_divisor(const Algebra& A, const RingElement& a) {
    if (A.is_unit(a) || A.is_zero(a)) return false;
    return exact_zero_divisor_partner(A, a).has_value();
}

ExactZeroDivisorPair::ExactZeroDivisorPair(const Algebra& A, RingElement a, RingElement b)
    : a_(std::move(a)), b_(std::move(b)) {
    A.check(a_);
    A.check(b_);
    if (A.is_unit(a_) || A.is_unit(b_) || A.is_zero(a_) || A.is_zero(b_))
        throw ValidationError("an exact pair consists of nonzero non-units");
    if (!same_ideal(annihilator(A, a_), principal_ideal(A, b_)) ||
        !same_ideal(annihilator(A, b_), principal_ideal(A, a_)))
        throw ValidationError("(" + A.format(a_) + ", " + A.format(b_) + ") is not an exact pair of zero divisors");
}

std::vector<ExactZeroDivisorPair> enumerate_ezd(const Algebra& A) {
    const int d = A.dim();
    const int p = A.characteristic();
    long long total = 1;
    for (int k = 1; k < d; ++k) {
        total *= p;
        if (total > 20'000'000) throw BudgetExceeded("enumerate_ezd: maximal ideal too large to enumerate");
    }
    std::set<Vec> seen;
    std::vector<ExactZeroDivisorPair> out;
    RingElement a = A.zero();
    for (long long code = 1; code < total; ++code) {
        long long c = code;
        for (int k = 1; k < d; ++k) {
            a.c[k] = static_cast<Coeff>(c % p);
            c /= p;
        }
        if (a.c[A.leading_index(a)] != 1) continue;
        Ideal I = principal_ideal(A, a);
        if (!seen.insert(I.span.basis().data()).second) continue;
        if (auto b = exact_zero_divisor_partner(A, a)) out.emplace_back(A, a, *b);
    }
    return out;
}

}  // namespace trmod
