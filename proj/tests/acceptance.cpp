// Acceptance criteria 1-12. One PASS/FAIL line per criterion; runtime limits
// are part of each criterion. `--expect-red 6,..` lists criteria whose failure
// is a known, documented disagreement; the exit status is zero only when the
// failing set equals that list. `--only N` runs a single criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trmod/io.hpp"

using namespace trmod;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

Matrix one_by_one(const Algebra& A, const RingElement& a) {
    Matrix M(A, 1, 1);
    M.at(0, 0) = a;
    return M;
}

RingElement linear(const Algebra& A, int b, int c) {
    const auto& f = A.field();
    return A.add(A.variable(0), A.add(A.scale(f.from_int(b), A.variable(1)), A.scale(f.from_int(c), A.variable(2))));
}

// Elements of m, indexed by the integer whose base-p digits are the
// coordinates 1..dim-1.
std::vector<RingElement> maximal_ideal(const Algebra& A) {
    const int p = A.characteristic(), n = A.dim() - 1;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    std::vector<RingElement> out;
    out.reserve(total);
    for (long long code = 0; code < total; ++code) {
        RingElement r = A.zero();
        long long c = code;
        for (int i = 1; i <= n; ++i, c /= p) r.c[i] = Coeff(c % p);
        out.push_back(r);
    }
    return out;
}

std::string fmt(const Algebra& A, const std::vector<RingElement>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + A.format(x);
    return s;
}

// ---------------------------------------------------------------------------
// 2x2 matrices over S(2) with entries in m, packed as four 5-bit entries; the
// scalar group GL2(F2) x GL2(F2) acts coordinate by coordinate.

constexpr int kEntryBits = 5;
constexpr std::uint32_t kCodes = 1u << (4 * kEntryBits);

std::uint32_t apply_scalars(std::uint32_t code, const FpMatrix& P, const FpMatrix& Q) {
    auto entry = [&](int i, int j) { return (code >> (kEntryBits * (2 * i + j))) & 31u; };
    std::uint32_t e[2][2] = {{entry(0, 0), entry(0, 1)}, {entry(1, 0), entry(1, 1)}};
    std::uint32_t pm[2][2] = {};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                if (P(i, k)) pm[i][j] ^= e[k][j];
    std::uint32_t out = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::uint32_t v = 0;
            for (int k = 0; k < 2; ++k)
                if (Q(k, j)) v ^= pm[i][k];
            out |= v << (kEntryBits * (2 * i + j));
        }
    return out;
}

Matrix unpack(const Algebra& A, const std::vector<RingElement>& m, std::uint32_t code) {
    Matrix M(A, 2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) M.at(i, j) = m[(code >> (kEntryBits * (2 * i + j))) & 31u];
    return M;
}

// Calls visit(rep) once per scalar orbit.
template <class F>
void for_each_scalar_orbit(const Algebra& A, F&& visit) {
    const auto& gl = general_linear(A.field(), 2);
    std::vector<char> seen(kCodes, 0);
    for (std::uint32_t code = 0; code < kCodes; ++code) {
        if (seen[code]) continue;
        for (const auto& P : gl)
            for (const auto& Q : gl) seen[apply_scalars(code, P, Q)] = 1;
        visit(code);
    }
}

// ---------------------------------------------------------------------------

Outcome ring_validation() {
    Outcome out;
    for (int p : {2, 3, 5}) {
        Algebra A = Algebra::standard_s(p);
        auto r = ring_preconditions(A);
        const std::string tag = "S(" + std::to_string(p) + ")";
        out.require(r.hilbert == HilbertSeries{1, 3, 2}, tag + " Hilbert series (1,3,2)");
        out.require(r.length == 6 && r.length == 2 * A.embedding_dim(), tag + " length 6 = 2e");
        out.require(r.socle_equals_m2 && r.socle_dim == 2, tag + " socle = m^2 of dimension 2");
        // Oracle: count the elements killed by every variable.
        long long socle = 0;
        for (const auto& s : maximal_ideal(A)) {
            bool killed = true;
            for (int v = 0; v < 3 && killed; ++v) killed = A.is_zero(A.mul(s, A.variable(v)));
            if (killed) {
                ++socle;
                out.require(A.in_m2(s), tag + " socle element outside m^2");
            }
        }
        out.require(socle == (long long)p * p, tag + " socle oracle count p^2");
    }
    out.note("p = 2, 3, 5: (1,3,2), length 6, socle = m^2, dim 2");
    return out;
}

// Exact pairs from multiplication matrices only: a is exact when some b in m
// has ker(a) = im(b) and ker(b) = im(a).
std::vector<std::pair<RingElement, RingElement>> ezd_oracle(const Algebra& A) {
    const auto& f = A.field();
    auto m = maximal_ideal(A);
    std::vector<std::pair<RingElement, RingElement>> out;
    std::vector<Subspace> ideals;
    for (const auto& a : m) {
        if (A.is_zero(a) || A.in_m2(a)) continue;
        auto ma = A.multiplication_matrix(a);
        const int ra = rank(f, ma);
        auto im_a = Subspace::row_space(f, ma.transpose());
        bool dup = false;
        for (const auto& s : ideals) {
            bool inside = s.dim() == im_a.dim();
            for (int i = 0; inside && i < im_a.basis().rows(); ++i) inside = s.contains(im_a.basis().row(i));
            dup = dup || inside;
        }
        if (dup) continue;
        for (const auto& b : m) {
            if (A.is_zero(b)) continue;
            auto mb = A.multiplication_matrix(b);
            const int rb = rank(f, mb);
            if (!multiply(f, ma, mb).is_zero()) continue;
            // ab = 0 gives im(b) in ker(a); equal dimensions give equality
            if (A.dim() - ra == rb && A.dim() - rb == ra) {
                out.emplace_back(a, b);
                ideals.push_back(im_a);
                break;
            }
        }
    }
    return out;
}

Outcome ezd_enumeration() {
    Outcome out;
    Algebra S2 = Algebra::standard_s(2), S3 = Algebra::standard_s(3);
    std::vector<RingElement> got2;
    for (const auto& e : enumerate_ezd(S2)) got2.push_back(e.a());
    std::vector<RingElement> expected2;
    for (auto s : {"x", "x+y", "x+z", "x+y+z"}) expected2.push_back(S2.parse(s));
    out.require(got2 == expected2, "S(2) exact zero divisors {x, x+y, x+z, x+y+z}, got {" + fmt(S2, got2) + "}");
    out.require(ezd_oracle(S2).size() == 4, "S(2) oracle finds 4 ideals");

    auto got3 = enumerate_ezd(S3);
    out.require(got3.size() == 9, "S(3) has 9 representatives");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : got3) {
        const auto& a = e.a();
        bool shape = a.c[0] == 0 && a.c[1] == 1 && S3.is_zero(S3.degree_part(a, 2));
        out.require(shape, "S(3) representative " + S3.format(a) + " has the form x+ay+bz");
        seen.insert({a.c[2], a.c[3]});
        out.require(e.b() == linear(S3, -S3.field().to_signed(a.c[2]), -S3.field().to_signed(a.c[3])),
                    "S(3) partner of " + S3.format(a) + " is x-ay-bz");
    }
    out.require(seen.size() == 9, "S(3) representatives cover every (a, b)");
    out.require(ezd_oracle(S3).size() == 9, "S(3) oracle finds 9 ideals");
    out.note("S(2): {" + fmt(S2, got2) + "}; S(3): 9 with partner x-ay-bz");
    return out;
}

Outcome ext_rank_table() {
    Outcome out;
    for (int p : {3, 5}) {
        Algebra A = Algebra::standard_s(p);
        PrimeField f(p);
        int cases = 0, agree = 0;
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d)
                    for (int g = 0; g < p; ++g) {
                        auto E = ext1(A, one_by_one(A, linear(A, d, g)), one_by_one(A, linear(A, b, c)));
                        int formula = ext1_rank_formula(FieldElement(f, b), FieldElement(f, c), FieldElement(f, d),
                                                        FieldElement(f, g));
                        ++cases;
                        agree += E.rank == formula;
                    }
        out.require(cases == agree, "F" + std::to_string(p) + ": " + std::to_string(cases - agree) + " mismatches");
        out.note("F" + std::to_string(p) + ": " + std::to_string(agree) + "/" + std::to_string(cases));
    }
    return out;
}

Outcome gamma_table() {
    Outcome out;
    for (int p : {3, 5}) {
        Algebra A = Algebra::standard_s(p);
        PrimeField f(p);
        int cases = 0, formula_ok = 0, unit_ok = 0;
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d)
                    for (int g = 0; g < p; ++g) {
                        auto G = gamma(A, one_by_one(A, linear(A, d, g)), one_by_one(A, linear(A, b, c)));
                        int formula = gamma_formula(FieldElement(f, b), FieldElement(f, c), FieldElement(f, d),
                                                    FieldElement(f, g));
                        bool unit_class = (b + d) % p == 0 && (c + g) % p == 0;
                        ++cases;
                        formula_ok += G.gamma == formula;
                        unit_ok += G.gamma == G.rank - (unit_class ? 1 : 0);
                    }
        const std::string tag = "F" + std::to_string(p);
        out.require(formula_ok == cases, tag + " gamma vs closed form");
        out.require(unit_ok == cases, tag + " gamma = rank - [b=-d, c=-f]");
        out.note(tag + ": " + std::to_string(formula_ok) + "/" + std::to_string(cases));
    }
    return out;
}

Outcome pushout() {
    Outcome out;
    for (int p : {2, 3}) {
        Algebra A = Algebra::standard_s(p);
        auto pairs = enumerate_ezd(A);
        for (const auto& U : pairs) {
            auto X = pushout_middle(A, U.a(), U.b(), A.one());
            auto m = minimize(A, X);
            out.require(m.rows == 1 && m.cols == 0,
                        "S(" + std::to_string(p) + ") u=" + A.format(U.a()) + ": alpha=1 middle is free of rank 1");
            for (const auto& V : pairs) {
                auto split = pushout_middle(A, U.a(), V.a(), A.zero());
                Matrix diag(A, 2, 2);
                diag.at(0, 0) = V.a();
                diag.at(1, 1) = U.a();
                out.require(is_equivalent(A, split, diag).has_value(), "alpha=0 middle is the split extension");
            }
        }
    }
    // Length additivity for every cocycle alpha in S(2).
    Algebra A = Algebra::standard_s(2);
    auto pairs = enumerate_ezd(A);
    int cocycles = 0;
    for (const auto& U : pairs)
        for (const auto& V : pairs)
            for (const auto& n : maximal_ideal(A))
                for (const auto& alpha : {n, A.add(n, A.one())}) {
                    Matrix X;
                    try {
                        X = pushout_middle(A, U.a(), V.a(), alpha);
                    } catch (const ValidationError&) {
                        continue;
                    }
                    ++cocycles;
                    out.require(coker_length(A, X) == 6, "length additivity for u=" + A.format(U.a()) +
                                                             " v=" + A.format(V.a()) + " alpha=" + A.format(alpha));
                }
    out.note("alpha=1 free, alpha=0 split on S(2), S(3); additivity on " + std::to_string(cocycles) + " cocycles");
    return out;
}

// Expected class table over S(2): rows u, columns t.
const char* const kExpectedTable[4][4] = {
    {"y, z, y+z", "z", "y", "y"},
    {"z", "y, z, y+z", "y", "y"},
    {"y", "y", "y, z, y+z", "z"},
    {"y", "y", "z", "y, z, y+z"},
};

Outcome classification() {
    Outcome out;
    Algebra A = Algebra::standard_s(2);
    auto table = classify_ut2(A);
    out.require(table.classes.size() == 24, "24 classes, got " + std::to_string(table.classes.size()));
    std::vector<RingElement> T;
    for (auto s : {"x", "x+y", "x+z", "x+y+z"}) T.push_back(A.parse(s));
    out.require(table.diagonal == T, "diagonal set {x, x+y, x+z, x+y+z}");
    int cells = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto got = fmt(A, table.cell(T[i], T[j]));
            bool ok = got == kExpectedTable[i][j];
            cells += ok;
            out.require(ok, "cell (" + A.format(T[i]) + ", " + A.format(T[j]) + "): " + got);
        }
    out.note("24 classes, " + std::to_string(cells) + "/16 cells match");

    auto two = swap_isomorphism_check(A);
    out.require(!two.cases.empty() && two.none_isomorphic(),
                "F2 swap: " + std::to_string(two.isomorphic) + " of " + std::to_string(two.cases.size()) + " isomorphic");
    out.note("F2 swap: " + std::to_string(two.isomorphic) + "/" + std::to_string(two.cases.size()) +
             " isomorphic (expected none)");

    Algebra B = Algebra::standard_s(3);
    auto three = swap_isomorphism_check(B);
    out.require(!three.cases.empty() && three.all_isomorphic(),
                "F3 swap: " + std::to_string(three.isomorphic) + " of " + std::to_string(three.cases.size()) +
                    " admissible cases isomorphic (expected all)");
    out.note("F3 swap: " + std::to_string(three.isomorphic) + "/" + std::to_string(three.cases.size()) +
             " isomorphic (expected all)");
    return out;
}

Outcome non_triangular_example() {
    Outcome out;
    for (int p : {2, 3}) {
        Algebra A = Algebra::standard_s(p);
        const std::string tag = "S(" + std::to_string(p) + ")";
        auto M = parse_matrix(A, std::string_view("[[x,z],[y,x]]"));
        auto c = check_totally_reflexive(A, M);
        out.require(c.verdict == Verdict::Certified, tag + " certified");
        if (c.verdict != Verdict::Certified) continue;
        // char 2 collapses the two differentials, so the minimal period divides 2
        out.require(p == 2 ? 2 % c.period == 0 : c.period == 2,
                    tag + " period " + std::to_string(c.period));
        out.require(replay(A, c), tag + " certificate replays");
        Matrix J(A, 2, 2);
        J.at(0, 1) = J.at(1, 0) = A.one();
        bool self_dual = true;
        for (const auto* window : {&c.forward, &c.backward})
            for (const auto& d : *window) self_dual = self_dual && multiply(A, multiply(A, J, dual(d)), J) == d;
        out.require(self_dual, tag + " dual complex isomorphic to the complex via the anti-identity");
        auto s = find_ut_form(A, M);
        out.require(!s.found && s.pairs_examined == s.pairs_total, tag + " no UT form (exhaustive)");
        out.note(tag + ": period " + std::to_string(c.period) + ", self-dual, no UT form over F" + std::to_string(p) +
                 " (" + std::to_string(s.pairs_total) + " flag pairs; finite-field computation)");
    }
    return out;
}

Outcome filtration_biconditional() {
    Outcome out;
    Algebra A = Algebra::standard_s(2);
    auto m = maximal_ideal(A);
    long long orbits = 0, minimal = 0, tr = 0, ut = 0, filtered = 0, mismatches = 0;
    for_each_scalar_orbit(A, [&](std::uint32_t code) {
        ++orbits;
        auto M = unpack(A, m, code);
        if (!is_strictly_minimal(A, M)) return;
        ++minimal;
        auto cert = check_totally_reflexive(A, M);
        auto search = find_ut_form(A, M);
        bool certified = cert.verdict == Verdict::Certified;
        bool pipeline = false;
        if (search.found) {
            ++ut;
            try {
                auto f = filtrate_ut(A, *search.form);
                pipeline = true;
                bool drops = f.lengths == std::vector<int>{3, 6};
                if (!drops) ++mismatches;
                out.require(drops, "quotient lengths 3 for " + to_string(A, M));
            } catch (const ValidationError&) {
            }
        }
        tr += certified;
        filtered += pipeline;
        if (search.found) {
            bool ut_tr = check_ut_tr(A, *search.form).totally_reflexive;
            if (ut_tr != certified) ++mismatches;
            out.require(ut_tr == certified, "UT criterion agrees on the form of " + to_string(A, M));
        }
        if (pipeline != (certified && search.found)) {
            ++mismatches;
            out.require(false, "biconditional at " + to_string(A, M));
        }
    });
    out.note(std::to_string(orbits) + " scalar orbits, " + std::to_string(minimal) + " strictly minimal, " +
             std::to_string(tr) + " certified, " + std::to_string(ut) + " with UT form, " + std::to_string(filtered) +
             " filtered, " + std::to_string(mismatches) + " mismatches");
    return out;
}

Outcome triangular_sweep() {
    Outcome out;
    Algebra A = Algebra::standard_s(2);
    auto m = maximal_ideal(A);
    long long cases = 0, agree = 0, positive = 0, reduced = 0;
    for (const auto& u : m)
        for (const auto& a : m)
            for (const auto& t : m) {
                Matrix M(A, 2, 2);
                M.at(0, 0) = u, M.at(0, 1) = a, M.at(1, 1) = t;
                auto report = check_ut_tr(A, M);
                bool fast = report.totally_reflexive;
                reduced += report.reduced.has_value();
                bool slow = check_totally_reflexive(A, M).verdict == Verdict::Certified;
                ++cases;
                positive += fast;
                if (fast == slow) ++agree;
                else if (cases - agree <= 5) out.require(false, "disagreement at " + to_string(A, M));
            }
    out.require(cases == 32768, "32768 upper triangular matrices");
    out.require(agree == cases, std::to_string(cases - agree) + " disagreements");
    out.note(std::to_string(agree) + "/" + std::to_string(cases) + " agree, " + std::to_string(positive) +
             " totally reflexive, " + std::to_string(reduced) + " tested on their minimal presentation");
    return out;
}

Outcome k_summand_sweep() {
    Outcome out;
    Algebra A = Algebra::standard_s(2);
    auto m = maximal_ideal(A);
    long long checked = 0;
    auto check = [&](const Matrix& M) {
        if (!has_m2_column(A, M)) return;
        ++checked;
        auto c = check_totally_reflexive(A, M);
        bool ok = c.verdict == Verdict::Refuted && c.refutation->kind == Obstruction::KSummand;
        out.require(ok, "k-summand refutation for " + to_string(A, M));
        if (ok) {
            auto q = c.refutation->combination;
            out.require(!q.empty(), "witness combination present");
        }
    };
    for (const auto& a : m) check(one_by_one(A, a));
    for (const auto& a : m)
        for (const auto& b : m) {
            Matrix row(A, 1, 2), col(A, 2, 1);
            row.at(0, 0) = col.at(0, 0) = a;
            row.at(0, 1) = col.at(1, 0) = b;
            check(row);
            check(col);
        }
    long long orbits = 0;
    for_each_scalar_orbit(A, [&](std::uint32_t code) {
        ++orbits;
        check(unpack(A, m, code));
    });
    out.note(std::to_string(checked) + " matrices with an m^2 column (2x2 up to scalar orbits), all refuted by a k-summand");
    return out;
}

Outcome mb_family() {
    Outcome out;
    Algebra A = Algebra::standard_s(2);
    auto x = A.parse("x"), y = A.parse("y"), z = A.parse("z");
    out.require(mb_conditions(A, x, x, y, z).satisfied(), "(x,x,y,z) satisfies the family conditions");
    for (int b = 1; b <= 6; ++b) {
        auto M = mb_matrix(A, b, x, x, y, z);
        auto c = check_totally_reflexive(A, M);
        const std::string tag = "b=" + std::to_string(b);
        out.require(c.verdict == Verdict::Certified, tag + " certified");
        bool constant = !c.betti.empty();
        for (int beta : c.betti) constant = constant && beta == b;
        out.require(constant && c.betti_constant, tag + " Betti numbers all equal to b");
        out.require(is_indecomposable(A, M).indecomposable, tag + " indecomposable");
    }
    out.note("b = 1..6 certified, Betti b, indecomposable");
    return out;
}

Outcome les_bound() {
    Outcome out;
    Algebra A = Algebra::standard_s(3);
    auto m = maximal_ideal(A);
    std::vector<RingElement> alphas;
    for (const auto& n : m)
        if (A.is_zero(A.degree_part(n, 2)))
            for (int s = 0; s < 3; ++s) alphas.push_back(A.add(n, A.scalar(s)));
    long long cases = 0, ok_sub = 0, ok_bound = 0;
    for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d)
                for (int f = 0; f < 3; ++f) {
                    auto C = one_by_one(A, linear(A, b, c));
                    auto T1 = one_by_one(A, linear(A, d, f));
                    for (const auto& alpha : alphas) {
                        Matrix T2;
                        try {
                            T2 = pushout_middle(A, C.at(0, 0), T1.at(0, 0), alpha);
                        } catch (const ValidationError&) {
                            continue;
                        }
                        auto r = les_rank_bound_check(A, C, T1, T2);
                        ++cases;
                        ok_sub += r.subadditive;
                        ok_bound += r.within_bound && r.gamma_c_ti <= 4;
                    }
                }
    out.require(cases > 0 && ok_sub == cases, std::to_string(cases - ok_sub) + " subadditivity failures");
    out.require(ok_bound == cases, std::to_string(cases - ok_bound) + " violations of the bound 4");
    out.note(std::to_string(cases) + " extensions (all (b,c,d,f), all cocycles of degree <= 1)");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expect_red;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--expect-red" && i + 1 < argc) {
            std::stringstream list(argv[++i]);
            for (std::string item; std::getline(list, item, ',');) expect_red.insert(std::stoi(item));
        } else if (arg == "--only" && i + 1 < argc) {
            only = std::stoi(argv[++i]);
        } else {
            std::cerr << "usage: trmod_acceptance [--expect-red N,M] [--only N]\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria = {
        {1, "ring validation", 1.0, ring_validation},
        {2, "exact zero divisor enumeration", 1.0, ezd_enumeration},
        {3, "Ext^1 rank table", 30.0, ext_rank_table},
        {4, "Gamma", 30.0, gamma_table},
        {5, "pushout", 10.0, pushout},
        {6, "classification and swap", 60.0, classification},
        {7, "non-triangular example", 10.0, non_triangular_example},
        {8, "filtration biconditional", 300.0, filtration_biconditional},
        {9, "triangular criterion sweep", 120.0, triangular_sweep},
        {10, "k-summand obstruction", 60.0, k_summand_sweep},
        {11, "M_b family", 120.0, mb_family},
        {12, "long exact sequence bound", 60.0, les_bound},
    };

    std::set<int> failed;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(elapsed < c.limit_seconds, "runtime limit");
        if (!o.pass) failed.insert(c.id);
        std::printf("%s %2d %-32s %8.2fs (limit %.0fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), elapsed,
                    c.limit_seconds);
        int shown = 0;
        for (const auto& n : o.notes)
            if (shown++ < 12) std::printf("       %s\n", n.c_str());
        std::fflush(stdout);
    }
    std::set<int> expected;
    for (int id : expect_red)
        if (!only || id == only) expected.insert(id);
    if (failed != expected) {
        std::printf("failing criteria differ from the expected set\n");
        return 1;
    }
    if (!failed.empty()) std::printf("known red: %zu criterion(s), see README\n", failed.size());
    return 0;
}
