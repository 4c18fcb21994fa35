#include <doctest.h>

#include "support.hpp"

using namespace trmod;
using namespace trmod::test;

namespace {

Matrix cyclic(const Algebra& A, int b, int c) {
    Matrix M(A, 1, 1);
    M.at(0, 0) = A.add(A.variable(0), A.add(A.scale(A.field().from_int(b), A.variable(1)),
                                             A.scale(A.field().from_int(c), A.variable(2))));
    return M;
}

}  // namespace

TEST_SUITE("ext") {
    TEST_CASE("rank table examples over F3 and F5") {
        const auto& A = S(3);
        CHECK(ext1(A, cyclic(A, 0, 0), cyclic(A, 0, 0)).rank == 3);
        CHECK(ext1(A, cyclic(A, 1, 0), cyclic(A, 1, 0)).rank == 2);
        CHECK(ext1(A, cyclic(A, 2, 1), cyclic(A, 1, 0)).rank == 1);
        PrimeField f5(5);
        auto fe = [&](int v) { return FieldElement(f5, v); };
        CHECK(ext1_rank_formula(fe(0), fe(0), fe(0), fe(0)) == 3);
        CHECK(ext1_rank_formula(fe(1), fe(2), fe(-1), fe(-2)) == 2);
        CHECK(ext1_rank_formula(fe(1), fe(0), fe(2), fe(1)) == 1);
        CHECK_THROWS_AS(ext1_rank_formula(FieldElement(PrimeField(2), 0), FieldElement(PrimeField(2), 0),
                                          FieldElement(PrimeField(2), 0), FieldElement(PrimeField(2), 0)),
                        ValidationError);
        CHECK_THROWS_AS(ext1_rank_formula(fe(0), fe(0), fe(0), FieldElement(PrimeField(3), 0)), ValidationError);
    }

    TEST_CASE("gamma examples over F3") {
        const auto& A = S(3);
        PrimeField f(3);
        auto fe = [&](int v) { return FieldElement(f, v); };
        CHECK(gamma(A, cyclic(A, 0, 0), cyclic(A, 0, 0)).gamma == 2);
        CHECK(gamma_formula(fe(0), fe(0), fe(0), fe(0)) == 2);
        CHECK(gamma(A, cyclic(A, 1, 0), cyclic(A, 1, 0)).gamma == 2);
        auto g = gamma(A, cyclic(A, -1, 0), cyclic(A, 1, 0));
        CHECK(g.gamma == 1);
        CHECK(g.unit_part == 1);
        CHECK_THROWS_AS(gamma(A, mat(A, "[[y]]"), cyclic(A, 0, 0)), ValidationError);
    }

    TEST_CASE("extension classes and cocycles") {
        const auto& A = S(3);
        auto E = ext1(A, cyclic(A, 0, 0), cyclic(A, 0, 0));
        for (const auto& b : E.basis) {
            auto again = extension_class(A, E, b.lift);
            CHECK(again.coords == b.coords);
        }
        auto F = ext1(A, cyclic(A, 1, 0), cyclic(A, 0, 0));
        CHECK_THROWS_AS(extension_class(A, F, mat(A, "[[1]]")), ValidationError);
        CHECK_NOTHROW(extension_class(A, F, mat(A, "[[z]]")));
    }

    TEST_CASE("pushout middle terms") {
        const auto& A = S(3);
        auto u = A.parse("x+y"), v = A.parse("x-y");
        auto free = minimize(A, pushout_middle(A, u, v, A.one()));
        CHECK(free.rows == 1);
        CHECK(free.cols == 0);
        auto split = pushout_middle(A, u, v, A.zero());
        CHECK(is_equivalent(A, split, mat(A, "[[x-y,0],[0,x+y]]")));
        const auto& B = S(2);
        auto X = pushout_middle(B, B.parse("x"), B.parse("x"), B.parse("y"));
        CHECK(X == mat(B, "[[x,y],[0,x]]"));
        CHECK(coker_length(B, X) == 6);
        CHECK_FALSE(is_equivalent(B, X, mat(B, "[[x,0],[0,x]]")));
        CHECK_THROWS_AS(pushout_middle(A, u, A.parse("x"), A.one()), ValidationError);
        CHECK_NOTHROW(pushout_middle(A, u, A.parse("x"), A.parse("z")));
    }

    TEST_CASE("nonsplit pushouts are not split, exhaustive over cyclic pairs") {
        for (int p : {2, 3}) {
            const auto& A = S(p);
            auto pairs = enumerate_ezd(A);
            for (const auto& U : pairs)
                for (const auto& V : pairs)
                    for (const auto& alpha : linear_forms(A)) {
                        if (A.is_zero(alpha)) continue;
                        Matrix X;
                        try {
                            X = pushout_middle(A, U.a(), V.a(), alpha);
                        } catch (const ValidationError&) {
                            continue;
                        }
                        Matrix Nm(A, 1, 1), Tm(A, 1, 1);
                        Nm.at(0, 0) = U.a();
                        Tm.at(0, 0) = V.a();
                        CHECK(coker_length(A, X) == coker_length(A, Nm) + coker_length(A, Tm));
                        auto split = ut2(A, V.a(), A.zero(), U.a());
                        // coboundaries are the elements of (u) + (v)
                        auto bounds = principal_ideal(A, U.a()).span;
                        auto vb = principal_ideal(A, V.a()).span.basis();
                        for (int i = 0; i < vb.rows(); ++i) bounds.insert(vb.row(i));
                        bool trivial = bounds.contains(alpha.c);
                        CHECK(is_equivalent(A, X, split).has_value() == trivial);
                    }
        }
    }

    TEST_CASE("long exact sequence bound on a sample") {
        const auto& A = S(3);
        auto C = cyclic(A, 1, 0);
        auto T1 = cyclic(A, -1, 0);
        auto T2 = pushout_middle(A, C.at(0, 0), T1.at(0, 0), A.parse("y"));
        auto r = les_rank_bound_check(A, C, T1, T2);
        CHECK(r.n == 2);
        CHECK(r.subadditive);
        CHECK(r.within_bound);
        CHECK_THROWS_AS(les_rank_bound_check(A, C, T1, mat(A, "[[x,y,z],[0,x,y],[0,0,x]]")), ValidationError);
    }
}
