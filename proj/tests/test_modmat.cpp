#include <doctest.h>

#include "support.hpp"

using namespace trmod;
using namespace trmod::test;

namespace {

// All 1x1 and 2x2 matrices with entries drawn from `pool`.
std::vector<Matrix> small_matrices(const Algebra& A, const std::vector<RingElement>& pool) {
    std::vector<Matrix> out;
    for (const auto& a : pool) {
        Matrix M(A, 1, 1);
        M.at(0, 0) = a;
        out.push_back(M);
    }
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool)
                for (const auto& d : pool) {
                    Matrix M(A, 2, 2);
                    M.at(0, 0) = a, M.at(0, 1) = b, M.at(1, 0) = c, M.at(1, 1) = d;
                    out.push_back(M);
                }
    return out;
}

}  // namespace

TEST_SUITE("modmat") {
    TEST_CASE("parsing and printing") {
        const auto& A = S(3);
        auto M = mat(A, "[[x, z], [y, x]]");
        CHECK(M.rows == 2);
        CHECK(str(A, M) == "[[x,z],[y,x]]");
        CHECK(str(A, dual(M)) == "[[x,y],[z,x]]");
        CHECK(dual(mat(A, "[[x,y,z],[0,x,y]]")).rows == 3);
        CHECK(dual(mat(A, "[[x,y],[y,x]]")) == mat(A, "[[x,y],[y,x]]"));
        CHECK_THROWS_AS(mat(A, "[[x,z],[y]]"), ValidationError);
        CHECK_THROWS_AS(mat(A, "[[x,z]"), ParseError);
    }

    TEST_CASE("cokernel lengths") {
        const auto& A = S(2);
        CHECK(coker_length(A, mat(A, "[[x]]")) == 3);
        CHECK(coker_length(A, mat(A, "[[x,y],[0,x+y]]")) == 6);
        CHECK(coker_length(A, mat(A, "[[1]]")) == 0);
    }

    TEST_CASE("minimize") {
        const auto& A = S(3);
        auto free1 = minimize(A, mat(A, "[[x-y,1],[0,x+y]]"));
        CHECK(free1.rows == 1);
        CHECK(free1.cols == 0);
        auto zero = minimize(A, mat(A, "[[1]]"));
        CHECK(zero.rows == 0);
        auto M = mat(A, "[[x,z],[y,x]]");
        CHECK(minimize(A, M) == M);
        CHECK(minimize(A, mat(A, "[[x,x]]")) == mat(A, "[[x]]"));
    }

    TEST_CASE("syzygies of cyclic and 2x2 modules") {
        CHECK(syzygy(S(2), mat(S(2), "[[x]]")) == mat(S(2), "[[x]]"));
        CHECK(syzygy(S(3), mat(S(3), "[[x+y]]")) == mat(S(3), "[[x-y]]"));
        CHECK(str(S(3), syzygy(S(3), mat(S(3), "[[x,z],[y,x]]"))) == "[[x,-z],[-y,x]]");
        CHECK(syzygy(S(2), mat(S(2), "[[x,z],[y,x]]")) == mat(S(2), "[[x,z],[y,x]]"));
    }

    TEST_CASE("m^2 columns") {
        const auto& A = S(2);
        CHECK(has_m2_column(A, mat(A, "[[x*y],[x*z]]")));
        CHECK_FALSE(has_m2_column(A, mat(A, "[[x,z],[y,x]]")));
        // column 2 minus column 1 lies in m^2 and still generates
        CHECK(has_m2_column(A, mat(A, "[[x, x+x*y],[0, x*z]]")));
        auto q = m2_column(A, mat(A, "[[x, x+x*y],[0, x*z]]"));
        REQUIRE(q);
        CHECK(q->size() == 2);
    }

    TEST_CASE("equivalence examples") {
        const auto& A = S(2);
        auto M = mat(A, "[[x,z],[y,x]]");
        auto w = is_equivalent(A, M, M);
        REQUIRE(w);
        CHECK(verify_witness(A, M, M, *w));
        CHECK_FALSE(is_equivalent(A, mat(A, "[[x]]"), mat(A, "[[x+y]]")));
        auto swapped = mat(A, "[[y,x],[x,z]]");
        auto v = is_equivalent(A, M, swapped);
        REQUIRE(v);
        CHECK(multiply(A, multiply(A, v->P, M), v->Q) == swapped);
        // a - t identification on the superdiagonal
        CHECK(is_equivalent(A, mat(A, "[[x,y],[0,x+y]]"), mat(A, "[[x,x],[0,x+y]]")));
    }

    TEST_CASE("equivalence is an equivalence relation on a sample") {
        const auto& A = S(2);
        std::vector<Matrix> sample;
        for (auto s : {"[[x,y],[0,x]]", "[[x,y+z],[0,x]]", "[[x,x+y],[0,x]]", "[[x,z],[0,x]]", "[[x,0],[0,x]]",
                       "[[x+y,y],[0,x]]", "[[x,y],[0,x+y]]", "[[x,0],[0,x+y]]", "[[x,z],[y,x]]", "[[y,x],[x,z]]"})
            sample.push_back(mat(A, s));
        const int n = int(sample.size());
        std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto w = is_equivalent(A, sample[i], sample[j]);
                eq[i][j] = w.has_value();
                if (w) {
                    CHECK(verify_witness(A, sample[i], sample[j], *w));
                    CHECK(is_invertible(A.field(), scalar_part(w->P)));
                    CHECK(is_invertible(A.field(), scalar_part(w->Q)));
                }
            }
        for (int i = 0; i < n; ++i) {
            CHECK(eq[i][i]);
            for (int j = 0; j < n; ++j) {
                CHECK(eq[i][j] == eq[j][i]);
                for (int k = 0; k < n; ++k)
                    if (eq[i][j] && eq[j][k]) CHECK(eq[i][k]);
            }
        }
        CHECK(eq[0][2]);  // a ~ a - t
        CHECK_FALSE(eq[0][4]);
        CHECK(eq[8][9]);
    }

    TEST_CASE("indecomposability") {
        const auto& A = S(2);
        CHECK(is_indecomposable(A, mat(A, "[[x]]")).indecomposable);
        auto split = is_indecomposable(A, mat(A, "[[x,0],[0,x+y]]"));
        CHECK_FALSE(split.indecomposable);
        REQUIRE(split.idempotent);
        auto e = *split.idempotent;
        CHECK_FALSE(scalar_part(e) == FpMatrix::identity(2));
        CHECK_FALSE(scalar_part(e).is_zero());
        CHECK(is_indecomposable(A, mat(A, "[[x,y,0,0],[0,x,z,0],[0,0,x,y],[0,0,0,x]]")).indecomposable);
        CHECK(is_indecomposable(A, mat(A, "[[x,z],[y,x]]")).indecomposable);
        CHECK_FALSE(is_indecomposable(A, mat(A, "[[x,y],[0,x+y]]")).indecomposable);
        CHECK_THROWS_AS(is_indecomposable(A, mat(A, "[[1]]")), ValidationError);
    }

    TEST_CASE("syzygy soundness and length identity, exhaustive over small S(2) matrices") {
        const auto& A = S(2);
        std::vector<RingElement> pool;
        for (auto s : {"0", "x", "y", "z", "x+y", "x*y", "1"}) pool.push_back(A.parse(s));
        int checked = 0;
        for (const auto& M : small_matrices(A, pool)) {
            auto L = linearize(A, M);
            CHECK(coker_length(A, M) + rank(A.field(), L) == M.rows * A.dim());
            auto W = syzygy(A, M);
            REQUIRE(W.rows == M.cols);
            if (W.cols > 0) CHECK(multiply(A, M, W) == Matrix(A, M.rows, W.cols));
            const int kernel = L.cols() - rank(A.field(), L);
            const int image_w = W.cols > 0 ? rank(A.field(), linearize(A, W)) : 0;
            CHECK(kernel == image_w);
            auto m = minimize(A, M);
            CHECK(coker_length(A, m) == coker_length(A, M));
            CHECK(is_minimal(A, m));
            ++checked;
        }
        CHECK(checked == 7 + 7 * 7 * 7 * 7);
    }

    TEST_CASE("minimize keeps the module on presentations with a unit") {
        const auto& A = S(2);
        const char* cases[][2] = {{"[[1,x],[y,z]]", "[[z+x*y]]"}, {"[[x,1],[y,0]]", "[[y]]"}, {"[[1+x,y],[z,x]]", "[[x]]"}};
        for (auto [input, expected] : cases) {
            auto M = mat(A, input);
            auto m = minimize(A, M);
            CHECK(coker_length(A, m) == coker_length(A, M));
            CHECK(is_equivalent(A, m, mat(A, expected)));
        }
    }

    TEST_CASE("free summands") {
        const auto& A = S(3);
        auto M = mat(A, "[[x,0],[0,0]]");
        CHECK(free_rank(A, M) == 1);
        CHECK(strip_free_summands(A, M) == mat(A, "[[x]]"));
        CHECK(free_rank(A, mat(A, "[[x,z],[y,x]]")) == 0);
    }
}
