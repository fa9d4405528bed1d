#include <catch2/catch_amalgamated.hpp>

#include "sepalg/algebra.hpp"
#include "sepalg/json_io.hpp"
#include "test_support.hpp"

using namespace sepalg;
using testutil::cyclic_group_algebra;
using testutil::dual_numbers;

namespace {

Json dual_numbers_doc() {
    return Json::parse(R"({
        "name": "dual",
        "scalars": {"kind": "Q"},
        "dim": 2,
        "basis": ["1", "x"],
        "unit": ["1", "0"],
        "structure": [[["1","0"],["0","1"]], [["0","1"],["0","0"]]]
    })");
}

}  // namespace

TEST_CASE("load_algebra accepts the dual numbers document", "[algebra]") {
    auto any = load_algebra(dual_numbers_doc());
    auto& A = std::get<FinAlgebra<Rationals>>(any);
    CHECK(A.dim() == 2);
    CHECK(A.name() == "dual");
    Rationals Q;
    CHECK(A.multiply(A.basis_vector(1), A.basis_vector(1)) ==
          std::vector<Rational>{Q.zero(), Q.zero()});
}

TEST_CASE("load_algebra rejects a bad unit with a witness", "[algebra]") {
    // structure encodes x^2 = 1 but the declared unit is x
    Json doc = dual_numbers_doc();
    doc["structure"] = Json::parse(R"([[["1","0"],["0","1"]], [["0","1"],["1","0"]]])");
    doc["unit"] = Json::parse(R"(["0", "1"])");
    CHECK_THROWS_AS(load_algebra(doc), NotUnital);
}

TEST_CASE("load_algebra rejects a non-associative table with a witness", "[algebra]") {
    // unital 3-dim table with x*x = y, x*y = 0, y*x = 1:
    // (x x) x = y x = 1 but x (x x) = x y = 0
    Json doc = Json::parse(R"({
        "name": "skew",
        "scalars": {"kind": "Q"},
        "dim": 3,
        "basis": ["1", "x", "y"],
        "unit": ["1", "0", "0"],
        "structure": [
            [["1","0","0"], ["0","1","0"], ["0","0","1"]],
            [["0","1","0"], ["0","0","1"], ["0","0","0"]],
            [["0","0","1"], ["1","0","0"], ["0","0","0"]]
        ]
    })");
    try {
        load_algebra(doc);
        FAIL("expected NotAssociative");
    } catch (const NotAssociative& e) {
        // the witness triple really breaks associativity, by direct expansion
        CHECK(e.i() == 1);
        CHECK(e.j() == 1);
        CHECK(e.k() == 1);
    }
}

TEST_CASE("left multiplication matrices", "[algebra]") {
    Rationals Q;
    auto C2 = cyclic_group_algebra(Q, 2);

    SECTION("by the unit is the identity") {
        CHECK(C2.left_mult_matrix(C2.unit()) == Matrix<Rationals>::identity(Q, 2));
    }
    SECTION("by g in Q[C2] is the swap") {
        auto L = C2.left_mult_matrix(C2.basis_vector(1));
        auto expect = Matrix<Rationals>(Q, 2, 2);
        expect.at(0, 1) = Q.one();
        expect.at(1, 0) = Q.one();
        CHECK(L == expect);
    }
    SECTION("by x in the dual numbers") {
        auto D = dual_numbers(Q);
        auto L = D.left_mult_matrix(D.basis_vector(1));
        Matrix<Rationals> expect(Q, 2, 2);
        expect.at(1, 0) = Q.one();
        CHECK(L == expect);
    }
    SECTION("is linear in its argument") {
        std::vector<Rational> a{Q.from_long(2), Q.from_long(-3)};
        auto La = C2.left_mult_matrix(a);
        auto Le = C2.left_mult_matrix(C2.basis_vector(0));
        auto Lg = C2.left_mult_matrix(C2.basis_vector(1));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(La.at(i, j) ==
                      Q.from_long(2) * Le.at(i, j) + Q.from_long(-3) * Lg.at(i, j));
    }
    SECTION("rejects wrong-length vectors") {
        CHECK_THROWS_AS(C2.left_mult_matrix({Q.one()}), DimensionMismatch);
    }
}

TEST_CASE("trace map values", "[algebra]") {
    Rationals Q;
    auto C2 = cyclic_group_algebra(Q, 2);
    CHECK(C2.trace_map() == std::vector<Rational>{Q.from_long(2), Q.zero()});

    auto M2 = make_matrix_algebra(Q, 2);
    // tr(e_ij) = 2 [i = j] in basis order e11, e12, e21, e22
    CHECK(M2.trace_map() ==
          std::vector<Rational>{Q.from_long(2), Q.zero(), Q.zero(), Q.from_long(2)});
}

TEST_CASE("trace of the unit is the dimension", "[algebra]") {
    Rationals Q;
    PrimeField F3(3);
    for (int n = 1; n <= 6; ++n) {
        auto A = cyclic_group_algebra(Q, n);
        auto tr = A.trace_map();
        auto v = Q.zero();
        for (int i = 0; i < n; ++i) v = v + tr[i] * A.unit()[i];
        CHECK(v == Q.from_long(n));
    }
    auto M2 = make_matrix_algebra(F3, 2);
    auto tr = M2.trace_map();
    auto v = F3.zero();
    for (int i = 0; i < 4; ++i) v = v + tr[i] * M2.unit()[i];
    CHECK(v == F3.from_long(4));
}

TEST_CASE("trace form values", "[algebra]") {
    Rationals Q;
    SECTION("Q[C3]") {
        auto C3 = cyclic_group_algebra(Q, 3);
        auto T = C3.trace_form();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(T.at(i, j) == ((i + j) % 3 == 0 ? Q.from_long(3) : Q.zero()));
    }
    SECTION("dual numbers") {
        auto D = dual_numbers(Q);
        auto T = D.trace_form();
        CHECK(T.at(0, 0) == Q.from_long(2));
        CHECK(T.at(0, 1) == Q.zero());
        CHECK(T.at(1, 0) == Q.zero());
        CHECK(T.at(1, 1) == Q.zero());
    }
    SECTION("Z x Z") {
        Integers Z;
        auto ZZ = product_algebra(cyclic_group_algebra(Z, 1), cyclic_group_algebra(Z, 1));
        CHECK(ZZ.trace_form() == Matrix<Integers>::identity(Z, 2));
    }
}

TEST_CASE("trace form agrees with the trace of left multiplication", "[algebra]") {
    // independent route: T[i][j] must equal the diagonal sum of L_{e_i e_j}
    Rationals Q;
    PrimeField F5(5);
    auto check = [](const auto& A) {
        auto T = A.trace_form();
        const auto& ring = A.ring();
        for (int i = 0; i < A.dim(); ++i)
            for (int j = 0; j < A.dim(); ++j) {
                auto prod = A.multiply(A.basis_vector(i), A.basis_vector(j));
                auto L = A.left_mult_matrix(prod);
                auto tr = ring.zero();
                for (int k = 0; k < A.dim(); ++k) tr = tr + L.at(k, k);
                CHECK(T.at(i, j) == tr);
            }
    };
    check(cyclic_group_algebra(Q, 4));
    check(make_matrix_algebra(Q, 2));
    check(make_matrix_algebra(F5, 2));
    check(dual_numbers(Q));
    check(testutil::upper_triangular2(Q));
}

TEST_CASE("multiply follows the structure constants", "[algebra]") {
    Rationals Q;
    auto C2 = cyclic_group_algebra(Q, 2);
    SECTION("unit law") {
        std::vector<Rational> b{Q.from_long(5), Q.from_long(-7)};
        CHECK(C2.multiply(C2.unit(), b) == b);
        CHECK(C2.multiply(b, C2.unit()) == b);
    }
    SECTION("g * g = e in Q[C2]") {
        CHECK(C2.multiply(C2.basis_vector(1), C2.basis_vector(1)) == C2.basis_vector(0));
    }
    SECTION("x * x = 0 in the dual numbers") {
        auto D = dual_numbers(Q);
        CHECK(D.multiply(D.basis_vector(1), D.basis_vector(1)) ==
              std::vector<Rational>{Q.zero(), Q.zero()});
    }
    SECTION("bilinear expansion against the Cayley table") {
        std::vector<Rational> a{Q.from_long(2), Q.from_long(3)};
        std::vector<Rational> b{Q.from_long(-1), Q.from_long(4)};
        CHECK(C2.multiply(a, b) == std::vector<Rational>{Q.from_long(2 * -1 + 3 * 4),
                                                         Q.from_long(2 * 4 + 3 * -1)});
    }
}

TEST_CASE("group algebra constructor", "[algebra]") {
    Rationals Q;
    SECTION("trivial group gives the base ring") {
        auto A = cyclic_group_algebra(Q, 1);
        CHECK(A.dim() == 1);
        CHECK(A.trace_form() == Matrix<Rationals>::identity(Q, 1));
    }
    SECTION("cyclic 3 matches the structure-constant presentation") {
        auto A = cyclic_group_algebra(Q, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(A.multiply(A.basis_vector(i), A.basis_vector(j)) ==
                      A.basis_vector((i + j) % 3));
    }
    SECTION("table without identity is rejected") {
        std::vector<std::vector<int>> t{{0, 0}, {0, 0}};
        CHECK_THROWS_AS(make_group_algebra(Q, "bad", t), NotAGroup);
    }
    SECTION("table without inverses is rejected") {
        std::vector<std::vector<int>> t{{0, 1}, {1, 1}};
        CHECK_THROWS_AS(make_group_algebra(Q, "bad", t), NotAGroup);
    }
    SECTION("non-associative latin square is rejected") {
        std::vector<std::vector<int>> t{{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
        CHECK_THROWS_AS(make_group_algebra(Q, "bad", t), NotAGroup);
    }
    SECTION("Klein four group works") {
        std::vector<std::vector<int>> t{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        auto A = make_group_algebra(Q, "Q[V4]", t);
        CHECK(A.is_commutative());
        CHECK(A.dim() == 4);
    }
}

TEST_CASE("matrix algebra constructor", "[algebra]") {
    Rationals Q;
    SECTION("n = 1 is the base ring") {
        auto A = make_matrix_algebra(Q, 1);
        CHECK(A.dim() == 1);
        CHECK(A.trace_form() == Matrix<Rationals>::identity(Q, 1));
    }
    SECTION("n = 2 trace form is 2 [j=k][i=l]") {
        auto A = make_matrix_algebra(Q, 2);
        auto T = A.trace_form();
        auto idx = [](int i, int j) { return i * 2 + j; };
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l)
                        CHECK(T.at(idx(i, j), idx(k, l)) ==
                              (j == k && i == l ? Q.from_long(2) : Q.zero()));
        CHECK_FALSE(A.is_commutative());
    }
    SECTION("n = 2 over F2 is totally degenerate") {
        PrimeField F2(2);
        auto A = make_matrix_algebra(F2, 2);
        CHECK(A.trace_form().is_zero());
    }
}

TEST_CASE("product algebra constructor", "[algebra]") {
    SECTION("Z x Z has the identity trace form") {
        Integers Z;
        auto ZZ = product_algebra(cyclic_group_algebra(Z, 1), cyclic_group_algebra(Z, 1));
        CHECK(ZZ.trace_form() == Matrix<Integers>::identity(Z, 2));
        CHECK(ZZ.dim() == 2);
    }
    SECTION("trace form of a product is the block sum") {
        Rationals Q;
        auto A = cyclic_group_algebra(Q, 3);
        auto B = make_matrix_algebra(Q, 2);
        auto P = product_algebra(A, B);
        auto T = P.trace_form();
        auto TA = A.trace_form();
        auto TB = B.trace_form();
        for (int i = 0; i < P.dim(); ++i)
            for (int j = 0; j < P.dim(); ++j) {
                Rational expect = Q.zero();
                if (i < 3 && j < 3) expect = TA.at(i, j);
                if (i >= 3 && j >= 3) expect = TB.at(i - 3, j - 3);
                CHECK(T.at(i, j) == expect);
            }
    }
    SECTION("F2 x F2 is nondegenerate") {
        PrimeField F2(2);
        auto P = product_algebra(cyclic_group_algebra(F2, 1), cyclic_group_algebra(F2, 1));
        CHECK(P.trace_form() == Matrix<PrimeField>::identity(F2, 2));
        CHECK(determinant(P.trace_form()) == F2.one());
    }
    SECTION("mixed scalar specs are rejected") {
        PrimeField F2(2), F3(3);
        auto A = cyclic_group_algebra(F2, 2);
        auto B = cyclic_group_algebra(F3, 2);
        CHECK_THROWS_AS(product_algebra(A, B), ScalarSpecMismatch);
    }
}

TEST_CASE("trace form is symmetric and invariant across the corpus", "[algebra]") {
    Rationals Q;
    PrimeField F2(2), F3(3);
    auto check = [](const auto& A) {
        auto T = A.trace_form();
        CHECK(T.is_symmetric());
        // invariance: t(e_i e_j, e_k) = t(e_i, e_j e_k), exhaustively
        const auto& ring = A.ring();
        for (int i = 0; i < A.dim(); ++i)
            for (int j = 0; j < A.dim(); ++j)
                for (int k = 0; k < A.dim(); ++k) {
                    auto lhs = ring.zero(), rhs = ring.zero();
                    for (int m = 0; m < A.dim(); ++m) {
                        lhs = lhs + A.c(i, j, m) * T.at(m, k);
                        rhs = rhs + A.c(j, k, m) * T.at(i, m);
                    }
                    CHECK(lhs == rhs);
                }
    };
    check(cyclic_group_algebra(Q, 5));
    check(make_matrix_algebra(Q, 2));
    check(make_matrix_algebra(F3, 2));
    check(dual_numbers(F2));
    check(testutil::upper_triangular2(Q));
    check(product_algebra(cyclic_group_algebra(Q, 2), make_matrix_algebra(Q, 2)));
}
