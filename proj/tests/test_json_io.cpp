#include <catch2/catch_amalgamated.hpp>

#include "sepalg/json_io.hpp"
#include "test_support.hpp"

using namespace sepalg;
using testutil::fixture;

TEST_CASE("scalar spec JSON round trip", "[json]") {
    for (auto spec : {ScalarSpec::rationals(), ScalarSpec::prime_field(5),
                      ScalarSpec::integers()}) {
        CHECK(scalar_spec_from_json(scalar_spec_to_json(spec)) == spec);
    }
    CHECK(scalar_spec_to_json(ScalarSpec::prime_field(5)).dump() == R"({"kind":"Fp","p":5})");
    CHECK_THROWS_AS(scalar_spec_from_json(Json::parse(R"({"kind":"R"})")), SchemaError);
    CHECK_THROWS_AS(scalar_spec_from_json(Json::parse(R"({"kind":"Fp"})")), SchemaError);
    CHECK_THROWS_AS(scalar_spec_from_json(Json::parse(R"({"kind":"Fp","p":6})")),
                    InvalidScalarSpec);
    CHECK_THROWS_AS(scalar_spec_from_json(Json::parse("[]")), SchemaError);
}

TEST_CASE("fixture documents load and analyze as expected", "[json]") {
    SECTION("q_c3 is strongly separable") {
        auto any = load_algebra_file(fixture("q_c3.json"));
        auto& A = std::get<FinAlgebra<Rationals>>(any);
        CHECK(A.dim() == 3);
        CHECK(decide_strong_separability(A).strongly_separable());
    }
    SECTION("f5_c5 is degenerate (5 divides 5)") {
        auto any = load_algebra_file(fixture("f5_c5.json"));
        auto& A = std::get<FinAlgebra<PrimeField>>(any);
        CHECK(A.ring().p() == 5);
        CHECK_FALSE(decide_strong_separability(A).strongly_separable());
    }
    SECTION("m2_q matches the constructor corpus") {
        auto any = load_algebra_file(fixture("m2_q.json"));
        auto& A = std::get<FinAlgebra<Rationals>>(any);
        Rationals Q;
        CHECK(A.trace_form() == make_matrix_algebra(Q, 2).trace_form());
    }
    SECTION("z_c2 is the integral group algebra") {
        auto any = load_algebra_file(fixture("z_c2.json"));
        auto& A = std::get<FinAlgebra<Integers>>(any);
        auto rep = decide_strong_separability(A);
        CHECK(rep.degeneracy == DegeneracyKind::NonUnitDeterminant);
    }
    SECTION("missing file") {
        CHECK_THROWS_AS(load_algebra_file(fixture("nope.json")), SchemaError);
    }
}

TEST_CASE("algebra JSON round trip", "[json]") {
    Rationals Q;
    auto A = make_matrix_algebra(Q, 2);
    auto doc = algebra_to_json(A);
    auto any = load_algebra(doc);
    auto& B = std::get<FinAlgebra<Rationals>>(any);
    CHECK(B.dim() == A.dim());
    CHECK(B.trace_form() == A.trace_form());
    CHECK(B.unit() == A.unit());
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j)
            for (int k = 0; k < A.dim(); ++k) CHECK(B.c(i, j, k) == A.c(i, j, k));
}

TEST_CASE("load_algebra schema errors", "[json]") {
    auto base = algebra_to_json(testutil::dual_numbers(Rationals{}));
    SECTION("missing fields") {
        for (const char* key : {"scalars", "dim", "basis", "unit", "structure"}) {
            Json doc = base;
            doc.erase(key);
            CHECK_THROWS_AS(load_algebra(doc), SchemaError);
        }
    }
    SECTION("dimension mismatches") {
        Json doc = base;
        doc["dim"] = 3;
        CHECK_THROWS_AS(load_algebra(doc), SchemaError);
        doc = base;
        doc["basis"] = Json::parse(R"(["1"])");
        CHECK_THROWS_AS(load_algebra(doc), SchemaError);
        doc = base;
        doc["structure"][0].erase(1);
        CHECK_THROWS_AS(load_algebra(doc), SchemaError);
    }
    SECTION("bad scalar strings") {
        Json doc = base;
        doc["unit"][0] = "one";
        CHECK_THROWS_AS(load_algebra(doc), SchemaError);
        doc = base;
        doc["unit"][0] = 1.5;
        CHECK_THROWS_AS(load_algebra(doc), SchemaError);
    }
    SECTION("integer literals are accepted") {
        Json doc = base;
        doc["unit"][0] = 1;
        CHECK_NOTHROW(load_algebra(doc));
    }
    SECTION("non-object document") {
        CHECK_THROWS_AS(load_algebra(Json::parse("[1,2]")), SchemaError);
    }
}

TEST_CASE("report JSON has stable order and validates", "[json]") {
    Rationals Q;
    Integers Z;
    SECTION("positive verdict") {
        auto rep = decide_strong_separability(testutil::cyclic_group_algebra(Q, 3));
        auto j = report_to_json(rep);
        CHECK_NOTHROW(validate_report_json(j));
        CHECK(j.begin().key() == "algebra");
        CHECK(j["verdict"] == "StronglySeparable");
        CHECK(j["kappa"].is_array());
        CHECK(j["frobenius"]["counit"].size() == 3);
        CHECK(j["degeneracy"].is_null());
    }
    SECTION("degenerate field verdict includes the kernel witness") {
        auto rep = decide_strong_separability(testutil::dual_numbers(Q));
        auto j = report_to_json(rep);
        CHECK_NOTHROW(validate_report_json(j));
        CHECK(j["degeneracy"]["kind"] == "singular_trace_form");
        CHECK(j["degeneracy"]["kernel_witness"] == Json::parse(R"(["0","1"])"));
        CHECK(j["kappa"].is_null());
    }
    SECTION("integer verdicts distinguish the non-unit case") {
        auto rep = decide_strong_separability(testutil::cyclic_group_algebra(Z, 2));
        auto j = report_to_json(rep);
        CHECK_NOTHROW(validate_report_json(j));
        CHECK(j["degeneracy"]["kind"] == "non_unit_determinant");
        CHECK(j["determinant"] == "4");
    }
    SECTION("validator rejects tampered reports") {
        auto rep = decide_strong_separability(testutil::cyclic_group_algebra(Q, 3));
        auto j = report_to_json(rep);
        Json bad = j;
        bad.erase("verdict");
        CHECK_THROWS_AS(validate_report_json(bad), SchemaError);
        bad = j;
        bad["axioms"]["kappa1"] = false;
        CHECK_THROWS_AS(validate_report_json(bad), SchemaError);
        bad = j;
        bad["kappa"] = nullptr;
        CHECK_THROWS_AS(validate_report_json(bad), SchemaError);
        bad = j;
        bad["verdict"] = "Degenerate";
        CHECK_THROWS_AS(validate_report_json(bad), SchemaError);
    }
}
