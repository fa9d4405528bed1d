#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sepalg/algebra.hpp"
#include "sepalg/errors.hpp"
#include "sepalg/scalar.hpp"
#include "sepalg/separability.hpp"

namespace sepalg {

/// All JSON in this library preserves insertion order so emitted documents
/// have a stable field layout.
using Json = nlohmann::ordered_json;

inline Json scalar_spec_to_json(const ScalarSpec& s) {
    switch (s.kind()) {
        case ScalarSpec::Kind::Q: return Json{{"kind", "Q"}};
        case ScalarSpec::Kind::Fp: return Json{{"kind", "Fp"}, {"p", s.p()}};
        case ScalarSpec::Kind::Z: return Json{{"kind", "Z"}};
    }
    throw InvalidScalarSpec("unknown scalar kind");
}

inline ScalarSpec scalar_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw SchemaError("scalars must be an object with a string 'kind'");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "Q") return ScalarSpec::rationals();
    if (kind == "Z") return ScalarSpec::integers();
    if (kind == "Fp") {
        if (!j.contains("p") || !j["p"].is_number_integer())
            throw SchemaError("prime-field scalars need an integer 'p'");
        return ScalarSpec::prime_field(j["p"].get<std::int64_t>());
    }
    throw SchemaError("unknown scalar kind '" + kind + "'");
}

/// An algebra over whichever base ring its document declares.
using AnyAlgebra =
    std::variant<FinAlgebra<Rationals>, FinAlgebra<PrimeField>, FinAlgebra<Integers>>;

namespace detail {

template <class Ring>
typename Ring::Elem parse_scalar_json(const Ring& ring, const Json& j, const char* where) {
    if (j.is_string()) return ring.parse(j.get<std::string>());
    if (j.is_number_integer()) return ring.from_long(j.get<long>());
    throw SchemaError(std::string(where) + ": scalars must be strings or integers");
}

}  // namespace detail

/// Loads and fully validates an algebra document:
///   {"name": str, "scalars": {...}, "dim": int, "basis": [str],
///    "unit": [scalar], "structure": d x d x d array of scalars}
/// Associativity and unitality are verified exhaustively; failures raise
/// NotAssociative / NotUnital with a witness.
inline AnyAlgebra load_algebra(const Json& doc) {
    if (!doc.is_object()) throw SchemaError("algebra document must be an object");
    for (const char* key : {"scalars", "dim", "basis", "unit", "structure"})
        if (!doc.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    std::string name = doc.value("name", std::string("unnamed"));
    ScalarSpec spec = scalar_spec_from_json(doc["scalars"]);
    if (!doc["dim"].is_number_integer()) throw SchemaError("'dim' must be an integer");
    int d = doc["dim"].get<int>();
    if (d < 1) throw SchemaError("'dim' must be >= 1");
    if (!doc["basis"].is_array() || static_cast<int>(doc["basis"].size()) != d)
        throw SchemaError("'basis' must list exactly dim labels");
    std::vector<std::string> labels;
    for (const auto& l : doc["basis"]) {
        if (!l.is_string()) throw SchemaError("basis labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    const Json& unit_j = doc["unit"];
    const Json& structure_j = doc["structure"];
    if (!unit_j.is_array() || static_cast<int>(unit_j.size()) != d)
        throw SchemaError("'unit' must list exactly dim scalars");
    if (!structure_j.is_array() || static_cast<int>(structure_j.size()) != d)
        throw SchemaError("'structure' must be a d x d x d array");

    return with_ring(spec, [&](auto ring) -> AnyAlgebra {
        using Ring = decltype(ring);
        using Elem = typename Ring::Elem;
        std::vector<Elem> unit;
        for (const auto& v : unit_j) unit.push_back(detail::parse_scalar_json(ring, v, "unit"));
        std::vector<Elem> c;
        c.reserve(static_cast<std::size_t>(d) * d * d);
        for (const auto& plane : structure_j) {
            if (!plane.is_array() || static_cast<int>(plane.size()) != d)
                throw SchemaError("'structure' must be a d x d x d array");
            for (const auto& row : plane) {
                if (!row.is_array() || static_cast<int>(row.size()) != d)
                    throw SchemaError("'structure' must be a d x d x d array");
                for (const auto& v : row)
                    c.push_back(detail::parse_scalar_json(ring, v, "structure"));
            }
        }
        return FinAlgebra<Ring>(name, ring, d, labels, std::move(c), std::move(unit));
    });
}

inline AnyAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("invalid JSON in '" + path + "': " + e.what());
    }
    return load_algebra(doc);
}

template <class Ring>
Json algebra_to_json(const FinAlgebra<Ring>& A) {
    const Ring& ring = A.ring();
    int d = A.dim();
    Json structure = Json::array();
    for (int i = 0; i < d; ++i) {
        Json plane = Json::array();
        for (int j = 0; j < d; ++j) {
            Json row = Json::array();
            for (int k = 0; k < d; ++k) row.push_back(ring.str(A.c(i, j, k)));
            plane.push_back(std::move(row));
        }
        structure.push_back(std::move(plane));
    }
    Json unit = Json::array();
    for (const auto& v : A.unit()) unit.push_back(ring.str(v));
    return Json{{"name", A.name()},
                {"scalars", scalar_spec_to_json(ring.spec())},
                {"dim", d},
                {"basis", A.basis_labels()},
                {"unit", std::move(unit)},
                {"structure", std::move(structure)}};
}

namespace detail {

template <class Ring>
Json matrix_to_json(const Ring& ring, const Matrix<Ring>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(ring.str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

/// Stable-order JSON form of a separability report.
template <class Ring>
Json report_to_json(const SeparabilityReport<Ring>& rep) {
    const Ring& ring = rep.trace_form.ring();
    Json j;
    j["algebra"] = rep.algebra_name;
    j["scalars"] = scalar_spec_to_json(rep.spec);
    j["dim"] = rep.dim;
    j["commutative"] = rep.commutative;
    j["trace_form"] = detail::matrix_to_json(ring, rep.trace_form);
    j["determinant"] = ring.str(rep.determinant);
    j["verdict"] = rep.strongly_separable() ? "StronglySeparable" : "Degenerate";
    switch (rep.degeneracy) {
        case DegeneracyKind::None: j["degeneracy"] = nullptr; break;
        case DegeneracyKind::SingularTraceForm: {
            Json deg{{"kind", "singular_trace_form"}};
            if (rep.kernel_witness) {
                Json kv = Json::array();
                for (const auto& v : *rep.kernel_witness) kv.push_back(ring.str(v));
                deg["kernel_witness"] = std::move(kv);
            }
            j["degeneracy"] = std::move(deg);
            break;
        }
        case DegeneracyKind::NonUnitDeterminant:
            j["degeneracy"] = Json{{"kind", "non_unit_determinant"}};
            break;
    }
    if (rep.kappa)
        j["kappa"] = detail::matrix_to_json(ring, rep.kappa->coeffs);
    else
        j["kappa"] = nullptr;
    if (rep.frobenius) {
        int d = rep.dim;
        Json delta = Json::array();
        for (int a = 0; a < d; ++a) {
            Json mat = Json::array();
            for (int p = 0; p < d; ++p) {
                Json row = Json::array();
                for (int q = 0; q < d; ++q)
                    row.push_back(ring.str(rep.frobenius->comultiplication.at(p * d + q, a)));
                mat.push_back(std::move(row));
            }
            delta.push_back(std::move(mat));
        }
        Json counit = Json::array();
        for (const auto& v : rep.frobenius->counit) counit.push_back(ring.str(v));
        j["frobenius"] = Json{{"comultiplication", std::move(delta)},
                              {"counit", std::move(counit)}};
    } else {
        j["frobenius"] = nullptr;
    }
    Json axioms = Json::object();
    for (const auto& [name, r] : rep.axiom_results) {
        if (r.passed)
            axioms[name] = true;
        else
            axioms[name] = Json{{"passed", false}, {"witness", r.witness}};
    }
    j["axioms"] = std::move(axioms);
    return j;
}

/// Schema check for emitted reports; used to validate that analyze --json
/// output round-trips. Throws SchemaError on any malformed field.
inline void validate_report_json(const Json& j) {
    auto need = [&](const char* key) -> const Json& {
        if (!j.is_object() || !j.contains(key))
            throw SchemaError(std::string("report missing field '") + key + "'");
        return j[key];
    };
    if (!need("algebra").is_string()) throw SchemaError("report 'algebra' must be a string");
    scalar_spec_from_json(need("scalars"));
    if (!need("dim").is_number_integer() || j["dim"].get<int>() < 1)
        throw SchemaError("report 'dim' must be a positive integer");
    if (!need("commutative").is_boolean()) throw SchemaError("'commutative' must be a bool");
    int d = j["dim"].get<int>();
    const Json& tf = need("trace_form");
    if (!tf.is_array() || static_cast<int>(tf.size()) != d)
        throw SchemaError("'trace_form' must be a d x d array");
    for (const auto& row : tf)
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw SchemaError("'trace_form' must be a d x d array");
    if (!need("determinant").is_string()) throw SchemaError("'determinant' must be a string");
    std::string verdict = need("verdict").get<std::string>();
    if (verdict != "StronglySeparable" && verdict != "Degenerate")
        throw SchemaError("unknown verdict '" + verdict + "'");
    bool positive = verdict == "StronglySeparable";
    const Json& deg = need("degeneracy");
    if (positive && !deg.is_null()) throw SchemaError("positive verdict with degeneracy info");
    if (!positive && deg.is_null()) throw SchemaError("degenerate verdict without degeneracy info");
    const Json& kappa = need("kappa");
    if (positive != !kappa.is_null())
        throw SchemaError("'kappa' must be present exactly for positive verdicts");
    const Json& frob = need("frobenius");
    if (positive != !frob.is_null())
        throw SchemaError("'frobenius' must be present exactly for positive verdicts");
    if (!need("axioms").is_object()) throw SchemaError("'axioms' must be an object");
    if (positive) {
        for (const auto& [name, v] : j["axioms"].items())
            if (!v.is_boolean() || !v.get<bool>())
                throw SchemaError("positive verdict with failing axiom '" + name + "'");
    }
}

}  // namespace sepalg
