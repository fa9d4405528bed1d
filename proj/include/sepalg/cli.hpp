#pragma once

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "sepalg/diagram.hpp"
#include "sepalg/json_io.hpp"
#include "sepalg/separability.hpp"
#include "sepalg/spectrum.hpp"

namespace sepalg::cli {

namespace detail {

template <class Ring>
int do_analyze(const FinAlgebra<Ring>& A, bool as_json, std::ostream& out) {
    auto rep = decide_strong_separability(A);
    if (as_json) {
        out << report_to_json(rep).dump(2) << "\n";
    } else {
        const Ring& ring = A.ring();
        out << "algebra:     " << rep.algebra_name << "  (dim " << rep.dim << " over "
            << rep.spec.str() << ")\n";
        out << "commutative: " << (rep.commutative ? "yes" : "no") << "\n";
        out << "trace form:  " << rep.trace_form.str() << "\n";
        out << "determinant: " << ring.str(rep.determinant) << "\n";
        if (rep.strongly_separable()) {
            out << "verdict:     StronglySeparable\n";
            out << "kappa:       " << rep.kappa->coeffs.str() << "\n";
            bool ok = all_passed(rep.axiom_results);
            out << "axioms:     ";
            for (const auto& [name, r] : rep.axiom_results)
                out << " " << name << (r.passed ? "" : "[FAIL]");
            out << (ok ? "  -- all pass" : "  -- FAILURES") << "\n";
        } else {
            out << "verdict:     Degenerate";
            if (rep.degeneracy == DegeneracyKind::NonUnitDeterminant)
                out << " (determinant is a nonzero non-unit of " << rep.spec.str() << ")";
            else if (rep.kernel_witness) {
                out << " (trace form kernel contains [";
                for (std::size_t i = 0; i < rep.kernel_witness->size(); ++i)
                    out << (i ? "," : "") << ring.str((*rep.kernel_witness)[i]);
                out << "])";
            }
            out << "\n";
        }
    }
    return rep.strongly_separable() ? 0 : 1;
}

template <class Ring>
int do_verify(const FinAlgebra<Ring>& A, const std::vector<diagram::EquationEntry>& corpus,
              bool as_json, std::ostream& out) {
    auto rep = decide_strong_separability(A);
    diagram::Extras<Ring> extras;
    if (rep.strongly_separable()) {
        extras.kappa = rep.kappa;
        extras.delta = rep.frobenius->comultiplication;
    }
    int failed = 0, passed = 0, skipped = 0;
    Json rows = Json::array();
    std::ostringstream table;
    for (const auto& entry : corpus) {
        std::string status, detail;
        if (entry.requires_separable && !rep.strongly_separable()) {
            status = "SKIP";
            detail = "needs separable data";
            ++skipped;
        } else {
            try {
                auto res = diagram::check_equation(entry, A, extras);
                status = res.passed ? "PASS" : "FAIL";
                detail = res.witness;
                res.passed ? ++passed : ++failed;
            } catch (const Error& e) {
                status = "ERROR";
                detail = e.what();
                ++failed;
            }
        }
        if (as_json) {
            rows.push_back(Json{{"name", entry.name},
                                {"status", status},
                                {"detail", detail}});
        } else {
            table << std::left << std::setw(20) << entry.name << status;
            if (!detail.empty()) table << "  " << detail;
            table << "\n";
        }
    }
    if (as_json) {
        out << Json{{"algebra", A.name()},
                    {"verdict", rep.strongly_separable() ? "StronglySeparable" : "Degenerate"},
                    {"results", std::move(rows)},
                    {"passed", passed},
                    {"failed", failed},
                    {"skipped", skipped}}
                   .dump(2)
            << "\n";
    } else {
        out << "algebra: " << A.name() << "  (verdict: "
            << (rep.strongly_separable() ? "StronglySeparable" : "Degenerate") << ")\n";
        out << table.str();
        out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    }
    return failed == 0 ? 0 : 1;
}

inline int do_spectrum(std::uint64_t degree, std::uint64_t max_n, bool as_json,
                       std::ostream& out) {
    auto rows = spectrum::fiber_table(degree, max_n);
    if (as_json) {
        Json jrows = Json::array();
        for (const auto& r : rows)
            jrows.push_back(Json{{"N", r.N},
                                 {"cardinality", r.cardinality()},
                                 {"fiber", r.members}});
        out << Json{{"degree", degree}, {"rows", std::move(jrows)}}.dump(2) << "\n";
    } else {
        out << "fibers of the degree-" << degree << " map on cyclic labels\n";
        out << std::right << std::setw(6) << "N" << std::setw(6) << "size"
            << "  fiber\n";
        for (const auto& r : rows) {
            out << std::right << std::setw(6) << r.N << std::setw(6) << r.cardinality() << "  ";
            for (std::size_t i = 0; i < r.members.size(); ++i)
                out << (i ? " " : "") << r.members[i];
            out << "\n";
        }
    }
    return 0;
}

inline int do_corpus_list(bool as_json, std::ostream& out) {
    const auto& corpus = diagram::builtin_corpus();
    if (as_json) {
        Json rows = Json::array();
        for (const auto& e : corpus)
            rows.push_back(Json{{"name", e.name},
                                {"lhs", e.lhs_text},
                                {"rhs", e.rhs_text},
                                {"note", e.note},
                                {"requires_separable", e.requires_separable}});
        out << rows.dump(2) << "\n";
    } else {
        for (const auto& e : corpus) {
            out << std::left << std::setw(18) << e.name << ": " << e.lhs_text
                << " == " << e.rhs_text;
            if (e.requires_separable) out << "   [separable only]";
            out << "\n";
        }
    }
    return 0;
}

}  // namespace detail

/// Batch front door. Exit codes: 0 = success / verdict positive / all
/// applicable equations pass, 1 = degenerate verdict or failed equation,
/// 2 = input error (bad arguments, schema, parse or type errors).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact separability, Frobenius and spectrum toolkit"};
    app.require_subcommand(1);

    std::string analyze_path;
    bool analyze_json = false;
    auto* analyze = app.add_subcommand("analyze", "decide strong separability of an algebra");
    analyze->add_option("path", analyze_path, "algebra JSON document")->required();
    analyze->add_flag("--json", analyze_json, "emit JSON instead of text");

    std::string verify_path, verify_corpus;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "run the equation corpus on an algebra");
    verify->add_option("path", verify_path, "algebra JSON document")->required();
    verify->add_option("--corpus", verify_corpus, "corpus file (default: builtin corpus)");
    verify->add_flag("--json", verify_json, "emit JSON instead of text");

    std::uint64_t degree = 0, max_n = 12;
    bool spectrum_json = false;
    auto* spec_cmd = app.add_subcommand("spectrum", "fiber table of the degree-n map");
    spec_cmd->add_option("--degree", degree, "degree n of the self-map")
        ->required()
        ->check(CLI::PositiveNumber);
    spec_cmd->add_option("--max", max_n, "largest target index N")->check(CLI::PositiveNumber);
    spec_cmd->add_flag("--json", spectrum_json, "emit JSON instead of text");

    bool list_json = false;
    auto* list_cmd = app.add_subcommand("corpus-list", "print the builtin equation corpus");
    list_cmd->add_flag("--json", list_json, "emit JSON instead of text");

    std::vector<const char*> argv;
    argv.push_back("sepalg");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) {
            auto A = load_algebra_file(analyze_path);
            return std::visit(
                [&](const auto& alg) { return detail::do_analyze(alg, analyze_json, out); }, A);
        }
        if (verify->parsed()) {
            auto A = load_algebra_file(verify_path);
            std::vector<diagram::EquationEntry> corpus;
            if (verify_corpus.empty()) {
                corpus = diagram::builtin_corpus();
            } else {
                std::ifstream in(verify_corpus);
                if (!in) throw SchemaError("cannot open '" + verify_corpus + "'");
                std::stringstream buf;
                buf << in.rdbuf();
                corpus = diagram::parse_corpus(buf.str());
            }
            return std::visit(
                [&](const auto& alg) { return detail::do_verify(alg, corpus, verify_json, out); },
                A);
        }
        if (spec_cmd->parsed()) return detail::do_spectrum(degree, max_n, spectrum_json, out);
        if (list_cmd->parsed()) return detail::do_corpus_list(list_json, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace sepalg::cli
