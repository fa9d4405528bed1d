#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepalg/algebra.hpp"
#include "sepalg/errors.hpp"
#include "sepalg/matrix.hpp"
#include "sepalg/separability.hpp"

namespace sepalg::diagram {

/// Wire label: the algebra object A or its dual D.
enum class Wire { A, D };

using WireList = std::vector<Wire>;

inline std::string wire_list_str(const WireList& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += (w[i] == Wire::A ? "A" : "D");
    }
    return s + "]";
}

enum class Gen { Mu, U, Eta, Eps, Kappa, Tr, T, Delta, Counit, Theta, ThetaInv, Tau };

/// Typed morphism term. Every node carries its inferred domain and codomain
/// wire lists; construction fails with TypeError if they cannot be inferred.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { Generator, Identity, Compose, Tensor };

    Kind kind;
    Gen gen{};               // Generator only
    Wire tau_x{}, tau_y{};   // Gen::Tau only
    WireList id_wires;       // Identity only
    TermPtr a, b;            // Compose: a after b; Tensor: a (x) b
    WireList dom, cod;
    std::size_t pos = 0;     // source offset, for diagnostics
};

namespace detail {

inline TermPtr make_generator(Gen g, std::size_t pos) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Generator;
    t->gen = g;
    t->pos = pos;
    switch (g) {
        case Gen::Mu: t->dom = {Wire::A, Wire::A}; t->cod = {Wire::A}; break;
        case Gen::U: t->dom = {}; t->cod = {Wire::A}; break;
        case Gen::Eta: t->dom = {}; t->cod = {Wire::D, Wire::A}; break;
        case Gen::Eps: t->dom = {Wire::A, Wire::D}; t->cod = {}; break;
        case Gen::Kappa: t->dom = {}; t->cod = {Wire::A, Wire::A}; break;
        case Gen::Tr: t->dom = {Wire::A}; t->cod = {}; break;
        case Gen::T: t->dom = {Wire::A, Wire::A}; t->cod = {}; break;
        case Gen::Delta: t->dom = {Wire::A}; t->cod = {Wire::A, Wire::A}; break;
        case Gen::Counit: t->dom = {Wire::A}; t->cod = {}; break;
        case Gen::Theta: t->dom = {Wire::A}; t->cod = {Wire::D}; break;
        case Gen::ThetaInv: t->dom = {Wire::D}; t->cod = {Wire::A}; break;
        case Gen::Tau: break;  // built via make_tau
    }
    return t;
}

inline TermPtr make_tau(Wire x, Wire y, std::size_t pos) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Generator;
    t->gen = Gen::Tau;
    t->tau_x = x;
    t->tau_y = y;
    t->pos = pos;
    t->dom = {x, y};
    t->cod = {y, x};
    return t;
}

inline TermPtr make_identity(WireList wires, std::size_t pos) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Identity;
    t->id_wires = wires;
    t->pos = pos;
    t->dom = wires;
    t->cod = std::move(wires);
    return t;
}

}  // namespace detail

/// g composed after f (f is applied first). Requires cod(f) = dom(g).
inline TermPtr compose(TermPtr g, TermPtr f, std::size_t pos = 0) {
    if (f->cod != g->dom)
        throw TypeError(pos, "cannot compose: expected domain " + wire_list_str(f->cod) +
                                 " but the left factor has domain " + wire_list_str(g->dom));
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Compose;
    t->a = std::move(g);
    t->b = std::move(f);
    t->pos = pos;
    t->dom = t->b->dom;
    t->cod = t->a->cod;
    return t;
}

/// Side-by-side tensor of two terms.
inline TermPtr tensor(TermPtr a, TermPtr b, std::size_t pos = 0) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Tensor;
    t->a = std::move(a);
    t->b = std::move(b);
    t->pos = pos;
    t->dom = t->a->dom;
    t->dom.insert(t->dom.end(), t->b->dom.begin(), t->b->dom.end());
    t->cod = t->a->cod;
    t->cod.insert(t->cod.end(), t->b->cod.begin(), t->b->cod.end());
    return t;
}

namespace detail {

struct Token {
    enum class Kind { Ident, Star, LParen, RParen, LBracket, RBracket, Comma, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t p = i_;
        if (i_ >= src_.size()) {
            tok_ = {Token::Kind::End, "", p};
            return;
        }
        char ch = src_[i_];
        auto single = [&](Token::Kind k) {
            ++i_;
            tok_ = {k, std::string(1, ch), p};
        };
        switch (ch) {
            case '*': return single(Token::Kind::Star);
            case '(': return single(Token::Kind::LParen);
            case ')': return single(Token::Kind::RParen);
            case '[': return single(Token::Kind::LBracket);
            case ']': return single(Token::Kind::RBracket);
            case ',': return single(Token::Kind::Comma);
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i_;
            while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) ||
                                       src_[j] == '_'))
                ++j;
            tok_ = {Token::Kind::Ident, src_.substr(i_, j - i_), p};
            i_ = j;
            return;
        }
        throw ParseError(p, "unexpected character '" + std::string(1, ch) + "' at offset " +
                                std::to_string(p));
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token tok_{Token::Kind::End, "", 0};
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    TermPtr parse() {
        TermPtr t = parse_compose();
        const Token& tok = lex_.peek();
        if (tok.kind != Token::Kind::End)
            throw ParseError(tok.pos, "unexpected '" + tok.text + "' at offset " +
                                          std::to_string(tok.pos));
        return t;
    }

private:
    // compose chains bind loosest: a o b o c = (a o b) o c.
    TermPtr parse_compose() {
        TermPtr t = parse_tensor();
        while (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "o") {
            Token op = lex_.take();
            TermPtr rhs = parse_tensor();
            t = compose(std::move(t), std::move(rhs), op.pos);
        }
        return t;
    }

    TermPtr parse_tensor() {
        TermPtr t = parse_atom();
        while (lex_.peek().kind == Token::Kind::Star) {
            Token op = lex_.take();
            TermPtr rhs = parse_atom();
            t = tensor(std::move(t), std::move(rhs), op.pos);
        }
        return t;
    }

    Wire parse_wire_name() {
        Token tok = lex_.take();
        if (tok.kind == Token::Kind::Ident && tok.text == "A") return Wire::A;
        if (tok.kind == Token::Kind::Ident && tok.text == "D") return Wire::D;
        throw ParseError(tok.pos, "expected wire type A or D at offset " +
                                      std::to_string(tok.pos));
    }

    void expect(Token::Kind k, const char* what) {
        Token tok = lex_.take();
        if (tok.kind != k)
            throw ParseError(tok.pos, std::string("expected ") + what + " at offset " +
                                          std::to_string(tok.pos));
    }

    TermPtr parse_atom() {
        Token tok = lex_.take();
        if (tok.kind == Token::Kind::LParen) {
            TermPtr t = parse_compose();
            expect(Token::Kind::RParen, "')'");
            return t;
        }
        if (tok.kind != Token::Kind::Ident)
            throw ParseError(tok.pos, "expected a generator or '(' at offset " +
                                          std::to_string(tok.pos));
        const std::string& name = tok.text;
        if (name == "o")
            throw ParseError(tok.pos, "missing left operand of 'o' at offset " +
                                          std::to_string(tok.pos));
        if (name == "tau") {
            expect(Token::Kind::LBracket, "'[' after tau");
            Wire x = parse_wire_name();
            expect(Token::Kind::Comma, "','");
            Wire y = parse_wire_name();
            expect(Token::Kind::RBracket, "']'");
            return make_tau(x, y, tok.pos);
        }
        TermPtr t;
        if (name == "idA") t = make_identity({Wire::A}, tok.pos);
        else if (name == "idD") t = make_identity({Wire::D}, tok.pos);
        else if (name == "mu") t = make_generator(Gen::Mu, tok.pos);
        else if (name == "u") t = make_generator(Gen::U, tok.pos);
        else if (name == "eta") t = make_generator(Gen::Eta, tok.pos);
        else if (name == "eps") t = make_generator(Gen::Eps, tok.pos);
        else if (name == "kappa") t = make_generator(Gen::Kappa, tok.pos);
        else if (name == "tr") t = make_generator(Gen::Tr, tok.pos);
        else if (name == "t") t = make_generator(Gen::T, tok.pos);
        else if (name == "delta") t = make_generator(Gen::Delta, tok.pos);
        else if (name == "counit") t = make_generator(Gen::Counit, tok.pos);
        else if (name == "theta") t = make_generator(Gen::Theta, tok.pos);
        else if (name == "theta_inv") t = make_generator(Gen::ThetaInv, tok.pos);
        else
            throw ParseError(tok.pos, "unknown generator '" + name + "' at offset " +
                                          std::to_string(tok.pos));
        if (lex_.peek().kind == Token::Kind::LBracket)
            throw ParseError(lex_.peek().pos, "only tau takes wire arguments");
        return t;
    }

    Lexer lex_;
};

}  // namespace detail

/// Parses a morphism term in the grammar
///   expr   := tensor ('o' tensor)*        composition, f applied first in g o f
///   tensor := atom ('*' atom)*            tensor product, binds tighter than o
///   atom   := '(' expr ')' | generator
/// with generators idA, idD, mu, u, eta, eps, kappa, tr, t, delta, counit,
/// theta, theta_inv and annotated swaps tau[A,A], tau[A,D], tau[D,A], tau[D,D].
inline TermPtr parse_term(const std::string& text) { return detail::Parser(text).parse(); }

/// Optional generator data a term may need: kappa (as a tensor-square
/// element) and the comultiplication delta (as its d^2 x d matrix).
template <class Ring>
struct Extras {
    std::optional<TensorSquare<Ring>> kappa;
    std::optional<Matrix<Ring>> delta;
};

/// True if the term mentions a generator that only exists on (strongly)
/// separable algebras: kappa and delta need supplied data, theta_inv needs
/// an invertible trace form.
inline bool mentions_separable_data(const TermPtr& term) {
    switch (term->kind) {
        case Term::Kind::Generator:
            return term->gen == Gen::Kappa || term->gen == Gen::Delta ||
                   term->gen == Gen::ThetaInv;
        case Term::Kind::Identity:
            return false;
        default:
            return mentions_separable_data(term->a) || mentions_separable_data(term->b);
    }
}

namespace detail {

inline int pow_int(int base, std::size_t e) {
    int r = 1;
    while (e--) r *= base;
    return r;
}

template <class Ring>
Matrix<Ring> generator_matrix(const Term& term, const FinAlgebra<Ring>& A,
                              const Extras<Ring>& extras) {
    const Ring& ring = A.ring();
    const int d = A.dim();
    switch (term.gen) {
        case Gen::Mu:
            return A.multiplication_matrix();
        case Gen::U:
            return Matrix<Ring>::column(ring, A.unit());
        case Gen::Eta: {
            // 1 -> DA (x) A, the sum of e_i* (x) e_i over the basis.
            Matrix<Ring> m(ring, d * d, 1);
            for (int i = 0; i < d; ++i) m.at(i * d + i, 0) = ring.one();
            return m;
        }
        case Gen::Eps: {
            // A (x) DA -> 1, the evaluation pairing e_j*(e_i) = [i=j].
            Matrix<Ring> m(ring, 1, d * d);
            for (int i = 0; i < d; ++i) m.at(0, i * d + i) = ring.one();
            return m;
        }
        case Gen::Kappa:
            if (!extras.kappa) throw MissingExtra("term needs kappa but none was supplied");
            return extras.kappa->as_column();
        case Gen::Tr:
        case Gen::Counit:
            return Matrix<Ring>::row(ring, A.trace_map());
        case Gen::T: {
            auto T = A.trace_form();
            Matrix<Ring> m(ring, 1, d * d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) m.at(0, i * d + j) = T.at(i, j);
            return m;
        }
        case Gen::Delta:
            if (!extras.delta) throw MissingExtra("term needs delta but none was supplied");
            return *extras.delta;
        case Gen::Theta:
            // A -> DA in the dual basis is exactly the trace-form Gram matrix.
            return A.trace_form();
        case Gen::ThetaInv: {
            auto inv = try_invert(A.trace_form());
            if (!inv.ok())
                throw NotInvertible(ring.str(inv.det),
                                    "theta_inv does not exist: trace form of " + A.name() +
                                        " has det " + ring.str(inv.det));
            return std::move(*inv.inverse);
        }
        case Gen::Tau: {
            Matrix<Ring> m(ring, d * d, d * d);
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y) m.at(y * d + x, x * d + y) = ring.one();
            return m;
        }
    }
    throw Error("unreachable generator");
}

}  // namespace detail

/// Exact matrix of a term on a concrete algebra, in the row-major tensor
/// basis: the result has d^|cod| rows and d^|dom| columns. DA carries the
/// dual basis, so both wire labels contribute dimension d.
template <class Ring>
Matrix<Ring> evaluate(const TermPtr& term, const FinAlgebra<Ring>& A,
                      const Extras<Ring>& extras = {}) {
    switch (term->kind) {
        case Term::Kind::Generator:
            return detail::generator_matrix(*term, A, extras);
        case Term::Kind::Identity:
            return Matrix<Ring>::identity(A.ring(),
                                          detail::pow_int(A.dim(), term->id_wires.size()));
        case Term::Kind::Compose:
            return mat_mul(evaluate(term->a, A, extras), evaluate(term->b, A, extras));
        case Term::Kind::Tensor:
            return kron(evaluate(term->a, A, extras), evaluate(term->b, A, extras));
    }
    throw Error("unreachable term kind");
}

/// One equation of the corpus: two terms with identical wire types, a short
/// mathematical note, and whether the terms need separable-only data.
struct EquationEntry {
    std::string name;
    TermPtr lhs, rhs;
    std::string lhs_text, rhs_text;
    std::string note;
    bool requires_separable = false;
};

inline EquationEntry make_equation(std::string name, const std::string& lhs_text,
                                   const std::string& rhs_text, std::string note) {
    EquationEntry e;
    e.name = std::move(name);
    e.lhs = parse_term(lhs_text);
    e.rhs = parse_term(rhs_text);
    e.lhs_text = lhs_text;
    e.rhs_text = rhs_text;
    e.note = std::move(note);
    if (e.lhs->dom != e.rhs->dom || e.lhs->cod != e.rhs->cod)
        throw TypeError(0, "equation '" + e.name + "' sides have different wire types: " +
                               wire_list_str(e.lhs->dom) + " -> " + wire_list_str(e.lhs->cod) +
                               " vs " + wire_list_str(e.rhs->dom) + " -> " +
                               wire_list_str(e.rhs->cod));
    e.requires_separable =
        mentions_separable_data(e.lhs) || mentions_separable_data(e.rhs);
    return e;
}

struct CheckResult {
    bool passed = false;
    std::string witness;  // first differing entry, empty when passed
};

/// Exact equality of the two evaluated sides; on failure reports the first
/// differing matrix entry.
template <class Ring>
CheckResult check_equation(const EquationEntry& entry, const FinAlgebra<Ring>& A,
                           const Extras<Ring>& extras = {}) {
    auto L = evaluate(entry.lhs, A, extras);
    auto R = evaluate(entry.rhs, A, extras);
    for (int i = 0; i < L.rows(); ++i)
        for (int j = 0; j < L.cols(); ++j)
            if (L.at(i, j) != R.at(i, j))
                return {false, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   "): lhs = " + A.ring().str(L.at(i, j)) +
                                   ", rhs = " + A.ring().str(R.at(i, j))};
    return {true, ""};
}

/// The fixed equation corpus: every displayed identity of the separability /
/// Frobenius development, one entry each.
inline const std::vector<EquationEntry>& builtin_corpus() {
    static const std::vector<EquationEntry> corpus = [] {
        std::vector<EquationEntry> c;
        c.push_back(make_equation("k1", "mu o kappa", "u",
                                  "multiplying out the separability idempotent gives the unit"));
        c.push_back(make_equation("k2", "(idA * mu) o (kappa * idA)",
                                  "(mu * idA) o (idA * kappa)",
                                  "the two bimodule actions on kappa agree"));
        c.push_back(make_equation("k3", "kappa", "tau[A,A] o kappa",
                                  "the separability idempotent is symmetric"));
        c.push_back(make_equation("k4", "mu o tau[A,A] o kappa", "u",
                                  "multiplying kappa in the swapped order gives the unit"));
        c.push_back(make_equation("trace_symmetric", "t", "t o tau[A,A]",
                                  "the trace form is symmetric"));
        c.push_back(make_equation("invariance", "t o (mu * idA)", "t o (idA * mu)",
                                  "the trace form is invariant"));
        c.push_back(make_equation("self_dual_1", "(idA * t) o (kappa * idA)", "idA",
                                  "t and kappa form a self-duality, first snake"));
        c.push_back(make_equation("self_dual_2", "(t * idA) o (idA * kappa)", "idA",
                                  "t and kappa form a self-duality, second snake"));
        c.push_back(make_equation("composite_identity", "(idA * t) o (kappa * idA)", "idA",
                                  "contracting kappa against the trace form is the identity"));
        c.push_back(make_equation("theta_is_tstar", "theta", "(idD * t) o (eta * idA)",
                                  "theta agrees with the adjunct of the trace form"));
        c.push_back(make_equation("coassoc", "(delta * idA) o delta", "(idA * delta) o delta",
                                  "comultiplication is coassociative"));
        c.push_back(make_equation("counital_left", "(counit * idA) o delta", "idA",
                                  "left counit law"));
        c.push_back(make_equation("counital_right", "(idA * counit) o delta", "idA",
                                  "right counit law"));
        c.push_back(make_equation("frobenius_left", "(idA * mu) o (delta * idA)",
                                  "delta o mu", "Frobenius law, left half"));
        c.push_back(make_equation("frobenius_right", "(mu * idA) o (idA * delta)",
                                  "delta o mu", "Frobenius law, right half"));
        c.push_back(make_equation("special", "mu o delta", "idA",
                                  "comultiplication splits multiplication"));
        return c;
    }();
    return corpus;
}

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace detail

/// Parses a corpus file: one equation per line in the form
///   name : lhs == rhs   # optional note
/// Blank lines and lines starting with '#' are skipped.
inline std::vector<EquationEntry> parse_corpus(const std::string& text) {
    std::vector<EquationEntry> out;
    std::size_t line_no = 0, start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string line = text.substr(start, nl == std::string::npos ? nl : nl - start);
        start = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        std::string note;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            note = detail::trim(line.substr(hash + 1));
            line = line.substr(0, hash);
        }
        line = detail::trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw SchemaError("corpus line " + std::to_string(line_no) + ": missing ':'");
        std::string name = detail::trim(line.substr(0, colon));
        if (name.empty())
            throw SchemaError("corpus line " + std::to_string(line_no) + ": empty name");
        std::string eq = line.substr(colon + 1);
        auto sep = eq.find("==");
        if (sep == std::string::npos)
            throw SchemaError("corpus line " + std::to_string(line_no) + ": missing '=='");
        std::string lhs = detail::trim(eq.substr(0, sep));
        std::string rhs = detail::trim(eq.substr(sep + 2));
        try {
            out.push_back(make_equation(name, lhs, rhs, note));
        } catch (const Error& e) {
            throw SchemaError("corpus line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace sepalg::diagram
