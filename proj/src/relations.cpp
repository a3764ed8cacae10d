#include "pgatlas/relations.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "pgatlas/error.hpp"

namespace pga {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    RelationSet parse_all() {
        RelationSet out;
        out.source = s_;
        skip();
        if (done()) return out;
        for (;;) {
            out.chains.push_back(relation());
            skip();
            if (done()) break;
            expect(',');
        }
        return out;
    }

private:
    const std::string& s_;
    std::size_t at_ = 0;

    bool done() { return at_ >= s_.size(); }
    void skip() {
        while (!done() && std::isspace(static_cast<unsigned char>(s_[at_]))) ++at_;
    }
    char peek() {
        skip();
        return done() ? '\0' : s_[at_];
    }
    [[noreturn]] void error(const std::string& what) {
        fail(ErrorCode::Parse, what + " at offset " + std::to_string(at_) + " in \"" + s_ + "\"");
    }
    void expect(char c) {
        if (peek() != c) error(std::string("expected '") + c + "'");
        ++at_;
    }

    std::vector<Word> relation() {
        std::vector<Word> chain{word()};
        while (peek() == '=') {
            ++at_;
            chain.push_back(word());
        }
        if (chain.size() < 2) error("relation without '='");
        return chain;
    }

    Word word() {
        Word w;
        for (;;) {
            char c = peek();
            if (c == '*') {  // optional explicit product
                ++at_;
                continue;
            }
            if (!(c == '[' || c == '(' || c == '1' || (c >= 'a' && c <= 'e'))) break;
            w.factors.push_back(factor());
        }
        if (w.factors.empty()) error("empty word");
        return w;
    }

    Factor factor() {
        Factor f;
        char c = peek();
        if (c == '[') {
            ++at_;
            f.kind = Factor::Comm;
            f.lhs = std::make_shared<Word>(word());
            expect(',');
            f.rhs = std::make_shared<Word>(word());
            expect(']');
        } else if (c == '(') {
            ++at_;
            f.kind = Factor::Paren;
            f.lhs = std::make_shared<Word>(word());
            expect(')');
        } else if (c == '1') {
            ++at_;
            f.kind = Factor::One;
        } else {
            ++at_;
            f.kind = Factor::Letter;
            f.letter = c;
        }
        if (peek() == '^') {
            ++at_;
            f.exponent = exponent();
        }
        return f;
    }

    // after '^' in a word: a number, a name, or a parenthesised expression
    ExprPtr exponent() {
        char c = peek();
        if (c == '(') {
            ++at_;
            auto e = expr();
            expect(')');
            return e;
        }
        if (c == '-') {
            ++at_;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Neg;
            e->lhs = exponent();
            return e;
        }
        return atom();
    }

    ExprPtr expr() {
        auto e = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') return e;
            ++at_;
            auto n = std::make_shared<Expr>();
            n->kind = c == '+' ? Expr::Add : Expr::Sub;
            n->lhs = e;
            n->rhs = term();
            e = n;
        }
    }

    ExprPtr term() {
        auto e = unary();
        while (peek() == '*') {
            ++at_;
            auto n = std::make_shared<Expr>();
            n->kind = Expr::Mul;
            n->lhs = e;
            n->rhs = unary();
            e = n;
        }
        return e;
    }

    ExprPtr unary() {
        if (peek() == '-') {
            ++at_;
            auto n = std::make_shared<Expr>();
            n->kind = Expr::Neg;
            n->lhs = unary();
            return n;
        }
        auto base = atom();
        if (peek() == '^') {
            ++at_;
            auto n = std::make_shared<Expr>();
            n->kind = Expr::Pow;
            n->lhs = base;
            n->rhs = unary();
            return n;
        }
        return base;
    }

    ExprPtr atom() {
        char c = peek();
        auto e = std::make_shared<Expr>();
        if (c == '(') {
            ++at_;
            auto inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            e->kind = Expr::Num;
            while (!done() && std::isdigit(static_cast<unsigned char>(s_[at_]))) e->value = e->value * 10 + (s_[at_++] - '0');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            e->kind = Expr::Var;
            while (!done() && std::isalnum(static_cast<unsigned char>(s_[at_]))) e->name += s_[at_++];
            return e;
        }
        error("expected an exponent");
    }
};

std::int64_t checked_pow(std::int64_t b, std::int64_t e) {
    if (e < 0) fail(ErrorCode::InvalidArgument, "negative power in exponent expression");
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        if (b != 0 && std::abs(r) > (std::int64_t(1) << 50) / std::abs(b)) fail(ErrorCode::BoundExceeded, "exponent overflow");
        r *= b;
    }
    return r;
}

void collect_letters(const Word& w, std::set<char>& out) {
    for (const auto& f : w.factors) {
        if (f.kind == Factor::Letter) out.insert(f.letter);
        if (f.lhs) collect_letters(*f.lhs, out);
        if (f.rhs) collect_letters(*f.rhs, out);
    }
}

std::optional<char> bare_letter(const Word& w) {
    if (w.factors.size() == 1 && w.factors[0].kind == Factor::Letter && !w.factors[0].exponent) return w.factors[0].letter;
    return std::nullopt;
}

struct Definition {
    char letter;
    const Word* word;
};

// Order in which the letters other than a, b are derived.
std::vector<Definition> definitions(const RelationSet& r) {
    std::set<char> all;
    for (const auto& chain : r.chains)
        for (const auto& w : chain) collect_letters(w, all);
    std::set<char> known{'a', 'b'};
    std::vector<Definition> out;
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& chain : r.chains) {
            for (const auto& w : chain) {
                auto l = bare_letter(w);
                if (!l || known.count(*l)) continue;
                for (const auto& other : chain) {
                    if (&other == &w) continue;
                    std::set<char> used;
                    collect_letters(other, used);
                    if (std::includes(known.begin(), known.end(), used.begin(), used.end())) {
                        out.push_back({*l, &other});
                        known.insert(*l);
                        progress = true;
                        break;
                    }
                }
            }
        }
    }
    for (char l : all)
        if (!known.count(l)) fail(ErrorCode::Parse, std::string("letter '") + l + "' is not determined by the relations");
    return out;
}

bool complete(const Group& g, const std::vector<Definition>& defs, Assignment& as, const Params& params) {
    for (const auto& d : defs) as[d.letter] = eval_word(g, *d.word, as, params);
    return true;
}

void render_word(std::ostream& os, const Word& w, const Params& params);

void render_factor(std::ostream& os, const Factor& f, const Params& params) {
    switch (f.kind) {
        case Factor::Letter: os << f.letter; break;
        case Factor::One: os << '1'; break;
        case Factor::Comm:
            os << '[';
            render_word(os, *f.lhs, params);
            os << ',';
            render_word(os, *f.rhs, params);
            os << ']';
            break;
        case Factor::Paren:
            os << '(';
            render_word(os, *f.lhs, params);
            os << ')';
            break;
    }
    if (f.exponent) {
        std::int64_t e = eval_expr(*f.exponent, params);
        if (e < 0) os << "^(" << e << ')';
        else os << '^' << e;
    }
}

void render_word(std::ostream& os, const Word& w, const Params& params) {
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
        if (i) os << ' ';
        render_factor(os, w.factors[i], params);
    }
}

bool only_letter(const Word& w, char l) {
    std::set<char> used;
    collect_letters(w, used);
    return used.empty() || (used.size() == 1 && *used.begin() == l);
}

}  // namespace

RelationSet parse_relations(const std::string& text) { return Parser(text).parse_all(); }

std::int64_t eval_expr(const Expr& e, const Params& params) {
    switch (e.kind) {
        case Expr::Num: return e.value;
        case Expr::Var: {
            auto it = params.find(e.name);
            if (it == params.end()) fail(ErrorCode::InvalidArgument, "unbound parameter '" + e.name + "'");
            return it->second;
        }
        case Expr::Add: return eval_expr(*e.lhs, params) + eval_expr(*e.rhs, params);
        case Expr::Sub: return eval_expr(*e.lhs, params) - eval_expr(*e.rhs, params);
        case Expr::Mul: return eval_expr(*e.lhs, params) * eval_expr(*e.rhs, params);
        case Expr::Pow: return checked_pow(eval_expr(*e.lhs, params), eval_expr(*e.rhs, params));
        case Expr::Neg: return -eval_expr(*e.lhs, params);
    }
    return 0;
}

Elem eval_word(const Group& g, const Word& w, const Assignment& as, const Params& params) {
    Elem r = g.one();
    for (const auto& f : w.factors) {
        Elem x;
        switch (f.kind) {
            case Factor::Letter: {
                auto it = as.find(f.letter);
                if (it == as.end()) fail(ErrorCode::InvalidArgument, std::string("unassigned letter '") + f.letter + "'");
                x = it->second;
                break;
            }
            case Factor::One: x = g.one(); break;
            case Factor::Comm: x = g.comm(eval_word(g, *f.lhs, as, params), eval_word(g, *f.rhs, as, params)); break;
            case Factor::Paren: x = eval_word(g, *f.lhs, as, params); break;
        }
        if (f.exponent) x = g.pow(x, eval_expr(*f.exponent, params));
        r = g.mul(r, x);
    }
    return r;
}

bool satisfies(const Group& g, const RelationSet& r, const Assignment& as, const Params& params) {
    for (const auto& chain : r.chains) {
        Elem first = eval_word(g, chain[0], as, params);
        for (std::size_t i = 1; i < chain.size(); ++i)
            if (eval_word(g, chain[i], as, params) != first) return false;
    }
    return true;
}

std::vector<char> letters_of(const RelationSet& r) {
    std::set<char> all;
    for (const auto& chain : r.chains)
        for (const auto& w : chain) collect_letters(w, all);
    return {all.begin(), all.end()};
}

std::optional<Assignment> identity_assignment(const Group& g, const RelationSet& r, const Params& params) {
    auto defs = definitions(r);
    Assignment as{{'a', g.a()}, {'b', g.b()}};
    complete(g, defs, as, params);
    if (satisfies(g, r, as, params)) return as;
    return std::nullopt;
}

std::optional<Assignment> find_generators_satisfying(const Group& g, const RelationSet& r, const Params& params,
                                                     std::uint64_t claimed_order) {
    if (g.order() != claimed_order) return std::nullopt;
    if (!spans_z(g.data())) return std::nullopt;
    g.require_enumerable("relation search");
    if (auto as = identity_assignment(g, r, params)) return as;
    auto defs = definitions(r);
    const int p = g.p();
    const Idx n = static_cast<Idx>(g.order());

    auto candidates = [&](char l) {
        // equalities between two words in l alone
        std::vector<std::pair<const Word*, const Word*>> unary;
        for (const auto& chain : r.chains)
            for (std::size_t i = 0; i < chain.size(); ++i)
                for (std::size_t j = i + 1; j < chain.size(); ++j)
                    if (only_letter(chain[i], l) && only_letter(chain[j], l)) unary.emplace_back(&chain[i], &chain[j]);
        std::vector<Elem> out;
        for (Idx ix = 0; ix < n; ++ix) {
            Elem x = g.elem(ix);
            if (x.i % p == 0 && x.j % p == 0) continue;  // inside Phi(G)
            Assignment as{{l, x}};
            bool ok = true;
            for (const auto& [u, v] : unary)
                if (eval_word(g, *u, as, params) != eval_word(g, *v, as, params)) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(x);
        }
        return out;
    };
    auto xs = candidates('a');
    auto ys = candidates('b');
    for (const auto& x : xs)
        for (const auto& y : ys) {
            if (fmod_p(x.i * y.j - x.j * y.i, p) == 0) continue;
            Assignment as{{'a', x}, {'b', y}};
            complete(g, defs, as, params);
            if (satisfies(g, r, as, params)) return as;
        }
    return std::nullopt;
}

std::string render(const RelationSet& r, const Params& params) {
    std::ostringstream os;
    for (std::size_t c = 0; c < r.chains.size(); ++c) {
        if (c) os << ", ";
        for (std::size_t i = 0; i < r.chains[c].size(); ++i) {
            if (i) os << " = ";
            render_word(os, r.chains[c][i], params);
        }
    }
    return os.str();
}

}  // namespace pga
