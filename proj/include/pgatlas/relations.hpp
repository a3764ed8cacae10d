// Printed relations of a presentation, e.g.
//   "a^(p^(n+1)) = b^(p^n) = 1, c^p = a^(p^n), [a,b] = c, [c,a] = 1, [c,b] = c^(t*p)"
// Generators are the letters a..e; exponents are integer expressions in
// p, n, m, s, t, nu, nu1, nu2, r.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgatlas/pc_group.hpp"

namespace pga {

using Params = std::map<std::string, std::int64_t>;

struct Expr;
struct Word;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum Kind { Num, Var, Add, Sub, Mul, Pow, Neg } kind = Num;
    std::int64_t value = 0;
    std::string name;
    ExprPtr lhs, rhs;
};

struct Factor {
    enum Kind { Letter, Comm, Paren, One } kind = Letter;
    char letter = 0;
    std::shared_ptr<const Word> lhs, rhs;  // Comm: [lhs, rhs]; Paren: lhs
    ExprPtr exponent;                      // may be null
};

struct Word {
    std::vector<Factor> factors;
};

struct RelationSet {
    std::string source;
    std::vector<std::vector<Word>> chains;  // w1 = w2 = ... = wk
};

RelationSet parse_relations(const std::string& text);
std::int64_t eval_expr(const Expr& e, const Params& params);

using Assignment = std::map<char, Elem>;

Elem eval_word(const Group& g, const Word& w, const Assignment& as, const Params& params);
bool satisfies(const Group& g, const RelationSet& r, const Assignment& as, const Params& params);
std::vector<char> letters_of(const RelationSet& r);

// Images of a and b that generate G and satisfy every relation, the remaining
// letters being determined by relations of the form "word = letter".
// Combined with |G| = claimed_order this identifies G with the presented group.
std::optional<Assignment> find_generators_satisfying(const Group& g, const RelationSet& r, const Params& params,
                                                     std::uint64_t claimed_order);
// The assignment a -> a, b -> b with the other letters derived as above.
std::optional<Assignment> identity_assignment(const Group& g, const RelationSet& r, const Params& params);

// The relations with all exponents evaluated, e.g. "a^27 = b^9 = 1, c^3 = a^9, ...".
std::string render(const RelationSet& r, const Params& params);

}  // namespace pga
