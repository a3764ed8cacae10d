#include <doctest.h>

#include "pgatlas/error.hpp"
#include "pgatlas/relations.hpp"

using namespace pga;

namespace {

GroupData minimal_nonabelian(int p, int n, int m) {
    GroupData d;
    d.p = p;
    d.n = n;
    d.m = m;
    d.zrank = 0;
    return d;
}

}  // namespace

TEST_SUITE("relations") {

TEST_CASE("exponent expressions") {
    auto r = parse_relations("a^(p^(n+1)) = b^(-nu*p^m) = c^(t*p - 1) = 1");
    REQUIRE(r.chains.size() == 1);
    REQUIRE(r.chains[0].size() == 4);
    Params x{{"p", 3}, {"n", 2}, {"m", 1}, {"nu", 2}, {"t", 2}};
    CHECK(eval_expr(*r.chains[0][0].factors[0].exponent, x) == 27);
    CHECK(eval_expr(*r.chains[0][1].factors[0].exponent, x) == -6);
    CHECK(eval_expr(*r.chains[0][2].factors[0].exponent, x) == 5);
}

TEST_CASE("rendering evaluates exponents") {
    auto r = parse_relations("a^(p^(n+1)) = b^(p^n) = 1, c^p = a^(p^n), [a,b] = c, [c,a] = 1, [c,b] = c^(t*p)");
    CHECK(render(r, {{"p", 3}, {"n", 2}, {"t", 1}}) ==
          "a^27 = b^9 = 1, c^3 = a^9, [a,b] = c, [c,a] = 1, [c,b] = c^3");
}

TEST_CASE("letters") {
    auto r = parse_relations("a^4 = b^2 = c^2 = d^2 = 1, [a,b] = c, [c,a] = d, [c,b] = [d,a] = [d,b] = 1");
    CHECK(letters_of(r) == std::vector<char>{'a', 'b', 'c', 'd'});
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_relations("a^ = 1"), Error);
    CHECK_THROWS_AS(parse_relations("[a,b = c"), Error);
    CHECK_THROWS_AS(parse_relations("a^(q) = 1, x = 1"), Error);
}

TEST_CASE("the minimal non-abelian group satisfies its own presentation") {
    auto rel = parse_relations("a^(p^n) = b^(p^m) = c^p = 1, [a,b] = c, [c,a] = [c,b] = 1");
    for (auto [p, n, m] : {std::tuple{2, 2, 1}, std::tuple{3, 1, 1}, std::tuple{3, 2, 2}, std::tuple{5, 2, 1}}) {
        Group g(minimal_nonabelian(p, n, m));
        Params x{{"p", p}, {"n", n}, {"m", m}};
        auto as = identity_assignment(g, rel, x);
        REQUIRE(as.has_value());
        CHECK(as->at('c') == g.c());
        CHECK(satisfies(g, rel, *as, x));
    }
}

TEST_CASE("commutator words") {
    Group g(minimal_nonabelian(3, 1, 1));
    auto r = parse_relations("[a,b]^3 = [a,b^2]*[a,b]^(-2) = 1");
    CHECK(satisfies(g, r, {{'a', g.a()}, {'b', g.b()}}, {{"p", 3}}));
    auto wrong = parse_relations("[a,b] = 1");
    CHECK_FALSE(satisfies(g, wrong, {{'a', g.a()}, {'b', g.b()}}, {{"p", 3}}));
}

}
