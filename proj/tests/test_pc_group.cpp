#include <doctest.h>

#include <random>
#include <set>

#include "pgatlas/error.hpp"
#include "pgatlas/families.hpp"
#include "pgatlas/oracle.hpp"
#include "pgatlas/pc_group.hpp"

using namespace pga;

namespace {

GroupData datum(int p, int n, int m, int zrank, ZVec al, ZVec be, ZVec ga, ZVec de, ZVec ep) {
    return GroupData{p, n, m, zrank, al, be, ga, de, ep};
}

IsoType type(const std::string& tag, int p, std::optional<int> n = {}, std::optional<int> m = {}) {
    IsoType t;
    t.tag = tag;
    t.p = p;
    t.n = n;
    t.m = m;
    return t;
}

// Largest and least A1 index by brute force over all element pairs.
std::pair<int, int> naive_i_range(const Group& g) {
    const Idx n = static_cast<Idx>(g.order());
    std::uint64_t small = n + 1, big = 0;
    std::set<std::vector<std::uint64_t>> seen;
    for (Idx x = 0; x < n; ++x)
        for (Idx y = x + 1; y < n; ++y) {
            Elem a = g.elem(x), b = g.elem(y);
            if (g.comm(a, b) == Elem{}) continue;
            Subgroup h = closure(g, {a, b});
            if (!seen.insert(h.bits).second) continue;
            if (derived_of(g, h).order() != static_cast<std::uint64_t>(g.p())) continue;
            small = std::min<std::uint64_t>(small, h.order());
            big = std::max<std::uint64_t>(big, h.order());
        }
    return {log_p(n / big, g.p()), log_p(n / small, g.p())};
}

std::vector<GroupData> small_data() {
    std::vector<GroupData> out;
    for (auto [c, p, n, m] : {std::tuple{CaseId::I, 2, 2, 1}, std::tuple{CaseId::II, 2, 2, 1},
                              std::tuple{CaseId::IV, 2, 2, 1}, std::tuple{CaseId::II, 3, 1, 1}}) {
        auto more = enumerate_case(c, p, n, m);
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

}  // namespace

TEST_SUITE("pc_group") {

TEST_CASE("group axioms exhaustively on every datum of order at most 64") {
    for (const auto& d : small_data()) {
        Group g(d);
        if (g.order() > 64) continue;
        const Idx n = static_cast<Idx>(g.order());
        for (Idx x = 0; x < n; ++x) {
            Elem ex = g.elem(x);
            CHECK(g.index(ex) == x);
            CHECK(g.mul(ex, g.inv(ex)) == Elem{});
            CHECK(g.mul(Elem{}, ex) == ex);
            for (Idx y = 0; y < n; ++y) {
                Elem xy = g.mul(ex, g.elem(y));
                for (Idx z = 0; z < n; ++z)
                    if (g.mul(xy, g.elem(z)) != g.mul(ex, g.mul(g.elem(y), g.elem(z)))) {
                        FAIL("not associative: " << to_string(d));
                    }
            }
        }
    }
}

TEST_CASE("associativity on random triples of larger groups") {
    std::mt19937_64 rng(7);
    for (auto t : {type("E5", 3, 3, 2), type("K3", 2), type("O5", 3), type("D1", 5, 2)}) {
        if (t.tag == "E5") t.t = 1;
        if (t.tag == "D1") t.t = 2;
        Group g(construct(t));
        std::uniform_int_distribution<Idx> pick(0, static_cast<Idx>(g.order() - 1));
        for (int k = 0; k < 20000; ++k) {
            Elem x = g.elem(pick(rng)), y = g.elem(pick(rng)), z = g.elem(pick(rng));
            REQUIRE(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
        }
    }
}

TEST_CASE("collection of b a in D5") {
    IsoType t = type("D5", 3, 2);
    Group g(construct(t));
    // [b,a] = c^-1 = c^2 z^-1 with z = c^3
    CHECK(g.mul(g.b(), g.a()) == g.from_exponents(1, 1, 2, {2, 0}));
    CHECK(g.comm(g.a(), g.b()) == g.c());
}

TEST_CASE("[a, b^2] = z^(gamma + epsilon) when p = 2, m = 1") {
    for (auto c : {CaseId::I, CaseId::II})
        for (const auto& d : enumerate_case(c, 2, 2, 1)) {
            Group g(d);
            ZVec sum{(d.gamma[0] + d.epsilon[0]) % 2, 0};
            CHECK(g.comm(g.a(), g.pow(g.b(), 2)) == g.z_power(sum));
            CHECK(g.comm(g.a(), g.pow(g.b(), 2)) == Elem{});
        }
}

TEST_CASE("admissibility") {
    CHECK_FALSE(check_admissible(datum(2, 2, 1, 1, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0})));
    CHECK(check_admissible(datum(2, 2, 1, 1, {1, 0}, {0, 0}, {1, 0}, {1, 0}, {1, 0})));
    for (auto [p, n, m] : {std::tuple{2, 2, 1}, std::tuple{3, 1, 1}, std::tuple{5, 3, 2}})
        CHECK(check_admissible(datum(p, n, m, 0, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0})));
    CHECK_THROWS_AS(Group(datum(2, 2, 1, 1, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0})), Error);
}

TEST_CASE("element orders") {
    IsoType b1 = type("B1", 2, 3);
    Group g(construct(b1));
    CHECK(g.elem_order(g.a()) == 16);
    CHECK(g.comm(g.a(), g.b()) == g.c());
    for (const auto& d : enumerate_case(CaseId::II, 3, 1, 1)) CHECK(Group(d).elem_order(Group(d).c()) == 3);
    IsoType g1 = type("G1", 5, {}, 1);
    g1.nu = 1;
    Group h(construct(g1));
    CHECK(h.elem_order(h.c()) == 5);
}

TEST_CASE("order formula") {
    for (const auto& tag : all_tags())
        for (int p : {2, 3, 5})
            for (int n = 1; n <= 3; ++n)
                for (int m = 1; m <= n; ++m)
                    for (const auto& t : members(tag, p, n, m)) {
                        GroupData d = construct(t);
                        CHECK(group_order(d) == claimed_order(t));
                        CHECK(group_order(d) == ipow(p, d.n + d.m + 1 + d.zrank));
                    }
}

TEST_CASE("structure examples") {
    Group d5(construct(type("D5", 3, 2)));
    Structure s = structure(d5);
    CHECK(s.derived == 9);
    CHECK(s.g3 == 1);
    Group o1(construct(type("O1", 3)));
    Structure so = structure(o1);
    CHECK(so.g3 == 9);
    CHECK(so.phi_derived == 1);
    for (auto [p, n, m] : {std::tuple{2, 2, 1}, std::tuple{3, 2, 1}, std::tuple{5, 1, 1}}) {
        Group g(datum(p, n, m, 0, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}));
        CHECK(structure(g).derived == static_cast<std::uint64_t>(p));
    }
}

TEST_CASE("Z is central and equals Phi(G') G3, d(G) = 2") {
    for (const auto& d : small_data()) {
        Group g(d);
        Structure s = structure(g);
        CHECK(s.d == 2);
        CHECK(s.phi_derived_g3 == ipow(d.p, d.zrank));
        CHECK(s.phi_derived_g3_central);
        CHECK(is_subset(lower_central_3(g), center(g)));
    }
}

TEST_CASE("the quotient by Z is the minimal non-abelian group") {
    auto a1 = construct(type("A1", 2));
    auto q = quotient_mod_z(a1);
    CHECK(q == datum(2, 2, 1, 0, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}));
    auto o5 = construct(type("O5", 3));
    CHECK(group_order(quotient_mod_z(o5)) == 27);
    CHECK_THROWS_AS(quotient_mod_z(q), Error);
    // stripping z is a homomorphism onto the quotient
    for (const auto& d : small_data()) {
        Group g(d), h(quotient_mod_z(d));
        const Idx n = static_cast<Idx>(g.order());
        auto strip = [&](const Elem& e) { return h.from_exponents(e.i, e.j, e.k); };
        for (Idx x = 0; x < n; x += 3)
            for (Idx y = 0; y < n; y += 5)
                CHECK(strip(g.mul(g.elem(x), g.elem(y))) == h.mul(strip(g.elem(x)), strip(g.elem(y))));
    }
}

TEST_CASE("A1 subgroups") {
    Group b1(construct(type("B1", 2, 3)));
    int index_p = 0;
    for (const auto& h : all_a1_subgroups(b1)) index_p += h.order() * 2 == b1.order();
    CHECK(index_p == 1);
    Group m3(datum(3, 1, 1, 0, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}));
    auto subs = all_a1_subgroups(m3);
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].order() == 27);
}

TEST_CASE("I_min and I_max") {
    for (int r = 1; r <= 4; ++r) {
        IsoType f = type("F", 3);
        f.r = r;
        CHECK(i_minmax(Group(construct(f)))->i_max == 1);
    }
    auto b1 = i_minmax(Group(construct(type("B1", 2, 3))));
    CHECK(b1->i_min == 1);
    CHECK(b1->i_max == 3);
    auto e7 = i_minmax(Group(construct(type("E7", 3, 3, 2))));
    CHECK(e7->i_min == 2);
    CHECK(e7->i_max == 3);
}

TEST_CASE("I_min and I_max against pair enumeration") {
    // frozen from naive_i_range
    struct Row {
        const char* tag;
        int p;
        int imin, imax;
    } rows[] = {{"A1", 2, 1, 2}, {"H2", 2, 1, 2}, {"K3", 2, 2, 3}, {"R5", 2, 1, 3},
                 {"O1", 3, 1, 2}, {"N4", 2, 2, 3}, {"C2", 2, 2, 2}, {"K8", 2, 2, 2}};
    for (const auto& r : rows) {
        Group g(construct(type(r.tag, r.p)));
        auto naive = naive_i_range(g);
        auto fast = i_minmax(g);
        REQUIRE(fast.has_value());
        CHECK(naive == std::pair{r.imin, r.imax});
        CHECK(fast->i_min == r.imin);
        CHECK(fast->i_max == r.imax);
    }
}

TEST_CASE("maximal subgroups") {
    Group a1(construct(type("A1", 2)));
    auto maxes = maximal_subgroups(a1);
    CHECK(maxes.size() == 3);
    std::set<std::vector<std::uint64_t>> got, want;
    for (const auto& h : maxes) got.insert(h.bits);
    want.insert(closure(a1, {a1.c(), a1.a()}).bits);
    want.insert(closure(a1, {a1.c(), a1.b(), a1.pow(a1.a(), 2)}).bits);
    want.insert(closure(a1, {a1.c(), a1.mul(a1.a(), a1.b())}).bits);
    CHECK(got == want);
    Group o3(construct(type("O3", 3)));
    CHECK(maximal_subgroups(o3).size() == 4);
    CHECK(a1_maximal_count(Group(construct(type("H1", 2)))) >= 2);
}

TEST_CASE("closures of A1 subsets are generated by pairs") {
    std::mt19937_64 rng(11);
    Group g(construct(type("K5", 2)));
    std::uniform_int_distribution<Idx> pick(0, static_cast<Idx>(g.order() - 1));
    int tried = 0;
    for (int k = 0; k < 400 && tried < 25; ++k) {
        std::vector<Elem> s = {g.elem(pick(rng)), g.elem(pick(rng)), g.elem(pick(rng))};
        Subgroup h = closure(g, s);
        if (!is_a1(g, h)) continue;
        ++tried;
        bool found = false;
        auto el = elements_of(g, h);
        for (std::size_t i = 0; i < el.size() && !found; ++i)
            for (std::size_t j = i + 1; j < el.size() && !found; ++j) found = closure(g, {el[i], el[j]}) == h;
        CHECK(found);
    }
    CHECK(tried > 0);
}

TEST_CASE("enumeration bound") {
    IsoType e1 = type("E1", 5, 3, 2);
    e1.t = 1;
    Group big(construct(e1));
    CHECK_FALSE(big.enumerable());
    CHECK_THROWS_AS(structure(big), Error);
    Limits saved = limits();
    limits().max_order = 10;
    CHECK_THROWS_AS(structure(Group(construct(type("A1", 2)))), Error);
    limits() = saved;
}

}
