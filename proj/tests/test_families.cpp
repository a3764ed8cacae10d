#include <doctest.h>

#include <set>

#include "pgatlas/error.hpp"
#include "pgatlas/families.hpp"
#include "pgatlas/oracle.hpp"
#include "pgatlas/relations.hpp"

using namespace pga;

namespace {

IsoType type(const std::string& tag, int p, std::optional<int> n = {}, std::optional<int> m = {}) {
    IsoType t;
    t.tag = tag;
    t.p = p;
    t.n = n;
    t.m = m;
    return t;
}

std::set<std::string> tags_of(const std::vector<IsoType>& ts) {
    std::set<std::string> out;
    for (const auto& t : ts) out.insert(t.tag);
    return out;
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("every family satisfies its printed presentation") {
    int checked = 0;
    for (const auto& tag : all_tags()) {
        FamilyInfo info = family_info(tag);
        if (info.relations.empty()) continue;
        RelationSet rel = parse_relations(info.relations);
        for (int p : {2, 3, 5, 7})
            for (int n = 1; n <= 4; ++n)
                for (int m = 1; m <= n; ++m)
                    for (const auto& t : members(tag, p, n, m)) {
                        GroupData d = construct(t);
                        if (group_order(d) > limits().max_order) continue;
                        CAPTURE(to_string(t));
                        CHECK(check_admissible(d));
                        Group g(d);
                        CHECK(g.order() == claimed_order(t));
                        bool ok = identity_assignment(g, rel, params_of(t)).has_value() ||
                                  find_generators_satisfying(g, rel, params_of(t), claimed_order(t)).has_value();
                        CHECK(ok);
                        ++checked;
                    }
    }
    CHECK(checked > 200);
}

TEST_CASE("construct examples") {
    GroupData d5 = construct(type("D5", 3, 2));
    CHECK(d5 == GroupData{3, 2, 2, 1, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}});
    CHECK(group_order(d5) == 729);
    CHECK(group_order(construct(type("B1", 2, 3))) == 64);
    CHECK(group_order(construct(type("K3", 2))) == 128);
    IsoType d1 = type("D1", 3, 2);
    d1.t = 1;
    CHECK(group_order(construct(d1)) == 729);
}

TEST_CASE("parameter validation") {
    IsoType d1 = type("D1", 3, 2);
    CHECK_THROWS_AS(construct(d1), Error);  // t missing
    d1.t = 0;
    CHECK_THROWS_AS(construct(d1), Error);
    d1.t = 1;
    d1.s = 1;
    CHECK_THROWS_AS(construct(d1), Error);  // s not a parameter of D1
    CHECK_THROWS_AS(construct(type("A1", 3)), Error);
    CHECK_THROWS_AS(construct(type("A1", 13)), Error);
    CHECK_THROWS_AS(construct(type("Z9", 2)), Error);
    IsoType e = type("E1", 3, 2, 2);  // needs n > m
    e.t = 1;
    CHECK_THROWS_AS(construct(e), Error);
}

TEST_CASE("list_families examples") {
    CHECK(tags_of(list_families(CaseId::I, 2, 2, 1)) == std::set<std::string>{"A1", "A2", "A3"});
    auto o = list_families(CaseId::IV, 3, 1, 1);
    CHECK(o.size() == 7);
    CHECK(tags_of(o) == std::set<std::string>{"O1", "O2", "O3", "O4", "O5", "O6", "O7"});
    auto d = list_families(CaseId::I, 3, 2, 2);
    CHECK(d.size() == 6);
    CHECK(tags_of(d) == std::set<std::string>{"D1", "D2", "D3", "D4", "D5"});
    std::set<int> ts;
    for (const auto& t : d)
        if (t.tag == "D1") ts.insert(*t.t);
    CHECK(ts == std::set<int>{1, 2});
}

TEST_CASE("generator search tells presentations apart") {
    RelationSet a2 = parse_relations(family_info("A2").relations);
    Params x{{"p", 2}, {"n", 2}, {"m", 1}};
    CHECK(find_generators_satisfying(Group(construct(type("A2", 2))), a2, x, 32).has_value());
    CHECK_FALSE(find_generators_satisfying(Group(construct(type("A1", 2))), a2, x, 32).has_value());
    GroupData m0{3, 1, 1, 0, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}};
    RelationSet mr = parse_relations("a^(p^n) = b^(p^m) = c^p = 1, [a,b] = c, [c,a] = [c,b] = 1");
    CHECK(identity_assignment(Group(m0), mr, {{"p", 3}, {"n", 1}, {"m", 1}}).has_value());
}

TEST_CASE("minimal orders of the table rows") {
    auto r = verify_minimal_orders();
    CHECK(r.ok());
    for (const auto& row : minimal_order_table())
        for (int p : {2, 3, 5}) {
            auto printed = row.printed_exponent(p);
            if (!printed) continue;
            std::optional<int> least;
            for (const auto& tag : row.tags) {
                auto e = minimal_order_exponent(tag, p);
                if (e && (!least || *e < *least)) least = e;
            }
            CAPTURE(row.label);
            CAPTURE(p);
            REQUIRE(least.has_value());
            CHECK(*least == *printed);
        }
    CHECK(*minimal_order_exponent("K3", 2) == 7);
}

TEST_CASE("list entries delegate to their counterparts") {
    IsoType e11 = type("S7-11", 3, 2);
    e11.nu = 1;
    IsoType c = counterpart(e11);
    CHECK(c.tag == "J1");
    CHECK(schema_m(c) == 1);
    CHECK(construct(e11) == construct(c));
    CHECK(counterpart(type("S7-39", 2, 3)).tag == "T1");
    CHECK_THROWS_AS(counterpart(type("A1", 2)), Error);
    int entries = 0;
    for (const auto& tag : all_tags()) entries += family_info(tag).case_id == CaseId::VII;
    CHECK(entries == 45);
}

TEST_CASE("presentation text") {
    IsoType d1 = type("D1", 3, 2);
    d1.t = 1;
    CHECK(presentation_text(d1) == "<a, b, c | a^27 = b^9 = 1, c^3 = a^9, [a,b] = c, [c,a] = 1, [c,b] = c^3>");
    IsoType f = type("F", 3);
    f.r = 1;
    CHECK(presentation_text(f).rfind("<a, b, c |", 0) == 0);
}

TEST_CASE("type records") {
    IsoType e5 = type("E5", 3, 3, 2);
    e5.t = 1;
    nlohmann::json j = to_json(e5);
    CHECK(j == nlohmann::json::parse(R"({"type":"E5","params":{"n":3,"m":2,"t":1}})"));
    CHECK(iso_type_from_json(j, 3) == e5);
    CHECK_THROWS_AS(iso_type_from_json(nlohmann::json::parse(R"({"params":{}})"), 3), Error);
}

}
