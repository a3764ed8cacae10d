#include <doctest.h>

#include <random>

#include "pgatlas/classifier.hpp"
#include "pgatlas/error.hpp"
#include "pgatlas/oracle.hpp"

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

// A few members per family: the smallest (n, m) it admits, and the next n.
std::vector<IsoType> sample_members(int p) {
    std::vector<IsoType> out;
    for (const auto& tag : all_tags()) {
        if (family_info(tag).case_id == CaseId::VII) continue;
        int found = 0;
        for (int n = 1; n <= 4 && found < 2; ++n)
            for (int m = 1; m <= n && found < 2; ++m) {
                auto ms = members(tag, p, n, m);
                if (ms.empty()) continue;
                out.push_back(ms.front());
                if (ms.size() > 1) out.push_back(ms.back());
                ++found;
            }
    }
    return out;
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("classify inverts construct") {
    for (int p : {2, 3, 5, 7}) {
        for (const auto& t : sample_members(p)) {
            CAPTURE(to_string(t));
            GroupData d = construct(t);
            CHECK(classify_group(d) == t);
        }
    }
}

TEST_CASE("the witness takes the data to the representative") {
    for (int p : {3, 5}) {
        for (const auto& t : sample_members(p)) {
            GroupData d = construct(t);
            Classification c = classify_detailed(d);
            if (c.witness.reselection) continue;
            CAPTURE(to_string(t));
            CharData rep = extract_char(construct(c.type));
            CHECK(apply_transform(c.chr, c.witness) == rep);
        }
    }
}

TEST_CASE("characteristic data") {
    CharData e7 = extract_char(construct([] {
        IsoType t = type("E7", 3, 3, 2);
        return t;
    }()));
    CHECK(e7.case_id == CaseId::I);
    CHECK(e7.w == mat(0, 0, 0, 1, 3));
    CharData d5 = extract_char(construct(type("D5", 3, 2)));
    CHECK(d5.case_id == CaseId::I);
    CHECK(d5.w == mat(0, 0, 0, 0, 3));
}

TEST_CASE("raw data are classified") {
    GroupData e5{3, 3, 2, 1, {0, 0}, {1, 0}, {1, 0}, {1, 0}, {0, 0}};
    REQUIRE(check_admissible(e5));
    IsoType t = classify_group(e5);
    CHECK(t.tag == "E5");
    CHECK(brute_iso(e5, construct(t)));
    GroupData abelian{3, 2, 1, 0, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}};
    CHECK_THROWS_AS(classify_group(abelian), Error);
}

TEST_CASE("equivalence agrees with brute force") {
    std::mt19937 rng(3);
    for (auto [c, p, n, m] : {std::tuple{CaseId::I, 3, 2, 1}, std::tuple{CaseId::II, 3, 2, 1}}) {
        auto data = enumerate_case(c, p, n, m);
        std::shuffle(data.begin(), data.end(), rng);
        data.resize(std::min<std::size_t>(data.size(), 10));
        for (const auto& x : data)
            for (const auto& y : data) {
                CAPTURE(to_string(x));
                CAPTURE(to_string(y));
                CHECK(equivalent(extract_char(x), extract_char(y)).has_value() == brute_iso(x, y));
            }
    }
}

TEST_CASE("equivalence is an equivalence relation on a sample") {
    std::mt19937 rng(7);
    const int p = 3;
    std::vector<CharData> xs;
    for (const auto& d : enumerate_case(CaseId::I, p, 3, 2)) xs.push_back(extract_char(d));
    std::shuffle(xs.begin(), xs.end(), rng);
    xs.resize(std::min<std::size_t>(xs.size(), 14));
    for (const auto& x : xs) CHECK(equivalent(x, x).has_value());
    for (const auto& x : xs)
        for (const auto& y : xs) {
            bool xy = equivalent(x, y).has_value();
            CHECK(xy == equivalent(y, x).has_value());
            if (!xy) continue;
            for (const auto& z : xs)
                if (equivalent(y, z)) CHECK(equivalent(x, z).has_value());
        }
}

TEST_CASE("predicted index ranges") {
    IsoType e2 = type("E2", 3, 3, 2);
    auto pe = predicted_properties(e2);
    REQUIRE(pe.i_max.has_value());
    CHECK(*pe.i_max == 2);
    IsoType j1 = type("J1", 3, 3, 1);
    j1.nu = 1;
    auto pj = predicted_properties(j1);
    REQUIRE(pj.i_max.has_value());
    CHECK(*pj.i_max == 3);
}

TEST_CASE("theorem domain") {
    CHECK_FALSE(in_theorem_domain(CaseId::I, 2, 2, 1));
    CHECK_FALSE(in_theorem_domain(CaseId::IV, 3, 1, 1));
    CHECK(in_theorem_domain(CaseId::I, 3, 2, 2));
    CHECK(in_theorem_domain(CaseId::I, 2, 3, 2));
}

}
