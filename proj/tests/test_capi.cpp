#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "pgatlas/pgatlas.h"

using nlohmann::json;

namespace {

struct Str {
    char* s = nullptr;
    ~Str() { pga_string_free(s); }
    json parsed() const { return json::parse(s); }
};

pga_group* build(const char* type, int p) {
    pga_group* g = nullptr;
    REQUIRE(pga_group_construct(type, p, &g) == PGA_OK);
    return g;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("construct, serialize and read back") {
    pga_group* g = build(R"({"type":"D1","params":{"n":2,"t":1}})", 3);
    uint64_t order = 0;
    CHECK(pga_group_order(g, &order) == PGA_OK);
    CHECK(order == 729);
    Str text;
    REQUIRE(pga_group_to_json(g, &text.s) == PGA_OK);
    pga_group* h = nullptr;
    REQUIRE(pga_group_from_json(text.s, &h) == PGA_OK);
    int iso = -1;
    Str witness;
    CHECK(pga_isomorphic(g, h, &iso, &witness.s) == PGA_OK);
    CHECK(iso == 1);
    CHECK(witness.parsed().contains("a"));
    Str t;
    REQUIRE(pga_classify(h, &t.s) == PGA_OK);
    CHECK(t.parsed() == json::parse(R"({"type":"D1","params":{"n":2,"t":1}})"));
    pga_group_free(g);
    pga_group_free(h);
}

TEST_CASE("detailed classification and invariants") {
    pga_group* g = build(R"({"type":"A1","params":{}})", 2);
    Str d;
    REQUIRE(pga_classify_detailed(g, &d.s) == PGA_OK);
    json j = d.parsed();
    CHECK(j["type"] == "A1");
    CHECK(j["characteristic"]["case"] == "I");
    Str inv;
    REQUIRE(pga_group_invariants(g, &inv.s) == PGA_OK);
    json k = inv.parsed();
    CHECK(k["order"] == 32);
    CHECK(k["property_p"] == true);
    CHECK(k["d"] == 2);
    pga_group_free(g);
}

TEST_CASE("non-isomorphic pair") {
    pga_group* g = build(R"({"type":"A1","params":{}})", 2);
    pga_group* h = build(R"({"type":"A2","params":{}})", 2);
    int iso = -1;
    char* w = nullptr;
    CHECK(pga_isomorphic(g, h, &iso, &w) == PGA_OK);
    CHECK(iso == 0);
    CHECK(w == nullptr);
    pga_group_free(g);
    pga_group_free(h);
}

TEST_CASE("error codes") {
    pga_group* g = nullptr;
    CHECK(pga_group_construct("{not json", 3, &g) == PGA_E_PARSE);
    CHECK(g == nullptr);
    CHECK(std::strlen(pga_last_error()) > 0);
    CHECK(pga_group_construct(R"({"type":"Q99","params":{}})", 3, &g) != PGA_OK);
    CHECK(pga_group_construct(R"({"type":"D1","params":{"n":2,"t":1}})", 13, &g) == PGA_E_UNSUPPORTED_PRIME);
    CHECK(pga_group_construct(R"({"type":"D1","params":{"n":2}})", 3, &g) == PGA_E_INVALID_ARGUMENT);
    CHECK(pga_group_construct(nullptr, 3, &g) == PGA_E_INVALID_ARGUMENT);
    CHECK(pga_group_construct(R"({"type":"A1","params":{}})", 2, nullptr) == PGA_E_INVALID_ARGUMENT);
    // p = 2 needs n >= 2
    CHECK(pga_group_from_json(R"({"p":2,"n":1,"m":1,"zrank":0})", &g) != PGA_OK);
    uint64_t order;
    CHECK(pga_group_order(nullptr, &order) == PGA_E_INVALID_ARGUMENT);
    char* out = nullptr;
    CHECK(pga_verify_suite("nonsense", &out, nullptr) == PGA_E_INVALID_ARGUMENT);
    int ok = 0;
    CHECK(pga_verify_suite("nonsense", &out, &ok) == PGA_E_INVALID_ARGUMENT);
    CHECK(pga_enumerate("V", 3, 1, 1, &out) != PGA_OK);
    CHECK(out == nullptr);
    CHECK(std::string(pga_status_name(PGA_OK)) == "ok");
    pga_group_free(nullptr);
    pga_string_free(nullptr);
}

TEST_CASE("the order bound") {
    uint64_t saved = pga_get_max_order();
    pga_set_max_order(16);
    CHECK(pga_get_max_order() == 16);
    pga_group* g = build(R"({"type":"A1","params":{}})", 2);
    Str inv;
    REQUIRE(pga_group_invariants(g, &inv.s) == PGA_OK);
    CHECK(inv.parsed().contains("skipped"));
    int iso = 0;
    CHECK(pga_isomorphic(g, g, &iso, nullptr) == PGA_E_BOUND_EXCEEDED);
    pga_group_free(g);
    pga_set_max_order(saved);
}

TEST_CASE("enumeration, verification and congruence") {
    Str e;
    REQUIRE(pga_enumerate("IV", 3, 1, 1, &e.s) == PGA_OK);
    CHECK(e.parsed()["families"].size() == 7);
    Str r;
    int ok = 0;
    REQUIRE(pga_verify("II", 2, 2, 1, &r.s, &ok) == PGA_OK);
    CHECK(ok == 1);
    CHECK(r.parsed()["bucket_count"] == 3);
    Str t;
    REQUIRE(pga_transversal(3, 1, &t.s) == PGA_OK);
    json tj = t.parsed();
    CHECK(tj["count"] == 6);
    uint64_t total = 0;
    for (const auto& c : tj["classes"]) total += c["orbit_size"].get<uint64_t>();
    CHECK(total == 48);
    Str nf;
    const int a[4] = {0, 1, 2, 0};
    REQUIRE(pga_congruence_normal_form(3, a, &nf.s) == PGA_OK);
    CHECK(nf.parsed().contains("x"));
    Str pr;
    REQUIRE(pga_presentation(R"({"type":"D1","params":{"n":2,"t":1}})", 3, &pr.s) == PGA_OK);
    CHECK(std::string(pr.s).find("[a,b] = c") != std::string::npos);
}

}
