#include <doctest.h>

#include <map>
#include <set>

#include "pgatlas/congruence.hpp"

using namespace pga;

namespace {

// Orbits of A -> X A X^t by direct closure over GL2.
std::vector<std::set<Mat2>> orbits(int p, bool invertible) {
    std::vector<std::set<Mat2>> out;
    std::set<Mat2> seen;
    auto g = gl2(p);
    for (int code = 0; code < p * p * p * p; ++code) {
        Mat2 a = mat(code % p, code / p % p, code / (p * p) % p, code / (p * p * p), p);
        if (mat_invertible(a, p) != invertible || seen.count(a)) continue;
        std::set<Mat2> orb;
        for (const auto& x : g) orb.insert(congruent(a, x, p));
        seen.insert(orb.begin(), orb.end());
        out.push_back(orb);
    }
    return out;
}

}  // namespace

TEST_SUITE("congruence") {

TEST_CASE("invertible class counts: 3 for p = 2, p + 3 otherwise") {
    CHECK(transversal(2, true).size() == 3);
    for (int p : {3, 5, 7}) CHECK(transversal(p, true).size() == static_cast<std::size_t>(p + 3));
}

TEST_CASE("the listed representatives over F_2") {
    auto reps = transversal(2, true);
    std::set<Mat2> inv(reps.begin(), reps.end());
    CHECK(inv == std::set<Mat2>{mat(1, 0, 0, 1, 2), mat(0, 1, 1, 0, 2), mat(1, 0, 1, 1, 2)});
    auto sing = transversal(2, false);
    std::set<Mat2> s(sing.begin(), sing.end());
    CHECK(s == std::set<Mat2>{mat(0, 1, 0, 0, 2), mat(0, 0, 0, 1, 2), mat(0, 0, 0, 0, 2)});
}

TEST_CASE("singular class counts") {
    CHECK(transversal(2, false).size() == 3);
    for (int p : {3, 5, 7}) CHECK(transversal(p, false).size() == 4);
}

TEST_CASE("representatives form a transversal of the brute-force orbits") {
    for (int p : {2, 3, 5})
        for (bool inv : {true, false}) {
            auto orbs = orbits(p, inv);
            auto reps = transversal(p, inv);
            CHECK(orbs.size() == reps.size());
            for (const auto& orb : orbs) {
                int hits = 0;
                for (const auto& r : reps) hits += orb.count(r);
                CHECK(hits == 1);
            }
        }
}

TEST_CASE("normal form witnesses") {
    for (int p : {2, 3, 5}) {
        auto reps = transversal(p, true);
        auto sreps = transversal(p, false);
        reps.insert(reps.end(), sreps.begin(), sreps.end());
        std::set<Mat2> rs(reps.begin(), reps.end());
        for (int code = 0; code < p * p * p * p; ++code) {
            Mat2 a = mat(code % p, code / p % p, code / (p * p) % p, code / (p * p * p), p);
            auto w = congruence_normal_form(a, p);
            CHECK(mat_invertible(w.x, p));
            CHECK(congruent(a, w.x, p) == w.normal_form);
            CHECK(rs.count(w.normal_form) == 1);
            CHECK(mat_invertible(w.normal_form, p) == mat_invertible(a, p));
        }
    }
    // sampled for p = 7
    const int p = 7;
    for (int code = 0; code < p * p * p * p; code += 37) {
        Mat2 a = mat(code % p, code / p % p, code / (p * p) % p, code / (p * p * p), p);
        auto w = congruence_normal_form(a, p);
        CHECK(congruent(a, w.x, p) == w.normal_form);
    }
}

TEST_CASE("fixed points of the normal form") {
    auto zero = congruence_normal_form(mat(0, 0, 0, 0, 5), 5);
    CHECK(zero.normal_form == mat(0, 0, 0, 0, 5));
    Mat2 skew = mat(0, 1, 4, 0, 5);
    CHECK(congruence_normal_form(skew, 5).normal_form == skew);
    CHECK(congruent_to(mat(1, 1, 0, 1, 2), congruence_normal_form(mat(1, 1, 0, 1, 2), 2).normal_form, 2));
}

}
