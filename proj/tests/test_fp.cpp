#include <doctest.h>

#include <set>

#include "pgatlas/error.hpp"
#include "pgatlas/fp.hpp"

using namespace pga;

TEST_SUITE("fp") {

TEST_CASE("field operations agree with integer arithmetic mod p") {
    for (int p : kSupportedPrimes)
        for (int x = 0; x < p; ++x)
            for (int y = 0; y < p; ++y) {
                CHECK(f_add(x, y, p) == (x + y) % p);
                CHECK(f_mul(x, y, p) == (x * y) % p);
                CHECK(f_sub(f_add(x, y, p), y, p) == x);
                if (x != 0) CHECK(f_mul(x, f_inv(x, p), p) == 1);
            }
    CHECK_THROWS_AS(f_inv(0, 5), Error);
    CHECK(fmod_p(-7, 5) == 3);
}

TEST_CASE("squares, zero included") {
    CHECK(is_square(0, 5));
    CHECK(is_square(4, 5));
    CHECK_FALSE(is_square(2, 5));
    for (int p : {2, 3, 5, 7}) {
        std::set<int> sq;
        for (int x = 0; x < p; ++x) sq.insert(x * x % p);
        int count = 0;
        for (int x = 0; x < p; ++x) {
            CHECK(is_square(x, p) == (sq.count(x) == 1));
            count += is_square(x, p);
        }
        CHECK(count == (p == 2 ? 2 : (p + 1) / 2));
    }
}

TEST_CASE("least non-residue") {
    CHECK(eta(3) == 2);
    CHECK(eta(5) == 2);
    CHECK(eta(7) == 3);
    CHECK(eta(11) == 2);
    for (int p : {3, 5, 7, 11}) {
        CHECK_FALSE(is_square(eta(p), p));
        for (int x = 1; x < eta(p); ++x) CHECK(is_square(x, p));
    }
}

TEST_CASE("unsupported primes are rejected") {
    CHECK_THROWS_AS(require_supported_prime(13), Error);
    CHECK_THROWS_AS(require_supported_prime(4), Error);
    CHECK_NOTHROW(require_supported_prime(11));
}

TEST_CASE("2x2 matrices") {
    const int p = 5;
    Mat2 id = mat(1, 0, 0, 1, p);
    CHECK(mat_det(id, p) == 1);
    Mat2 a = mat(2, 3, 1, 3, p);
    CHECK(mat_det(a, p) == 3);
    CHECK(mat_mul(a, mat_inv(a, p), p) == id);
    CHECK(mat_transpose(a) == mat(2, 1, 3, 3, p));
    CHECK(mat_apply(a, {1, 1}, p) == std::array<int, 2>{0, 4});
    CHECK_THROWS_AS(mat_inv(mat(1, 2, 2, 4, p), p), Error);
    CHECK(congruent(a, id, p) == a);
}

TEST_CASE("GL2 enumeration") {
    CHECK(gl2(2).size() == 6);
    CHECK(gl2(3).size() == 48);
    for (int p : {2, 3, 5, 7}) {
        auto g = gl2(p);
        CHECK(g.size() == static_cast<std::size_t>((p * p - 1) * (p * p - p)));
        std::set<Mat2> all(g.begin(), g.end());
        CHECK(all.size() == g.size());
        for (std::size_t i = 0; i < g.size(); i += 7) {
            CHECK(mat_invertible(g[i], p));
            CHECK(all.count(mat_inv(g[i], p)) == 1);
            CHECK(all.count(mat_mul(g[i], g[(i * 13 + 1) % g.size()], p)) == 1);
        }
    }
}

TEST_CASE("binomial(x, 2) mod p") {
    for (int p : {2, 3, 5})
        for (std::int64_t x = -20; x <= 20; ++x) CHECK(binom2_mod(x, p) == fmod_p(x * (x - 1) / 2, p));
}

}
