// Arithmetic in the prime field F_p and 2x2 matrices over it.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pga {

// Primes the atlas has been exercised on.
inline constexpr std::array<int, 5> kSupportedPrimes = {2, 3, 5, 7, 11};

bool is_supported_prime(int p);
void require_supported_prime(int p);  // throws Error(UnsupportedPrime)

// Canonical residue in [0, p).
inline int fmod_p(std::int64_t x, int p) {
    std::int64_t r = x % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int f_add(int x, int y, int p);
int f_sub(int x, int y, int p);
int f_mul(int x, int y, int p);
int f_neg(int x, int p);
int f_pow(int x, std::int64_t e, int p);
int f_inv(int x, int p);  // throws on x == 0

// 0 counts as a square.
bool is_square(int x, int p);
// Least quadratic non-residue; 1 for p = 2 (then nu only ever takes the value 1).
int eta(int p);
// Binomial coefficient C(x, 2) reduced mod p, valid for any integer x.
int binom2_mod(std::int64_t x, int p);

struct Mat2 {
    std::array<int, 4> e{0, 0, 0, 0};  // row-major: e11 e12 e21 e22

    int operator()(int i, int j) const { return e[2 * i + j]; }
    int& operator()(int i, int j) { return e[2 * i + j]; }
    auto operator<=>(const Mat2&) const = default;
};

Mat2 mat(int e11, int e12, int e21, int e22, int p);
Mat2 mat_mul(const Mat2& a, const Mat2& b, int p);
Mat2 mat_transpose(const Mat2& a);
Mat2 mat_scale(const Mat2& a, int s, int p);
int mat_det(const Mat2& a, int p);
Mat2 mat_inv(const Mat2& a, int p);  // throws if singular
std::array<int, 2> mat_apply(const Mat2& a, std::array<int, 2> v, int p);
bool mat_invertible(const Mat2& a, int p);

// X A X^t
Mat2 congruent(const Mat2& a, const Mat2& x, int p);

// All of GL_2(F_p), in a fixed order.
std::vector<Mat2> gl2(int p);

std::string mat_str(const Mat2& a);

}  // namespace pga
