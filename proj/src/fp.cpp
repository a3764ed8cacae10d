#include "pgatlas/fp.hpp"

#include <algorithm>
#include <sstream>

#include "pgatlas/error.hpp"

namespace pga {

bool is_supported_prime(int p) {
    return std::find(kSupportedPrimes.begin(), kSupportedPrimes.end(), p) != kSupportedPrimes.end();
}

void require_supported_prime(int p) {
    if (!is_supported_prime(p))
        fail(ErrorCode::UnsupportedPrime, "unsupported prime " + std::to_string(p) + " (expected 2, 3, 5, 7 or 11)");
}

int f_add(int x, int y, int p) { return fmod_p(std::int64_t(x) + y, p); }
int f_sub(int x, int y, int p) { return fmod_p(std::int64_t(x) - y, p); }
int f_mul(int x, int y, int p) { return fmod_p(std::int64_t(x) * y, p); }
int f_neg(int x, int p) { return fmod_p(-std::int64_t(x), p); }

int f_pow(int x, std::int64_t e, int p) {
    if (e < 0) return f_pow(f_inv(x, p), -e, p);
    std::int64_t base = fmod_p(x, p), r = 1 % p;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(r);
}

int f_inv(int x, int p) {
    x = fmod_p(x, p);
    if (x == 0) fail(ErrorCode::InvalidArgument, "inverse of zero in F_" + std::to_string(p));
    return f_pow(x, p - 2, p);
}

bool is_square(int x, int p) {
    x = fmod_p(x, p);
    if (x == 0 || p == 2) return true;
    return f_pow(x, (p - 1) / 2, p) == 1;
}

int eta(int p) {
    if (p == 2) return 1;
    for (int x = 2; x < p; ++x)
        if (!is_square(x, p)) return x;
    fail(ErrorCode::Internal, "no non-residue found");
}

int binom2_mod(std::int64_t x, int p) {
    // x(x-1)/2 with one of the factors even; reduce before multiplying.
    std::int64_t a = x, b = x - 1;
    if (a % 2 == 0) a /= 2; else b /= 2;
    return f_mul(fmod_p(a, p), fmod_p(b, p), p);
}

Mat2 mat(int e11, int e12, int e21, int e22, int p) {
    return Mat2{{fmod_p(e11, p), fmod_p(e12, p), fmod_p(e21, p), fmod_p(e22, p)}};
}

Mat2 mat_mul(const Mat2& a, const Mat2& b, int p) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = fmod_p(std::int64_t(a(i, 0)) * b(0, j) + std::int64_t(a(i, 1)) * b(1, j), p);
    return r;
}

Mat2 mat_transpose(const Mat2& a) { return Mat2{{a(0, 0), a(1, 0), a(0, 1), a(1, 1)}}; }

Mat2 mat_scale(const Mat2& a, int s, int p) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = f_mul(a.e[i], s, p);
    return r;
}

int mat_det(const Mat2& a, int p) {
    return fmod_p(std::int64_t(a(0, 0)) * a(1, 1) - std::int64_t(a(0, 1)) * a(1, 0), p);
}

bool mat_invertible(const Mat2& a, int p) { return mat_det(a, p) != 0; }

Mat2 mat_inv(const Mat2& a, int p) {
    int d = mat_det(a, p);
    if (d == 0) fail(ErrorCode::InvalidArgument, "singular matrix " + mat_str(a));
    int di = f_inv(d, p);
    return mat_scale(mat(a(1, 1), -a(0, 1), -a(1, 0), a(0, 0), p), di, p);
}

std::array<int, 2> mat_apply(const Mat2& a, std::array<int, 2> v, int p) {
    return {fmod_p(std::int64_t(a(0, 0)) * v[0] + std::int64_t(a(0, 1)) * v[1], p),
            fmod_p(std::int64_t(a(1, 0)) * v[0] + std::int64_t(a(1, 1)) * v[1], p)};
}

Mat2 congruent(const Mat2& a, const Mat2& x, int p) { return mat_mul(mat_mul(x, a, p), mat_transpose(x), p); }

std::vector<Mat2> gl2(int p) {
    std::vector<Mat2> out;
    out.reserve(std::size_t(p * p - 1) * (p * p - p));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d) {
                    Mat2 m{{a, b, c, d}};
                    if (mat_det(m, p) != 0) out.push_back(m);
                }
    return out;
}

std::string mat_str(const Mat2& a) {
    std::ostringstream os;
    os << "[[" << a(0, 0) << "," << a(0, 1) << "],[" << a(1, 0) << "," << a(1, 1) << "]]";
    return os.str();
}

}  // namespace pga
