#include "pgatlas/congruence.hpp"

#include <algorithm>
#include <map>

#include "pgatlas/error.hpp"

namespace pga {

std::vector<Mat2> transversal(int p, bool invertible) {
    require_supported_prime(p);
    std::vector<Mat2> out;
    if (!invertible) {
        out.push_back(mat(0, 1, 0, 0, p));
        out.push_back(mat(0, 0, 0, 1, p));
        if (p > 2) out.push_back(mat(0, 0, 0, eta(p), p));
        out.push_back(mat(0, 0, 0, 0, p));
        return out;
    }
    if (p == 2) {
        out.push_back(mat(1, 0, 0, 1, p));
        out.push_back(mat(0, 1, 1, 0, p));
        out.push_back(mat(1, 0, 1, 1, p));
        return out;
    }
    out.push_back(mat(0, 1, -1, 0, p));
    for (int nu : {1, eta(p)}) out.push_back(mat(nu, 1, -1, 0, p));
    for (int nu : {1, eta(p)}) out.push_back(mat(1, 0, 0, nu, p));
    for (int r = 1; r <= p - 2; ++r) out.push_back(mat(1, 1, -1, r, p));
    return out;
}

namespace {

const std::vector<Mat2>& gl2_cached(int p) {
    static std::map<int, std::vector<Mat2>> cache;
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, gl2(p)).first;
    return it->second;
}

}  // namespace

bool congruent_to(const Mat2& a, const Mat2& b, int p) {
    for (const auto& x : gl2_cached(p))
        if (congruent(a, x, p) == b) return true;
    return false;
}

CongruenceWitness congruence_normal_form(const Mat2& a, int p) {
    require_supported_prime(p);
    auto reps = transversal(p, mat_invertible(a, p));
    for (const auto& x : gl2_cached(p)) {
        Mat2 b = congruent(a, x, p);
        if (std::find(reps.begin(), reps.end(), b) != reps.end()) return {b, x};
    }
    fail(ErrorCode::Internal, "matrix " + mat_str(a) + " is congruent to no representative");
}

}  // namespace pga
