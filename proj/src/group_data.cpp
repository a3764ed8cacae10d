#include "pgatlas/group_data.hpp"

#include <sstream>

#include "pgatlas/error.hpp"
#include "pgatlas/fp.hpp"

namespace pga {

namespace {

void reduce(ZVec& v, int zrank, int p) {
    for (int t = 0; t < 2; ++t) v[t] = t < zrank ? fmod_p(v[t], p) : 0;
}

nlohmann::json vec_json(const ZVec& v, int zrank) {
    auto out = nlohmann::json::array();
    for (int t = 0; t < zrank; ++t) out.push_back(v[t]);
    return out;
}

ZVec vec_from_json(const nlohmann::json& j, const char* key, int zrank) {
    ZVec v{0, 0};
    if (!j.contains(key)) {
        if (zrank == 0) return v;
        fail(ErrorCode::Parse, std::string("missing field '") + key + "'");
    }
    const auto& a = j.at(key);
    if (!a.is_array() || static_cast<int>(a.size()) != zrank)
        fail(ErrorCode::Parse, std::string("field '") + key + "' must be an array of length zrank");
    for (int t = 0; t < zrank; ++t) {
        if (!a[t].is_number_integer()) fail(ErrorCode::Parse, std::string("field '") + key + "' must hold integers");
        v[t] = a[t].get<int>();
    }
    return v;
}

}  // namespace

std::uint64_t ipow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (std::uint64_t(1) << 62) / base) fail(ErrorCode::BoundExceeded, "integer power overflow");
        r *= base;
    }
    return r;
}

void validate_shape(const GroupData& d) {
    require_supported_prime(d.p);
    if (d.m < 1) fail(ErrorCode::InvalidArgument, "m must be at least 1");
    if (d.n < d.m) fail(ErrorCode::InvalidArgument, "n must be at least m");
    if (d.p == 2 && d.n < 2) fail(ErrorCode::InvalidArgument, "n must be at least 2 when p = 2");
    if (d.zrank < 0 || d.zrank > 2) fail(ErrorCode::InvalidArgument, "zrank must be 0, 1 or 2");
    group_order(d);
}

GroupData normalized(GroupData d) {
    require_supported_prime(d.p);
    if (d.zrank < 0 || d.zrank > 2) fail(ErrorCode::InvalidArgument, "zrank must be 0, 1 or 2");
    for (ZVec* v : {&d.alpha, &d.beta, &d.gamma, &d.delta, &d.epsilon}) reduce(*v, d.zrank, d.p);
    return d;
}

std::uint64_t group_order(const GroupData& d) { return ipow(std::uint64_t(d.p), d.n + d.m + 1 + d.zrank); }

bool consistency_conditions(const GroupData& d) {
    const int p = d.p;
    const std::int64_t pn = static_cast<std::int64_t>(ipow(p, d.n));
    const std::int64_t pm = static_cast<std::int64_t>(ipow(p, d.m));
    const int pn1 = fmod_p(pn / p, p), pm1 = fmod_p(pm / p, p);
    const int cn = binom2_mod(pn, p), cm = binom2_mod(pm, p);
    for (int t = 0; t < d.zrank; ++t) {
        // [b, a^(p^n)] = 1 and [a, b^(p^m)] = 1
        if (fmod_p(std::int64_t(d.gamma[t]) * pn1 + std::int64_t(d.delta[t]) * cn, p) != 0) return false;
        if (fmod_p(std::int64_t(d.gamma[t]) * pm1 + std::int64_t(d.epsilon[t]) * cm, p) != 0) return false;
    }
    return true;
}

bool spans_z(const GroupData& d) {
    const int p = d.p;
    if (d.zrank == 0) return true;
    const ZVec vs[3] = {d.gamma, d.delta, d.epsilon};
    if (d.zrank == 1) {
        for (const auto& v : vs)
            if (fmod_p(v[0], p) != 0) return true;
        return false;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (fmod_p(std::int64_t(vs[i][0]) * vs[j][1] - std::int64_t(vs[i][1]) * vs[j][0], p) != 0) return true;
    return false;
}

bool has_property_p(const GroupData& d) { return check_admissible(d) && spans_z(d); }

void require_admissible(const GroupData& d) {
    validate_shape(d);
    if (!check_admissible(normalized(d)))
        fail(ErrorCode::NotAdmissible, "inconsistent presentation: " + to_string(d));
}

nlohmann::json to_json(const GroupData& d) {
    nlohmann::json j;
    j["p"] = d.p;
    j["n"] = d.n;
    j["m"] = d.m;
    j["zrank"] = d.zrank;
    j["alpha"] = vec_json(d.alpha, d.zrank);
    j["beta"] = vec_json(d.beta, d.zrank);
    j["gamma"] = vec_json(d.gamma, d.zrank);
    j["delta"] = vec_json(d.delta, d.zrank);
    j["epsilon"] = vec_json(d.epsilon, d.zrank);
    return j;
}

GroupData group_data_from_json(const nlohmann::json& j) {
    if (!j.is_object()) fail(ErrorCode::Parse, "group data must be a JSON object");
    GroupData d;
    for (auto [key, field] : {std::pair{"p", &d.p}, {"n", &d.n}, {"m", &d.m}, {"zrank", &d.zrank}}) {
        if (!j.contains(key) || !j.at(key).is_number_integer())
            fail(ErrorCode::Parse, std::string("missing or non-integer field '") + key + "'");
        *field = j.at(key).get<int>();
    }
    if (d.zrank < 0 || d.zrank > 2) fail(ErrorCode::InvalidArgument, "zrank must be 0, 1 or 2");
    d.alpha = vec_from_json(j, "alpha", d.zrank);
    d.beta = vec_from_json(j, "beta", d.zrank);
    d.gamma = vec_from_json(j, "gamma", d.zrank);
    d.delta = vec_from_json(j, "delta", d.zrank);
    d.epsilon = vec_from_json(j, "epsilon", d.zrank);
    validate_shape(d);
    return normalized(d);
}

std::string to_string(const GroupData& d) { return to_json(d).dump(); }

GroupData quotient_mod_z(const GroupData& d) {
    validate_shape(d);
    if (d.zrank == 0) fail(ErrorCode::InvalidArgument, "datum has no central part to factor out");
    GroupData q;
    q.p = d.p;
    q.n = d.n;
    q.m = d.m;
    q.zrank = 0;
    return q;
}

}  // namespace pga
