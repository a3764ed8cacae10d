#include "family_table.hpp"

#include <map>

#include "pgatlas/error.hpp"
#include "pgatlas/fp.hpp"

namespace pga::detail {

namespace {

using Space = std::function<std::vector<Params>(int, int, int)>;
using Where = std::function<bool(int, int, int)>;
using Build = std::function<GroupData(int, int, int, const Params&)>;

std::vector<int> nus(int p) { return p == 2 ? std::vector<int>{1} : std::vector<int>{1, eta(p)}; }
std::vector<int> range(int lo, int hi) {
    std::vector<int> out;
    for (int x = lo; x <= hi; ++x) out.push_back(x);
    return out;
}

// Cartesian product of per-name value lists.
Space over(std::vector<std::pair<std::string, std::function<std::vector<int>(int)>>> axes) {
    return [axes](int p, int, int) {
        std::vector<Params> out{Params{}};
        for (const auto& [name, values] : axes) {
            std::vector<Params> next;
            for (const auto& x : out)
                for (int v : values(p)) {
                    Params y = x;
                    y[name] = v;
                    next.push_back(y);
                }
            out = std::move(next);
        }
        return out;
    };
}

const auto kNu = [](int p) { return nus(p); };
const auto kUnits = [](int p) { return range(1, p - 1); };
const auto kField = [](int p) { return range(0, p - 1); };
const auto kHalf = [](int p) { return range(0, (p - 1) / 2); };
// 0..(p-1)/2 for odd p; both residues for p = 2, where s = 1 is its own class
const auto kHalfM1 = [](int p) { return range(0, p / 2); };
const auto kR = [](int p) { return range(1, p - 2); };
const auto kQ4 = [](int p) { return range(2, p - 1); };

Space no_params() {
    return [](int, int, int) { return std::vector<Params>{Params{}}; };
}

int inv(std::int64_t x, int p) { return f_inv(fmod_p(x, p), p); }

GroupData from_w(CaseId c, int p, int n, int m, std::int64_t w11, std::int64_t w12, std::int64_t w21, std::int64_t w22,
                 ZVec v = {0, 0}) {
    CharData ch;
    ch.case_id = c;
    ch.p = p;
    ch.n = n;
    ch.m = m;
    ch.w = mat(fmod_p(w11, p), fmod_p(w12, p), fmod_p(w21, p), fmod_p(w22, p), p);
    ch.v = {fmod_p(v[0], p), fmod_p(v[1], p)};
    return datum_from_char(ch);
}

using WFn = std::function<std::array<std::int64_t, 4>(int p, const Params& x)>;

Build wb(CaseId c, WFn f, ZVec v = {0, 0}) {
    return [c, f, v](int p, int n, int m, const Params& x) {
        auto w = f(p, x);
        return from_w(c, p, n, m, w[0], w[1], w[2], w[3], v);
    };
}

Build wconst(CaseId c, std::int64_t w11, std::int64_t w12, std::int64_t w21, std::int64_t w22, ZVec v = {0, 0}) {
    return wb(c, [=](int, const Params&) { return std::array<std::int64_t, 4>{w11, w12, w21, w22}; }, v);
}

std::int64_t P(const Params& x, const char* k) { return x.at(k); }

// ---- where-clauses ----
Where fixed_at(int prime) {
    return [prime](int p, int, int) { return p == prime; };
}
const Where kDWhere = [](int p, int n, int m) { return n == m && (p == 2 ? n >= 3 : n >= 2); };
const Where kEWhere = [](int, int n, int m) { return n > m && m >= 2; };
const Where kB = [](int p, int n, int m) { return p == 2 && m == 1 && n >= 3; };
const Where kGWhere = [](int p, int n, int m) { return n == m && (p <= 3 ? m > 1 : m >= 1); };
const Where kJWhere = [](int p, int n, int m) { return n > m && (p != 2 || m > 1); };
const Where kLWhere = [](int p, int n, int m) { return n >= m && m >= 2 && (p != 2 || n >= 3); };
const Where kP14 = [](int p, int n, int m) { return n == m && p > 2 && (p != 3 || n >= 2); };
const Where kP57 = [](int p, int n, int m) { return n == m && p == 2 && n >= 3; };
const Where kP810 = [](int p, int n, int m) { return n == m && (p == 2 ? n >= 3 : p == 3 ? n >= 2 : n >= 1); };
const Where kQWhere = [](int p, int n, int m) { return n == m && n >= 2 && (p != 2 || n >= 3); };
const Where kSWhere = [](int p, int n, int m) { return n > m && (p != 2 || (n >= 3 && m >= 2)); };

FamilySpec fam(std::string tag, CaseId c, std::string rel, Shape shape, Where where, std::vector<std::string> extra,
               Space space, Build build, int fn = 0, int fm = 0) {
    FamilySpec s;
    s.tag = std::move(tag);
    s.case_id = c;
    s.structural = c;
    s.relations = std::move(rel);
    s.shape = shape;
    s.fixed_n = fn;
    s.fixed_m = fm;
    s.where = std::move(where);
    s.extra = std::move(extra);
    s.space = std::move(space);
    s.build = std::move(build);
    return s;
}

FamilySpec fixed(std::string tag, CaseId c, std::string rel, int prime, int n, int m) {
    return fam(std::move(tag), c, std::move(rel), Shape::Fixed, fixed_at(prime), {}, no_params(), nullptr, n, m);
}

void add_case_i(std::vector<FamilySpec>& t) {
    const CaseId C = CaseId::I;
    t.push_back(fixed("A1", C, "a^4 = b^2 = c^4 = 1, [a,b] = c, [c,a] = [c,b] = c^2", 2, 2, 1));
    t.push_back(fixed("A2", C, "a^4 = b^4 = 1, c^2 = a^2, [a,b] = c, [c,a] = [c,b] = c^2", 2, 2, 1));
    t.push_back(fixed("A3", C, "a^8 = b^2 = 1, c^2 = a^4, [a,b] = c, [c,a] = [c,b] = c^2", 2, 2, 1));
    auto b = [&](std::string tag, std::string rel, Build bd) {
        t.push_back(fam(std::move(tag), C, std::move(rel), Shape::NWithM1, kB, {}, no_params(), std::move(bd)));
    };
    b("B1", "a^(2^(n+1)) = b^2 = 1, c^2 = a^(2^n), [a,b] = c, [c,a] = 1, [c,b] = c^2", wconst(C, 1, 0, 0, 1));
    b("B2", "a^(2^n) = b^2 = c^4 = 1, [a,b] = c, [c,a] = 1, [c,b] = c^2", wconst(C, 0, 0, 0, 1));
    b("B3", "a^(2^n) = b^4 = 1, c^2 = b^2, [a,b] = c, [c,a] = 1, [c,b] = c^2", wconst(C, 0, 0, 1, 1));
    t.push_back(fixed("C1", C, "a^8 = 1, c^2 = a^4 = b^4, [a,b] = c, [c,a] = 1, [c,b] = 1", 2, 2, 2));
    t.push_back(fixed("C2", C, "a^8 = b^4 = 1, c^2 = a^4, [a,b] = c, [c,a] = [c,b] = 1", 2, 2, 2));
    t.push_back(fixed("C3", C, "a^8 = 1, c^2 = a^4 = b^4, [a,b] = c, [c,a] = 1, [c,b] = c^2", 2, 2, 2));
    t.push_back(fixed("C4", C, "a^8 = b^4 = 1, c^2 = a^4, [a,b] = c, [c,a] = 1, [c,b] = c^2", 2, 2, 2));
    t.push_back(fixed("C5", C, "a^8 = b^4 = 1, c^2 = a^4, [a,b] = c, [c,a] = c^2, [c,b] = 1", 2, 2, 2));

    auto d = [&](std::string tag, std::string rel, std::vector<std::string> ex, Space sp, Build bd) {
        t.push_back(fam(std::move(tag), C, std::move(rel), Shape::NEqualM, kDWhere, std::move(ex), std::move(sp),
                        std::move(bd)));
    };
    d("D1", "a^(p^(n+1)) = b^(p^n) = 1, c^p = a^(p^n), [a,b] = c, [c,a] = 1, [c,b] = c^(t*p)", {"t"},
      over({{"t", kUnits}}), wb(C, [](int, const Params& x) { return std::array<std::int64_t, 4>{1, 0, 0, P(x, "t")}; }));
    d("D2", "a^(p^(n+1)) = b^(p^n) = 1, c^p = a^(p^n), [a,b] = c, [c,a] = c^p, [c,b] = 1", {}, no_params(),
      wconst(C, 1, 1, 0, 0));
    d("D3", "a^(p^(n+1)) = b^(p^n) = 1, c^p = a^(p^n), [a,b] = c, [c,a] = 1, [c,b] = 1", {}, no_params(),
      wconst(C, 1, 0, 0, 0));
    d("D4", "a^(p^n) = b^(p^n) = c^(p^2) = 1, [a,b] = c, [c,a] = c^p, [c,b] = 1", {}, no_params(), wconst(C, 0, 1, 0, 0));
    d("D5", "a^(p^n) = b^(p^n) = c^(p^2) = 1, [a,b] = c, [c,a] = 1, [c,b] = 1", {}, no_params(), wconst(C, 0, 0, 0, 0));

    auto e = [&](std::string tag, std::string rel, std::vector<std::string> ex, Space sp, Build bd) {
        t.push_back(fam(std::move(tag), C, std::move(rel), Shape::NM, kEWhere, std::move(ex), std::move(sp), std::move(bd)));
    };
    e("E1", "a^(p^(n+1)) = b^(p^m) = 1, c^p = a^(p^n), [a,b] = c, [c,a] = 1, [c,b] = c^(t*p)", {"t"},
      over({{"t", kUnits}}), wb(C, [](int, const Params& x) { return std::array<std::int64_t, 4>{1, 0, 0, P(x, "t")}; }));
    e("E2", "a^(p^(n+1)) = b^(p^m) = 1, c^p = a^(p^n), [a,b] = c, [c,a] = c^p, [c,b] = 1", {}, no_params(),
      wconst(C, 1, 1, 0, 0));
    e("E3", "a^(p^(n+1)) = b^(p^m) = 1, c^p = a^(p^n), [a,b] = c, [c,a] = 1, [c,b] = 1", {}, no_params(),
      wconst(C, 1, 0, 0, 0));
    e("E4", "a^(p^n) = b^(p^(m+1)) = 1, c^p = b^(p^m), [a,b] = c, [c,a] = 1, [c,b] = c^p", {}, no_params(),
      wconst(C, 0, 0, 1, 1));
    e("E5", "a^(p^n) = b^(p^(m+1)) = 1, c^p = b^(p^m), [a,b] = c, [c,a] = c^(t*p), [c,b] = 1", {"t"},
      over({{"t", kUnits}}), wb(C, [](int, const Params& x) { return std::array<std::int64_t, 4>{0, P(x, "t"), 1, 0}; }));
    e("E6", "a^(p^n) = b^(p^(m+1)) = 1, c^p = b^(p^m), [a,b] = c, [c,a] = 1, [c,b] = 1", {}, no_params(),
      wconst(C, 0, 0, 1, 0));
    e("E7", "a^(p^n) = b^(p^m) = c^(p^2) = 1, [a,b] = c, [c,a] = 1, [c,b] = c^p", {}, no_params(), wconst(C, 0, 0, 0, 1));
    e("E8", "a^(p^n) = b^(p^m) = c^(p^2) = 1, [a,b] = c, [c,a] = c^p, [c,b] = 1", {}, no_params(), wconst(C, 0, 1, 0, 0));
    e("E9", "a^(p^n) = b^(p^m) = c^(p^2) = 1, [a,b] = c, [c,a] = 1, [c,b] = 1", {}, no_params(), wconst(C, 0, 0, 0, 0));
}

void add_case_ii(std::vector<FamilySpec>& t) {
    const CaseId C = CaseId::II;
    // variants indexed by r, one per isomorphism class arising in the case
    t.push_back(fam("F", C, "", Shape::Fixed, fixed_at(3), {"r"},
                    [](int, int, int) {
                        std::vector<Params> out;
                        for (int r = 1; r <= f_variant_count(); ++r) out.push_back({{"r", r}});
                        return out;
                    },
                    nullptr, 1, 1));
    auto g = [&](std::string tag, std::string rel, std::vector<std::string> ex, Space sp, Build bd) {
        t.push_back(
            fam(std::move(tag), C, std::move(rel), Shape::MEqualN, kGWhere, std::move(ex), std::move(sp), std::move(bd)));
    };
    g("G1", "a^(p^(m+1)) = b^(p^m) = c^p = 1, [a,b] = c, [c,a] = 1, [c,b] = a^(nu*p^m)", {"nu"}, over({{"nu", kNu}}),
      wb(C, [](int, const Params& x) { return std::array<std::int64_t, 4>{1, 0, 0, P(x, "nu")}; }));
    g("G2", "a^(p^m) = b^(p^m) = c^p = d^p = 1, [a,b] = c, [c,a] = d, [c,b] = 1, [d,a] = [d,b] = 1", {}, no_params(),
      wconst(C, 0, 1, 0, 0));
    g("G3", "a^(p^(m+1)) = b^(p^m) = c^p = 1, [a,b] = c, [c,a] = a^(p^m), [c,b] = 1", {}, no_params(),
      wconst(C, 1, 1, 0, 0));
    t.push_back(fixed("H1", C, "a^4 = b^2 = c^2 = d^2 = 1, [a,b] = c, [c,a] = d, [c,b] = [d,a] = [d,b] = 1", 2, 2, 1));
    t.push_back(fixed("H2", C, "a^8 = b^2 = c^2 = 1, [a,b] = c, [c,a] = a^4, [c,b] = 1", 2, 2, 1));
    t.push_back(fixed("H3", C, "a^8 = c^2 = 1, b^2 = a^4, [a,b] = c, [c,a] = b^2, [c,b] = 1", 2, 2, 1));
    auto i = [&](std::string tag, std::string rel, Build bd) {
        t.push_back(fam(std::move(tag), C, std::move(rel), Shape::NWithM1, kB, {}, no_params(), std::move(bd)));
    };
    i("I1", "a^(2^n) = b^2 = c^2 = d^2 = 1, [a,b] = c, [c,a] = d, [c,b] = [d,a] = [d,b] = 1", wconst(C, 0, 1, 0, 0));
    i("I2", "a^(2^(n+1)) = b^2 = c^2 = 1, [a,b] = c, [c,a] = a^(2^n), [c,b] = 1", wconst(C, 1, 1, 0, 0));
    i("I3", "a^(2^n) = b^4 = c^2 = 1, [a,b] = c, [c,a] = b^2, [c,b] = 1", wconst(C, 0, 1, 1, 0));
    auto j = [&](std::string tag, std::string rel, std::vector<std::string> ex, Space sp, Build bd) {
        t.push_back(fam(std::move(tag), C, std::move(rel), Shape::NM, kJWhere, std::move(ex), std::move(sp), std::move(bd)));
    };
    j("J1", "a^(p^(n+1)) = b^(p^m) = c^p = 1, [a,b] = c, [c,a] = 1, [c,b] = a^(nu*p^n)", {"nu"}, over({{"nu", kNu}}),
      wb(C, [](int, const Params& x) { return std::array<std::int64_t, 4>{1, 0, 0, P(x, "nu")}; }));
    j("J2", "a^(p^(n+1)) = b^(p^m) = c^p = 1, [a,b] = c, [c,a] = a^(p^n), [c,b] = 1", {}, no_params(),
      wconst(C, 1, 1, 0, 0));
    j("J3", "a^(p^n) = b^(p^(m+1)) = c^p = 1, [a,b] = c, [c,a] = 1, [c,b] = b^(p^m)", {}, no_params(),
      wconst(C, 0, 0, 1, 1));
    j("J4", "a^(p^n) = b^(p^(m+1)) = c^p = 1, [a,b] = c, [c,a] = b^(nu*p^m), [c,b] = 1", {"nu"}, over({{"nu", kNu}}),
      wb(C, [](int, const Params& x) { return std::array<std::int64_t, 4>{0, P(x, "nu"), 1, 0}; }));
    j("J5", "a^(p^n) = b^(p^m) = c^p = d^p = 1, [a,b] = c, [c,a] = 1, [c,b] = d, [d,a] = [d,b] = 1", {}, no_params(),
      wconst(C, 0, 0, 0, 1));
    j("J6", "a^(p^n) = b^(p^m) = c^p = d^p = 1, [a,b] = c, [c,a] = d, [c,b] = 1, [d,a] = [d,b] = 1", {}, no_params(),
      wconst(C, 0, 1, 0, 0));
}

void add_case_iii(std::vector<FamilySpec>& t) {
    const CaseId A = CaseId::IIIa;
    t.push_back(fixed("K1", A, "a^8 = b^4 = c^4 = 1, [a,b] = c, [c,a] = 1, [c,b] = c^2*a^4", 2, 2, 2));
    t.push_back(fixed("K2", A, "a^8 = b^8 = 1, c^2 = b^4, [a,b] = c, [c,a] = 1, [c,b] = a^4*b^4", 2, 2, 2));
    t.push_back(fixed("K3", A, "a^8 = b^4 = d^2 = 1, c^2 = a^4, [a,b] = c, [c,a] = 1, [c,b] = d, [d,a] = [d,b] = 1", 2, 2, 2));
    t.push_back(fixed("K4", A, "a^8 = b^8 = 1, c^2 = a^4, [a,b] = c, [c,a] = 1, [c,b] = b^4", 2, 2, 2));
    t.push_back(fixed("K5", A, "a^8 = d^2 = 1, b^4 = c^2 = a^4, [a,b] = c, [c,a] = 1, [c,b] = d, [d,a] = [d,b] = 1", 2, 2, 2));
    t.push_back(fixed("K6", A, "a^8 = b^8 = 1, c^2 = a^4, [a,b] = c, [c,a] = 1, [c,b] = a^4*b^4", 2, 2, 2));
    t.push_back(fixed("K7", A, "a^8 = b^4 = c^4 = 1, [a,b] = c, [c,a] = 1, [c,b] = a^4", 2, 2, 2));
    t.push_back(fixed("K8", A, "a^8 = b^8 = 1, c^2 = b^4, [a,b] = c, [c,a] = 1, [c,b] = a^4", 2, 2, 2));
    t.push_back(fixed("K9", A, "a^4 = b^4 = c^4 = d^2 = 1, [a,b] = c, [c,b] = d, [c,a] = [d,a] = [d,b] = 1", 2, 2, 2));
    t.push_back(fixed("K10", A, "a^4 = b^8 = c^4 = 1, [a,b] = c, [c,a] = 1, [c,b] = b^4", 2, 2, 2));

    auto l = [&](std::string tag, std::string rel, std::vector<std::string> ex, Space sp, Build bd) {
        t.push_back(fam(std::move(tag), A, std::move(rel), Shape::NM, kLWhere, std::move(ex), std::move(sp), std::move(bd)));
    };
    l("L1", "a^(p^(n+1)) = b^(p^(m+1)) = 1, [a,b] = c, c^p = a^(p^n)*b^(s*p^m), [c,a] = 1, [b,c] = b^(p^m)", {"s"},
      over({{"s", kField}}), wb(A, [](int, const Params& x) { return std::array<std::int64_t, 4>{1, -P(x, "s"), 0, 1}; }));
    l("L2", "a^(p^(n+1)) = b^(p^m) = c^(p^2) = 1, [a,b] = c, [c,a] = 1, [c,b] = c^(t*p)*a^(-t*p^n)", {"t"},
      over({{"t", kUnits}}),
      wb(A, [](int p, const Params& x) { return std::array<std::int64_t, 4>{1, inv(P(x, "t"), p), 0, 0}; }));
    l("L3", "a^(p^(n+1)) = b^(p^m) = d^p = 1, c^p = a^(p^n), [a,b] = c, [c,a] = 1, [c,b] = d, [d,a] = [d,b] = 1", {},
      no_params(), wconst(A, 1, 0, 0, 0));
    l("L4", "a^(p^(n+1)) = b^(p^(m+1)) = 1, [a,b] = c, c^p = b^(p^m), [c,a] = 1, [b,c] = a^(nu*p^n)", {"nu"},
      over({{"nu", kNu}}),
      wb(A, [](int p, const Params& x) { return std::array<std::int64_t, 4>{0, inv(P(x, "nu"), p), 1, 0}; }));
    l("L5", "a^(p^(n+1)) = b^(p^m) = c^(p^2) = 1, [a,b] = c, [c,a] = 1, [b,c] = a^(nu*p^n)", {"nu"}, over({{"nu", kNu}}),
      wb(A, [](int p, const Params& x) { return std::array<std::int64_t, 4>{0, inv(P(x, "nu"), p), 0, 0}; }));
    l("L6", "a^(p^n) = b^(p^(m+1)) = c^(p^2) = 1, [a,b] = c, [c,a] = 1, [c,b] = c^p*b^(-p^m), [b^(p^m),a] = 1", {},
      no_params(), wconst(A, 0, 0, 1, 1));
    l("L7", "a^(p^n) = b^(p^(m+1)) = d^p = 1, c^p = b^(p^m), [a,b] = c, [c,a] = 1, [c,b] = d, [d,a] = [d,b] = 1", {},
      no_params(), wconst(A, 0, 0, 1, 0));
    l("L8", "a^(p^n) = b^(p^(m+1)) = c^(p^2) = 1, [a,b] = c, [c,a] = 1, [b,c] = b^(p^m)", {}, no_params(),
      wconst(A, 0, 0, 0, 1));
    l("L9", "a^(p^n) = b^(p^m) = c^(p^2) = d^p = 1, [a,b] = c, [c,a] = 1, [c,b] = d, [d,a] = [d,b] = 1", {}, no_params(),
      wconst(A, 0, 0, 0, 0));

    const CaseId B = CaseId::IIIb;
    auto mm = [&](std::string tag, std::string rel, std::vector<std::string> ex, Space sp, Build bd) {
        t.push_back(fam(std::move(tag), B, std::move(rel), Shape::NM, kEWhere, std::move(ex), std::move(sp), std::move(bd)));
    };
    mm("M1", "a^(p^(n+1)) = b^(p^(m+1)) = 1, [a,b] = c, c^p = a^(p^n)*b^(s*nu*p^m), [a,c] = b^(nu*p^m), [b,c] = 1",
       {"s", "nu"}, over({{"s", kHalfM1}, {"nu", kNu}}), wb(B, [](int p, const Params& x) {
           return std::array<std::int64_t, 4>{1, -P(x, "s"), 0, inv(P(x, "nu"), p)};
       }));
    mm("M2", "a^(p^(n+1)) = b^(p^m) = c^(p^2) = 1, [a,b] = c, [c,b] = 1, [c,a] = c^p*a^(-p^n), [a^(p^n),b] = 1", {},
       no_params(), wconst(B, 1, 1, 0, 0));
    mm("M3", "a^(p^(n+1)) = b^(p^m) = d^p = 1, [a,b] = c, c^p = a^(p^n), [c,a] = d, [c,b] = 1, [d,a] = [d,b] = 1", {},
       no_params(), wconst(B, 1, 0, 0, 0));
    mm("M4", "a^(p^(n+1)) = b^(p^(m+1)) = 1, [a,b] = c, c^p = b^(p^m), [b,c] = 1, [a,c] = a^(p^n)", {}, no_params(),
       wconst(B, 0, 1, 1, 0));
    mm("M5", "a^(p^(n+1)) = b^(p^m) = c^(p^2) = 1, [a,b] = c, [b,c] = 1, [a,c] = a^(p^n)", {}, no_params(),
       wconst(B, 0, 1, 0, 0));
    mm("M6", "a^(p^n) = b^(p^(m+1)) = c^(p^2) = 1, [a,b] = c, [c,b] = 1, [c,a] = c^(t*p)*b^(-t*p^m), [b^(p^m),a] = 1",
       {"t"}, over({{"t", kUnits}}),
       wb(B, [](int p, const Params& x) { return std::array<std::int64_t, 4>{0, 0, 1, inv(P(x, "t"), p)}; }));
    mm("M7", "a^(p^n) = b^(p^(m+1)) = d^p = 1, c^p = b^(p^m), [a,b] = c, [c,b] = 1, [c,a] = d, [d,a] = [d,b] = 1", {},
       no_params(), wconst(B, 0, 0, 1, 0));
    mm("M8", "a^(p^n) = b^(p^(m+1)) = c^(p^2) = 1, [a,b] = c, [c,b] = 1, [a,c] = b^(nu*p^m)", {"nu"}, over({{"nu", kNu}}),
       wb(B, [](int p, const Params& x) { return std::array<std::int64_t, 4>{0, 0, 0, inv(P(x, "nu"), p)}; }));
    mm("M9", "a^(p^n) = b^(p^m) = c^(p^2) = d^p = 1, [a,b] = c, [c,b] = 1, [c,a] = d, [d,a] = [d,b] = 1", {}, no_params(),
       wconst(B, 0, 0, 0, 0));
}

void add_case_iv(std::vector<FamilySpec>& t) {
    const CaseId C = CaseId::IV;
    const char* N[] = {
        "a^8 = b^8 = c^2 = 1, [a,b] = c, [c,a] = b^4, [c,b] = a^4, [a^4,b] = 1",
        "a^8 = b^8 = c^2 = 1, [a,b] = c, [c,a] = a^4, [c,b] = b^4",
        "a^8 = b^8 = c^2 = 1, [a,b] = c, [c,a] = a^4*b^4, [c,b] = a^4, [a^4,b] = 1",
        "a^8 = b^4 = c^2 = d^2 = 1, [a,b] = c, [c,a] = a^4, [c,b] = d, [d,a] = [d,b] = 1",
        "a^4 = b^8 = c^2 = d^2 = 1, [a,b] = c, [c,a] = b^4, [c,b] = d, [d,a] = [d,b] = 1",
        "a^4 = b^4 = c^2 = d^2 = e^2 = 1, [a,b] = c, [c,a] = d, [c,b] = e, [d,a] = [d,b] = [e,a] = [e,b] = 1",
        "a^8 = b^4 = c^4 = 1, [a,b] = c, [c,a] = c^2, [c,b] = a^4",
        "a^8 = b^8 = 1, [a,b] = c, [c,a] = c^2 = b^4, [c,b] = a^4",
        "a^8 = c^4 = 1, [a,b] = c, [c,a] = c^2, [c,b] = a^4 = b^4",
        "a^8 = b^8 = 1, [a,b] = c, [c,a] = c^2 = a^4*b^4, [c,b] = a^4",
        "a^8 = b^8 = 1, [a,b] = c, [c,a] = c^2 = a^4, [c,b] = b^4",
        "a^4 = b^8 = c^4 = 1, [a,b] = c, [c,a] = c^2, [c,b] = b^4",
        "a^4 = b^8 = c^4 = 1, [a,b] = c, [c,a] = c^2, [c,b] = c^2*b^4, [c^2,b] = [b^4,a] = 1",
        "a^4 = b^4 = c^4 = d^2 = 1, [a,b] = c, [c,a] = c^2, [c,b] = d, [d,a] = [d,b] = 1",
        "a^8 = b^4 = d^2 = 1, [a,b] = c, [c,a] = c^2 = a^4, [c,b] = d, [d,a] = [d,b] = 1",
        "a^8 = d^2 = 1, [a,b] = c, [c,a] = c^2 = a^4 = b^4, [c,b] = d, [d,a] = [d,b] = 1",
    };
    for (int k = 0; k < 16; ++k) t.push_back(fixed("N" + std::to_string(k + 1), C, N[k], 2, 2, 2));
    const char* O[] = {
        "a^3 = b^3 = c^3 = d^3 = e^3 = 1, [a,b] = c, [c,a] = d, [c,b] = e, [d,a] = [d,b] = [e,a] = [e,b] = 1",
        "a^3 = b^9 = c^3 = d^3 = 1, [a,b] = c, [c,a] = d, [c,b] = b^3, [d,a] = [d,b] = 1",
        "a^9 = c^3 = d^3 = 1, b^3 = a^3, [a,b] = c, [c,a] = d, [c,b] = a^3, [d,a] = [d,b] = 1",
        "a^9 = b^3 = c^3 = d^3 = 1, [a,b] = c, [c,a] = d, [c,b] = a^(-3), [d,a] = [d,b] = 1",
        "a^9 = b^9 = c^3 = 1, [a,b] = c, [c,a] = a^3, [c,b] = b^3",
        "a^9 = b^9 = c^3 = 1, [a,b] = c, [c,a] = b^3, [c,b] = a^3, [a^3,b] = 1",
        "a^9 = b^9 = c^3 = 1, [a,b] = c, [c,a] = b^(-3), [c,b] = a^3, [a^3,b] = 1",
    };
    for (int k = 0; k < 7; ++k) t.push_back(fixed("O" + std::to_string(k + 1), C, O[k], 3, 1, 1));

    auto pf = [&](std::string tag, Where wh, std::string rel, std::vector<std::string> ex, Space sp, Build bd) {
        t.push_back(fam(std::move(tag), C, std::move(rel), Shape::NEqualM, std::move(wh), std::move(ex), std::move(sp),
                        std::move(bd)));
    };
    using A4 = std::array<std::int64_t, 4>;
    pf("P1", kP14, "a^(p^(n+1)) = b^(p^(n+1)) = c^p = 1, [a,b] = c, [c,a] = a^(p^n), [c,b] = b^(p^n)", {}, no_params(),
       wconst(C, 0, 1, -1, 0));
    pf("P2", kP14, "a^(p^(n+1)) = b^(p^(n+1)) = c^p = 1, [a,b] = c, [c,a] = a^(p^n)*b^(nu*p^n), [c,b] = b^(p^n)", {"nu"},
       over({{"nu", kNu}}), wb(C, [](int, const Params& x) { return A4{P(x, "nu"), 1, -1, 0}; }));
    pf("P3", kP14,
       "a^(p^(n+1)) = b^(p^(n+1)) = c^p = 1, [a,b] = c, [c,a] = b^(nu*p^n), [c,b] = a^(-p^n), [a^(p^n),b] = 1", {"nu"},
       over({{"nu", kNu}}), wb(C, [](int p, const Params& x) { return A4{1, 0, 0, inv(P(x, "nu"), p)}; }));
    pf("P4", kP14,
       "a^(p^(n+1)) = b^(p^(n+1)) = c^p = 1, [a,b] = c, [c,a]^(1+r) = a^(p^n)*b^(p^n), [c,b]^(1+r) = a^(-r*p^n)*b^(p^n), "
       "[a^(p^n),b] = 1",
       {"r"}, over({{"r", kR}}), wb(C, [](int, const Params& x) { return A4{1, 1, -1, P(x, "r")}; }));
    pf("P5", kP57, "a^(2^(n+1)) = b^(2^(n+1)) = c^2 = 1, [a,b] = c, [c,a] = b^(2^n), [c,b] = a^(2^n), [a^(2^n),b] = 1", {},
       no_params(), wconst(C, 1, 0, 0, 1));
    pf("P6", kP57, "a^(2^(n+1)) = b^(2^(n+1)) = c^2 = 1, [a,b] = c, [c,a] = a^(2^n), [c,b] = b^(2^n)", {}, no_params(),
       wconst(C, 0, 1, 1, 0));
    pf("P7", kP57,
       "a^(2^(n+1)) = b^(2^(n+1)) = c^2 = 1, [a,b] = c, [c,a] = a^(2^n)*b^(2^n), [c,b] = a^(2^n), [a^(2^n),b] = 1", {},
       no_params(), wconst(C, 1, 0, 1, 1));
    pf("P8", kP810, "a^(p^(n+1)) = b^(p^n) = c^p = d^p = 1, [a,b] = c, [c,a] = a^(p^n), [c,b] = d, [d,a] = [d,b] = 1", {},
       no_params(), wconst(C, 0, 1, 0, 0));
    pf("P9", kP810, "a^(p^n) = b^(p^(n+1)) = c^p = d^p = 1, [a,b] = c, [c,a] = b^(nu*p^n), [c,b] = d, [d,a] = [d,b] = 1",
       {"nu"}, over({{"nu", kNu}}), wb(C, [](int p, const Params& x) { return A4{0, 0, 0, inv(P(x, "nu"), p)}; }));
    pf("P10", kP810,
       "a^(p^n) = b^(p^n) = c^p = d^p = e^p = 1, [a,b] = c, [c,a] = d, [c,b] = e, [d,a] = [d,b] = [e,a] = [e,b] = 1", {},
       no_params(), wconst(C, 0, 0, 0, 0));

    const ZVec vx{1, 0}, vy{0, 1};
    auto q = [&](std::string tag, std::string rel, std::vector<std::string> ex, Space sp, Build bd) {
        t.push_back(
            fam(std::move(tag), C, std::move(rel), Shape::NEqualM, kQWhere, std::move(ex), std::move(sp), std::move(bd)));
    };
    // the printed c-exponent of the last relation of Q1 is nu*t*p^n, which is trivial; nu*t*p as in V1 is meant
    q("Q1", "a^(p^(n+1)) = b^(p^(n+1)) = 1, [a,b] = c, [c,a] = c^p = b^(s*p^n), [c,b] = a^(-nu*p^n)*c^(nu*t*p)",
      {"s", "t", "nu"}, over({{"s", kUnits}, {"t", kHalf}, {"nu", kNu}}), wb(C, [](int p, const Params& x) {
          return A4{inv(P(x, "nu"), p), P(x, "t"), 0, inv(P(x, "s"), p)};
      }, vy));
    q("Q2", "a^(p^(n+1)) = b^(p^n) = c^(p^2) = 1, [a,b] = c, [c,a] = c^p, [c,b] = a^(-nu*p^n)*c^(t*nu*p)", {"t", "nu"},
      over({{"t", kHalf}, {"nu", kNu}}),
      wb(C, [](int p, const Params& x) { return A4{inv(P(x, "nu"), p), P(x, "t"), 0, 0}; }, vy));
    q("Q3", "a^(p^(n+1)) = b^(p^(n+1)) = 1, [a,b] = c, [c,a] = c^p = a^(p^n), [c,b] = a^(s*p^n)*b^(p^n)", {"s"},
      over({{"s", kField}}), wb(C, [](int, const Params& x) { return A4{0, 1, -1, -P(x, "s")}; }, vy));
    q("Q4", "a^(p^(n+1)) = b^(p^(n+1)) = 1, [a,b] = c, [c,a] = c^p = a^(p^n), [c,b] = b^(s*p^n)", {"s"},
      over({{"s", kQ4}}), wb(C, [](int p, const Params& x) { return A4{0, 1, -inv(P(x, "s"), p), 0}; }, vy));
    q("Q5", "a^(p^(n+1)) = b^(p^n) = d^p = 1, [a,b] = c, [c,a] = c^p = a^(p^n), [c,b] = d, [d,a] = [d,b] = 1", {},
      no_params(), wconst(C, 0, 1, 0, 0, vy));
    q("Q6", "a^(p^n) = b^(p^(n+1)) = c^(p^2) = 1, [a,b] = c, [c,a] = c^p, [c,b] = b^(p^n)", {}, no_params(),
      wconst(C, 0, 0, -1, 0, vy));
    q("Q7", "a^(p^n) = b^(p^(n+1)) = d^p = 1, [a,b] = c, [c,a] = c^p = b^(s*p^n), [c,b] = d, [d,a] = [d,b] = 1", {"s"},
      over({{"s", kUnits}}), wb(C, [](int p, const Params& x) { return A4{0, 0, 0, inv(P(x, "s"), p)}; }, vy));
    q("Q8", "a^(p^n) = b^(p^n) = c^(p^2) = d^p = 1, [a,b] = c, [c,a] = c^p, [c,b] = d, [d,a] = [d,b] = 1", {},
      no_params(), wconst(C, 0, 0, 0, 0, vy));

    const char* R[] = {
        "a^4 = b^2 = c^4 = d^2 = 1, [a,b] = c, [c,a] = d, [c,b] = c^2, [d,a] = [d,b] = 1",
        "a^4 = b^4 = c^4 = 1, [a,b] = c, [c,a] = b^2, [c,b] = c^2",
        "a^8 = b^2 = c^4 = 1, [a,b] = c, [c,a] = a^4, [c,b] = c^2",
        "a^8 = c^4 = 1, b^2 = a^4, [a,b] = c, [c,a] = a^4, [c,b] = c^2",
        "a^8 = b^2 = c^4 = 1, [a,b] = c, [c,a] = a^4*c^2, [c,b] = c^2, [c^2,a] = 1",
        "a^8 = b^4 = 1, c^2 = a^4*b^2, [a,b] = c, [c,a] = b^2, [c,b] = c^2",
        "a^8 = b^4 = 1, c^2 = b^2, [a,b] = c, [c,a] = a^4*b^2, [c,b] = c^2",
    };
    for (int k = 0; k < 7; ++k) t.push_back(fixed("R" + std::to_string(k + 1), C, R[k], 2, 2, 1));

    auto s = [&](std::string tag, std::string rel, std::vector<std::string> ex, Space sp, Build bd) {
        t.push_back(fam(std::move(tag), C, std::move(rel), Shape::NM, kSWhere, std::move(ex), std::move(sp), std::move(bd)));
    };
    s("S1", "a^(p^(n+1)) = b^(p^(m+1)) = c^p = 1, [a,b] = c, [c,a] = a^(p^n), [c,b] = b^(s*p^m)", {"s"},
      over({{"s", kUnits}}), wb(C, [](int p, const Params& x) { return A4{0, 1, -inv(P(x, "s"), p), 0}; }));
    s("S2", "a^(p^(n+1)) = b^(p^(m+1)) = c^p = 1, [a,b] = c, [c,a] = b^(nu1*p^m), [c,b] = a^(-nu2*p^n), [a,b^(p^m)] = 1",
      {"nu1", "nu2"}, over({{"nu1", kNu}, {"nu2", kNu}}),
      wb(C, [](int p, const Params& x) { return A4{inv(P(x, "nu2"), p), 0, 0, inv(P(x, "nu1"), p)}; }));
    s("S3", "a^(p^(n+1)) = b^(p^m) = c^p = d^p = 1, [a,b] = c, [c,a] = d, [c,b] = a^(-nu*p^n), [d,a] = [d,b] = 1", {"nu"},
      over({{"nu", kNu}}), wb(C, [](int p, const Params& x) { return A4{inv(P(x, "nu"), p), 0, 0, 0}; }));
    s("S4", "a^(p^n) = b^(p^(m+1)) = c^p = d^p = 1, [a,b] = c, [c,a] = b^(nu*p^m), [c,b] = d, [d,a] = [d,b] = 1", {"nu"},
      over({{"nu", kNu}}), wb(C, [](int p, const Params& x) { return A4{0, 0, 0, inv(P(x, "nu"), p)}; }));
    s("S5", "a^(p^n) = b^(p^(m+1)) = c^p = d^p = 1, [a,b] = c, [c,a] = d, [c,b] = b^(p^m), [d,a] = [d,b] = 1", {},
      no_params(), wconst(C, 0, 0, -1, 0));
    s("S6", "a^(p^(n+1)) = b^(p^m) = c^p = d^p = 1, [a,b] = c, [c,a] = a^(p^n), [c,b] = d, [d,a] = [d,b] = 1", {},
      no_params(), wconst(C, 0, 1, 0, 0));
    s("S7",
      "a^(p^n) = b^(p^m) = c^p = d^p = e^p = 1, [a,b] = c, [c,a] = d, [c,b] = e, [d,a] = [d,b] = [e,a] = [e,b] = 1", {},
      no_params(), wconst(C, 0, 0, 0, 0));

    auto tt = [&](std::string tag, std::string rel, Build bd) {
        t.push_back(fam(std::move(tag), C, std::move(rel), Shape::NWithM1, kB, {}, no_params(), std::move(bd)));
    };
    tt("T1", "a^(2^(n+1)) = b^4 = 1, c^2 = b^2, [a,b] = c, [c,a] = a^(2^n), [c,b] = c^2", wconst(C, 0, 1, 1, 0, vx));
    tt("T2", "a^(2^(n+1)) = b^4 = 1, c^2 = a^(2^n), [a,b] = c, [c,a] = b^2, [c,b] = c^2", wconst(C, 1, 0, 0, 1, vx));
    tt("T3", "a^(2^(n+1)) = b^2 = d^2 = 1, c^2 = a^(2^n), [a,b] = c, [c,a] = d, [c,b] = c^2, [d,a] = [d,b] = 1",
       wconst(C, 1, 0, 0, 0, vx));
    tt("T4", "a^(2^n) = b^4 = c^4 = 1, [a,b] = c, [c,a] = b^2, [c,b] = c^2", wconst(C, 0, 0, 0, 1, vx));
    tt("T5", "a^(2^n) = b^4 = d^2 = 1, c^2 = b^2, [a,b] = c, [c,a] = d, [c,b] = c^2, [d,a] = [d,b] = 1",
       wconst(C, 0, 0, 1, 0, vx));
    tt("T6", "a^(2^(n+1)) = b^2 = c^4 = 1, [a,b] = c, [c,a] = a^(2^n), [c,b] = c^2", wconst(C, 0, 1, 0, 0, vx));
    tt("T7", "a^(2^n) = b^2 = c^4 = d^2 = 1, [a,b] = c, [c,a] = d, [c,b] = c^2, [d,a] = [d,b] = 1",
       wconst(C, 0, 0, 0, 0, vx));

    auto u = [&](std::string tag, std::string rel, std::vector<std::string> ex, Space sp, Build bd) {
        t.push_back(fam(std::move(tag), C, std::move(rel), Shape::NM, kEWhere, std::move(ex), std::move(sp), std::move(bd)));
    };
    u("U1", "a^(p^(n+1)) = b^(p^(m+1)) = 1, [a,b] = c, [c,a] = a^(p^n), [c,b] = c^(-p) = b^(s*p^m)", {"s"},
      over({{"s", kUnits}}), wb(C, [](int p, const Params& x) { return A4{0, 1, -inv(P(x, "s"), p), 0}; }, vx));
    u("U2", "a^(p^(n+1)) = b^(p^(m+1)) = 1, [a,b] = c, [c,a] = b^(nu*p^m), [c,b] = c^(-p) = a^(s*p^n)", {"s", "nu"},
      over({{"s", kUnits}, {"nu", kNu}}),
      wb(C, [](int p, const Params& x) { return A4{-inv(P(x, "s"), p), 0, 0, inv(P(x, "nu"), p)}; }, vx));
    // nu is named in the where-clause but does not occur in the relations
    u("U3", "a^(p^(n+1)) = b^(p^m) = d^p = 1, [a,b] = c, [c,b] = c^(-p) = a^(s*p^n), [c,a] = d, [d,a] = [d,b] = 1", {"s"},
      over({{"s", kUnits}}), wb(C, [](int p, const Params& x) { return A4{-inv(P(x, "s"), p), 0, 0, 0}; }, vx));
    u("U4", "a^(p^n) = b^(p^(m+1)) = c^(p^2) = 1, [a,b] = c, [c,a] = b^(nu*p^m), [c,b] = c^(-p)", {"nu"},
      over({{"nu", kNu}}), wb(C, [](int p, const Params& x) { return A4{0, 0, 0, inv(P(x, "nu"), p)}; }, vx));
    u("U5", "a^(p^n) = b^(p^(m+1)) = d^p = 1, [a,b] = c, [c,a] = d, [c,b] = c^(-p) = b^(p^m), [d,a] = [d,b] = 1", {},
      no_params(), wconst(C, 0, 0, -1, 0, vx));
    u("U6", "a^(p^(n+1)) = b^(p^m) = c^(p^2) = 1, [a,b] = c, [c,a] = a^(p^n), [c,b] = c^(-p)", {}, no_params(),
      wconst(C, 0, 1, 0, 0, vx));
    u("U7", "a^(p^n) = b^(p^m) = c^(p^2) = d^p = 1, [a,b] = c, [c,a] = d, [c,b] = c^(-p), [d,a] = [d,b] = 1", {},
      no_params(), wconst(C, 0, 0, 0, 0, vx));

    auto v = [&](std::string tag, std::string rel, std::vector<std::string> ex, Space sp, Build bd) {
        t.push_back(fam(std::move(tag), C, std::move(rel), Shape::NM, kEWhere, std::move(ex), std::move(sp), std::move(bd)));
    };
    v("V1", "a^(p^(n+1)) = b^(p^(m+1)) = 1, [a,b] = c, [c,a] = c^p = b^(s*p^m), [c,b] = a^(-nu*p^n)*c^(nu*t*p)",
      {"s", "t", "nu"}, over({{"s", kUnits}, {"t", kHalf}, {"nu", kNu}}), wb(C, [](int p, const Params& x) {
          return A4{inv(P(x, "nu"), p), P(x, "t"), 0, inv(P(x, "s"), p)};
      }, vy));
    v("V2", "a^(p^(n+1)) = b^(p^m) = c^(p^2) = 1, [a,b] = c, [c,a] = c^p, [c,b] = a^(-nu*p^n)*c^(t*nu*p)", {"t", "nu"},
      over({{"t", kHalf}, {"nu", kNu}}),
      wb(C, [](int p, const Params& x) { return A4{inv(P(x, "nu"), p), P(x, "t"), 0, 0}; }, vy));
    v("V3", "a^(p^(n+1)) = b^(p^(m+1)) = 1, [a,b] = c, [c,a] = c^p = a^(p^n), [c,b] = b^(s*p^m)", {"s"},
      over({{"s", kUnits}}), wb(C, [](int p, const Params& x) { return A4{0, 1, -inv(P(x, "s"), p), 0}; }, vy));
    v("V4", "a^(p^(n+1)) = b^(p^m) = d^p = 1, [a,b] = c, [c,a] = c^p = a^(p^n), [c,b] = d, [d,a] = [d,b] = 1", {},
      no_params(), wconst(C, 0, 1, 0, 0, vy));
    v("V5", "a^(p^n) = b^(p^(m+1)) = c^(p^2) = 1, [a,b] = c, [c,a] = c^p, [c,b] = b^(p^m)*c^(s*p), [c^p,b] = 1", {"s"},
      over({{"s", kField}}), wb(C, [](int, const Params& x) { return A4{0, 0, -1, -P(x, "s")}; }, vy));
    v("V6", "a^(p^n) = b^(p^(m+1)) = d^p = 1, [a,b] = c, [c,a] = c^p = b^(s*p^m), [c,b] = d, [d,a] = [d,b] = 1", {"s"},
      over({{"s", kUnits}}), wb(C, [](int p, const Params& x) { return A4{0, 0, 0, inv(P(x, "s"), p)}; }, vy));
    v("V7", "a^(p^n) = b^(p^m) = c^(p^2) = d^p = 1, [a,b] = c, [c,a] = c^p, [c,b] = d, [d,a] = [d,b] = 1", {},
      no_params(), wconst(C, 0, 0, 0, 0, vy));
}

// ---- the 45-entry list ----

struct Entry {
    std::string rel;
    Shape shape;
    int fn, fm;
    Where where;
    std::vector<std::string> extra;
    Space space;
    std::string target;
};

void add_list(std::vector<FamilySpec>& t) {
    const Where p3 = fixed_at(3), p2 = fixed_at(2);
    const Where big = [](int p, int, int) { return p > 3; };
    const Where odd_n = [](int p, int n, int m) { return p > 2 && m == 1 && n > 1; };
    const Where two_n = [](int p, int n, int m) { return p == 2 && m == 1 && n >= 3; };
    const Space nu = over({{"nu", kNu}});
    const Space none = no_params();
    std::vector<Entry> e = {
        {"", Shape::Fixed, 1, 1, p3, {"r"}, nullptr, "F"},
        {"a^(p^2) = b^p = c^p = 1, [a,b] = c, [c,a] = 1, [c,b] = a^(nu*p)", Shape::Fixed, 1, 1, big, {"nu"}, nu, "G1"},
        {"a^p = b^p = c^p = d^p = 1, [a,b] = c, [c,a] = d, [c,b] = 1, [d,a] = [d,b] = 1", Shape::Fixed, 1, 1, big, {},
         none, "G2"},
        {"a^(p^2) = b^p = c^p = 1, [a,b] = c, [c,a] = a^p, [c,b] = 1", Shape::Fixed, 1, 1, big, {}, none, "G3"},
        {"a^4 = b^2 = c^2 = d^2 = 1, [a,b] = c, [c,a] = d, [c,b] = [d,a] = [d,b] = 1", Shape::Fixed, 2, 1, p2, {}, none,
         "H1"},
        {"a^8 = b^2 = c^2 = 1, [a,b] = c, [c,a] = a^4, [c,b] = 1", Shape::Fixed, 2, 1, p2, {}, none, "H2"},
        {"a^8 = c^2 = 1, b^2 = a^4, [a,b] = c, [c,a] = b^2, [c,b] = 1", Shape::Fixed, 2, 1, p2, {}, none, "H3"},
        {"a^(2^n) = b^2 = c^2 = d^2 = 1, [a,b] = c, [c,a] = d, [c,b] = [d,a] = [d,b] = 1", Shape::NWithM1, 0, 1, two_n, {},
         none, "I1"},
        {"a^(2^(n+1)) = b^2 = c^2 = 1, [a,b] = c, [c,a] = a^(2^n), [c,b] = 1", Shape::NWithM1, 0, 1, two_n, {}, none,
         "I2"},
        {"a^(2^n) = b^4 = c^2 = 1, [a,b] = c, [c,a] = b^2, [c,b] = 1", Shape::NWithM1, 0, 1, two_n, {}, none, "I3"},
        {"a^(p^(n+1)) = b^p = c^p = 1, [a,b] = c, [c,a] = 1, [c,b] = a^(nu*p^n)", Shape::NWithM1, 0, 1, odd_n, {"nu"}, nu,
         "J1"},
        {"a^(p^(n+1)) = b^p = c^p = 1, [a,b] = c, [c,a] = a^(p^n), [c,b] = 1", Shape::NWithM1, 0, 1, odd_n, {}, none,
         "J2"},
        {"a^(p^n) = b^(p^2) = c^p = 1, [a,b] = c, [c,a] = 1, [c,b] = b^p", Shape::NWithM1, 0, 1, odd_n, {}, none, "J3"},
        {"a^(p^n) = b^(p^2) = c^p = 1, [a,b] = c, [c,a] = b^(nu*p), [c,b] = 1", Shape::NWithM1, 0, 1, odd_n, {"nu"}, nu,
         "J4"},
        {"a^(p^n) = b^p = c^p = d^p = 1, [a,b] = c, [c,a] = 1, [c,b] = d, [d,a] = [d,b] = 1", Shape::NWithM1, 0, 1, odd_n,
         {}, none, "J5"},
        {"a^(p^n) = b^p = c^p = d^p = 1, [a,b] = c, [c,a] = d, [c,b] = 1, [d,a] = [d,b] = 1", Shape::NWithM1, 0, 1, odd_n,
         {}, none, "J6"},
        {"a^3 = b^3 = c^3 = d^3 = e^3 = 1, [a,b] = c, [c,a] = d, [c,b] = e, [d,a] = [d,b] = [e,a] = [e,b] = 1",
         Shape::Fixed, 1, 1, p3, {}, none, "O1"},
        {"a^9 = c^3 = d^3 = 1, b^3 = a^3, [a,b] = c, [c,a] = d, [c,b] = a^3, [d,a] = [d,b] = 1", Shape::Fixed, 1, 1, p3,
         {}, none, "O3"},
        {"a^9 = b^3 = c^3 = d^3 = 1, [a,b] = c, [c,a] = d, [c,b] = a^(-3), [d,a] = [d,b] = 1", Shape::Fixed, 1, 1, p3, {},
         none, "O4"},
        {"a^9 = b^9 = c^3 = 1, [a,b] = c, [c,a] = a^3, [c,b] = b^3", Shape::Fixed, 1, 1, p3, {}, none, "O5"},
        {"a^9 = b^9 = c^3 = 1, [a,b] = c, [c,a] = b^3, [c,b] = a^3, [a^3,b] = 1", Shape::Fixed, 1, 1, p3, {}, none, "O6"},
        {"a^9 = b^9 = c^3 = 1, [a,b] = c, [c,a] = b^(-3), [c,b] = a^3, [a^3,b] = 1", Shape::Fixed, 1, 1, p3, {}, none,
         "O7"},
        {"a^(p^2) = b^(p^2) = c^p = 1, [a,b] = c, [c,a] = a^p*b^(nu*p), [c,b] = b^p", Shape::Fixed, 1, 1, big, {"nu"}, nu,
         "P2"},
        {"a^(p^2) = b^(p^2) = c^p = 1, [a,b] = c, [c,a] = b^(nu*p), [c,b] = a^(-p)", Shape::Fixed, 1, 1, big, {"nu"}, nu,
         "P3"},
        {"a^(p^2) = b^(p^2) = c^p = 1, [a,b] = c, [c,a]^(1+r) = a^p*b^p, [c,b]^(1+r) = a^(-r*p)*b^p", Shape::Fixed, 1, 1,
         big, {"r"}, over({{"r", kR}}), "P4"},
        {"a^(p^2) = b^p = c^p = d^p = 1, [a,b] = c, [c,a] = a^p, [c,b] = d, [d,a] = [d,b] = 1", Shape::Fixed, 1, 1, big, {},
         none, "P8"},
        {"a^p = b^(p^2) = c^p = d^p = 1, [a,b] = c, [c,a] = b^(nu*p), [c,b] = d, [d,a] = [d,b] = 1", Shape::Fixed, 1, 1,
         big, {"nu"}, nu, "P9"},
        {"a^4 = b^2 = c^4 = d^2 = 1, [a,b] = c, [c,a] = d, [c,b] = c^2, [d,a] = [d,b] = 1", Shape::Fixed, 2, 1, p2, {},
         none, "R1"},
        {"a^4 = b^4 = c^4 = 1, [a,b] = c, [c,a] = b^2, [c,b] = c^2", Shape::Fixed, 2, 1, p2, {}, none, "R2"},
        {"a^8 = b^2 = c^4 = 1, [a,b] = c, [c,a] = a^4, [c,b] = c^2", Shape::Fixed, 2, 1, p2, {}, none, "R3"},
        {"a^8 = c^4 = 1, b^2 = a^4, [a,b] = c, [c,a] = a^4, [c,b] = c^2", Shape::Fixed, 2, 1, p2, {}, none, "R4"},
        {"a^8 = b^2 = c^4 = 1, [a,b] = c, [c,a] = a^4*c^2, [c,b] = c^2, [c^2,a] = 1", Shape::Fixed, 2, 1, p2, {}, none,
         "R5"},
        {"a^8 = b^4 = 1, c^2 = a^4*b^2, [a,b] = c, [c,a] = b^2, [c,b] = c^2", Shape::Fixed, 2, 1, p2, {}, none, "R6"},
        {"a^8 = b^4 = 1, c^2 = b^2, [a,b] = c, [c,a] = a^4*b^2, [c,b] = c^2", Shape::Fixed, 2, 1, p2, {}, none, "R7"},
        {"a^(p^(n+1)) = b^(p^2) = c^p = 1, [a,b] = c, [c,a] = a^(p^n), [c,b] = b^(s*p)", Shape::NWithM1, 0, 1, odd_n,
         {"s"}, over({{"s", kUnits}}), "S1"},
        {"a^(p^(n+1)) = b^(p^2) = c^p = 1, [a,b] = c, [c,a] = b^(nu1*p), [c,b] = a^(-nu2*p^n)", Shape::NWithM1, 0, 1,
         odd_n, {"nu1", "nu2"}, over({{"nu1", kNu}, {"nu2", kNu}}), "S2"},
        {"a^(p^(n+1)) = b^p = c^p = d^p = 1, [a,b] = c, [c,a] = d, [c,b] = a^(-nu*p^n), [d,a] = [d,b] = 1",
         Shape::NWithM1, 0, 1, odd_n, {"nu"}, nu, "S3"},
        {"a^(p^(n+1)) = b^p = c^p = d^p = 1, [a,b] = c, [c,a] = a^(p^n), [c,b] = d, [d,a] = [d,b] = 1", Shape::NWithM1, 0,
         1, odd_n, {}, none, "S6"},
        {"a^(2^(n+1)) = b^4 = 1, c^2 = b^2, [a,b] = c, [c,a] = a^(2^n), [c,b] = c^2", Shape::NWithM1, 0, 1, two_n, {},
         none, "T1"},
        {"a^(2^(n+1)) = b^4 = 1, c^2 = a^(2^n), [a,b] = c, [c,a] = b^2, [c,b] = c^2", Shape::NWithM1, 0, 1, two_n, {},
         none, "T2"},
        {"a^(2^(n+1)) = b^2 = d^2 = 1, c^2 = a^(2^n), [a,b] = c, [c,a] = d, [c,b] = c^2, [d,a] = [d,b] = 1",
         Shape::NWithM1, 0, 1, two_n, {}, none, "T3"},
        {"a^(2^n) = b^4 = c^4 = 1, [a,b] = c, [c,a] = b^2, [c,b] = c^2", Shape::NWithM1, 0, 1, two_n, {}, none, "T4"},
        {"a^(2^n) = b^4 = d^2 = 1, c^2 = b^2, [a,b] = c, [c,a] = d, [c,b] = c^2, [d,a] = [d,b] = 1", Shape::NWithM1, 0, 1,
         two_n, {}, none, "T5"},
        {"a^(2^(n+1)) = b^2 = c^4 = 1, [a,b] = c, [c,a] = a^(2^n), [c,b] = c^2", Shape::NWithM1, 0, 1, two_n, {}, none,
         "T6"},
        {"a^(2^n) = b^2 = c^4 = d^2 = 1, [a,b] = c, [c,a] = d, [c,b] = c^2, [d,a] = [d,b] = 1", Shape::NWithM1, 0, 1,
         two_n, {}, none, "T7"},
    };
    for (std::size_t k = 0; k < e.size(); ++k) {
        auto& x = e[k];
        FamilySpec s;
        s.tag = "S7-" + std::to_string(k + 1);
        s.case_id = CaseId::VII;
        s.relations = x.rel;
        s.shape = x.shape;
        s.fixed_n = x.fn;
        s.fixed_m = x.fm;
        s.where = x.where;
        s.extra = x.extra;
        s.space = x.space;
        s.target = x.target;
        const std::string target = x.target;
        const int fn = x.fn, fm = x.fm;
        s.counterpart = [target, fn, fm](const IsoType& in) {
            IsoType out = in;
            out.tag = target;
            out.n.reset();
            out.m.reset();
            const int n = in.n ? *in.n : fn;
            const int m = fm;
            const auto& ts = spec_for(target);
            switch (ts.shape) {
                case Shape::Fixed: break;
                case Shape::NWithM1:
                case Shape::NEqualM: out.n = n; break;
                case Shape::MEqualN: out.m = m; break;
                case Shape::NM:
                    out.n = n;
                    out.m = m;
                    break;
            }
            return out;
        };
        t.push_back(std::move(s));
    }
}

std::vector<FamilySpec> make_table() {
    std::vector<FamilySpec> t;
    add_case_i(t);
    add_case_ii(t);
    add_case_iii(t);
    add_case_iv(t);
    std::map<std::string, std::size_t> at;
    for (std::size_t i = 0; i < t.size(); ++i) at[t[i].tag] = i;
    add_list(t);
    // list entries take the case and parameter space of their counterpart
    for (auto& s : t) {
        if (s.case_id != CaseId::VII) continue;
        const auto& target = t[at.at(s.target)];
        s.structural = target.structural;
        if (!s.space) s.space = target.space;
    }
    return t;
}

struct FrozenEntry {
    const char* tag;
    int r;
    GroupData d;
};

const std::vector<FrozenEntry> kFrozen = {
#include "frozen_data.inc"
};

}  // namespace

const std::vector<FamilySpec>& family_specs() {
    static const std::vector<FamilySpec> t = make_table();
    return t;
}

const FamilySpec& spec_for(const std::string& tag) {
    static const std::map<std::string, const FamilySpec*> index = [] {
        std::map<std::string, const FamilySpec*> m;
        for (const auto& s : family_specs()) m[s.tag] = &s;
        return m;
    }();
    auto it = index.find(tag);
    if (it == index.end()) fail(ErrorCode::InvalidArgument, "unknown type '" + tag + "'");
    return *it->second;
}

const GroupData* frozen_datum(const std::string& tag, int p, const Params& x) {
    int r = 0;
    if (auto it = x.find("r"); it != x.end()) r = static_cast<int>(it->second);
    for (const auto& e : kFrozen)
        if (tag == e.tag && e.d.p == p && (tag != "F" || e.r == r)) return &e.d;
    return nullptr;
}

int f_variant_count() {
    int k = 0;
    for (const auto& e : kFrozen)
        if (std::string(e.tag) == "F") ++k;
    return k;
}

}  // namespace pga::detail
