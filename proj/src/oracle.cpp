#include "pgatlas/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <set>

#include "pgatlas/error.hpp"
#include "pgatlas/relations.hpp"

namespace pga {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

using ElemInv = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;

struct Prepared {
    Group g;
    std::vector<Elem> el;
    std::vector<ElemInv> inv;
    Fingerprint fp;

    explicit Prepared(const GroupData& d) : g(d) {
        g.require_enumerable("isomorphism test");
        const int p = g.p();
        const Idx n = static_cast<Idx>(g.order());
        el.resize(n);
        for (Idx ix = 0; ix < n; ++ix) el[ix] = g.elem(ix);
        std::vector<std::uint64_t> ord(n), cent(n, 0), roots(n, 0);
        std::vector<char> is_power(n, 0);
        for (Idx ix = 0; ix < n; ++ix) {
            ord[ix] = g.elem_order(el[ix]);
            Idx pw = g.index(g.pow(el[ix], p));
            roots[pw]++;
            is_power[pw] = 1;
        }
        for (Idx x = 0; x < n; ++x)
            for (Idx y = x; y < n; ++y)
                if (g.mul(el[x], el[y]) == g.mul(el[y], el[x])) {
                    cent[x]++;
                    if (y != x) cent[y]++;
                }
        inv.resize(n);
        for (Idx ix = 0; ix < n; ++ix) {
            inv[ix] = {ord[ix], cent[ix], roots[ix]};
            fp.classes[inv[ix]]++;
        }
        fp.power_image = static_cast<std::uint64_t>(std::count(is_power.begin(), is_power.end(), 1));
        Structure s = structure(g);
        fp.order = s.order;
        fp.abelianization = s.abelianization;
        fp.derived = s.derived;
        fp.g3 = s.g3;
        fp.center = s.center;
    }
};

// z_t as a word in c^p, [c,a], [c,b]: which of the three to use and with what exponents.
struct ZWords {
    std::vector<int> use;                 // indices into (gamma, delta, epsilon)
    std::vector<std::array<int, 2>> exp;  // exp[s][t]: exponent of basis element s in z_t
};

ZWords z_words(const GroupData& d) {
    const int p = d.p;
    const ZVec v[3] = {d.gamma, d.delta, d.epsilon};
    ZWords w;
    if (d.zrank == 1) {
        for (int s = 0; s < 3; ++s)
            if (v[s][0] != 0) {
                w.use = {s};
                w.exp = {{f_inv(v[s][0], p), 0}};
                return w;
            }
    } else {
        for (int s = 0; s < 3; ++s)
            for (int t = s + 1; t < 3; ++t) {
                Mat2 m = mat(v[s][0], v[t][0], v[s][1], v[t][1], p);
                if (!mat_invertible(m, p)) continue;
                Mat2 mi = mat_inv(m, p);
                w.use = {s, t};
                w.exp = {{mi(0, 0), mi(0, 1)}, {mi(1, 0), mi(1, 1)}};
                return w;
            }
    }
    fail(ErrorCode::NotPropertyP, "gamma, delta, epsilon do not span Z");
}

std::optional<std::pair<Elem, Elem>> iso_search(const Prepared& G, const Prepared& H) {
    if (G.fp != H.fp) return std::nullopt;
    const Group& g = G.g;
    const Group& h = H.g;
    const GroupData& d = g.data();
    const int p = d.p;
    const std::int64_t pn = static_cast<std::int64_t>(ipow(p, d.n)), pm = static_cast<std::int64_t>(ipow(p, d.m));
    const ElemInv ia = G.inv[g.index(g.a())], ib = G.inv[g.index(g.b())];
    const ZWords zw = z_words(d);

    std::vector<Elem> xs, ys, xpow, ypow;
    for (std::size_t ix = 0; ix < H.el.size(); ++ix) {
        const Elem& e = H.el[ix];
        if (e.i % p == 0 && e.j % p == 0) continue;  // in Phi(H)
        if (H.inv[ix] == ia) {
            xs.push_back(e);
            xpow.push_back(h.pow(e, pn));
        }
        if (H.inv[ix] == ib) {
            ys.push_back(e);
            ypow.push_back(h.pow(e, pm));
        }
    }

    const Idx N = static_cast<Idx>(g.order());
    std::vector<Elem> X(pn), Y(pm), C(p), U;
    std::vector<Elem> phi(N);
    std::vector<char> hit(N);
    for (std::size_t s = 0; s < xs.size(); ++s) {
        for (std::size_t t = 0; t < ys.size(); ++t) {
            const Elem &x = xs[s], &y = ys[t];
            if (fmod_p(x.i * y.j - x.j * y.i, p) == 0) continue;
            Elem c = h.comm(x, y);
            Elem B[3] = {h.pow(c, p), h.comm(c, x), h.comm(c, y)};
            Elem z[2];
            for (int k = 0; k < d.zrank; ++k)
                for (std::size_t u = 0; u < zw.use.size(); ++u)
                    z[k] = h.mul(z[k], h.pow(B[zw.use[u]], zw.exp[u][k]));
            auto zimg = [&](const ZVec& v) {
                Elem r;
                for (int k = 0; k < d.zrank; ++k) r = h.mul(r, h.pow(z[k], v[k]));
                return r;
            };
            if (xpow[s] != zimg(d.alpha) || ypow[t] != zimg(d.beta) || B[0] != zimg(d.gamma) ||
                B[1] != zimg(d.delta) || B[2] != zimg(d.epsilon))
                continue;
            // the induced map on normal forms, checked to be a bijective homomorphism
            X[0] = Y[0] = C[0] = Elem{};
            for (std::int64_t i = 1; i < pn; ++i) X[i] = h.mul(X[i - 1], x);
            for (std::int64_t j = 1; j < pm; ++j) Y[j] = h.mul(Y[j - 1], y);
            for (int k = 1; k < p; ++k) C[k] = h.mul(C[k - 1], c);
            const int pr = static_cast<int>(ipow(p, d.zrank));
            U.assign(pr, Elem{});
            for (int u = 0; u < pr; ++u) U[u] = zimg({u % p, u / p});
            for (Idx ix = 0; ix < N; ++ix) {
                const Elem& e = G.el[ix];
                int u = d.zrank == 0 ? 0 : e.u0 + p * e.u1;
                phi[ix] = h.mul(h.mul(X[e.i], Y[e.j]), h.mul(C[e.k], U[u]));
            }
            bool good = true;
            std::fill(hit.begin(), hit.end(), 0);
            const Elem a = g.a(), b = g.b();
            for (Idx ix = 0; ix < N && good; ++ix) {
                Idx im = h.index(phi[ix]);
                if (hit[im]) good = false;
                hit[im] = 1;
                if (phi[g.index(g.mul(G.el[ix], a))] != h.mul(phi[ix], x)) good = false;
                if (phi[g.index(g.mul(G.el[ix], b))] != h.mul(phi[ix], y)) good = false;
            }
            if (good) return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

}  // namespace

Fingerprint fingerprint(const Group& g) { return Prepared(g.data()).fp; }

nlohmann::json to_json(const Fingerprint& f) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& [k, v] : f.classes)
        classes.push_back({{"order", std::get<0>(k)}, {"centralizer", std::get<1>(k)}, {"roots", std::get<2>(k)},
                           {"count", v}});
    return {{"order", f.order},     {"abelianization", f.abelianization}, {"derived", f.derived},
            {"g3", f.g3},           {"center", f.center},                 {"power_image", f.power_image},
            {"classes", classes}};
}

std::optional<std::pair<Elem, Elem>> find_isomorphism(const Group& g, const Group& h) {
    if (g.order() != h.order()) return std::nullopt;
    return iso_search(Prepared(g.data()), Prepared(h.data()));
}

bool brute_iso(const GroupData& a, const GroupData& b) {
    Group g(a), h(b);
    if (g.order() != h.order()) return false;
    if (!spans_z(g.data()) || !spans_z(h.data()))
        fail(ErrorCode::NotPropertyP, "brute_iso expects Property-P data");
    return find_isomorphism(g, h).has_value();
}

std::vector<GroupData> enumerate_case(CaseId c, int p, int n, int m) {
    require_supported_prime(p);
    if (c == CaseId::VII) fail(ErrorCode::InvalidArgument, "the list case is not a parameter space");
    std::vector<GroupData> out;
    if (m < 1 || n < m || (p == 2 && n < 2)) return out;
    const int coords = c == CaseId::IV ? 6 : 4;
    const std::uint64_t total = ipow(p, coords);
    for (std::uint64_t code = 0; code < total; ++code) {
        int e[6] = {0, 0, 0, 0, 0, 0};
        std::uint64_t x = code;
        for (int k = 0; k < coords; ++k) {
            e[k] = static_cast<int>(x % p);
            x /= p;
        }
        CharData ch;
        ch.case_id = c;
        ch.p = p;
        ch.n = n;
        ch.m = m;
        ch.w = mat(e[0], e[1], e[2], e[3], p);
        ch.v = {e[4], e[5]};
        GroupData d = datum_from_char(ch);
        if (!spans_z(d) || !check_admissible(d)) continue;
        if (structural_case(d) != c) continue;
        out.push_back(d);
    }
    return out;
}

namespace {

struct PreparedBucket {
    std::shared_ptr<Prepared> rep;
    std::vector<GroupData> members;
};

std::vector<PreparedBucket> bucket_prepared(const std::vector<GroupData>& data) {
    std::vector<PreparedBucket> out;
    for (const auto& d : data) {
        auto pd = std::make_shared<Prepared>(d);
        bool placed = false;
        for (auto& b : out) {
            if (b.rep->fp != pd->fp) continue;
            if (iso_search(*b.rep, *pd)) {
                b.members.push_back(d);
                placed = true;
                break;
            }
        }
        if (!placed) out.push_back({pd, {d}});
    }
    return out;
}

}  // namespace

std::vector<Bucket> bucket_by_iso(const std::vector<GroupData>& data) {
    std::vector<Bucket> out;
    for (auto& b : bucket_prepared(data)) out.push_back({std::move(b.members)});
    return out;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json matches = nlohmann::json::array();
    for (const auto& fm : r.matches) {
        nlohmann::json t = to_json(fm.type);
        t["bucket"] = fm.bucket;
        matches.push_back(t);
    }
    nlohmann::json disc = nlohmann::json::array();
    for (const auto& d : r.discrepancies) disc.push_back({{"kind", d.kind}, {"detail", d.detail}, {"witness", d.witness}});
    nlohmann::json j = {{"kind", r.kind},
                        {"ok", r.ok()},
                        {"checked", r.checked},
                        {"discrepancies", disc},
                        {"skipped", r.skipped},
                        {"seconds", r.seconds}};
    if (r.kind == "classification") {
        j["case"] = r.case_name;
        j["p"] = r.p;
        j["n"] = r.n;
        j["m"] = r.m;
        j["raw_count"] = r.raw_count;
        j["admissible_count"] = r.admissible_count;
        j["bucket_count"] = r.bucket_count;
        j["family_count"] = r.family_count;
        j["bucket_sizes"] = r.bucket_sizes;
        j["matches"] = matches;
    } else {
        j["rows"] = r.rows;
    }
    return j;
}

VerificationReport verify_classification(CaseId c, int p, int n, int m) {
    auto t0 = Clock::now();
    VerificationReport r;
    r.kind = "classification";
    r.case_name = case_name(c);
    r.p = p;
    r.n = n;
    r.m = m;
    r.raw_count = ipow(p, c == CaseId::IV ? 6 : 4);
    auto data = enumerate_case(c, p, n, m);
    r.admissible_count = data.size();
    std::vector<PreparedBucket> buckets;
    try {
        buckets = bucket_prepared(data);
    } catch (const Error& e) {
        r.discrepancies.push_back({"enumeration", e.what()});
        r.seconds = since(t0);
        return r;
    }
    r.bucket_count = buckets.size();
    for (const auto& b : buckets) r.bucket_sizes.push_back(b.members.size());

    // families <-> buckets
    auto families = list_families(c, p, n, m);
    r.family_count = families.size();
    std::vector<int> owner(buckets.size(), -1);
    for (const auto& t : families) {
        FamilyMatch fm{t, -1};
        try {
            GroupData d = construct(t);
            Prepared pd(d);
            for (std::size_t k = 0; k < buckets.size(); ++k)
                if (iso_search(*buckets[k].rep, pd)) {
                    fm.bucket = static_cast<int>(k);
                    break;
                }
            if (fm.bucket < 0) {
                r.discrepancies.push_back({"family-unmatched", to_string(t) + " is not isomorphic to any enumerated datum",
                                           {{"datum", to_json(d)}}});
            } else if (owner[fm.bucket] >= 0) {
                r.discrepancies.push_back(
                    {"bucket-shared",
                     to_string(t) + " and " + to_string(r.matches[owner[fm.bucket]].type) + " are isomorphic",
                     {{"bucket", fm.bucket}}});
            } else {
                owner[fm.bucket] = static_cast<int>(r.matches.size());
            }
        } catch (const Error& e) {
            r.discrepancies.push_back({"construct", to_string(t) + ": " + e.what()});
        }
        r.matches.push_back(fm);
    }
    for (std::size_t k = 0; k < buckets.size(); ++k)
        if (owner[k] < 0)
            r.discrepancies.push_back({"bucket-unmatched", "no listed type is isomorphic to bucket " + std::to_string(k),
                                       {{"datum", to_json(buckets[k].members[0])},
                                        {"fingerprint", to_json(buckets[k].rep->fp)}}});

    // classifier agreement
    std::map<IsoType, std::size_t> seen;
    for (std::size_t k = 0; k < buckets.size(); ++k) {
        std::optional<IsoType> first;
        for (const auto& d : buckets[k].members) {
            ++r.checked;
            try {
                IsoType t = classify_group(d);
                if (!first) {
                    first = t;
                    if (owner[k] >= 0 && !(r.matches[owner[k]].type == t))
                        r.discrepancies.push_back({"classifier-mismatch",
                                                   "bucket " + std::to_string(k) + " is " +
                                                       to_string(r.matches[owner[k]].type) + ", classifier says " +
                                                       to_string(t),
                                                   {{"datum", to_json(d)}}});
                    auto [it, fresh] = seen.emplace(t, k);
                    if (!fresh)
                        r.discrepancies.push_back({"classifier-merge",
                                                   "buckets " + std::to_string(it->second) + " and " + std::to_string(k) +
                                                       " both classify as " + to_string(t),
                                                   {{"datum", to_json(d)}}});
                } else if (!(t == *first)) {
                    r.discrepancies.push_back({"classifier-split",
                                               "bucket " + std::to_string(k) + " gets " + to_string(*first) + " and " +
                                                   to_string(t),
                                               {{"datum", to_json(d)}}});
                }
            } catch (const Error& e) {
                r.discrepancies.push_back({"classifier-error", e.what(), {{"datum", to_json(d)}}});
            }
        }
    }
    r.seconds = since(t0);
    return r;
}

// ---- I_min / I_max ----

int a1_maximal_count(const Group& g) {
    int k = 0;
    for (const auto& h : maximal_subgroups(g))
        if (is_a1(g, h)) ++k;
    return k;
}

VerificationReport verify_i_theorems(const ITheoremScope& scope) {
    auto t0 = Clock::now();
    VerificationReport r;
    r.kind = "i-theorems";
    std::vector<std::string> tags = scope.tags;
    if (tags.empty())
        for (const auto& t : all_tags())
            if (family_info(t).case_id != CaseId::VII) tags.push_back(t);
    for (const auto& tag : tags) {
        for (int p : scope.primes) {
            for (int n = 1; n <= scope.max_n; ++n)
                for (int m = 1; m <= n; ++m) {
                    auto ms = members(tag, p, n, m);
                    if (ms.empty()) continue;
                    const CaseId sc = family_info(tag).structural_case;
                    const std::uint64_t order = ipow(p, n + m + 1 + case_zrank(sc));
                    if (order > limits().max_order) {
                        r.skipped.push_back(tag + " p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                            " m=" + std::to_string(m) + " (" + std::to_string(ms.size()) +
                                            " members): order " + std::to_string(order) + " exceeds the bound");
                        continue;
                    }
                    for (const auto& t : ms) {
                        try {
                            Prediction pr = predicted_properties(t);
                            if (!pr.covered()) continue;
                            Group g(construct(t));
                            auto range = i_minmax(g);
                            if (!range) {
                                r.discrepancies.push_back({"no-a1", to_string(t) + " has no A1 subgroup"});
                                continue;
                            }
                            nlohmann::json row = {{"type", to_json(t)}, {"p", p},
                                                  {"i_min", range->i_min}, {"i_max", range->i_max}};
                            nlohmann::json claims = nlohmann::json::array();
                            std::optional<int> a1max;
                            for (const auto& cl : pr.claims) {
                                bool ok = true;
                                switch (cl.kind) {
                                    case Claim::IMinEq: ok = range->i_min == cl.value; break;
                                    case Claim::IMaxEq: ok = range->i_max == cl.value; break;
                                    case Claim::IMinAtLeast: ok = range->i_min >= cl.value; break;
                                    case Claim::IMaxAtLeast: ok = range->i_max >= cl.value; break;
                                    case Claim::IMinIsOne: ok = (range->i_min == 1) == cl.holds; break;
                                    case Claim::IMaxIsTwo: ok = (range->i_max == 2) == cl.holds; break;
                                    case Claim::UniqueA1Max:
                                        if (!a1max) a1max = a1_maximal_count(g);
                                        ok = *a1max == 1;
                                        break;
                                }
                                ++r.checked;
                                claims.push_back({{"rule", cl.rule},
                                                  {"claim", kind_name(cl.kind)},
                                                  {"value", cl.value},
                                                  {"holds", cl.holds},
                                                  {"ok", ok}});
                                if (!ok)
                                    r.discrepancies.push_back(
                                        {"i-theorem",
                                         to_string(t) + " p=" + std::to_string(p) + ": " + cl.rule + " (" +
                                             kind_name(cl.kind) + " " +
                                             (cl.kind == Claim::IMinIsOne || cl.kind == Claim::IMaxIsTwo
                                                  ? (cl.holds ? "true" : "false")
                                                  : std::to_string(cl.value)) +
                                             "), observed I_min=" + std::to_string(range->i_min) +
                                             ", I_max=" + std::to_string(range->i_max),
                                         {{"datum", to_json(construct(t))}}});
                            }
                            row["claims"] = claims;
                            r.rows.push_back(row);
                        } catch (const Error& e) {
                            r.discrepancies.push_back({"error", to_string(t) + ": " + e.what()});
                        }
                    }
                }
        }
    }
    r.seconds = since(t0);
    return r;
}

// ---- the list entries ----

bool quotient_is_minimal_nonabelian(const Group& g) {
    const GroupData& d = g.data();
    const int p = d.p;
    Subgroup der = derived_subgroup(g);
    Subgroup phi_der = frattini_of(g, der);
    Subgroup g3 = lower_central_3(g);
    std::vector<Elem> gens = elements_of(g, phi_der);
    for (Idx x : g3.gens) gens.push_back(g.elem(x));
    Subgroup N = closure(g, gens);
    if (g.order() / N.order() != ipow(p, d.n + d.m + 1)) return false;
    auto in = [&](const Elem& x) { return N.contains(g.index(x)); };
    Elem a = g.a(), b = g.b(), c = g.comm(a, b);
    return in(g.pow(a, static_cast<std::int64_t>(ipow(p, d.n)))) && in(g.pow(b, static_cast<std::int64_t>(ipow(p, d.m)))) &&
           in(g.pow(c, p)) && in(g.comm(c, a)) && in(g.comm(c, b)) && closure(g, {a, b}).order() == g.order();
}

namespace {

const std::vector<GroupData>& cached_space(CaseId c, int p, int n, int m) {
    static std::map<std::tuple<CaseId, int, int, int>, std::vector<GroupData>> cache;
    auto key = std::make_tuple(c, p, n, m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_case(c, p, n, m)).first;
    return it->second;
}

// A datum whose a, b (and derived letters) satisfy the entry's own relations.
std::optional<GroupData> datum_for_relations(const IsoType& t) {
    const FamilyInfo info = family_info(t.tag);
    RelationSet rel = parse_relations(info.relations);
    Params params = params_of(t);
    const auto& space = cached_space(info.structural_case, t.p, schema_n(t), schema_m(t));
    for (const auto& d : space) {
        Group g(d);
        if (identity_assignment(g, rel, params)) return d;
    }
    const std::uint64_t order = claimed_order(t);
    for (const auto& d : space) {
        Group g(d);
        if (find_generators_satisfying(g, rel, params, order)) return d;
    }
    return std::nullopt;
}

}  // namespace

VerificationReport verify_list_entries() {
    auto t0 = Clock::now();
    VerificationReport r;
    r.kind = "list";
    for (const auto& tag : all_tags()) {
        if (family_info(tag).case_id != CaseId::VII) continue;
        const CaseId sc = family_info(tag).structural_case;
        // least order within the bound, smaller p first on ties
        std::vector<IsoType> best;
        std::uint64_t best_order = 0;
        for (int p : {2, 3, 5, 7, 11})
            for (int n = 1; n <= 8; ++n)
                for (int m = 1; m <= n; ++m) {
                    auto ms = members(tag, p, n, m);
                    if (ms.empty()) continue;
                    std::uint64_t order = ipow(p, n + m + 1 + case_zrank(sc));
                    if (order > limits().max_order) continue;
                    if (best.empty() || order < best_order) {
                        best = ms;
                        best_order = order;
                    }
                }
        if (best.empty()) {
            r.skipped.push_back(tag + ": no member within the order bound");
            continue;
        }
        for (const auto& t : best) {
            try {
                ++r.checked;
                IsoType target = counterpart(t);
                GroupData d = construct(t);
                Group g(d);
                Structure s = structure(g);
                int a1 = a1_maximal_count(g);
                bool quo = quotient_is_minimal_nonabelian(g);
                bool corr = false;
                std::string how;
                if (family_info(tag).relations.empty()) {
                    corr = brute_iso(d, construct(target));
                    how = "constructed datum";
                } else if (auto h = datum_for_relations(t)) {
                    corr = brute_iso(*h, construct(target));
                    how = "datum satisfying the entry relations";
                } else {
                    how = "no datum satisfies the entry relations";
                }
                nlohmann::json row = {{"entry", to_json(t)},  {"p", t.p},          {"counterpart", to_json(target)},
                                      {"order", g.order()},   {"d", s.d},          {"a1_maximal", a1},
                                      {"quotient_ok", quo},   {"correspondence", corr}, {"via", how}};
                r.rows.push_back(row);
                if (s.d != 2) r.discrepancies.push_back({"list", to_string(t) + ": d(G) = " + std::to_string(s.d)});
                if (a1 < 2)
                    r.discrepancies.push_back(
                        {"list", to_string(t) + ": only " + std::to_string(a1) + " A1 maximal subgroups"});
                if (!quo) r.discrepancies.push_back({"list", to_string(t) + ": quotient is not M_p(n,m,1)"});
                if (!corr)
                    r.discrepancies.push_back(
                        {"list", to_string(t) + " does not correspond to " + to_string(target) + " (" + how + ")"});
            } catch (const Error& e) {
                r.discrepancies.push_back({"error", to_string(t) + ": " + e.what()});
            }
        }
    }
    r.seconds = since(t0);
    return r;
}

VerificationReport verify_minimal_orders(const std::vector<int>& primes) {
    auto t0 = Clock::now();
    VerificationReport r;
    r.kind = "minimal-orders";
    for (const auto& row : minimal_order_table()) {
        for (int p : primes) {
            auto printed = row.printed_exponent(p);
            std::optional<int> least;
            std::optional<IsoType> witness;
            for (const auto& tag : row.tags) {
                const CaseId sc = family_info(tag).structural_case;
                for (int n = 1; n <= 8; ++n)
                    for (int m = 1; m <= n; ++m) {
                        auto ms = members(tag, p, n, m);
                        if (ms.empty()) continue;
                        int e = n + m + 1 + case_zrank(sc);
                        if (!least || e < *least) {
                            least = e;
                            witness = ms.front();
                        }
                    }
            }
            if (!printed && !least) continue;
            ++r.checked;
            std::optional<int> built;
            if (witness) {
                try {
                    built = log_p(group_order(construct(*witness)), p);
                } catch (const Error& e) {
                    r.discrepancies.push_back({"construct", to_string(*witness) + ": " + e.what()});
                }
            }
            nlohmann::json j = {{"row", row.label}, {"p", p}};
            j["printed"] = printed ? nlohmann::json(*printed) : nlohmann::json(nullptr);
            j["least"] = built ? nlohmann::json(*built) : nlohmann::json(nullptr);
            if (witness) j["witness"] = to_json(*witness);
            r.rows.push_back(j);
            if (printed && built != printed)
                r.discrepancies.push_back({"minimal-order", row.label + " p=" + std::to_string(p) + ": printed p^" +
                                                                std::to_string(*printed) + ", least constructed " +
                                                                (built ? "p^" + std::to_string(*built) : "none")});
        }
    }
    r.seconds = since(t0);
    return r;
}

}  // namespace pga
