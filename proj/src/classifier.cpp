#include "pgatlas/classifier.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "pgatlas/error.hpp"

namespace pga {

namespace {

bool is_zero(const ZVec& v) { return v[0] == 0 && v[1] == 0; }
ZVec neg(const ZVec& v, int p) { return {f_neg(v[0], p), f_neg(v[1], p)}; }
int det2(const ZVec& u, const ZVec& v, int p) { return f_sub(f_mul(u[0], v[1], p), f_mul(u[1], v[0], p), p); }
Mat2 columns(const ZVec& u, const ZVec& v, int p) { return mat(u[0], v[0], u[1], v[1], p); }

// The scalar k with u = k v (v != 0, u and v dependent).
int ratio(const ZVec& u, const ZVec& v, int p) {
    int t = v[0] != 0 ? 0 : 1;
    return f_mul(u[t], f_inv(v[t], p), p);
}

}  // namespace

CaseId structural_case(const GroupData& raw) {
    GroupData d = normalized(raw);
    validate_shape(d);
    if (d.zrank == 0) fail(ErrorCode::NotPropertyP, "zrank 0 is M_p(n,m,1) itself; it has no characteristic data");
    if (!spans_z(d)) fail(ErrorCode::NotPropertyP, "gamma, delta, epsilon do not span Z: " + to_string(d));
    if (d.zrank == 1) return d.gamma[0] != 0 ? CaseId::I : CaseId::II;
    if (det2(d.delta, d.epsilon, d.p) != 0) return CaseId::IV;
    if (is_zero(d.delta)) return CaseId::IIIa;
    if (is_zero(d.epsilon)) return d.n == d.m ? CaseId::IIIa : CaseId::IIIb;
    return CaseId::IIIa;
}

CharData extract_char(const GroupData& raw) {
    GroupData d = normalized(raw);
    const CaseId c = structural_case(d);
    const int p = d.p;
    Group g(d);
    switch (c) {
        case CaseId::I: d = change_z_basis(d, mat(d.gamma[0], 0, 0, 1, p)); break;
        case CaseId::II: break;
        case CaseId::IV: d = change_z_basis(d, columns(neg(d.epsilon, p), d.delta, p)); break;
        case CaseId::IIIa:
        case CaseId::IIIb: {
            std::optional<GroupData> nd;
            if (!is_zero(d.delta) && !is_zero(d.epsilon)) {
                // a b^j centralizes G'
                int j = f_neg(ratio(d.delta, d.epsilon, p), p);
                nd = datum_for_generators(g, g.mul(g.a(), g.pow(g.b(), j)), g.b());
            } else if (is_zero(d.epsilon) && d.n == d.m) {
                nd = datum_for_generators(g, g.b(), g.a());
            }
            if (nd) d = *nd;
            if (c == CaseId::IIIa) {
                if (!is_zero(d.delta)) fail(ErrorCode::Internal, "generator change left [c,a] != 1");
                d = change_z_basis(d, columns(d.gamma, neg(d.epsilon, p), p));
            } else {
                d = change_z_basis(d, columns(d.gamma, neg(d.delta, p), p));
            }
            break;
        }
        case CaseId::VII: fail(ErrorCode::Internal, "no datum lies in the list case");
    }
    return char_from_datum(c, d);
}

bool in_theorem_domain(CaseId c, int p, int n, int m) {
    switch (c) {
        case CaseId::I: return (p > 2 && m >= 2) || (p == 2 && n >= 3);
        case CaseId::II: return m >= 2 || (p > 2 && (p > 3 || n > 1)) || (p == 2 && n >= 3);
        case CaseId::IIIa: return m >= 2 && (p > 2 || n >= 3);
        case CaseId::IIIb: return n > m && m >= 2;
        case CaseId::IV: return (p > 2 && (m >= 2 || p > 3 || n > 1)) || (p == 2 && n >= 3);
        case CaseId::VII: return false;
    }
    return false;
}

std::vector<TransformWitness> transforms(CaseId c, int p, int n, int m) {
    if (!in_theorem_domain(c, p, n, m))
        fail(ErrorCode::Unsupported, "no matrix criterion for case " + case_name(c) + " at p=" + std::to_string(p) +
                                         ", n=" + std::to_string(n) + ", m=" + std::to_string(m));
    const int e = n == m ? 1 : 0;
    std::vector<TransformWitness> out;
    if (c == CaseId::II && p == 2 && m == 1) {
        for (int x21 = 0; x21 < 2; ++x21) {
            TransformWitness w;
            w.x = w.x1 = mat(1, 0, x21, 1, p);
            out.push_back(w);
        }
        return out;
    }
    const bool triangular = c == CaseId::IIIa || c == CaseId::IIIb;
    for (int x11 = 0; x11 < p; ++x11)
        for (int x12 = 0; x12 < (triangular ? 1 : p); ++x12)
            for (int x21 = 0; x21 < p; ++x21)
                for (int x22 = 0; x22 < p; ++x22) {
                    TransformWitness w;
                    if (triangular) {
                        w.x = w.x1 = mat(x11, 0, x21, x22, p);
                    } else {
                        w.x = mat(x11, x12, x21 * e, x22, p);
                        w.x1 = mat(x11, x12 * e, x21, x22, p);
                    }
                    if (!mat_invertible(w.x, p)) continue;
                    if (c == CaseId::II) {
                        for (int l = 1; l < p; ++l) {
                            w.lambda = l;
                            out.push_back(w);
                        }
                    } else {
                        out.push_back(w);
                    }
                }
    return out;
}

CharData apply_transform(const CharData& c, const TransformWitness& t) {
    if (t.reselection) fail(ErrorCode::InvalidArgument, "a reselection witness has no matrix action");
    const int p = c.p;
    CharData r = c;
    const Mat2& w = c.w;
    std::array<int, 2> col1{w(0, 0), w(1, 0)}, col2{w(0, 1), w(1, 1)};
    auto set_cols = [&](std::array<int, 2> a, std::array<int, 2> b) { r.w = mat(a[0], b[0], a[1], b[1], p); };
    switch (c.case_id) {
        case CaseId::I: {
            int di = f_inv(mat_det(t.x, p), p);
            set_cols(mat_apply(mat_scale(t.x1, di, p), col1, p), mat_apply(t.x, col2, p));
            break;
        }
        case CaseId::II: {
            if (p == 2 && c.m == 1) {
                set_cols(mat_apply(t.x, col1, p), col2);
                break;
            }
            int li = f_inv(t.lambda, p);
            set_cols(mat_apply(mat_scale(t.x1, li, p), col1, p),
                     mat_apply(mat_scale(t.x, f_mul(li, mat_det(t.x, p), p), p), col2, p));
            break;
        }
        case CaseId::IIIa:
        case CaseId::IIIb: {
            int a = f_inv(t.x(0, 0), p), b = f_inv(t.x(1, 1), p);
            int d1 = f_mul(a, b, p);
            int d2 = c.case_id == CaseId::IIIa ? f_mul(d1, b, p) : f_mul(d1, a, p);
            r.w = mat_mul(mat_mul(t.x, w, p), mat(d1, 0, 0, d2, p), p);
            break;
        }
        case CaseId::IV:
            r.w = mat_mul(mat_mul(t.x1, w, p), mat_transpose(t.x), p);
            r.v = mat_apply(t.x, c.v, p);
            break;
        case CaseId::VII: fail(ErrorCode::InvalidArgument, "list case has no characteristic data");
    }
    return r;
}

namespace {

// ---- small-order shapes: search over generator pairs ----

using RKey = std::vector<int>;

// Reduced row echelon form of the zrank x 5 matrix whose columns are alpha..epsilon;
// invariant under change of z-basis.
RKey rref_key(int p, int zrank, const std::array<ZVec, 5>& cols) {
    int rows[2][5];
    for (int r = 0; r < 2; ++r)
        for (int k = 0; k < 5; ++k) rows[r][k] = r < zrank ? cols[k][r] : 0;
    int lead = 0;
    for (int k = 0; k < 5 && lead < zrank; ++k) {
        int piv = -1;
        for (int r = lead; r < zrank; ++r)
            if (rows[r][k] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int t = 0; t < 5; ++t) std::swap(rows[piv][t], rows[lead][t]);
        int s = f_inv(rows[lead][k], p);
        for (int t = 0; t < 5; ++t) rows[lead][t] = f_mul(rows[lead][t], s, p);
        for (int r = 0; r < zrank; ++r) {
            if (r == lead || rows[r][k] == 0) continue;
            int f = rows[r][k];
            for (int t = 0; t < 5; ++t) rows[r][t] = f_sub(rows[r][t], f_mul(f, rows[lead][t], p), p);
        }
        ++lead;
    }
    RKey out;
    for (int r = 0; r < zrank; ++r)
        for (int k = 0; k < 5; ++k) out.push_back(rows[r][k]);
    return out;
}

RKey datum_key(const GroupData& d) {
    return rref_key(d.p, d.zrank, {d.alpha, d.beta, d.gamma, d.delta, d.epsilon});
}

struct PairSearch {
    const Group& g;
    std::vector<Elem> xs, xa, ys, yb;

    explicit PairSearch(const Group& grp) : g(grp) {
        g.require_enumerable("generator-pair search");
        const GroupData& d = g.data();
        const std::int64_t pn = static_cast<std::int64_t>(ipow(d.p, d.n));
        const std::int64_t pm = static_cast<std::int64_t>(ipow(d.p, d.m));
        const Idx n = static_cast<Idx>(g.order());
        for (Idx ix = 0; ix < n; ++ix) {
            Elem x = g.elem(ix);
            if (x.i % d.p == 0 && x.j % d.p == 0) continue;
            Elem A = g.pow(x, pn);
            if (g.in_z(A)) {
                xs.push_back(x);
                xa.push_back(A);
            }
            Elem B = g.pow(x, pm);
            if (g.in_z(B)) {
                ys.push_back(x);
                yb.push_back(B);
            }
        }
    }

    // Calls f(x, y, key) for every pair of characteristic generators; stops when f returns true.
    template <class F>
    void each(F&& f) const {
        const int p = g.p();
        for (std::size_t s = 0; s < xs.size(); ++s) {
            const Elem& x = xs[s];
            for (std::size_t t = 0; t < ys.size(); ++t) {
                const Elem& y = ys[t];
                if (fmod_p(x.i * y.j - x.j * y.i, p) == 0) continue;
                Elem c = g.comm(x, y);
                Elem C = g.pow(c, p);
                if (!g.in_z(C)) continue;
                Elem D = g.comm(c, x);
                if (!g.in_z(D)) continue;
                Elem E = g.comm(c, y);
                if (!g.in_z(E)) continue;
                RKey k = rref_key(p, g.data().zrank,
                                  {g.z_coords(xa[s]), g.z_coords(yb[t]), g.z_coords(C), g.z_coords(D), g.z_coords(E)});
                if (f(x, y, k)) return;
            }
        }
    }
};

RKey reselection_key(const Group& g) {
    RKey best;
    bool have = false;
    PairSearch(g).each([&](const Elem&, const Elem&, const RKey& k) {
        if (!have || k < best) {
            best = k;
            have = true;
        }
        return false;
    });
    if (!have) fail(ErrorCode::Internal, "no characteristic generators found");
    return best;
}

CharData theorem_key(const CharData& c) {
    CharData best = c;
    for (const auto& w : transforms(c.case_id, c.p, c.n, c.m)) {
        CharData t = apply_transform(c, w);
        if (std::tie(t.w, t.v) < std::tie(best.w, best.v)) best = t;
    }
    return best;
}

struct Rep {
    IsoType type;
    CharData chr;
};

struct DomainTable {
    bool theorem = true;
    std::map<CharData, Rep> by_char;
    std::map<RKey, Rep> by_pairs;
    std::vector<std::string> problems;
};

using DomainKey = std::tuple<CaseId, int, int, int>;

const DomainTable& table_for(CaseId c, int p, int n, int m) {
    static std::mutex mu;
    static std::map<DomainKey, std::unique_ptr<DomainTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{c, p, n, m}];
    if (slot) return *slot;
    auto t = std::make_unique<DomainTable>();
    t->theorem = in_theorem_domain(c, p, n, m);
    for (const auto& type : list_families(c, p, n, m)) {
        try {
            GroupData d = construct(type);
            CharData ch = extract_char(d);
            if (ch.case_id != c) {
                t->problems.push_back(to_string(type) + " falls in case " + case_name(ch.case_id));
                continue;
            }
            Rep rep{type, ch};
            if (t->theorem) {
                auto [it, fresh] = t->by_char.emplace(theorem_key(ch), rep);
                if (!fresh) t->problems.push_back(to_string(type) + " has the same invariant as " + to_string(it->second.type));
            } else {
                auto [it, fresh] = t->by_pairs.emplace(reselection_key(Group(d)), rep);
                if (!fresh) t->problems.push_back(to_string(type) + " is isomorphic to " + to_string(it->second.type));
            }
        } catch (const Error& e) {
            t->problems.push_back(to_string(type) + ": " + e.what());
        }
    }
    slot = std::move(t);
    return *slot;
}

}  // namespace

std::optional<TransformWitness> equivalent(const CharData& c1, const CharData& c2) {
    if (c1.case_id != c2.case_id || c1.p != c2.p || c1.n != c2.n || c1.m != c2.m)
        fail(ErrorCode::InvalidArgument, "equivalent: case or (p, n, m) differ");
    if (in_theorem_domain(c1.case_id, c1.p, c1.n, c1.m)) {
        for (const auto& w : transforms(c1.case_id, c1.p, c1.n, c1.m)) {
            CharData t = apply_transform(c1, w);
            if (t.w == c2.w && t.v == c2.v) return w;
        }
        return std::nullopt;
    }
    Group g(datum_from_char(c1));
    const RKey target = datum_key(datum_from_char(c2));
    std::optional<TransformWitness> out;
    PairSearch(g).each([&](const Elem& x, const Elem& y, const RKey& k) {
        if (k != target) return false;
        TransformWitness w;
        w.reselection = true;
        w.a_image = x;
        w.b_image = y;
        out = w;
        return true;
    });
    return out;
}

Classification classify_detailed(const GroupData& d) {
    Classification out;
    out.chr = extract_char(d);
    const CharData& c = out.chr;
    const DomainTable& t = table_for(c.case_id, c.p, c.n, c.m);
    out.theorem_domain = t.theorem;
    const Rep* rep = nullptr;
    if (t.theorem) {
        auto it = t.by_char.find(theorem_key(c));
        if (it != t.by_char.end()) rep = &it->second;
    } else {
        auto it = t.by_pairs.find(reselection_key(Group(datum_from_char(c))));
        if (it != t.by_pairs.end()) rep = &it->second;
    }
    if (!rep) {
        std::string msg = "no listed type matches " + to_string(c);
        if (!t.problems.empty()) msg += " (table issues: " + t.problems.front() + ")";
        fail(ErrorCode::NotFound, msg);
    }
    out.type = rep->type;
    auto w = equivalent(c, rep->chr);
    if (!w) fail(ErrorCode::Internal, "representative found without a witness");
    out.witness = *w;
    return out;
}

IsoType canonical_type(const CharData& c) { return classify_detailed(datum_from_char(c)).type; }

IsoType classify_group(const GroupData& d) { return classify_detailed(d).type; }

// ---- predictions ----

std::string kind_name(Claim::Kind k) {
    switch (k) {
        case Claim::IMinEq: return "I_min =";
        case Claim::IMaxEq: return "I_max =";
        case Claim::IMinAtLeast: return "I_min >=";
        case Claim::IMaxAtLeast: return "I_max >=";
        case Claim::IMinIsOne: return "I_min = 1 iff";
        case Claim::IMaxIsTwo: return "I_max = 2 iff";
        case Claim::UniqueA1Max: return "unique A1 maximal subgroup";
    }
    return "?";
}

namespace {

bool tag_in(const std::string& tag, const std::string& letter, std::initializer_list<int> idx) {
    if (tag.size() < 2 || tag.compare(0, letter.size(), letter) != 0) return false;
    std::string rest = tag.substr(letter.size());
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit)) return false;
    int k = std::stoi(rest);
    if (idx.size() == 0) return true;
    return std::find(idx.begin(), idx.end(), k) != idx.end();
}

}  // namespace

Prediction predicted_properties(const IsoType& in) {
    IsoType t = family_info(in.tag).case_id == CaseId::VII ? counterpart(in) : in;
    const FamilyInfo info = family_info(t.tag);
    const int p = t.p, n = schema_n(t), m = schema_m(t);
    const CharData c = extract_char(construct(t));
    const auto w = [&](int i, int j) { return c.w(i - 1, j - 1); };
    const std::string& tag = t.tag;
    Prediction out;
    auto add = [&](Claim::Kind k, int value, bool holds, std::string rule) {
        out.claims.push_back({k, value, holds, std::move(rule)});
    };
    auto sq = [&](std::int64_t x) { return is_square(fmod_p(x, p), p); };

    switch (info.structural_case) {
        case CaseId::I: {
            if (m == 1) {
                add(Claim::UniqueA1Max, 0, true, "case I, m = 1");
                add(Claim::IMinEq, 1, true, "case I, m = 1");
            } else {
                add(Claim::IMinEq, 2, true, "case I, m >= 2");
            }
            if (tag_in(tag, "A", {}) || tag_in(tag, "C", {}) || tag_in(tag, "D", {3, 5}) || tag_in(tag, "E", {3, 6, 9}))
                add(Claim::IMaxEq, 2, true, "case I list, I_max = 2");
            if (tag_in(tag, "B", {}) || tag_in(tag, "D", {1, 2, 4}) || tag_in(tag, "E", {1, 4, 7}))
                add(Claim::IMaxEq, n, true, "case I list, I_max = n");
            if (tag_in(tag, "E", {2, 5, 8})) add(Claim::IMaxEq, m, true, "case I list, I_max = m");
            if (w(2, 2) == 0 && w(1, 2) == 0) add(Claim::IMaxEq, 2, true, "case I, w22 = w12 = 0");
            if (w(2, 2) == 0 && w(1, 2) != 0) add(Claim::IMaxEq, m, true, "case I, w22 = 0, w12 != 0");
            if (w(2, 2) != 0 && w(1, 2) == 0) add(Claim::IMaxEq, n, true, "case I, w22 != 0, w12 = 0");
            break;
        }
        case CaseId::II: {
            add(Claim::IMinEq, m == 1 ? 1 : 2, true, m == 1 ? "case II, m = 1" : "case II, m >= 2");
            if (tag == "F") add(Claim::IMaxEq, 1, true, "case II list, I_max = 1");
            if (tag_in(tag, "H", {}) || tag_in(tag, "I", {})) add(Claim::IMaxEq, 2, true, "case II list, I_max = 2");
            if (tag_in(tag, "G", {}) || tag_in(tag, "J", {2, 4, 6})) add(Claim::IMaxEq, m, true, "case II list, I_max = m");
            if (tag_in(tag, "J", {1, 3, 5})) add(Claim::IMaxEq, n, true, "case II list, I_max = n");
            if (p == 2 && m == 1) {
                add(Claim::IMaxEq, 2, true, "case II, p = 2, m = 1");
            } else {
                if (w(2, 2) == 0 && w(1, 2) != 0) add(Claim::IMaxEq, m, true, "case II, w22 = 0, w12 != 0");
                if (w(2, 2) != 0 && w(1, 2) == 0) add(Claim::IMaxEq, n, true, "case II, w22 != 0, w12 = 0");
            }
            break;
        }
        case CaseId::IIIa: {
            add(Claim::IMinAtLeast, 2, true, "case IIIa, no A1 subgroup of index p");
            add(Claim::IMaxAtLeast, n, true, "case IIIa, I_max >= n");
            bool two;
            if (p > 2)
                two = n == 2 && m == 2 &&
                      ((w(1, 1) == 0 && w(1, 2) == 0 && w(2, 2) != 0) || !sq(std::int64_t(w(1, 1)) * w(1, 1) - 4 * w(1, 2)));
            else
                two = n == 2 && m == 2 && ((w(2, 2) == 1 && w(2, 1) == 0) || (w(2, 2) == 0 && w(2, 1) == 1 && w(1, 2) == 1));
            add(Claim::IMaxIsTwo, 0, two, p > 2 ? "case IIIa, odd p, residue condition" : "case IIIa, p = 2 condition");
            break;
        }
        case CaseId::IIIb: {
            add(Claim::IMinAtLeast, 2, true, "case IIIb, no A1 subgroup of index p");
            add(Claim::IMaxAtLeast, m, true, "case IIIb, I_max >= m");
            bool two;
            if (p > 2) {
                int det = mat_det(c.w, p);
                two = m == 2 && ((w(1, 2) != 0 && f_mul(w(1, 1), det, p) != f_mul(w(1, 2), w(1, 2), p)) ||
                                 (w(1, 2) == 0 && w(1, 1) != 0 && w(2, 2) != 0) ||
                                 !sq(std::int64_t(w(2, 1)) * w(2, 1) + 4 * w(2, 2)));
            } else {
                two = m == 2 && ((w(1, 1) == 0 && w(1, 2) == 1) || (w(1, 2) == 0 && w(1, 1) == 1 && w(2, 2) == 1));
            }
            add(Claim::IMaxIsTwo, 0, two, p > 2 ? "case IIIb, odd p, residue condition" : "case IIIb, p = 2 condition");
            break;
        }
        case CaseId::IV: {
            const std::int64_t s = std::int64_t(w(1, 2)) + w(2, 1);
            if (m >= 2) add(Claim::IMinIsOne, 0, false, "case IV, I_min = 1 forces m = 1");
            if (n >= 3) add(Claim::IMaxIsTwo, 0, false, "case IV, I_max = 2 forces n <= 2");
            if (p == 2 && m == 1) add(Claim::IMinEq, 1, true, "case IV, p = 2, m = 1");
            if (p > 3 && n == 1 && m == 1) {
                add(Claim::IMinIsOne, 0, !(w(1, 1) == 0 && w(2, 2) == 0 && fmod_p(s, p) == 0),
                    "case IV, p > 3, n = m = 1, I_min condition");
                add(Claim::IMaxIsTwo, 0, sq(s * s - 4 * std::int64_t(w(1, 1)) * w(2, 2)),
                    "case IV, p > 3, n = m = 1, I_max residue condition");
            }
            if (p > 2 && n > 1 && m == 1)
                add(Claim::IMinIsOne, 0, !(w(1, 1) == 0 && w(1, 2) == 0), "case IV, p > 2, n > m = 1, I_min condition");
            if (p > 2 && m == 1 && n == 2) add(Claim::IMaxIsTwo, 0, w(2, 2) != 0, "case IV, p > 2, n = 2, m = 1");
            if (p > 2 && n == 2 && m == 2 && c.v == ZVec{0, 0})
                add(Claim::IMaxIsTwo, 0, !sq(s * s - 4 * std::int64_t(w(1, 1)) * w(2, 2)),
                    "case IV, p > 2, n = m = 2, v = 0, residue condition");
            if (p > 2 && n == 2 && m == 2 && c.v == ZVec{0, 1}) {
                bool i = !sq(s * s - 4 * std::int64_t(w(1, 1)) * (w(2, 2) + 1));
                bool ii = fmod_p(w(2, 1) - std::int64_t(w(1, 1)) * w(2, 2) - w(1, 1), p) == 0 &&
                          fmod_p(s * s - 4 * std::int64_t(w(2, 1)), p) == 0;
                add(Claim::IMaxIsTwo, 0, w(1, 1) != 0 && (i || ii), "case IV, p > 2, n = m = 2, v = (0,1) condition");
            }
            break;
        }
        case CaseId::VII: break;
    }
    for (const auto& cl : out.claims) {
        if (cl.kind == Claim::IMaxEq) out.i_max = cl.value;
        if (cl.kind == Claim::IMinEq) out.i_min_bound = cl.value;
        if (cl.kind == Claim::IMinAtLeast && !out.i_min_bound) out.i_min_bound = cl.value;
    }
    if (out.i_max) out.a_t = *out.i_max + 1;
    return out;
}

}  // namespace pga
