#include "pgatlas/pc_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>
#include <unordered_map>

#include "pgatlas/error.hpp"

namespace pga {

Limits& limits() {
    static Limits l;
    return l;
}

void load_limits_from_env() {
    const char* s = std::getenv("PGATLAS_MAX_ORDER");
    if (!s || !*s) return;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (*end != '\0' || v == 0) fail(ErrorCode::InvalidArgument, std::string("bad PGATLAS_MAX_ORDER value '") + s + "'");
    limits().max_order = v;
}

// ---- element arithmetic ----

Group::Group(const GroupData& d, NoCheck) : d_(normalized(d)) {
    validate_shape(d_);
    order_ = group_order(d_);
    pn_ = static_cast<std::int64_t>(ipow(d_.p, d_.n));
    pm_ = static_cast<std::int64_t>(ipow(d_.p, d_.m));
    pr_ = static_cast<int>(ipow(d_.p, d_.zrank));
}

Group::Group(const GroupData& d) : Group(d, NoCheck{}) {
    if (!consistency_conditions(d_)) fail(ErrorCode::NotAdmissible, "inconsistent presentation: " + to_string(d_));
}

Group Group::unchecked(const GroupData& d) { return Group(d, NoCheck{}); }

Elem Group::z(int t) const {
    if (t < 0 || t >= d_.zrank) fail(ErrorCode::InvalidArgument, "no such central generator");
    Elem e;
    (t == 0 ? e.u0 : e.u1) = 1;
    return e;
}

Elem Group::z_power(const ZVec& u) const {
    Elem e;
    if (d_.zrank > 0) e.u0 = fmod_p(u[0], d_.p);
    if (d_.zrank > 1) e.u1 = fmod_p(u[1], d_.p);
    return e;
}

namespace {

std::int64_t floor_div(std::int64_t x, std::int64_t y) {
    std::int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
}

}  // namespace

Elem Group::from_exponents(std::int64_t i, std::int64_t j, std::int64_t k, ZVec u) const {
    const int p = d_.p;
    std::int64_t qi = floor_div(i, pn_), qj = floor_div(j, pm_), qk = floor_div(k, p);
    Elem e{i - qi * pn_, j - qj * pm_, k - qk * p, 0, 0};
    const int ci = fmod_p(qi, p), cj = fmod_p(qj, p), ck = fmod_p(qk, p);
    if (d_.zrank > 0)
        e.u0 = fmod_p(std::int64_t(u[0]) + ci * d_.alpha[0] + cj * d_.beta[0] + ck * d_.gamma[0], p);
    if (d_.zrank > 1)
        e.u1 = fmod_p(std::int64_t(u[1]) + ci * d_.alpha[1] + cj * d_.beta[1] + ck * d_.gamma[1], p);
    return e;
}

// (a^i b^j c^k z^u)(a^I b^J c^K z^U)
//   = a^(i+I) b^(j+J) c^(k-jI+K) z^(u+U + delta(kI - jC(I,2)) + epsilon((k-jI)J - I C(j,2)))
// followed by folding the powers a^(p^n), b^(p^m), c^p into z.
Elem Group::mul(const Elem& x, const Elem& y) const {
    const int p = d_.p;
    const std::int64_t I = y.i, J = y.j;
    const std::int64_t jI = x.j * I;
    const int cd = fmod_p(x.k * I - (x.j % p) * binom2_mod(I, p), p);
    const int ce = fmod_p(fmod_p(x.k - jI, p) * (J % p) - (I % p) * binom2_mod(x.j, p), p);
    std::int64_t A = x.i + I, B = x.j + J, C = x.k - jI + y.k;
    int ca = 0, cb = 0;
    if (A >= pn_) { A -= pn_; ca = 1; }
    if (B >= pm_) { B -= pm_; cb = 1; }
    const std::int64_t q = floor_div(C, p);
    C -= q * p;
    const int cq = fmod_p(q, p);
    Elem r{A, B, C, 0, 0};
    if (d_.zrank > 0)
        r.u0 = fmod_p(std::int64_t(x.u0) + y.u0 + ca * d_.alpha[0] + cb * d_.beta[0] + cq * d_.gamma[0] +
                          cd * d_.delta[0] + ce * d_.epsilon[0], p);
    if (d_.zrank > 1)
        r.u1 = fmod_p(std::int64_t(x.u1) + y.u1 + ca * d_.alpha[1] + cb * d_.beta[1] + cq * d_.gamma[1] +
                          cd * d_.delta[1] + ce * d_.epsilon[1], p);
    return r;
}

Elem Group::inv(const Elem& x) const {
    const int p = d_.p;
    Elem y{(pn_ - x.i) % pn_, (pm_ - x.j) % pm_, 0, 0, 0};
    y.k = fmod_p(x.j * y.i - x.k, p);
    Elem t = mul(x, y);
    Elem zinv;
    zinv.u0 = fmod_p(-t.u0, p);
    zinv.u1 = fmod_p(-t.u1, p);
    return mul(y, zinv);
}

Elem Group::pow(const Elem& x, std::int64_t e) const {
    if (e < 0) return pow(inv(x), -e);
    Elem base = x, r;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

std::uint64_t Group::elem_order(const Elem& x) const {
    std::uint64_t o = 1;
    Elem y = x;
    while (!is_one(y)) {
        y = pow(y, d_.p);
        o *= d_.p;
    }
    return o;
}

void Group::require_enumerable(const char* what) const {
    if (!enumerable())
        fail(ErrorCode::BoundExceeded, std::string(what) + ": |G| = " + std::to_string(order_) +
                                           " exceeds the configured bound " + std::to_string(limits().max_order));
}

Idx Group::index(const Elem& x) const {
    std::uint64_t u = d_.zrank == 0 ? 0 : d_.zrank == 1 ? x.u0 : x.u0 + std::uint64_t(d_.p) * x.u1;
    return static_cast<Idx>(((std::uint64_t(x.i) * pm_ + x.j) * d_.p + x.k) * pr_ + u);
}

Elem Group::elem(Idx ix) const {
    Elem e;
    std::uint64_t v = ix;
    std::uint64_t u = v % pr_;
    v /= pr_;
    e.k = v % d_.p;
    v /= d_.p;
    e.j = v % pm_;
    e.i = v / pm_;
    if (d_.zrank > 0) e.u0 = static_cast<int>(u % d_.p);
    if (d_.zrank > 1) e.u1 = static_cast<int>(u / d_.p);
    return e;
}

std::vector<Elem> Group::generators() const {
    std::vector<Elem> g{a(), b(), c()};
    for (int t = 0; t < d_.zrank; ++t) g.push_back(z(t));
    return g;
}

// ---- consistency ----

bool check_admissible(const GroupData& raw) {
    GroupData d = normalized(raw);
    validate_shape(d);
    if (!consistency_conditions(d)) return false;
    Group g(d);
    auto assoc = [&](const Elem& x, const Elem& y, const Elem& z) {
        return g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z));
    };
    std::vector<Elem> probe = g.generators();
    const std::int64_t pn = static_cast<std::int64_t>(ipow(d.p, d.n)), pm = static_cast<std::int64_t>(ipow(d.p, d.m));
    probe.push_back(g.from_exponents(pn - 1, 0, 0));
    probe.push_back(g.from_exponents(0, pm - 1, 0));
    probe.push_back(g.from_exponents(0, 0, d.p - 1));
    probe.push_back(g.from_exponents(pn - 1, pm - 1, d.p - 1));
    for (const auto& x : probe)
        for (const auto& y : probe)
            for (const auto& z : probe)
                if (!assoc(x, y, z)) return false;
    std::mt19937_64 rng(0x5eed);
    auto random_elem = [&] {
        std::uniform_int_distribution<std::int64_t> di(0, pn - 1), dj(0, pm - 1), dk(0, d.p - 1);
        std::uniform_int_distribution<int> du(0, d.p - 1);
        return g.from_exponents(di(rng), dj(rng), dk(rng), {du(rng), du(rng)});
    };
    for (int t = 0; t < 256; ++t)
        if (!assoc(random_elem(), random_elem(), random_elem())) return false;
    if (g.order() <= 64) {
        const Idx n = static_cast<Idx>(g.order());
        for (Idx x = 0; x < n; ++x)
            for (Idx y = 0; y < n; ++y)
                for (Idx z = 0; z < n; ++z)
                    if (!assoc(g.elem(x), g.elem(y), g.elem(z))) return false;
    }
    return true;
}

// ---- subgroups ----

namespace {

std::size_t words_for(std::uint64_t n) { return static_cast<std::size_t>((n + 63) / 64); }

void set_bit(std::vector<std::uint64_t>& b, Idx ix) { b[ix >> 6] |= std::uint64_t(1) << (ix & 63); }

// Extend h (already a subgroup) by a new generator.
void extend(const Group& g, Subgroup& h, Idx gen) {
    if (h.contains(gen)) return;
    h.gens.push_back(gen);
    std::vector<Elem> gens;
    for (Idx x : h.gens) gens.push_back(g.elem(x));
    std::vector<Elem> todo;
    for (Idx x : h.elems) todo.push_back(g.elem(x));
    for (std::size_t at = 0; at < todo.size(); ++at) {
        for (const auto& s : gens) {
            Elem y = g.mul(todo[at], s);
            Idx iy = g.index(y);
            if (!h.contains(iy)) {
                set_bit(h.bits, iy);
                h.elems.push_back(iy);
                todo.push_back(y);
            }
        }
    }
}

Subgroup trivial(const Group& g) {
    Subgroup h;
    h.bits.assign(words_for(g.order()), 0);
    Idx e = g.index(g.one());
    set_bit(h.bits, e);
    h.elems.push_back(e);
    return h;
}

Subgroup normal_closure_by(const Group& g, const std::vector<Elem>& gens, const std::vector<Elem>& conj) {
    Subgroup h = trivial(g);
    for (const auto& x : gens) extend(g, h, g.index(x));
    for (std::size_t at = 0; at < h.gens.size(); ++at) {
        Elem s = g.elem(h.gens[at]);
        for (const auto& x : conj) {
            Elem t = g.mul(g.mul(g.inv(x), s), x);
            extend(g, h, g.index(t));
        }
    }
    return h;
}

}  // namespace

Subgroup closure_idx(const Group& g, const std::vector<Idx>& gens) {
    g.require_enumerable("subgroup closure");
    Subgroup h = trivial(g);
    for (Idx x : gens) extend(g, h, x);
    return h;
}

Subgroup closure(const Group& g, const std::vector<Elem>& gens) {
    g.require_enumerable("subgroup closure");
    std::vector<Idx> ix;
    for (const auto& x : gens) ix.push_back(g.index(x));
    return closure_idx(g, ix);
}

Subgroup normal_closure(const Group& g, const std::vector<Elem>& gens) {
    g.require_enumerable("normal closure");
    return normal_closure_by(g, gens, g.generators());
}

bool is_subset(const Subgroup& a, const Subgroup& b) {
    for (std::size_t w = 0; w < a.bits.size(); ++w)
        if (a.bits[w] & ~b.bits[w]) return false;
    return true;
}

std::vector<Elem> elements_of(const Group& g, const Subgroup& h) {
    std::vector<Elem> out;
    out.reserve(h.elems.size());
    for (Idx x : h.elems) out.push_back(g.elem(x));
    return out;
}

Subgroup derived_of(const Group& g, const Subgroup& h) {
    std::vector<Elem> gens, comms;
    for (Idx x : h.gens) gens.push_back(g.elem(x));
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(g.comm(gens[i], gens[j]));
    return normal_closure_by(g, comms, gens);
}

Subgroup frattini_of(const Group& g, const Subgroup& h) {
    Subgroup f = derived_of(g, h);
    for (Idx x : h.elems) extend(g, f, g.index(g.pow(g.elem(x), g.p())));
    return f;
}

int log_p(std::uint64_t x, int p) {
    int e = 0;
    while (x > 1) {
        if (x % p) fail(ErrorCode::Internal, "not a power of p");
        x /= p;
        ++e;
    }
    return e;
}

int rank_of(const Group& g, const Subgroup& h) { return log_p(h.order() / frattini_of(g, h).order(), g.p()); }

bool is_a1(const Group& g, const Subgroup& h) {
    return derived_of(g, h).order() == std::uint64_t(g.p()) && rank_of(g, h) == 2;
}

Subgroup derived_subgroup(const Group& g) {
    g.require_enumerable("derived subgroup");
    auto gens = g.generators();
    std::vector<Elem> comms;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(g.comm(gens[i], gens[j]));
    return normal_closure(g, comms);
}

Subgroup lower_central_3(const Group& g) {
    Subgroup d = derived_subgroup(g);
    std::vector<Elem> comms;
    for (Idx s : d.gens)
        for (const auto& x : g.generators()) comms.push_back(g.comm(g.elem(s), x));
    return normal_closure(g, comms);
}

Subgroup center(const Group& g) {
    g.require_enumerable("center");
    auto gens = g.generators();
    Subgroup h = trivial(g);
    const Idx n = static_cast<Idx>(g.order());
    for (Idx ix = 0; ix < n; ++ix) {
        Elem x = g.elem(ix);
        bool central = std::all_of(gens.begin(), gens.end(), [&](const Elem& s) { return g.mul(x, s) == g.mul(s, x); });
        if (central) extend(g, h, ix);
    }
    return h;
}

Subgroup frattini(const Group& g) {
    g.require_enumerable("Frattini subgroup");
    Subgroup f = derived_subgroup(g);
    const Idx n = static_cast<Idx>(g.order());
    for (Idx ix = 0; ix < n; ++ix) extend(g, f, g.index(g.pow(g.elem(ix), g.p())));
    return f;
}

Structure structure(const Group& g) {
    g.require_enumerable("structure");
    Structure s;
    const int p = g.p();
    s.order = g.order();
    Subgroup der = derived_subgroup(g);
    Subgroup g3 = lower_central_3(g);
    Subgroup z = center(g);
    Subgroup phi = frattini(g);
    Subgroup phi_der = frattini_of(g, der);
    Subgroup pg = phi_der;
    for (Idx x : g3.gens) extend(g, pg, x);
    s.derived = der.order();
    s.g3 = g3.order();
    s.center = z.order();
    s.frattini = phi.order();
    s.phi_derived = phi_der.order();
    s.phi_derived_g3 = pg.order();
    s.phi_derived_g3_central = is_subset(pg, z);
    s.d = log_p(s.order / s.frattini, p);

    const Idx n = static_cast<Idx>(g.order());
    std::vector<Elem> all(n);
    for (Idx ix = 0; ix < n; ++ix) all[ix] = g.elem(ix);
    for (const auto& x : all) s.order_histogram[g.elem_order(x)]++;

    // Invariants of G/G' from the counts of cosets killed by p^k.
    const std::uint64_t quotient = s.order / s.derived;
    std::vector<int> at_least;  // at_least[k-1] = #{invariants >= p^k}
    std::uint64_t prev = 1;
    std::vector<Elem> powers = all;
    while (prev < quotient) {
        for (auto& x : powers) x = g.pow(x, p);
        std::uint64_t killed = 0;
        for (const auto& x : powers)
            if (der.contains(g.index(x))) ++killed;
        std::uint64_t cosets = killed / s.derived;
        at_least.push_back(log_p(cosets / prev, p));
        prev = cosets;
    }
    for (std::size_t k = at_least.size(); k-- > 0;) {
        int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
        for (int c = 0; c < at_least[k] - next; ++c) s.abelianization.push_back(ipow(p, static_cast<int>(k + 1)));
    }
    return s;
}

std::vector<Subgroup> maximal_subgroups(const Group& g) {
    g.require_enumerable("maximal subgroups");
    const int p = g.p();
    Subgroup phi = frattini(g);
    std::vector<Elem> basis;
    Subgroup span = phi;
    for (const auto& x : g.generators()) {
        Idx ix = g.index(x);
        if (span.contains(ix)) continue;
        basis.push_back(x);
        extend(g, span, ix);
    }
    const int d = static_cast<int>(basis.size());
    // coordinates of every element in G/Phi(G)
    std::vector<std::vector<int>> coord(g.order());
    std::vector<int> e(d, 0);
    std::vector<Elem> phis = elements_of(g, phi);
    for (std::uint64_t code = 0; code < ipow(p, d); ++code) {
        std::uint64_t c = code;
        Elem rep;
        for (int t = 0; t < d; ++t) {
            e[t] = static_cast<int>(c % p);
            c /= p;
            rep = g.mul(rep, g.pow(basis[t], e[t]));
        }
        for (const auto& f : phis) coord[g.index(g.mul(rep, f))] = e;
    }
    std::vector<Subgroup> out;
    // hyperplanes: functionals with leading nonzero coefficient 1
    for (std::uint64_t code = 1; code < ipow(p, d); ++code) {
        std::vector<int> f(d);
        std::uint64_t c = code;
        for (int t = 0; t < d; ++t) {
            f[t] = static_cast<int>(c % p);
            c /= p;
        }
        int lead = 0;
        while (f[lead] == 0) ++lead;
        if (f[lead] != 1) continue;
        Subgroup h = phi;
        // kernel basis: e_t - f_t e_lead for t != lead
        for (int t = 0; t < d; ++t) {
            if (t == lead) continue;
            Elem v = g.mul(basis[t], g.pow(basis[lead], fmod_p(-f[t], p)));
            extend(g, h, g.index(v));
        }
        out.push_back(std::move(h));
    }
    return out;
}

namespace {

bool in_cyclic(const Group& g, const Elem& x, const Elem& c) {
    Elem y;
    for (int k = 0; k < g.p(); ++k) {
        if (y == x) return true;
        y = g.mul(y, c);
    }
    return false;
}

// <x,y> is A1. Uses that [[x,y],x] and [[x,y],y] are central, so
// <x,y>' = <[x,y], [[x,y],x], [[x,y],y]>.
bool a1_pair(const Group& g, const Elem& x, const Elem& xi, const Elem& y, const Elem& yi) {
    Elem c = g.mul(g.mul(xi, yi), g.mul(x, y));
    if (g.is_one(c)) return false;
    if (!g.is_one(g.pow(c, g.p()))) return false;
    Elem ci = g.inv(c);
    if (!in_cyclic(g, g.mul(g.mul(ci, xi), g.mul(c, x)), c)) return false;
    return in_cyclic(g, g.mul(g.mul(ci, yi), g.mul(c, y)), c);
}

struct BitsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& b) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto w : b) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }
};

}  // namespace

std::vector<Subgroup> all_a1_subgroups(const Group& g) {
    g.require_enumerable("A1 subgroup enumeration");
    const int p = g.p();
    const Idx n = static_cast<Idx>(g.order());
    std::vector<Elem> el(n), ei(n);
    for (Idx ix = 0; ix < n; ++ix) {
        el[ix] = g.elem(ix);
        ei[ix] = g.inv(el[ix]);
    }
    std::vector<Subgroup> found;
    std::vector<std::vector<std::uint64_t>> found_phi;
    std::unordered_map<std::vector<std::uint64_t>, std::size_t, BitsHash> seen;
    const std::size_t words = words_for(n);

    // Marks the y with <x,y> = H, i.e. y in H outside <x>Phi(H).
    auto cover = [&](std::vector<std::uint64_t>& covered, std::size_t h, Idx x) {
        const auto& phi = found_phi[h];
        if ((phi[x >> 6] >> (x & 63)) & 1u) return;
        std::vector<std::uint64_t> xphi(words, 0);
        Elem xk;
        for (int k = 0; k < p; ++k) {
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t bits = phi[w];
                while (bits) {
                    int b = __builtin_ctzll(bits);
                    bits &= bits - 1;
                    set_bit(xphi, g.index(g.mul(xk, el[w * 64 + b])));
                }
            }
            xk = g.mul(xk, el[x]);
        }
        for (std::size_t w = 0; w < words; ++w) covered[w] |= found[h].bits[w] & ~xphi[w];
    };

    std::vector<std::uint64_t> covered(words);
    const Idx one = g.index(g.one());
    for (Idx x = 0; x < n; ++x) {
        if (x == one) continue;
        std::fill(covered.begin(), covered.end(), 0);
        for (std::size_t h = 0; h < found.size(); ++h)
            if (found[h].contains(x)) cover(covered, h, x);
        for (Idx y = x + 1; y < n; ++y) {
            if ((covered[y >> 6] >> (y & 63)) & 1u) continue;
            if (!a1_pair(g, el[x], ei[x], el[y], ei[y])) continue;
            Subgroup h = closure_idx(g, {x, y});
            auto it = seen.find(h.bits);
            std::size_t id;
            if (it == seen.end()) {
                Subgroup phi = closure(g, {g.pow(el[x], p), g.pow(el[y], p), g.comm(el[x], el[y])});
                id = found.size();
                seen.emplace(h.bits, id);
                found.push_back(std::move(h));
                found_phi.push_back(std::move(phi.bits));
            } else {
                id = it->second;
            }
            cover(covered, id, x);
        }
    }
    return found;
}

std::optional<IndexRange> i_minmax(const Group& g) {
    auto subs = all_a1_subgroups(g);
    if (subs.empty()) return std::nullopt;
    IndexRange r;
    r.i_min = 1 << 30;
    r.count = subs.size();
    for (const auto& h : subs) {
        int idx = log_p(g.order() / h.order(), g.p());
        r.i_min = std::min(r.i_min, idx);
        r.i_max = std::max(r.i_max, idx);
    }
    return r;
}

std::optional<GroupData> datum_for_generators(const Group& g, const Elem& x, const Elem& y) {
    const GroupData& d = g.data();
    const int p = d.p;
    if (!spans_z(d)) return std::nullopt;
    if (fmod_p(x.i * y.j - x.j * y.i, p) == 0) return std::nullopt;
    Elem c = g.comm(x, y);
    Elem A = g.pow(x, static_cast<std::int64_t>(ipow(p, d.n)));
    Elem B = g.pow(y, static_cast<std::int64_t>(ipow(p, d.m)));
    Elem C = g.pow(c, p);
    Elem D = g.comm(c, x);
    Elem E = g.comm(c, y);
    for (const auto* e : {&A, &B, &C, &D, &E})
        if (!g.in_z(*e)) return std::nullopt;
    GroupData out = d;
    out.alpha = g.z_coords(A);
    out.beta = g.z_coords(B);
    out.gamma = g.z_coords(C);
    out.delta = g.z_coords(D);
    out.epsilon = g.z_coords(E);
    return out;
}

GroupData change_z_basis(const GroupData& d, const Mat2& basis) {
    const int p = d.p;
    GroupData out = d;
    if (d.zrank == 0) return out;
    if (d.zrank == 1) {
        int s = f_inv(basis(0, 0), p);
        for (ZVec* v : {&out.alpha, &out.beta, &out.gamma, &out.delta, &out.epsilon}) (*v)[0] = f_mul((*v)[0], s, p);
        return out;
    }
    Mat2 li = mat_inv(basis, p);
    for (ZVec* v : {&out.alpha, &out.beta, &out.gamma, &out.delta, &out.epsilon}) *v = mat_apply(li, *v, p);
    return out;
}

}  // namespace pga
