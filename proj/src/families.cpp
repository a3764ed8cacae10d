#include "pgatlas/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "family_table.hpp"
#include "pgatlas/error.hpp"

namespace pga {

using detail::FamilySpec;
using detail::Shape;
using detail::spec_for;

namespace {

const char* kParamNames[] = {"n", "m", "s", "t", "nu", "nu1", "nu2", "r"};

std::optional<int>& field(IsoType& t, const std::string& name) {
    if (name == "n") return t.n;
    if (name == "m") return t.m;
    if (name == "s") return t.s;
    if (name == "t") return t.t;
    if (name == "nu") return t.nu;
    if (name == "nu1") return t.nu1;
    if (name == "nu2") return t.nu2;
    if (name == "r") return t.r;
    fail(ErrorCode::InvalidArgument, "unknown parameter '" + name + "'");
}

const std::optional<int>& field(const IsoType& t, const std::string& name) {
    return field(const_cast<IsoType&>(t), name);
}

std::vector<std::string> shape_params(Shape s) {
    switch (s) {
        case Shape::Fixed: return {};
        case Shape::NWithM1:
        case Shape::NEqualM: return {"n"};
        case Shape::MEqualN: return {"m"};
        case Shape::NM: return {"n", "m"};
    }
    return {};
}

std::pair<int, int> schema(const FamilySpec& s, const IsoType& t) {
    switch (s.shape) {
        case Shape::Fixed: return {s.fixed_n, s.fixed_m};
        case Shape::NWithM1: return {*t.n, 1};
        case Shape::NEqualM: return {*t.n, *t.n};
        case Shape::MEqualN: return {*t.m, *t.m};
        case Shape::NM: return {*t.n, *t.m};
    }
    return {0, 0};
}

Params extra_of(const FamilySpec& s, const IsoType& t) {
    Params x;
    for (const auto& name : s.extra) x[name] = *field(t, name);
    return x;
}

// The U3 where-clause names nu though its relations do not use it.
bool vacuous(const FamilySpec& s, const std::string& name) { return s.tag == "U3" && name == "nu"; }

void check_params(const FamilySpec& s, const IsoType& t) {
    require_supported_prime(t.p);
    auto needed = shape_params(s.shape);
    needed.insert(needed.end(), s.extra.begin(), s.extra.end());
    for (const char* name : kParamNames) {
        bool want = std::find(needed.begin(), needed.end(), name) != needed.end();
        bool have = field(t, name).has_value();
        if (want && !have) fail(ErrorCode::InvalidArgument, s.tag + " needs parameter --" + name);
        if (!want && have && !vacuous(s, name))
            fail(ErrorCode::InvalidArgument, s.tag + " takes no parameter --" + std::string(name));
    }
    auto [n, m] = schema(s, t);
    if (m < 1 || n < m || (t.p == 2 && n < 2) || n > 60)
        fail(ErrorCode::InvalidArgument, s.tag + ": (n, m) = (" + std::to_string(n) + ", " + std::to_string(m) +
                                             ") is not a valid shape");
    if (!s.where(t.p, n, m))
        fail(ErrorCode::InvalidArgument, s.tag + " is not defined for p = " + std::to_string(t.p) + ", n = " +
                                             std::to_string(n) + ", m = " + std::to_string(m));
    auto x = extra_of(s, t);
    auto space = s.space(t.p, n, m);
    if (std::find(space.begin(), space.end(), x) == space.end())
        fail(ErrorCode::InvalidArgument, s.tag + ": parameters outside the admitted range for p = " + std::to_string(t.p));
    if (vacuous(s, "nu") && t.nu && *t.nu != 1 && *t.nu != eta(t.p))
        fail(ErrorCode::InvalidArgument, "nu must be 1 or the least non-residue " + std::to_string(eta(t.p)));
}

IsoType make(const FamilySpec& s, int p, int n, int m, const Params& x) {
    IsoType t;
    t.tag = s.tag;
    t.p = p;
    switch (s.shape) {
        case Shape::Fixed: break;
        case Shape::NWithM1:
        case Shape::NEqualM: t.n = n; break;
        case Shape::MEqualN: t.m = m; break;
        case Shape::NM:
            t.n = n;
            t.m = m;
            break;
    }
    for (const auto& [k, v] : x) field(t, k) = static_cast<int>(v);
    return t;
}

bool shape_fits(const FamilySpec& s, int n, int m) {
    switch (s.shape) {
        case Shape::Fixed: return n == s.fixed_n && m == s.fixed_m;
        case Shape::NWithM1: return m == 1;
        case Shape::NEqualM:
        case Shape::MEqualN: return n == m;
        case Shape::NM: return true;
    }
    return false;
}

}  // namespace

nlohmann::json to_json(const IsoType& t) {
    nlohmann::json params = nlohmann::json::object();
    for (const char* name : kParamNames)
        if (const auto& v = field(t, name)) params[name] = *v;
    return {{"type", t.tag}, {"params", params}};
}

IsoType iso_type_from_json(const nlohmann::json& j, int p) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        fail(ErrorCode::Parse, "type record needs a string field 'type'");
    IsoType t;
    t.tag = j["type"].get<std::string>();
    t.p = p;
    if (j.contains("params")) {
        const auto& ps = j["params"];
        if (!ps.is_object()) fail(ErrorCode::Parse, "'params' must be an object");
        for (auto it = ps.begin(); it != ps.end(); ++it) {
            if (!it.value().is_number_integer()) fail(ErrorCode::Parse, "parameter '" + it.key() + "' must be an integer");
            field(t, it.key()) = it.value().get<int>();
        }
    }
    return t;
}

std::string to_string(const IsoType& t) {
    std::ostringstream os;
    os << t.tag;
    bool first = true;
    for (const char* name : kParamNames)
        if (const auto& v = field(t, name)) {
            os << (first ? "(" : ", ") << name << "=" << *v;
            first = false;
        }
    if (!first) os << ")";
    return os.str();
}

Params params_of(const IsoType& t) {
    const auto& s = spec_for(t.tag);
    Params x = extra_of(s, t);
    auto [n, m] = schema(s, t);
    x["p"] = t.p;
    x["n"] = n;
    x["m"] = m;
    return x;
}

const std::vector<std::string>& all_tags() {
    static const std::vector<std::string> tags = [] {
        std::vector<std::string> out;
        for (const auto& s : detail::family_specs()) out.push_back(s.tag);
        return out;
    }();
    return tags;
}

bool is_tag(const std::string& tag) {
    const auto& tags = all_tags();
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

FamilyInfo family_info(const std::string& tag) {
    const auto& s = spec_for(tag);
    FamilyInfo f{s.tag, s.case_id, s.structural, s.relations, shape_params(s.shape)};
    f.params.insert(f.params.end(), s.extra.begin(), s.extra.end());
    return f;
}

int schema_n(const IsoType& t) {
    const auto& s = spec_for(t.tag);
    check_params(s, t);
    return schema(s, t).first;
}

int schema_m(const IsoType& t) {
    const auto& s = spec_for(t.tag);
    check_params(s, t);
    return schema(s, t).second;
}

std::uint64_t claimed_order(const IsoType& t) {
    const auto& s = spec_for(t.tag);
    check_params(s, t);
    auto [n, m] = schema(s, t);
    return ipow(t.p, n + m + 1 + case_zrank(s.structural));
}

GroupData construct(const IsoType& t) {
    const auto& s = spec_for(t.tag);
    check_params(s, t);
    if (s.case_id == CaseId::VII) return construct(counterpart(t));
    auto [n, m] = schema(s, t);
    auto x = extra_of(s, t);
    if (s.build) return s.build(t.p, n, m, x);
    if (const GroupData* d = detail::frozen_datum(s.tag, t.p, x)) return *d;
    fail(ErrorCode::NotFound, "no datum recorded for " + to_string(t));
}

IsoType counterpart(const IsoType& entry) {
    const auto& s = spec_for(entry.tag);
    if (s.case_id != CaseId::VII) fail(ErrorCode::InvalidArgument, entry.tag + " is not a list entry");
    check_params(s, entry);
    return s.counterpart(entry);
}

std::vector<IsoType> members(const std::string& tag, int p, int n, int m) {
    require_supported_prime(p);
    const auto& s = spec_for(tag);
    std::vector<IsoType> out;
    if (m < 1 || n < m || (p == 2 && n < 2)) return out;
    if (!shape_fits(s, n, m) || !s.where(p, n, m)) return out;
    for (const auto& x : s.space(p, n, m)) out.push_back(make(s, p, n, m, x));
    return out;
}

bool family_applies(const std::string& tag, int p, int n, int m) { return !members(tag, p, n, m).empty(); }

std::vector<IsoType> list_families(CaseId c, int p, int n, int m) {
    std::vector<IsoType> out;
    for (const auto& s : detail::family_specs()) {
        if (s.case_id != c) continue;
        auto more = members(s.tag, p, n, m);
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

RelationSet presentation(const IsoType& t) {
    const auto& s = spec_for(t.tag);
    if (s.relations.empty()) fail(ErrorCode::NotFound, t.tag + " has no printed presentation");
    return parse_relations(s.relations);
}

std::string presentation_text(const IsoType& t) {
    const auto& s = spec_for(t.tag);
    check_params(s, t);
    if (s.relations.empty()) {
        auto d = construct(t);
        return "<a, b, c | " + to_string(d) + ">";
    }
    auto r = presentation(t);
    std::string gens = "a, b";
    for (char l : letters_of(r))
        if (l != 'a' && l != 'b') gens += std::string(", ") + l;
    return "<" + gens + " | " + render(r, params_of(t)) + ">";
}

// ---- minimal orders ----

std::optional<int> MinimalOrderRow::printed_exponent(int p) const {
    std::optional<int> rest;
    for (const auto& [sel, e] : by_prime) {
        if (sel == p) return e;
        if (sel == 0) rest = e;
    }
    return rest;
}

const std::vector<MinimalOrderRow>& minimal_order_table() {
    auto tags = [](const std::string& letter, int k) {
        std::vector<std::string> out;
        for (int i = 1; i <= k; ++i) out.push_back(letter + std::to_string(i));
        return out;
    };
    static const std::vector<MinimalOrderRow> rows = {
        {"B1-B3", tags("B", 3), {{2, 6}}},
        {"D1-D5", tags("D", 5), {{2, 8}, {0, 6}}},
        {"E1-E9", tags("E", 9), {{0, 7}}},
        {"G1-G3", tags("G", 3), {{2, 6}, {3, 6}, {0, 4}}},
        {"I1-I3", tags("I", 3), {{2, 6}}},
        {"J1-J6", tags("J", 6), {{2, 7}, {0, 5}}},
        {"L1-L9", tags("L", 9), {{2, 8}, {0, 7}}},
        {"M1-M9", tags("M", 9), {{0, 8}}},
        {"P1-P10", tags("P", 10), {{2, 9}, {3, 7}, {0, 5}}},
        {"Q1-Q8", tags("Q", 8), {{2, 9}, {0, 7}}},
        {"S1-S7", tags("S", 7), {{2, 8}, {0, 6}}},
        {"T1-T7", tags("T", 7), {{2, 7}}},
        // printed as U1-U8; the family ends at U7
        {"U1-U8", tags("U", 7), {{0, 8}}},
        {"V1-V7", tags("V", 7), {{0, 8}}},
    };
    return rows;
}

std::optional<int> minimal_order_exponent(const std::string& tag, int p) {
    const auto& s = spec_for(tag);
    std::optional<int> best;
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m <= n; ++m)
            if (!members(tag, p, n, m).empty()) {
                int e = n + m + 1 + case_zrank(s.structural);
                if (!best || e < *best) best = e;
            }
    return best;
}

}  // namespace pga
