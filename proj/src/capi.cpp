#include "pgatlas/pgatlas.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <mutex>
#include <new>
#include <string>

#include "pgatlas/classifier.hpp"
#include "pgatlas/congruence.hpp"
#include "pgatlas/error.hpp"
#include "pgatlas/families.hpp"
#include "pgatlas/oracle.hpp"

struct pga_group {
    pga::Group g;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

void ensure_env() {
    static std::once_flag once;
    std::call_once(once, [] { pga::load_limits_from_env(); });
}

template <class F>
pga_status guard(F&& f) {
    ensure_env();
    try {
        f();
        last_error.clear();
        return PGA_OK;
    } catch (const pga::Error& e) {
        last_error = e.what();
        return static_cast<pga_status>(e.code());
    } catch (const json::exception& e) {
        last_error = std::string("malformed JSON: ") + e.what();
        return PGA_E_PARSE;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return PGA_E_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return PGA_E_INTERNAL;
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void need(const void* p, const char* what) {
    if (!p) pga::fail(pga::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

json parse(const char* text) {
    need(text, "input");
    return json::parse(text);
}

json elem_json(const pga::Elem& e) { return json::array({e.i, e.j, e.k, e.u0, e.u1}); }

json mat_json(const pga::Mat2& m) { return json::array({json::array({m(0, 0), m(0, 1)}), json::array({m(1, 0), m(1, 1)})}); }

json char_json(const pga::CharData& c) {
    json j = {{"case", pga::case_name(c.case_id)}, {"p", c.p}, {"n", c.n}, {"m", c.m}, {"w", mat_json(c.w)}};
    if (c.case_id == pga::CaseId::IV) j["v"] = {c.v[0], c.v[1]};
    return j;
}

json witness_json(const pga::TransformWitness& w) {
    if (w.reselection) return {{"reselection", true}, {"a", elem_json(w.a_image)}, {"b", elem_json(w.b_image)}};
    return {{"reselection", false}, {"x", mat_json(w.x)}, {"x1", mat_json(w.x1)}, {"lambda", w.lambda}};
}

}  // namespace

extern "C" {

const char* pga_last_error(void) { return last_error.c_str(); }

const char* pga_status_name(pga_status s) {
    switch (s) {
        case PGA_OK: return "ok";
        case PGA_E_INVALID_ARGUMENT: return "invalid argument";
        case PGA_E_UNSUPPORTED_PRIME: return "unsupported prime";
        case PGA_E_NOT_ADMISSIBLE: return "not admissible";
        case PGA_E_NOT_PROPERTY_P: return "not Property P";
        case PGA_E_BOUND_EXCEEDED: return "bound exceeded";
        case PGA_E_PARSE: return "parse error";
        case PGA_E_NOT_FOUND: return "not found";
        case PGA_E_UNSUPPORTED: return "unsupported";
        case PGA_E_INTERNAL: return "internal error";
    }
    return "unknown";
}

void pga_string_free(char* s) { std::free(s); }

const char* pga_version(void) { return "0.1.0"; }

void pga_set_max_order(uint64_t order) {
    ensure_env();
    pga::limits().max_order = order;
}

uint64_t pga_get_max_order(void) {
    ensure_env();
    return pga::limits().max_order;
}

pga_status pga_group_from_json(const char* text, pga_group** out) {
    return guard([&] {
        need(out, "out");
        pga::GroupData d = pga::group_data_from_json(parse(text));
        pga::require_admissible(d);
        *out = new pga_group{pga::Group(d)};
    });
}

pga_status pga_group_construct(const char* type_json, int p, pga_group** out) {
    return guard([&] {
        need(out, "out");
        pga::IsoType t = pga::iso_type_from_json(parse(type_json), p);
        *out = new pga_group{pga::Group(pga::construct(t))};
    });
}

void pga_group_free(pga_group* g) { delete g; }

pga_status pga_group_to_json(const pga_group* g, char** out) {
    return guard([&] {
        need(g, "group");
        need(out, "out");
        *out = dup(pga::to_json(g->g.data()).dump());
    });
}

pga_status pga_group_order(const pga_group* g, uint64_t* out) {
    return guard([&] {
        need(g, "group");
        need(out, "out");
        *out = g->g.order();
    });
}

pga_status pga_group_invariants(const pga_group* g, char** out) {
    return guard([&] {
        need(g, "group");
        need(out, "out");
        const pga::Group& G = g->g;
        const pga::GroupData& d = G.data();
        json j = {{"order", G.order()}, {"p", d.p}, {"property_p", pga::has_property_p(d)}};
        if (pga::spans_z(d)) j["case"] = pga::case_name(pga::structural_case(d));
        if (G.enumerable()) {
            pga::Structure s = pga::structure(G);
            j["derived"] = s.derived;
            j["g3"] = s.g3;
            j["center"] = s.center;
            j["frattini"] = s.frattini;
            j["phi_derived"] = s.phi_derived;
            j["phi_derived_g3"] = s.phi_derived_g3;
            j["phi_derived_g3_central"] = s.phi_derived_g3_central;
            j["d"] = s.d;
            j["abelianization"] = s.abelianization;
            json hist = json::object();
            for (const auto& [o, c] : s.order_histogram) hist[std::to_string(o)] = c;
            j["order_histogram"] = hist;
            if (auto r = pga::i_minmax(G)) {
                j["i_min"] = r->i_min;
                j["i_max"] = r->i_max;
                j["a1_subgroups"] = r->count;
            }
            j["a1_maximal"] = pga::a1_maximal_count(G);
            j["quotient_minimal_nonabelian"] = pga::quotient_is_minimal_nonabelian(G);
            j["fingerprint"] = pga::to_json(pga::fingerprint(G));
        } else {
            j["skipped"] = "order exceeds the enumeration bound " + std::to_string(pga::limits().max_order);
        }
        *out = dup(j.dump());
    });
}

pga_status pga_classify(const pga_group* g, char** out) {
    return guard([&] {
        need(g, "group");
        need(out, "out");
        *out = dup(pga::to_json(pga::classify_group(g->g.data())).dump());
    });
}

pga_status pga_classify_detailed(const pga_group* g, char** out) {
    return guard([&] {
        need(g, "group");
        need(out, "out");
        pga::Classification c = pga::classify_detailed(g->g.data());
        json j = pga::to_json(c.type);
        j["p"] = c.type.p;
        j["characteristic"] = char_json(c.chr);
        j["theorem_domain"] = c.theorem_domain;
        j["witness"] = witness_json(c.witness);
        *out = dup(j.dump());
    });
}

pga_status pga_isomorphic(const pga_group* g, const pga_group* h, int* result, char** witness) {
    return guard([&] {
        need(g, "group");
        need(h, "group");
        need(result, "result");
        auto iso = pga::find_isomorphism(g->g, h->g);
        if (iso && witness) *witness = dup(json{{"a", elem_json(iso->first)}, {"b", elem_json(iso->second)}}.dump());
        *result = iso ? 1 : 0;
    });
}

pga_status pga_presentation(const char* type_json, int p, char** out) {
    return guard([&] {
        need(out, "out");
        *out = dup(pga::presentation_text(pga::iso_type_from_json(parse(type_json), p)));
    });
}

pga_status pga_enumerate(const char* case_name, int p, int n, int m, char** out) {
    return guard([&] {
        need(case_name, "case");
        need(out, "out");
        pga::CaseId c = pga::parse_case(case_name);
        json data = json::array(), fams = json::array();
        for (const auto& d : pga::enumerate_case(c, p, n, m)) data.push_back(pga::to_json(d));
        for (const auto& t : pga::list_families(c, p, n, m)) fams.push_back(pga::to_json(t));
        json j = {{"case", pga::case_name(c)}, {"p", p},         {"n", n},          {"m", m},
                  {"count", data.size()},       {"data", data}, {"families", fams}};
        *out = dup(j.dump());
    });
}

pga_status pga_verify(const char* case_name, int p, int n, int m, char** report, int* ok) {
    return guard([&] {
        need(case_name, "case");
        need(report, "report");
        need(ok, "ok");
        pga::VerificationReport r = pga::verify_classification(pga::parse_case(case_name), p, n, m);
        *report = dup(pga::to_json(r).dump());
        *ok = r.ok() ? 1 : 0;
    });
}

pga_status pga_verify_suite(const char* kind, char** report, int* ok) {
    return guard([&] {
        need(kind, "kind");
        need(report, "report");
        need(ok, "ok");
        std::string k = kind;
        pga::VerificationReport r;
        if (k == "i-theorems")
            r = pga::verify_i_theorems({});
        else if (k == "list")
            r = pga::verify_list_entries();
        else if (k == "minimal-orders")
            r = pga::verify_minimal_orders();
        else
            pga::fail(pga::ErrorCode::InvalidArgument, "unknown report kind '" + k + "'");
        *report = dup(pga::to_json(r).dump());
        *ok = r.ok() ? 1 : 0;
    });
}

pga_status pga_transversal(int p, int invertible, char** out) {
    return guard([&] {
        need(out, "out");
        pga::require_supported_prime(p);
        auto reps = pga::transversal(p, invertible != 0);
        std::map<pga::Mat2, std::uint64_t> size;
        for (int code = 0; code < p * p * p * p; ++code) {
            pga::Mat2 a = pga::mat(code % p, code / p % p, code / (p * p) % p, code / (p * p * p), p);
            if (pga::mat_invertible(a, p) != (invertible != 0)) continue;
            size[pga::congruence_normal_form(a, p).normal_form]++;
        }
        json rows = json::array();
        for (const auto& r : reps) rows.push_back({{"matrix", mat_json(r)}, {"orbit_size", size[r]}});
        *out = dup(json{{"p", p}, {"invertible", invertible != 0}, {"count", reps.size()}, {"classes", rows}}.dump());
    });
}

pga_status pga_congruence_normal_form(int p, const int entries[4], char** out) {
    return guard([&] {
        need(entries, "entries");
        need(out, "out");
        pga::require_supported_prime(p);
        pga::Mat2 a = pga::mat(entries[0], entries[1], entries[2], entries[3], p);
        auto w = pga::congruence_normal_form(a, p);
        *out = dup(json{{"normal_form", mat_json(w.normal_form)}, {"x", mat_json(w.x)}}.dump());
    });
}

}  // extern "C"
