// pgatlas: command-line front end over the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgatlas/pgatlas.h"

namespace {

using nlohmann::json;

constexpr int kOk = 0, kUsage = 1, kDiscrepancy = 2;

struct Failure {
    std::string message;
};

struct Owned {
    char* s = nullptr;
    ~Owned() { pga_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

using GroupPtr = std::unique_ptr<pga_group, decltype(&pga_group_free)>;

void check(pga_status st) {
    if (st != PGA_OK) throw Failure{std::string(pga_status_name(st)) + ": " + pga_last_error()};
}

struct Args {
    std::string type;
    std::optional<int> p, n, m, s, t, nu, nu1, nu2, r;
    std::string case_name;
    std::vector<std::string> inputs;
    std::string report;
    bool json_out = false;
    bool presentation = false;
    bool invertible = false, singular = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{"cannot read " + path};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Failure{"cannot write " + path};
    out << text << "\n";
}

std::string type_json(const Args& a) {
    json params = json::object();
    auto put = [&](const char* k, const std::optional<int>& v) {
        if (v) params[k] = *v;
    };
    put("n", a.n);
    put("m", a.m);
    put("s", a.s);
    put("t", a.t);
    put("nu", a.nu);
    put("nu1", a.nu1);
    put("nu2", a.nu2);
    put("r", a.r);
    return json{{"type", a.type}, {"params", params}}.dump();
}

int need_p(const Args& a) {
    if (!a.p) throw Failure{"--p is required"};
    return *a.p;
}

GroupPtr group_from_text(const std::string& text) {
    pga_group* g = nullptr;
    check(pga_group_from_json(text.c_str(), &g));
    return GroupPtr(g, pga_group_free);
}

// The group named by --input or by --type/--p and parameters.
GroupPtr the_group(const Args& a) {
    if (!a.inputs.empty()) return group_from_text(read_file(a.inputs.front()));
    if (a.type.empty()) throw Failure{"give --input FILE or --type with --p"};
    pga_group* g = nullptr;
    check(pga_group_construct(type_json(a).c_str(), need_p(a), &g));
    return GroupPtr(g, pga_group_free);
}

void need_case(const Args& a) {
    if (a.case_name.empty() || !a.p || !a.n || !a.m) throw Failure{"--case, --p, --n and --m are required"};
}

int cmd_construct(const Args& a) {
    if (a.type.empty()) throw Failure{"--type is required"};
    int p = need_p(a);
    pga_group* raw = nullptr;
    check(pga_group_construct(type_json(a).c_str(), p, &raw));
    GroupPtr g(raw, pga_group_free);
    Owned datum;
    check(pga_group_to_json(g.get(), &datum.s));
    if (!a.presentation) {
        std::cout << datum.str() << "\n";
        return kOk;
    }
    Owned text;
    check(pga_presentation(type_json(a).c_str(), p, &text.s));
    if (a.json_out) {
        uint64_t order = 0;
        check(pga_group_order(g.get(), &order));
        std::cout << json{{"datum", json::parse(datum.str())}, {"order", order}, {"presentation", text.str()}}.dump()
                  << "\n";
    } else {
        std::cout << text.str() << "\n";
    }
    return kOk;
}

int cmd_classify(const Args& a) {
    auto g = the_group(a);
    Owned out;
    check(a.json_out ? pga_classify_detailed(g.get(), &out.s) : pga_classify(g.get(), &out.s));
    if (a.presentation && !a.json_out) {
        json t = json::parse(out.str());
        uint64_t order = 0;
        check(pga_group_order(g.get(), &order));
        Owned datum;
        check(pga_group_to_json(g.get(), &datum.s));
        int p = json::parse(datum.str())["p"];
        Owned text;
        check(pga_presentation(t.dump().c_str(), p, &text.s));
        std::cout << text.str() << "\n";
        return kOk;
    }
    std::cout << out.str() << "\n";
    return kOk;
}

int cmd_invariants(const Args& a) {
    auto g = the_group(a);
    Owned out;
    check(pga_group_invariants(g.get(), &out.s));
    std::cout << out.str() << "\n";
    return kOk;
}

int cmd_enumerate(const Args& a) {
    need_case(a);
    Owned out;
    check(pga_enumerate(a.case_name.c_str(), *a.p, *a.n, *a.m, &out.s));
    std::cout << out.str() << "\n";
    return kOk;
}

json summary(const json& r) {
    json s = {{"kind", r["kind"]}, {"ok", r["ok"]}, {"checked", r["checked"]},
              {"discrepancies", r["discrepancies"].size()}, {"skipped", r["skipped"].size()}, {"seconds", r["seconds"]}};
    if (r.contains("bucket_count")) {
        for (const char* k : {"case", "p", "n", "m", "admissible_count", "bucket_count", "family_count"}) s[k] = r[k];
    }
    return s;
}

int cmd_verify(const Args& a) {
    json report;
    bool all_ok = true;
    if (!a.case_name.empty()) {
        need_case(a);
        Owned out;
        int ok = 0;
        check(pga_verify(a.case_name.c_str(), *a.p, *a.n, *a.m, &out.s, &ok));
        report = json::parse(out.str());
        all_ok = ok != 0;
    } else {
        report = {{"kind", "suite"}, {"reports", json::array()}};
        for (const char* kind : {"minimal-orders", "list", "i-theorems"}) {
            Owned out;
            int ok = 0;
            check(pga_verify_suite(kind, &out.s, &ok));
            report["reports"].push_back(json::parse(out.str()));
            all_ok = all_ok && ok;
        }
        report["ok"] = all_ok;
    }
    if (!a.report.empty()) {
        write_file(a.report, report.dump(2));
        if (report.contains("reports")) {
            json s = json::array();
            for (const auto& r : report["reports"]) s.push_back(summary(r));
            std::cout << json{{"ok", all_ok}, {"reports", s}}.dump() << "\n";
        } else {
            std::cout << summary(report).dump() << "\n";
        }
    } else {
        std::cout << report.dump() << "\n";
    }
    return all_ok ? kOk : kDiscrepancy;
}

int cmd_transversal(const Args& a) {
    Owned out;
    check(pga_transversal(need_p(a), a.singular ? 0 : 1, &out.s));
    std::cout << out.str() << "\n";
    return kOk;
}

int cmd_iso(const Args& a) {
    std::vector<GroupPtr> gs;
    if (a.inputs.size() == 1) {
        json arr = json::parse(read_file(a.inputs[0]), nullptr, false);
        if (!arr.is_array() || arr.size() != 2) throw Failure{"iso needs two --input files or one file holding a pair"};
        for (const auto& d : arr) gs.push_back(group_from_text(d.dump()));
    } else if (a.inputs.size() == 2) {
        for (const auto& f : a.inputs) gs.push_back(group_from_text(read_file(f)));
    } else {
        throw Failure{"iso needs two --input files or one file holding a pair"};
    }
    int result = 0;
    Owned witness;
    check(pga_isomorphic(gs[0].get(), gs[1].get(), &result, &witness.s));
    json out = {{"isomorphic", result != 0}};
    if (witness.s) out["witness"] = json::parse(witness.str());
    std::cout << out.dump() << "\n";
    return kOk;
}

void add_type_flags(CLI::App* c, Args& a) {
    c->add_option("--type", a.type, "family tag, e.g. D1 or S7-12");
    c->add_option("--p", a.p, "prime");
    c->add_option("--n", a.n);
    c->add_option("--m", a.m);
    c->add_option("--s", a.s);
    c->add_option("--t", a.t);
    c->add_option("--nu", a.nu);
    c->add_option("--nu1", a.nu1);
    c->add_option("--nu2", a.nu2);
    c->add_option("--r", a.r);
}

void add_case_flags(CLI::App* c, Args& a) {
    c->add_option("--case", a.case_name)->check(CLI::IsMember({"I", "II", "IIIa", "IIIb", "IV"}));
    c->add_option("--p", a.p, "prime");
    c->add_option("--n", a.n);
    c->add_option("--m", a.m);
}

void add_output_flags(CLI::App* c, Args& a) {
    c->add_flag("--json", a.json_out, "machine-readable detail");
    c->add_flag("--presentation", a.presentation, "print the presentation");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-generator p-groups with Property P"};
    app.require_subcommand(1);
    Args a;

    auto* construct = app.add_subcommand("construct", "datum of a listed type");
    add_type_flags(construct, a);
    add_output_flags(construct, a);

    auto* classify = app.add_subcommand("classify", "isomorphism type of a datum");
    add_type_flags(classify, a);
    classify->add_option("--input", a.inputs, "GroupData JSON file")->check(CLI::ExistingFile);
    add_output_flags(classify, a);

    auto* invariants = app.add_subcommand("invariants", "subgroup invariants of a group");
    add_type_flags(invariants, a);
    invariants->add_option("--input", a.inputs, "GroupData JSON file")->check(CLI::ExistingFile);
    add_output_flags(invariants, a);

    auto* enumerate = app.add_subcommand("enumerate", "all admissible data of a case");
    add_case_flags(enumerate, a);
    add_output_flags(enumerate, a);

    auto* verify = app.add_subcommand("verify", "check the classification against brute force");
    add_case_flags(verify, a);
    verify->add_option("--report", a.report, "write the full report here");
    add_output_flags(verify, a);

    auto* transversal = app.add_subcommand("transversal", "congruence classes of 2x2 matrices");
    transversal->add_option("--p", a.p, "prime");
    auto* inv = transversal->add_flag("--invertible", a.invertible);
    auto* sing = transversal->add_flag("--singular", a.singular);
    inv->excludes(sing);
    add_output_flags(transversal, a);

    auto* iso = app.add_subcommand("iso", "test two data for isomorphism");
    iso->add_option("--input", a.inputs, "GroupData JSON file (twice), or one file with a pair")
        ->check(CLI::ExistingFile);
    add_output_flags(iso, a);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*construct) return cmd_construct(a);
        if (*classify) return cmd_classify(a);
        if (*invariants) return cmd_invariants(a);
        if (*enumerate) return cmd_enumerate(a);
        if (*verify) return cmd_verify(a);
        if (*transversal) return cmd_transversal(a);
        if (*iso) return cmd_iso(a);
    } catch (const Failure& f) {
        std::cerr << "pgatlas: " << f.message << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "pgatlas: malformed JSON: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
