// Brute-force ground truth: isomorphism by generator-image search, enumeration
// of whole parameter spaces, and the verification reports built on them.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "pgatlas/cases.hpp"
#include "pgatlas/classifier.hpp"
#include "pgatlas/families.hpp"
#include "pgatlas/pc_group.hpp"

namespace pga {

struct Fingerprint {
    std::uint64_t order = 0;
    std::vector<std::uint64_t> abelianization;
    std::uint64_t derived = 0, g3 = 0, center = 0;
    // (element order, centralizer order, number of p-th roots) -> count
    std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::uint64_t> classes;
    // size of the image of x -> x^p
    std::uint64_t power_image = 0;

    auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Group& g);
nlohmann::json to_json(const Fingerprint& f);

// Images of a and b under an isomorphism G -> H, checked on every product.
std::optional<std::pair<Elem, Elem>> find_isomorphism(const Group& g, const Group& h);
bool brute_iso(const GroupData& g, const GroupData& h);

// Every admissible Property-P datum of the case written in its convention:
// all w (and v for case IV).
std::vector<GroupData> enumerate_case(CaseId c, int p, int n, int m);

struct Bucket {
    std::vector<GroupData> members;  // members[0] is the representative
};
std::vector<Bucket> bucket_by_iso(const std::vector<GroupData>& data);

struct Discrepancy {
    std::string kind;
    std::string detail;
    nlohmann::json witness = nlohmann::json::object();
};

struct FamilyMatch {
    IsoType type;
    int bucket = -1;  // -1 when no bucket matched
};

struct VerificationReport {
    std::string kind;  // "classification", "i-theorems", "list", "minimal-orders"
    std::string case_name;
    int p = 0, n = 0, m = 0;
    std::size_t raw_count = 0;
    std::size_t admissible_count = 0;
    std::size_t bucket_count = 0;
    std::size_t family_count = 0;
    std::vector<std::size_t> bucket_sizes;
    std::vector<FamilyMatch> matches;
    std::vector<Discrepancy> discrepancies;
    std::vector<std::string> skipped;
    nlohmann::json rows = nlohmann::json::array();  // per-instance details for the other kinds
    std::size_t checked = 0;
    double seconds = 0;

    bool ok() const { return discrepancies.empty(); }
};
nlohmann::json to_json(const VerificationReport& r);

// Buckets the enumerated space, matches buckets with the listed types one to one,
// and checks that the classifier is constant on buckets and tells them apart.
VerificationReport verify_classification(CaseId c, int p, int n, int m);

struct ITheoremScope {
    std::vector<int> primes{2, 3, 5};
    int max_n = 6;
    std::vector<std::string> tags;  // empty: every family tag
};
// Compares i_minmax with predicted_properties on every in-scope family member
// whose order is within the bound; larger instances are listed as skipped.
VerificationReport verify_i_theorems(const ITheoremScope& scope);

// True when G/N is M_p(n,m,1) for N = Phi(G')G3 computed from subgroups:
// |G/N| = p^(n+m+1) and a, b satisfy its relations modulo N.
bool quotient_is_minimal_nonabelian(const Group& g);
// Number of maximal subgroups that are A1.
int a1_maximal_count(const Group& g);

// For each list entry at its least in-bound parameters: d(G) = 2, at least two
// A1 maximal subgroups, the quotient criterion, and isomorphism with the family
// member it corresponds to (through a datum satisfying the entry's own relations).
VerificationReport verify_list_entries();

// The least constructed order of each row of the minimal-order table against the printed one.
VerificationReport verify_minimal_orders(const std::vector<int>& primes = {2, 3, 5, 7});

}  // namespace pga
