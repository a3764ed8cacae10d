// The named isomorphism types: families A1..V7 and the 45-entry list S7-1..S7-45.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgatlas/cases.hpp"
#include "pgatlas/group_data.hpp"
#include "pgatlas/relations.hpp"

namespace pga {

struct IsoType {
    std::string tag;
    int p = 2;
    std::optional<int> n, m, s, t, nu, nu1, nu2, r;

    auto operator<=>(const IsoType&) const = default;
};

// {"type": tag, "params": {...}}; p is not part of params.
nlohmann::json to_json(const IsoType& t);
IsoType iso_type_from_json(const nlohmann::json& j, int p);
std::string to_string(const IsoType& t);
// Parameter names and values, including p and the derived n, m.
Params params_of(const IsoType& t);

struct FamilyInfo {
    std::string tag;
    CaseId case_id;          // VII for list entries
    CaseId structural_case;  // the case the groups fall in
    std::string relations;   // printed relations, ASCII
    std::vector<std::string> params;
};

const std::vector<std::string>& all_tags();
FamilyInfo family_info(const std::string& tag);
bool is_tag(const std::string& tag);

// Throws InvalidArgument if the parameters are outside the family's where-clause.
GroupData construct(const IsoType& t);
int schema_n(const IsoType& t);
int schema_m(const IsoType& t);
std::uint64_t claimed_order(const IsoType& t);

// Every admitted member for the given case and (p, n, m); VII lists the entries
// whose groups have that (n, m).
std::vector<IsoType> list_families(CaseId c, int p, int n, int m);
// All admitted members of one family at (p, n, m).
std::vector<IsoType> members(const std::string& tag, int p, int n, int m);
bool family_applies(const std::string& tag, int p, int n, int m);

RelationSet presentation(const IsoType& t);
// "<a, b, c | a^27 = b^9 = 1, ...>" with exponents evaluated.
std::string presentation_text(const IsoType& t);

// The family member a list entry corresponds to.
IsoType counterpart(const IsoType& entry);

// Rows of the minimal-order table.
struct MinimalOrderRow {
    std::string label;
    std::vector<std::string> tags;
    // printed minimal order as p-exponent, or nullopt when the row says nothing for p
    std::optional<int> printed_exponent(int p) const;
    std::vector<std::pair<int, int>> by_prime;  // (selector, exponent); selector 2, 3, or 0 = remaining primes
};
const std::vector<MinimalOrderRow>& minimal_order_table();
// Least p-exponent of |G| over the parameter values the where-clauses admit (n, m <= 8).
std::optional<int> minimal_order_exponent(const std::string& tag, int p);

}  // namespace pga
