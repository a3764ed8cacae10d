#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pgatlas/cases.hpp"
#include "pgatlas/families.hpp"

namespace pga::detail {

enum class Shape { Fixed, NWithM1, NEqualM, MEqualN, NM };

struct FamilySpec {
    std::string tag;
    CaseId case_id;     // VII for list entries
    CaseId structural;  // case of the constructed groups
    std::string relations;
    Shape shape = Shape::NM;
    int fixed_n = 0, fixed_m = 0;
    std::function<bool(int p, int n, int m)> where;
    std::vector<std::string> extra;                                  // parameter names besides n, m
    std::function<std::vector<Params>(int p, int n, int m)> space;  // admitted values of `extra`
    // Builds the datum; null for list entries (delegated) and for frozen tags.
    std::function<GroupData(int p, int n, int m, const Params& x)> build;
    // list entries: the family member they correspond to
    std::function<IsoType(const IsoType&)> counterpart;
    std::string target;
};

const std::vector<FamilySpec>& family_specs();
const FamilySpec& spec_for(const std::string& tag);

// Data for the small-order families, fixed once and validated against the printed relations.
const GroupData* frozen_datum(const std::string& tag, int p, const Params& x);
int f_variant_count();

}  // namespace pga::detail
