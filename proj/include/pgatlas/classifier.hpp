// Characteristic data of a group and its isomorphism type.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgatlas/cases.hpp"
#include "pgatlas/families.hpp"
#include "pgatlas/pc_group.hpp"

namespace pga {

// Which case a Property-P datum falls in; throws NotPropertyP otherwise.
CaseId structural_case(const GroupData& d);

// Rewrites the datum in its case convention (new z-basis, and new generators
// when the centralizer of G' is not spanned by a or b) and reads off w, v.
CharData extract_char(const GroupData& d);

// True when an isomorphism criterion in matrix form is available for these
// parameters. The remaining shapes (p = 2 with n = 2, and p = 3 with n = m = 1)
// are handled by searching generator pairs in the group itself.
bool in_theorem_domain(CaseId c, int p, int n, int m);

struct TransformWitness {
    Mat2 x = Mat2{{1, 0, 0, 1}};   // X (cases I to IIIb) or Y (case IV)
    Mat2 x1 = Mat2{{1, 0, 0, 1}};  // X1 or Y1, the companion with the p^(n-m) factor moved
    int lambda = 1;                // case II
    // Small-order shapes: the characteristic generators of the target, as elements of the source.
    bool reselection = false;
    Elem a_image, b_image;
};

// All witnesses of the criterion for (c, p, n, m), in a fixed order.
std::vector<TransformWitness> transforms(CaseId c, int p, int n, int m);
CharData apply_transform(const CharData& c, const TransformWitness& w);

// A witness taking c1 to c2, or nullopt when the groups are not isomorphic.
std::optional<TransformWitness> equivalent(const CharData& c1, const CharData& c2);

IsoType canonical_type(const CharData& c);
IsoType classify_group(const GroupData& d);

struct Classification {
    IsoType type;
    CharData chr;
    bool theorem_domain = true;
    // Takes chr to the characteristic data of the stored representative.
    TransformWitness witness;
};
Classification classify_detailed(const GroupData& d);

// Predicted I_min and I_max of a listed type.
struct Claim {
    enum Kind {
        IMinEq,        // I_min = value
        IMaxEq,        // I_max = value
        IMinAtLeast,   // I_min >= value
        IMaxAtLeast,   // I_max >= value
        IMinIsOne,     // (I_min == 1) == holds
        IMaxIsTwo,     // (I_max == 2) == holds
        UniqueA1Max,   // exactly one maximal subgroup is A1
    } kind;
    int value = 0;
    bool holds = true;
    std::string rule;  // short description of where the claim comes from
};

struct Prediction {
    std::vector<Claim> claims;
    std::optional<int> i_max;
    std::optional<int> i_min_bound;  // I_min >= this
    std::optional<int> a_t;          // I_max + 1
    bool covered() const { return !claims.empty(); }
};
Prediction predicted_properties(const IsoType& t);

std::string kind_name(Claim::Kind k);

}  // namespace pga
