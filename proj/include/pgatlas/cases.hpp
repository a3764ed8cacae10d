// The five structural cases and the per-case reading of a GroupData as
// characteristic matrices w (and v in case IV).
//
//   I     G3 <= Phi(G') = C_p        z = c^p
//   II    G3 = C_p, Phi(G') = 1      z generates G3
//   IIIa  G3 = C_p, Z = C_p^2, [a,c] = 1            z = (c^p, x), x = [b,c]
//   IIIb  G3 = C_p, Z = C_p^2, n > m, [b,c] = 1     z = (c^p, y), y = [a,c]
//   IV    Phi(G') <= G3 = C_p^2                     z = (x, y), x = [b,c], y = [c,a]
//
// In every case a^(p^n) = z^(w11, w12), b^(p^m) = z^(w21, w22); for zrank 1 the
// pair (w11, w21) is the exponent of z in a^(p^n), b^(p^m) and (w12, w22) the
// exponent in [c,a], [c,b]. In case IV c^p = z^v.
#pragma once

#include <string>

#include "pgatlas/fp.hpp"
#include "pgatlas/group_data.hpp"

namespace pga {

enum class CaseId { I, II, IIIa, IIIb, IV, VII };

std::string case_name(CaseId c);
CaseId parse_case(const std::string& s);
int case_zrank(CaseId c);

struct CharData {
    CaseId case_id = CaseId::I;
    int p = 2, n = 2, m = 1;
    Mat2 w;
    ZVec v{0, 0};

    auto operator<=>(const CharData&) const = default;
};

GroupData datum_from_char(const CharData& c);
// Only for a datum already written in the convention of `case_id`.
CharData char_from_datum(CaseId case_id, const GroupData& d);

std::string to_string(const CharData& c);

}  // namespace pga
