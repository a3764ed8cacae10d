#include "pgatlas/cases.hpp"

#include <sstream>

#include "pgatlas/error.hpp"

namespace pga {

std::string case_name(CaseId c) {
    switch (c) {
        case CaseId::I: return "I";
        case CaseId::II: return "II";
        case CaseId::IIIa: return "IIIa";
        case CaseId::IIIb: return "IIIb";
        case CaseId::IV: return "IV";
        case CaseId::VII: return "VII";
    }
    return "?";
}

CaseId parse_case(const std::string& s) {
    if (s == "I") return CaseId::I;
    if (s == "II") return CaseId::II;
    if (s == "IIIa" || s == "III-a") return CaseId::IIIa;
    if (s == "IIIb" || s == "III-b") return CaseId::IIIb;
    if (s == "IV") return CaseId::IV;
    if (s == "VII") return CaseId::VII;
    fail(ErrorCode::InvalidArgument, "unknown case '" + s + "' (expected I, II, IIIa, IIIb, IV)");
}

int case_zrank(CaseId c) { return c == CaseId::I || c == CaseId::II ? 1 : 2; }

GroupData datum_from_char(const CharData& c) {
    const int p = c.p;
    GroupData d;
    d.p = p;
    d.n = c.n;
    d.m = c.m;
    const Mat2& w = c.w;
    switch (c.case_id) {
        case CaseId::I:
        case CaseId::II:
            d.zrank = 1;
            d.gamma = {c.case_id == CaseId::I ? 1 : 0, 0};
            d.alpha = {w(0, 0), 0};
            d.delta = {w(0, 1), 0};
            d.beta = {w(1, 0), 0};
            d.epsilon = {w(1, 1), 0};
            break;
        case CaseId::IIIa:
            d.zrank = 2;
            d.gamma = {1, 0};
            d.delta = {0, 0};
            d.epsilon = {0, p - 1};
            d.alpha = {w(0, 0), w(0, 1)};
            d.beta = {w(1, 0), w(1, 1)};
            break;
        case CaseId::IIIb:
            d.zrank = 2;
            d.gamma = {1, 0};
            d.delta = {0, p - 1};
            d.epsilon = {0, 0};
            d.alpha = {w(0, 0), w(0, 1)};
            d.beta = {w(1, 0), w(1, 1)};
            break;
        case CaseId::IV:
            d.zrank = 2;
            d.gamma = c.v;
            d.delta = {0, 1};
            d.epsilon = {p - 1, 0};
            d.alpha = {w(0, 0), w(0, 1)};
            d.beta = {w(1, 0), w(1, 1)};
            break;
        case CaseId::VII: fail(ErrorCode::InvalidArgument, "no characteristic convention for the list case");
    }
    return normalized(d);
}

CharData char_from_datum(CaseId case_id, const GroupData& d) {
    CharData c;
    c.case_id = case_id;
    c.p = d.p;
    c.n = d.n;
    c.m = d.m;
    if (case_id == CaseId::I || case_id == CaseId::II) {
        c.w = mat(d.alpha[0], d.delta[0], d.beta[0], d.epsilon[0], d.p);
    } else {
        c.w = mat(d.alpha[0], d.alpha[1], d.beta[0], d.beta[1], d.p);
        if (case_id == CaseId::IV) c.v = d.gamma;
    }
    return c;
}

std::string to_string(const CharData& c) {
    std::ostringstream os;
    os << "case " << case_name(c.case_id) << " p=" << c.p << " n=" << c.n << " m=" << c.m << " w=" << mat_str(c.w);
    if (c.case_id == CaseId::IV) os << " v=(" << c.v[0] << "," << c.v[1] << ")";
    return os.str();
}

}  // namespace pga
