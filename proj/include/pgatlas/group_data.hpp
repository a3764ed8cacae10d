// The unified description of a group with the relevant shape:
//
//   a^(p^n) = z^alpha, b^(p^m) = z^beta, [a,b] = c, c^p = z^gamma,
//   [c,a] = z^delta, [c,b] = z^epsilon, z = (z1, .., z_zrank) central of order p.
//
// Commutators are [x,y] = x^-1 y^-1 x y.
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <json.hpp>

namespace pga {

using ZVec = std::array<int, 2>;  // entries beyond zrank are zero

struct GroupData {
    int p = 2;
    int n = 2;
    int m = 1;
    int zrank = 0;
    ZVec alpha{0, 0};
    ZVec beta{0, 0};
    ZVec gamma{0, 0};
    ZVec delta{0, 0};
    ZVec epsilon{0, 0};

    auto operator<=>(const GroupData&) const = default;
};

// Zeroes components beyond zrank and reduces everything mod p; checks ranges.
GroupData normalized(GroupData d);
// Throws if p is unsupported, n < m, m < 1, p = 2 with n < 2, or zrank outside 0..2.
void validate_shape(const GroupData& d);

// p^(n+m+1+zrank). Throws BoundExceeded past 2^62.
std::uint64_t group_order(const GroupData& d);
std::uint64_t ipow(std::uint64_t base, int e);

// Consistency of the presentation (all normal words distinct).
bool consistency_conditions(const GroupData& d);
// Consistency plus generator-overlap checks, and exhaustive associativity when |G| <= 64.
bool check_admissible(const GroupData& d);
void require_admissible(const GroupData& d);

// span(gamma, delta, epsilon) = Z, i.e. Z = Phi(G')G3 and the quotient is M_p(n,m,1).
bool spans_z(const GroupData& d);
bool has_property_p(const GroupData& d);

// G/Z as a datum: same (p, n, m) with zrank 0. Throws for zrank 0.
GroupData quotient_mod_z(const GroupData& d);

nlohmann::json to_json(const GroupData& d);
GroupData group_data_from_json(const nlohmann::json& j);
std::string to_string(const GroupData& d);

}  // namespace pga
