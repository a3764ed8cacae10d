// Element arithmetic and subgroup computations for a GroupData.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pgatlas/fp.hpp"
#include "pgatlas/group_data.hpp"

namespace pga {

// Enumeration-based operations (subgroups, isomorphism search, relation search)
// refuse groups larger than this. PGATLAS_MAX_ORDER overrides the default.
struct Limits {
    std::uint64_t max_order = 3125;
};
Limits& limits();
void load_limits_from_env();

// Normal form a^i b^j c^k z1^u0 z2^u1.
struct Elem {
    std::int64_t i = 0, j = 0, k = 0;
    int u0 = 0, u1 = 0;
    auto operator<=>(const Elem&) const = default;
};

using Idx = std::uint32_t;

class Group {
public:
    explicit Group(const GroupData& d);  // validates shape and consistency
    // Same arithmetic without the consistency check (the product may then fail to be associative).
    static Group unchecked(const GroupData& d);

    const GroupData& data() const { return d_; }
    int p() const { return d_.p; }
    std::uint64_t order() const { return order_; }

    Elem one() const { return {}; }
    Elem a() const { return from_exponents(1, 0, 0); }
    Elem b() const { return from_exponents(0, 1, 0); }
    Elem c() const { return from_exponents(0, 0, 1); }
    Elem z(int t) const;
    Elem z_power(const ZVec& u) const;

    Elem from_exponents(std::int64_t i, std::int64_t j, std::int64_t k, ZVec u = {0, 0}) const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem inv(const Elem& x) const;
    Elem pow(const Elem& x, std::int64_t e) const;
    Elem comm(const Elem& x, const Elem& y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
    bool is_one(const Elem& x) const { return x == Elem{}; }
    // x lies in Z = <z1, .., z_zrank>.
    bool in_z(const Elem& x) const { return x.i == 0 && x.j == 0 && x.k == 0; }
    ZVec z_coords(const Elem& x) const { return {x.u0, x.u1}; }
    std::uint64_t elem_order(const Elem& x) const;

    // Index-based access; requires order() <= limits().max_order.
    bool enumerable() const { return order_ <= limits().max_order; }
    void require_enumerable(const char* what) const;
    Idx index(const Elem& x) const;
    Elem elem(Idx ix) const;
    std::vector<Elem> generators() const;  // a, b, c, z_t

private:
    GroupData d_;
    std::uint64_t order_;
    std::int64_t pn_, pm_;
    int pr_;

    struct NoCheck {};
    Group(const GroupData& d, NoCheck);
};

// ---- subgroups ----

struct Subgroup {
    std::vector<std::uint64_t> bits;
    std::vector<Idx> elems;
    std::vector<Idx> gens;
    std::uint64_t order() const { return elems.size(); }
    bool contains(Idx ix) const { return (bits[ix >> 6] >> (ix & 63)) & 1u; }
    bool operator==(const Subgroup& o) const { return bits == o.bits; }
};

Subgroup closure(const Group& g, const std::vector<Elem>& gens);
Subgroup closure_idx(const Group& g, const std::vector<Idx>& gens);
Subgroup normal_closure(const Group& g, const std::vector<Elem>& gens);
bool is_subset(const Subgroup& a, const Subgroup& b);
std::vector<Elem> elements_of(const Group& g, const Subgroup& h);

// Frattini subgroup H'H^p of a subgroup, and its minimal number of generators.
Subgroup derived_of(const Group& g, const Subgroup& h);
Subgroup frattini_of(const Group& g, const Subgroup& h);
int rank_of(const Group& g, const Subgroup& h);
// d(H) = 2 and |H'| = p.
bool is_a1(const Group& g, const Subgroup& h);

struct Structure {
    std::uint64_t order = 0;
    std::uint64_t derived = 0;
    std::uint64_t g3 = 0;
    std::uint64_t center = 0;
    std::uint64_t frattini = 0;
    std::uint64_t phi_derived = 0;  // |Phi(G')|
    std::uint64_t phi_derived_g3 = 0;
    int d = 0;
    std::vector<std::uint64_t> abelianization;  // invariants, descending
    std::map<std::uint64_t, std::uint64_t> order_histogram;
    bool phi_derived_g3_central = false;
};

Subgroup derived_subgroup(const Group& g);
Subgroup lower_central_3(const Group& g);
Subgroup center(const Group& g);
Subgroup frattini(const Group& g);
Structure structure(const Group& g);

std::vector<Subgroup> maximal_subgroups(const Group& g);
std::vector<Subgroup> all_a1_subgroups(const Group& g);

struct IndexRange {
    int i_min = 0;
    int i_max = 0;
    std::size_t count = 0;  // number of A1 subgroups
};
// log_p of the least and largest index of an A1 subgroup; nullopt if there is none.
std::optional<IndexRange> i_minmax(const Group& g);
int log_p(std::uint64_t x, int p);

// The datum of the same group read off with respect to generators x, y (and the
// original z-basis), or nullopt if x^(p^n), y^(p^m), [x,y]^p, [[x,y],x], [[x,y],y]
// do not all lie in Z or the pair does not generate G modulo Z.
std::optional<GroupData> datum_for_generators(const Group& g, const Elem& x, const Elem& y);

// Re-express z-coordinates in the basis given by the columns of `basis`
// (zrank 1 uses basis(0,0)); throws if singular.
GroupData change_z_basis(const GroupData& d, const Mat2& basis);

}  // namespace pga
