#pragma once

#include <cstdint>
#include <vector>

#include "scrollfano/geometry.hpp"

namespace scrollfano {

// Section count of O(m) on a base variety.
Int h0_base(const BaseSpace& b, const Vec& m);

// Section count of O(m; n) on a scroll, computed as the pushforward sum
//   sum over Q >= 0 with |Q| = n of h0_base(m + sum Q_i b_i).
Int h0_scroll(const ScrollVariety& x, const DivisorClass& cls);

// Section count of sum(c_i D_i) + d H over projective space, computed by
// counting integer tuples (P_1..P_s, Q_1..Q_t) with
//   -sum Q_j >= 0,  Q_i >= -c_i,  -sum P_i + sum a_j Q_j >= -d,  P_i >= 0.
// Independent of h0_scroll; the two must agree on the common domain.
Int h0_lattice(const ScrollVariety& x, const std::vector<std::int64_t>& c,
               std::int64_t d);

// Monomial-level view of a linear system on a scroll. The summary records
// the total monomial count, the minimum exponent of each fiber variable y_i
// over all monomials of the class (the multiplicity of the subbundle D_i in
// the fixed part), and the class left after removing that fixed part.
struct MonomialSummary {
    Int count;
    std::vector<std::int64_t> forced_multiplicities;  // size t+1
    DivisorClass residual_class;
};

// Exponent vectors are enumerated in ascending lexicographic order on
// (Q_0, ..., Q_t); counts and summaries are reproducible bit for bit.
MonomialSummary monomial_summary(const ScrollVariety& x, const DivisorClass& cls);

// What the monomial structure forces on every member of the linear system.
// Unconstrained means "no obstruction detected", not "general member smooth".
struct MemberStatus {
    enum class Kind { NoMember, ForcedNonReduced, ForcedDecomposition, Unconstrained };

    Kind kind = Kind::Unconstrained;
    std::vector<DivisorClass> parts;  // ForcedDecomposition only; sums to the class

    bool operator==(const MemberStatus&) const = default;
};

MemberStatus member_status(const ScrollVariety& x, const DivisorClass& cls);

// Whether the linear system contains a simple normal crossing member.
// Criterion: some admissible exponent vector is square-free (all Q_i <= 1).
// Such a monomial member is a union of distinct subbundles plus a generic
// base pullback, which crosses normally. Without one, every member repeats a
// fiber variable (non-reduced) or stacks >= 3 sheets over a codimension-two
// stratum, as for binary forms of degree >= 3; the census regression pins
// this down against the classified tables on the enumerated ranges.
bool snc_member_exists(const ScrollVariety& x, const DivisorClass& cls);

}  // namespace scrollfano
