#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scrollfano/logfano.hpp"

namespace scrollfano {

enum class CensusMode { IndexAtLeast, PseudoindexAtLeast };

struct CensusQuery {
    int n = 4;                   // dimension of the total space
    CensusMode mode = CensusMode::IndexAtLeast;
    std::int64_t bound = 2;      // the r (or iota) of the mode
    std::int64_t twist_cap = 1;  // max twist coordinate
    bool require_picard_rank_ge_2 = true;  // scrolls always satisfy this
    bool require_reduced_member = true;
    bool require_snc_member = true;
    // The corollary filters only prune the search; disabling them must not
    // change the output (exercised by the test suite).
    bool use_corollary_filters = true;
    int threads = 0;  // 0: take SCROLLFANO_THREADS from the environment, else 1
};

struct FamilyMatch {
    FamilyId id = FamilyId::Pp;
    FamilyParams params;

    bool operator==(const FamilyMatch&) const = default;
};

struct CensusRow {
    ScrollVariety x;
    DivisorClass boundary_class;
    MemberStatus decomposition;
    PairReport report;
    std::optional<FamilyMatch> matched_family;
};

// Rows are ordered by (base kind, base dim, t, twists, class); this is the
// output order of the census, independent of the thread count.
bool row_less(const CensusRow& a, const CensusRow& b);

// Canonical representative of (X, boundary class) under the isomorphisms
// that identify different scroll realizations of the same pair:
//  - a product P^s x P^t (all twists zero) is realized over the smaller
//    factor; for s = t the class is sorted so base part <= fiber part;
//  - over P^1xP^1 the two rulings may be swapped (the lex-smaller of the two
//    presentations is kept), and P^1xP^1xP^1 admits the full factor symmetry.
std::pair<ScrollVariety, DivisorClass> canonical_pair_form(ScrollVariety x,
                                                           DivisorClass cls);

// Necessary conditions on a boundary class over projective space, given that
// the pair is log Fano with the stated pseudoindex (respectively index):
// for pseudoindex iota >= t: d = 1, t = iota, s >= iota-1, and for s = iota-1
// also a_1 = ... = a_{iota-1} = 0 with c = -a_iota.
bool corollary_filter_1(const ScrollVariety& x, const DivisorClass& cls,
                        std::int64_t iota);
// For index divisible by r = t-1 >= 2: d = 2, s >= r-1, and for s = r-1 also
// a_1 = ... = a_{r-1} = 0 with c = -a_r - a_{r+1}.
bool corollary_filter_2(const ScrollVariety& x, const DivisorClass& cls,
                        std::int64_t r);

// Bounded exhaustive enumeration of scroll pairs (X, D-class) of dimension n
// with ample adjoint class meeting the mode, filtered down to classes that
// admit reduced (and, by default, simple normal crossing) members.
std::vector<CensusRow> enumerate_census(const CensusQuery& query);

// All scroll-visible family instances of total dimension n with twists
// bounded by cap, in canonical form. The double-cover family degenerates to
// the product scroll over a quadric at m = 0 and is included there; its
// m >= 1 members and the tangent-bundle family are not split bundles and are
// invisible to the census.
struct FamilyForm {
    ScrollVariety x;
    DivisorClass boundary_class;
    FamilyMatch match;
};
std::vector<FamilyForm> scroll_family_forms(int n, std::int64_t cap);

struct TableDiff {
    std::vector<CensusRow> matched;
    std::vector<CensusRow> unmatched;
    std::vector<FamilyMatch> absent;          // expected at this cap but missing
    std::vector<std::string> out_of_scope;    // non-scroll families, documented
};

// Compares census rows against the family forms of the given dimension.
TableDiff diff_against_families(const std::vector<CensusRow>& rows, int n,
                                std::int64_t twist_cap);

// Compares census rows at dimension 2r against the family table.
TableDiff match_table(const std::vector<CensusRow>& rows, int r,
                      std::int64_t twist_cap);

std::string describe(const FamilyMatch& match);

}  // namespace scrollfano
