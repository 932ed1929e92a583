#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "scrollfano/census.hpp"
#include "scrollfano/parse.hpp"

using namespace scrollfano;

namespace {

ScrollVariety scroll(const std::string& literal) { return parse_variety(literal).variety; }

DivisorClass cls1(std::int64_t m, std::int64_t n) { return {{m}, n}; }

CensusQuery query(int n, CensusMode mode, std::int64_t bound, std::int64_t cap) {
    CensusQuery q;
    q.n = n;
    q.mode = mode;
    q.bound = bound;
    q.twist_cap = cap;
    return q;
}

std::vector<std::pair<std::string, std::string>> signatures(
    const std::vector<CensusRow>& rows) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const CensusRow& row : rows)
        out.emplace_back(to_string(row.x), to_string(row.boundary_class));
    return out;
}

std::string full_signature(const std::vector<CensusRow>& rows) {
    std::string out;
    for (const CensusRow& row : rows) {
        out += to_string(row.x) + " " + to_string(row.boundary_class) + " ";
        out += to_string(row.report.adjoint_class) + " ";
        out += std::to_string(row.report.index) + " ";
        out += row.report.pseudoindex ? std::to_string(*row.report.pseudoindex) : "-";
        out += " ";
        out += row.matched_family ? describe(*row.matched_family) : "unmatched";
        out += "\n";
    }
    return out;
}

}  // namespace

TEST_CASE("canonical forms of product realizations") {
    {
        auto [x, cls] = canonical_pair_form(scroll("P[P3;0,0]"), cls1(2, 0));
        CHECK(x == scroll("P[P1;0,0,0,0]"));
        CHECK(cls == cls1(0, 2));
    }
    {
        auto [x, cls] = canonical_pair_form(scroll("P[P2;0,0,0]"), cls1(2, 1));
        CHECK(x == scroll("P[P2;0,0,0]"));
        CHECK(cls == cls1(1, 2));
    }
    {
        // nontrivial twists are untouched
        auto [x, cls] = canonical_pair_form(scroll("P[P3;0,1]"), cls1(1, 0));
        CHECK(x == scroll("P[P3;0,1]"));
        CHECK(cls == cls1(1, 0));
    }
    {
        // ruling swap on the P1xP1 base
        auto [x, cls] = canonical_pair_form(scroll("P[P1xP1;(0,0),(1,0)]"),
                                            DivisorClass{{2, 5}, 1});
        CHECK(x == scroll("P[P1xP1;(0,0),(0,1)]"));
        CHECK(cls == DivisorClass{{5, 2}, 1});
    }
    {
        // triple product: all factors sortable
        auto [x, cls] = canonical_pair_form(scroll("P[P1xP1;(0,0),(0,0)]"),
                                            DivisorClass{{3, 1}, 2});
        CHECK(x == scroll("P[P1xP1;(0,0),(0,0)]"));
        CHECK(cls == DivisorClass{{1, 2}, 3});
    }
}

TEST_CASE("corollary filters on their worked shapes") {
    for (std::int64_t m = 0; m <= 3; ++m) {
        const ScrollVariety x = scroll("P[P1;0,0," + std::to_string(m) + "]");
        CHECK(corollary_filter_1(x, cls1(-m, 1), 2));
        CHECK_FALSE(corollary_filter_1(x, cls1(-m, 2), 2));
        if (m > 0) CHECK_FALSE(corollary_filter_1(x, cls1(-m + 1, 1), 2));
    }
    CHECK_FALSE(corollary_filter_1(scroll("P[P1;0,1,2]"), cls1(-2, 1), 2));
    CHECK(corollary_filter_1(scroll("P[P2;0,0,1]"), cls1(7, 1), 2));  // s > iota-1

    const ScrollVariety k = scroll("P[P1;0,0,1,2]");
    CHECK(corollary_filter_2(k, cls1(-3, 2), 2));
    CHECK_FALSE(corollary_filter_2(k, cls1(-3, 1), 2));
    CHECK_FALSE(corollary_filter_2(k, cls1(-2, 2), 2));
    CHECK_FALSE(corollary_filter_2(scroll("P[P1;0,1,1,2]"), cls1(-4, 2), 2));
    CHECK_THROWS_AS(corollary_filter_2(scroll("P[P1;0,1]"), cls1(0, 1), 2),
                    std::invalid_argument);
}

TEST_CASE("census n=3 pseudoindex >= 2") {
    const auto rows = enumerate_census(query(3, CensusMode::PseudoindexAtLeast, 2, 3));
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"P[P1;0,0,0]", "(0;1)"},
        {"P[P1;0,0,1]", "(-1;1)"},
        {"P[P1;0,0,2]", "(-2;1)"},
        {"P[P1;0,0,3]", "(-3;1)"},
    };
    CHECK(signatures(rows) == expected);
    for (const CensusRow& row : rows) {
        REQUIRE(row.matched_family.has_value());
        CHECK(row.matched_family->id == FamilyId::TwoRMinusOne);
        CHECK(row.report.is_log_fano);
        CHECK(row.report.pseudoindex == 2);
    }
}

TEST_CASE("census n=4 index >= 2, twist cap 1") {
    const auto rows = enumerate_census(query(4, CensusMode::IndexAtLeast, 2, 1));
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"P[P1;0,0,0,0]", "(0;2)"},           // quadric pullback on P1 x P3
        {"P[P1;0,0,0,1]", "(-1;2)"},          // two subbundles (0,1)
        {"P[P1;0,0,1,1]", "(-2;2)"},          // two subbundles (1,1)
        {"P[P2;0,0,0]", "(1;1)"},             // diagonal-type divisor on P2 x P2
        {"P[P2;0,0,1]", "(0;1)"},             // blowup of P4 along a line
        {"P[P2;0,1,1]", "(-1;1)"},            // twist pattern 0,1,m at m=1
        {"P[P3;0,1]", "(1;0)"},               // blowup of P4 at a point
        {"P[Q3;0,0]", "(1;0)"},               // double-cover family at m=0
        {"P[P1xP1;(0,0),(0,0),(0,0)]", "((0,0);1)"},
        {"P[P1xP1;(0,0),(0,0),(0,1)]", "((0,-1);1)"},
        {"P[P1xP1;(0,0),(0,0),(1,1)]", "((-1,-1);1)"},
    };
    CHECK(signatures(rows) == expected);

    const TableDiff diff = match_table(rows, 2, 1);
    CHECK(diff.unmatched.empty());
    CHECK(diff.absent.empty());
    CHECK(diff.matched.size() == rows.size());

    for (const CensusRow& row : rows) {
        CHECK(row.report.is_log_fano);
        CHECK(row.report.index == 2);
        CHECK(row.report.fundamental_class.fiber_part == 1);
    }
}

TEST_CASE("census n=4 index >= 3 is empty") {
    CHECK(enumerate_census(query(4, CensusMode::IndexAtLeast, 3, 3)).empty());
    CHECK(enumerate_census(query(4, CensusMode::PseudoindexAtLeast, 3, 3)).empty());
}

TEST_CASE("census n=6 index >= 3, twist cap 1") {
    const auto rows = enumerate_census(query(6, CensusMode::IndexAtLeast, 3, 1));
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"P[P2;0,0,0,0,0]", "(0;2)"},
        {"P[P2;0,0,0,0,1]", "(-1;2)"},
        {"P[P2;0,0,0,1,1]", "(-2;2)"},
        {"P[P3;0,0,0,0]", "(1;1)"},
        {"P[P3;0,0,0,1]", "(0;1)"},
        {"P[P3;0,0,1,1]", "(-1;1)"},
        {"P[P4;0,0,1]", "(1;0)"},
        {"P[Q3;0,0,0,0]", "(0;1)"},
        {"P[Q3;0,0,0,1]", "(-1;1)"},
        {"P[Q4;0,0,0]", "(1;0)"},
    };
    CHECK(signatures(rows) == expected);
    const TableDiff diff = match_table(rows, 3, 1);
    CHECK(diff.unmatched.empty());
    CHECK(diff.absent.empty());
}

TEST_CASE("census completeness against the family forms") {
    struct Setup {
        int n;
        CensusMode mode;
        std::int64_t bound;
    };
    const std::vector<Setup> setups = {
        {3, CensusMode::PseudoindexAtLeast, 2}, {4, CensusMode::IndexAtLeast, 2},
        {5, CensusMode::PseudoindexAtLeast, 3}, {6, CensusMode::IndexAtLeast, 3},
        {7, CensusMode::PseudoindexAtLeast, 4}, {8, CensusMode::IndexAtLeast, 4},
    };
    for (const Setup& setup : setups)
        for (std::int64_t cap = 0; cap <= 3; ++cap) {
            const auto rows = enumerate_census(query(setup.n, setup.mode, setup.bound, cap));
            std::set<std::pair<std::string, std::string>> row_set;
            for (const auto& sig : signatures(rows)) row_set.insert(sig);
            std::set<std::pair<std::string, std::string>> form_set;
            for (const FamilyForm& form : scroll_family_forms(setup.n, cap))
                form_set.insert({to_string(form.x), to_string(form.boundary_class)});
            INFO("n=", setup.n, " cap=", cap);
            CHECK(row_set == form_set);
            CHECK(rows.size() == row_set.size());
            for (const CensusRow& row : rows) CHECK(row.matched_family.has_value());
        }
}

TEST_CASE("empty censuses above the classification bounds") {
    CHECK(enumerate_census(query(4, CensusMode::PseudoindexAtLeast, 3, 3)).empty());
    CHECK(enumerate_census(query(6, CensusMode::PseudoindexAtLeast, 4, 2)).empty());
    CHECK(enumerate_census(query(5, CensusMode::PseudoindexAtLeast, 4, 2)).empty());
}

TEST_CASE("corollary filters only prune, never change the output") {
    struct Setup {
        int n;
        CensusMode mode;
        std::int64_t bound;
    };
    const std::vector<Setup> setups = {
        {3, CensusMode::PseudoindexAtLeast, 2}, {4, CensusMode::IndexAtLeast, 2},
        {4, CensusMode::PseudoindexAtLeast, 2}, {5, CensusMode::PseudoindexAtLeast, 3},
        {5, CensusMode::IndexAtLeast, 2},       {4, CensusMode::IndexAtLeast, 3},
    };
    for (const Setup& setup : setups)
        for (std::int64_t cap = 0; cap <= 2; ++cap) {
            CensusQuery with = query(setup.n, setup.mode, setup.bound, cap);
            CensusQuery without = with;
            without.use_corollary_filters = false;
            INFO("n=", setup.n, " cap=", cap, " bound=", setup.bound);
            CHECK(full_signature(enumerate_census(with)) ==
                  full_signature(enumerate_census(without)));
        }
}

TEST_CASE("census output is independent of the thread count") {
    CensusQuery base = query(4, CensusMode::IndexAtLeast, 2, 2);
    base.threads = 1;
    const std::string reference = full_signature(enumerate_census(base));
    for (int threads : {2, 4, 16}) {
        CensusQuery q = base;
        q.threads = threads;
        CHECK(full_signature(enumerate_census(q)) == reference);
    }
}

TEST_CASE("census soundness: every row re-verifies") {
    for (const CensusRow& row :
         enumerate_census(query(4, CensusMode::IndexAtLeast, 2, 2))) {
        LogFanoPair pair(row.x, {BoundarySpec::general_member(row.boundary_class)});
        const PairReport report = check_pair(pair);
        CHECK(report.is_log_fano);
        CHECK(report.index >= 2);
        CHECK(report.adjoint_class == row.report.adjoint_class);
        CHECK(is_effective(row.x, row.boundary_class));
        CHECK(snc_member_exists(row.x, row.boundary_class));
        CHECK(row.decomposition.kind != MemberStatus::Kind::NoMember);
        CHECK(row.decomposition.kind != MemberStatus::Kind::ForcedNonReduced);
    }
}

TEST_CASE("match_table reports a removed row as absent") {
    auto rows = enumerate_census(query(4, CensusMode::IndexAtLeast, 2, 1));
    const std::size_t before = rows.size();
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const CensusRow& row) {
                                  return row.matched_family &&
                                         row.matched_family->id == FamilyId::ZeroOneBig;
                              }),
               rows.end());
    REQUIRE(rows.size() == before - 1);
    const TableDiff diff = match_table(rows, 2, 1);
    REQUIRE(diff.absent.size() == 1);
    CHECK(diff.absent.front().id == FamilyId::ZeroOneBig);
    CHECK(diff.unmatched.empty());
}

TEST_CASE("match_table at twist cap 0") {
    const auto rows = enumerate_census(query(6, CensusMode::IndexAtLeast, 3, 0));
    const TableDiff diff = match_table(rows, 3, 0);
    CHECK(diff.unmatched.empty());
    CHECK(diff.absent.empty());
    std::set<std::string> families;
    for (const CensusRow& row : diff.matched)
        families.insert(family_id_string(row.matched_family->id));
    CHECK(families == std::set<std::string>{"p-p", "pp", "r-three", "fano-q"});
    CHECK(diff.out_of_scope.size() == 2);
}
