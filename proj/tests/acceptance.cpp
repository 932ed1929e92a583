// Acceptance suite: runs every release criterion at its stated tolerance
// (exact integer equality throughout) and prints one line per criterion.
// Exits nonzero if any criterion fails or overruns its time budget.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "scrollfano/census.hpp"
#include "scrollfano/logfano.hpp"
#include "scrollfano/parse.hpp"
#include "scrollfano/sections.hpp"

using namespace scrollfano;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("[%s] criterion %d: %s (%.2fs/%.0fs)%s%s\n", ok ? "PASS" : "FAIL",
                number, name.c_str(), seconds, budget_seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

ScrollVariety scroll(const std::string& literal) { return parse_variety(literal).variety; }

DivisorClass cls1(std::int64_t m, std::int64_t n) { return {{m}, n}; }

// --- criterion 1 -----------------------------------------------------------

void sorted_tuples(int t, std::int64_t cap, std::vector<std::vector<std::int64_t>>& out) {
    std::vector<std::int64_t> cur(static_cast<std::size_t>(t));
    auto rec = [&](auto&& self, int i, std::int64_t min) -> void {
        if (i == t) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t v = min; v <= cap; ++v) {
            cur[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, 0);
}

bool oracle_equivalence(std::string& detail) {
    long long instances = 0;
    for (int s = 1; s <= 4; ++s)
        for (int t = 1; t <= 4; ++t) {
            std::vector<std::vector<std::int64_t>> tuples;
            sorted_tuples(t, 4, tuples);
            for (const auto& a : tuples) {
                std::vector<Vec> twists{{0}};
                for (std::int64_t v : a) twists.push_back({v});
                const ScrollVariety x(BaseSpace::proj_space(s), twists);
                std::map<std::pair<std::int64_t, std::int64_t>, Int> memo;

                std::vector<std::int64_t> c(static_cast<std::size_t>(t), -3);
                for (;;) {
                    for (std::int64_t d = 0; d <= 4; ++d) {
                        const DivisorClass cls = divisor_from_components(x, c, d);
                        auto [it, fresh] = memo.try_emplace(
                            {cls.base_part[0], cls.fiber_part}, 0);
                        if (fresh) it->second = h0_scroll(x, cls);
                        if (h0_lattice(x, c, d) != it->second) {
                            detail = "mismatch at " + to_string(x) + " d=" +
                                     std::to_string(d);
                            return false;
                        }
                        ++instances;
                    }
                    int i = 0;
                    for (; i < t; ++i) {
                        auto& ci = c[static_cast<std::size_t>(i)];
                        if (++ci <= 3) break;
                        ci = -3;
                    }
                    if (i == t) break;
                }
            }
        }

    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> s_dist(1, 5), t_dist(1, 5);
    std::uniform_int_distribution<std::int64_t> a_dist(0, 8), c_dist(-5, 5), d_dist(0, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const int s = s_dist(rng), t = t_dist(rng);
        std::vector<std::int64_t> a(static_cast<std::size_t>(t));
        for (auto& v : a) v = a_dist(rng);
        std::sort(a.begin(), a.end());
        std::vector<Vec> twists{{0}};
        for (std::int64_t v : a) twists.push_back({v});
        const ScrollVariety x(BaseSpace::proj_space(s), twists);
        std::vector<std::int64_t> c(static_cast<std::size_t>(t));
        for (auto& v : c) v = c_dist(rng);
        const std::int64_t d = d_dist(rng);
        if (h0_lattice(x, c, d) != h0_scroll(x, divisor_from_components(x, c, d))) {
            detail = "random mismatch at trial " + std::to_string(trial);
            return false;
        }
        ++instances;
    }
    detail = std::to_string(instances) + " instances agree exactly";
    return true;
}

// --- criterion 2 -----------------------------------------------------------

bool gallery_regression(std::string& detail) {
    long long instances = 0;
    for (int r = 2; r <= 4; ++r)
        for (const FamilyInstance& inst : gallery_instances(r, 4)) {
            const FamilyReport report = verify_family(inst);
            if (!report.ok) {
                detail = family_id_string(inst.id) + " failed: " +
                         (report.failures.empty() ? "?" : report.failures.front());
                return false;
            }
            ++instances;
        }

    const std::vector<std::pair<FamilyInstance, Int>> anchors = {
        {family(FamilyId::ZeroZeroOne, {2, 0, 0, 0}), 4},
        {family(FamilyId::PP, {2, 0, 0, 0}), 9},
        {family(FamilyId::Pp, {2, 0, 0, 0}), 8},
        {family(FamilyId::Burouappu, {2, 0, 0, 0}), 3},
        // m1 = 0, m2 = 1: the count forced by the lattice description is 5
        // sections (dimension 4); see the monomial listing in the tests.
        {family(FamilyId::Kayaku, {2, 0, 0, 1}), 4},
        {family(FamilyId::FanoQ, {2, 1, 0, 0}), 14},
        {family(FamilyId::ZeroZeroBig, {2, 2, 0, 0}), 2},
        {family(FamilyId::ZeroOneBig, {2, 1, 0, 0}), 1},
    };
    for (const auto& [inst, expected] : anchors) {
        const FamilyReport report = verify_family(inst);
        if (!report.ok || report.computed_dim_linear_system != expected) {
            detail = "anchor mismatch for " + family_id_string(inst.id);
            return false;
        }
    }
    detail = std::to_string(instances) + " instances verified, 8 anchors pinned";
    return true;
}

// --- criterion 3 -----------------------------------------------------------

bool boundary_rejections(std::string& detail) {
    {
        auto [x, shift] = ScrollVariety::make_with_shift(BaseSpace::quadric(3),
                                                         {{0}, {0}, {0}, {-1}});
        const PairReport r = check_pair(
            LogFanoPair(x, {BoundarySpec::general_member(
                               transport_class(cls1(1, 1), shift))}));
        if (r.is_log_fano || !r.witness || degree(x, r.adjoint_class, *r.witness) > 0) {
            detail = "quadric-base m=-1 not rejected with a witness";
            return false;
        }
    }
    {
        // tangent-bundle family at m = 0: the section degree m*r vanishes
        bool rejected = false;
        try {
            family(FamilyId::Tp, {3, 0, 0, 0});
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        if (!rejected || 0 * 3 > 0) {
            detail = "tangent-bundle family accepted m=0";
            return false;
        }
    }
    {
        auto [x, shift] = ScrollVariety::make_with_shift(BaseSpace::proj_space(2),
                                                         {{0}, {0}, {0}, {-1}});
        const PairReport r = check_pair(
            LogFanoPair(x, {BoundarySpec::general_member(
                               transport_class(cls1(1, 1), shift))}));
        if (r.is_log_fano || !r.witness || r.witness->is_fiber) {
            detail = "odd-family m=-1 not rejected with a section witness";
            return false;
        }
    }
    detail = "all three rejected with invariant-curve witnesses";
    return true;
}

// --- criterion 4 -----------------------------------------------------------

std::vector<std::pair<std::string, std::string>> row_signatures(
    const std::vector<CensusRow>& rows) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const CensusRow& row : rows)
        out.emplace_back(to_string(row.x), to_string(row.boundary_class));
    return out;
}

bool census_completeness(std::string& detail) {
    CensusQuery q4;
    q4.n = 4;
    q4.mode = CensusMode::IndexAtLeast;
    q4.bound = 2;
    q4.twist_cap = 1;
    const auto rows4 = enumerate_census(q4);
    const std::vector<std::pair<std::string, std::string>> expected4 = {
        {"P[P1;0,0,0,0]", "(0;2)"},
        {"P[P1;0,0,0,1]", "(-1;2)"},
        {"P[P1;0,0,1,1]", "(-2;2)"},
        {"P[P2;0,0,0]", "(1;1)"},
        {"P[P2;0,0,1]", "(0;1)"},
        {"P[P2;0,1,1]", "(-1;1)"},
        {"P[P3;0,1]", "(1;0)"},
        {"P[Q3;0,0]", "(1;0)"},
        {"P[P1xP1;(0,0),(0,0),(0,0)]", "((0,0);1)"},
        {"P[P1xP1;(0,0),(0,0),(0,1)]", "((0,-1);1)"},
        {"P[P1xP1;(0,0),(0,0),(1,1)]", "((-1,-1);1)"},
    };
    if (row_signatures(rows4) != expected4 ||
        !diff_against_families(rows4, 4, 1).unmatched.empty()) {
        detail = "n=4 index>=2 cap 1 differs from the derived table";
        return false;
    }

    CensusQuery q3;
    q3.n = 3;
    q3.mode = CensusMode::PseudoindexAtLeast;
    q3.bound = 2;
    q3.twist_cap = 3;
    const auto rows3 = enumerate_census(q3);
    const std::vector<std::pair<std::string, std::string>> expected3 = {
        {"P[P1;0,0,0]", "(0;1)"},
        {"P[P1;0,0,1]", "(-1;1)"},
        {"P[P1;0,0,2]", "(-2;1)"},
        {"P[P1;0,0,3]", "(-3;1)"},
    };
    if (row_signatures(rows3) != expected3 ||
        !diff_against_families(rows3, 3, 3).unmatched.empty()) {
        detail = "n=3 pseudoindex>=2 cap 3 differs from the derived family";
        return false;
    }

    CensusQuery q43 = q4;
    q43.bound = 3;
    q43.twist_cap = 3;
    if (!enumerate_census(q43).empty()) {
        detail = "n=4 index>=3 should be empty";
        return false;
    }

    CensusQuery q6;
    q6.n = 6;
    q6.mode = CensusMode::IndexAtLeast;
    q6.bound = 3;
    q6.twist_cap = 1;
    const auto rows6 = enumerate_census(q6);
    const std::vector<std::pair<std::string, std::string>> expected6 = {
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
    if (row_signatures(rows6) != expected6 ||
        !diff_against_families(rows6, 6, 1).unmatched.empty()) {
        detail = "n=6 index>=3 cap 1 differs from the derived table";
        return false;
    }
    detail = "11 + 4 + 0 + 10 rows, zero unmatched";
    return true;
}

// --- criterion 5 -----------------------------------------------------------

// Direct scan of the admissible exponent vectors, independent of the
// production enumeration.
std::vector<std::vector<std::int64_t>> admissible_exponents(const ScrollVariety& x,
                                                            const DivisorClass& cls) {
    std::vector<std::vector<std::int64_t>> out;
    if (cls.fiber_part < 0) return out;
    const int t = x.t();
    std::vector<std::int64_t> q(static_cast<std::size_t>(t) + 1);
    auto rec = [&](auto&& self, int i, std::int64_t left) -> void {
        if (i == t) {
            q[static_cast<std::size_t>(i)] = left;
            std::int64_t base = cls.base_part[0];
            for (int j = 0; j <= t; ++j)
                base += q[static_cast<std::size_t>(j)] *
                        x.twists()[static_cast<std::size_t>(j)][0];
            if (base >= 0) out.push_back(q);
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            q[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, cls.fiber_part);
    return out;
}

bool member_criteria(std::string& detail) {
    // forced component: the twisted summand appears in every monomial
    const MonomialSummary forced = monomial_summary(scroll("P[P2;0,0,2]"), cls1(-2, 1));
    if (forced.forced_multiplicities != std::vector<std::int64_t>{0, 0, 1} ||
        forced.residual_class != cls1(0, 0)) {
        detail = "forced-component example failed";
        return false;
    }
    if (member_status(scroll("P[P1;0,0,1,2]"), cls1(-4, 2)).kind !=
        MemberStatus::Kind::ForcedNonReduced) {
        detail = "forced-non-reduced example failed";
        return false;
    }
    const MemberStatus split = member_status(scroll("P[P1;0,0,1,2]"), cls1(-3, 2));
    if (split.kind != MemberStatus::Kind::ForcedDecomposition ||
        split.parts != std::vector<DivisorClass>{cls1(-2, 1), cls1(-1, 1)}) {
        detail = "forced-decomposition example failed";
        return false;
    }

    std::mt19937 rng(314159);
    std::uniform_int_distribution<int> s_dist(1, 3), t_dist(1, 4);
    std::uniform_int_distribution<std::int64_t> tw(0, 3), m_dist(-7, 3), n_dist(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const int s = s_dist(rng), t = t_dist(rng);
        std::vector<Vec> twists{{0}};
        for (int i = 0; i < t; ++i) twists.push_back({tw(rng)});
        const ScrollVariety x(BaseSpace::proj_space(s), twists);
        const DivisorClass cls = cls1(m_dist(rng), n_dist(rng));
        const MemberStatus status = member_status(x, cls);
        const auto admissible = admissible_exponents(x, cls);

        if (admissible.empty() != (status.kind == MemberStatus::Kind::NoMember)) {
            detail = "membership verdict disagrees with the exponent scan";
            return false;
        }
        if (admissible.empty()) continue;
        bool some_variable_forced_twice = false;
        for (int j = 0; j <= x.t(); ++j) {
            std::int64_t mu = admissible.front()[static_cast<std::size_t>(j)];
            for (const auto& q : admissible)
                mu = std::min(mu, q[static_cast<std::size_t>(j)]);
            some_variable_forced_twice = some_variable_forced_twice || mu >= 2;
        }
        if (some_variable_forced_twice !=
            (status.kind == MemberStatus::Kind::ForcedNonReduced)) {
            detail = "non-reducedness verdict disagrees with the exponent scan";
            return false;
        }
        if (status.kind == MemberStatus::Kind::ForcedDecomposition) {
            DivisorClass total = status.parts.front();
            for (std::size_t i = 1; i < status.parts.size(); ++i)
                total = total + status.parts[i];
            if (total != cls || cls.fiber_part != 2) {
                detail = "decomposition parts do not sum to the class";
                return false;
            }
        }
    }
    detail = "3 worked examples plus 50 randomized verdicts confirmed";
    return true;
}

// --- criterion 6 -----------------------------------------------------------

bool adjunction_checks(std::string& detail) {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> s_dist(1, 4), t_dist(2, 4);
    std::uniform_int_distribution<std::int64_t> tw(0, 3);
    int done = 0;
    while (done < 100) {
        const int s = s_dist(rng), t = t_dist(rng);
        std::vector<Vec> twists;
        for (int i = 0; i <= t; ++i) twists.push_back({tw(rng)});
        const ScrollVariety x(BaseSpace::proj_space(s), twists);
        std::uniform_int_distribution<int> summand(0, t);
        const int sub = summand(rng);
        std::vector<BoundarySpec> specs{BoundarySpec::sub_bundle(sub)};
        const int other = summand(rng);
        if (other != sub) specs.push_back(BoundarySpec::sub_bundle(other));
        specs.push_back(BoundarySpec::base_pullback({1}));
        const LogFanoPair pair(x, specs);

        if (!conductor_adjunction_check(pair, 0)) {
            detail = "adjunction identity failed on " + to_string(x);
            return false;
        }
        const PairReport report = check_pair(pair);
        if (report.is_log_fano) {
            auto [sub_scroll, restricted] =
                restrict_to_subbundle(x, report.adjoint_class, sub);
            (void)sub_scroll;
            if (index_of(restricted) % report.index != 0) {
                detail = "restricted index not divisible on " + to_string(x);
                return false;
            }
        }
        ++done;
    }
    detail = "100 pairs: adjunction identity and index divisibility hold";
    return true;
}

// --- criterion 7 -----------------------------------------------------------

std::string run_cli(const std::string& args, int& exit_code) {
    const std::string cmd = std::string(SCROLLFANO_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

bool determinism(std::string& detail) {
    CensusQuery q;
    q.n = 4;
    q.mode = CensusMode::IndexAtLeast;
    q.bound = 2;
    q.twist_cap = 2;
    q.threads = 1;
    const auto reference = row_signatures(enumerate_census(q));
    for (int threads : {4, 16}) {
        CensusQuery qt = q;
        qt.threads = threads;
        if (row_signatures(enumerate_census(qt)) != reference) {
            detail = "census differs at " + std::to_string(threads) + " threads";
            return false;
        }
    }

    std::ifstream golden_in(std::string(GOLDEN_DIR) + "/census_n4_index2_cap1.md",
                            std::ios::binary);
    std::ostringstream golden;
    golden << golden_in.rdbuf();
    int code1 = 0, code2 = 0;
    const std::string out1 =
        run_cli("census --n=4 --index=2 --max-twist=1 --format=markdown", code1);
    const std::string out2 =
        run_cli("census --n=4 --index=2 --max-twist=1 --format=markdown", code2);
    if (code1 != 0 || code2 != 0 || out1 != out2 || out1 != golden.str()) {
        detail = "markdown output not byte-identical to the golden file";
        return false;
    }
    detail = "threads {1,4,16} identical; markdown golden byte-identical";
    return true;
}

}  // namespace

int main() {
    criterion(1, "section-count oracle equivalence", 60, oracle_equivalence);
    criterion(2, "gallery regression", 30, gallery_regression);
    criterion(3, "boundary-of-domain rejections", 1, boundary_rejections);
    criterion(4, "census completeness at desk scale", 300, census_completeness);
    criterion(5, "forced-member criteria", 10, member_criteria);
    criterion(6, "adjunction and index divisibility", 10, adjunction_checks);
    criterion(7, "determinism", 60, determinism);
    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
