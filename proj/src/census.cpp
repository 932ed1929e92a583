#include "scrollfano/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace scrollfano {

bool row_less(const CensusRow& a, const CensusRow& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.boundary_class < b.boundary_class;
}

std::pair<ScrollVariety, DivisorClass> canonical_pair_form(ScrollVariety x,
                                                           DivisorClass cls) {
    const bool zero_twists = std::all_of(
        x.twists().begin(), x.twists().end(), [](const Vec& b) {
            return std::all_of(b.begin(), b.end(), [](std::int64_t v) { return v == 0; });
        });

    if (x.base().kind() == BaseKind::ProjSpace && zero_twists) {
        const int s = x.base().dim();
        const int t = x.t();
        if (t < s) {
            // Realize P^s x P^t over the smaller factor; the class swaps.
            ScrollVariety flipped(BaseSpace::proj_space(t),
                                  std::vector<Vec>(static_cast<std::size_t>(s) + 1, Vec{0}));
            return {std::move(flipped), DivisorClass{{cls.fiber_part}, cls.base_part[0]}};
        }
        if (t == s && cls.base_part[0] > cls.fiber_part)
            return {std::move(x), DivisorClass{{cls.fiber_part}, cls.base_part[0]}};
        return {std::move(x), std::move(cls)};
    }

    if (x.base().kind() == BaseKind::BiProjLine) {
        if (x.t() == 1 && zero_twists) {
            // P^1 x P^1 x P^1: all three factors interchangeable.
            std::array<std::int64_t, 3> deg{cls.base_part[0], cls.base_part[1],
                                            cls.fiber_part};
            std::sort(deg.begin(), deg.end());
            return {std::move(x), DivisorClass{{deg[0], deg[1]}, deg[2]}};
        }
        // Swap of the two rulings of the base.
        std::vector<Vec> swapped;
        swapped.reserve(x.twists().size());
        for (const Vec& b : x.twists()) swapped.push_back({b[1], b[0]});
        std::sort(swapped.begin(), swapped.end());
        DivisorClass swapped_cls{{cls.base_part[1], cls.base_part[0]}, cls.fiber_part};
        if (std::tie(swapped, swapped_cls) < std::tie(x.twists(), cls)) {
            ScrollVariety flipped(x.base(), std::move(swapped));
            return {std::move(flipped), std::move(swapped_cls)};
        }
    }
    return {std::move(x), std::move(cls)};
}

bool corollary_filter_1(const ScrollVariety& x, const DivisorClass& cls,
                        std::int64_t iota) {
    if (x.base().kind() != BaseKind::ProjSpace)
        throw std::invalid_argument("filter is stated over projective space");
    const int t = x.t();
    const int s = x.base().dim();
    if (iota < t) throw std::invalid_argument("filter needs iota >= t");
    if (cls.fiber_part != 1) return false;
    if (t != iota) return false;
    if (s < iota - 1) return false;
    if (s == iota - 1) {
        for (int i = 1; i < iota; ++i)
            if (x.twists()[static_cast<std::size_t>(i)][0] != 0) return false;
        if (cls.base_part[0] != -x.twists()[static_cast<std::size_t>(iota)][0]) return false;
    }
    return true;
}

bool corollary_filter_2(const ScrollVariety& x, const DivisorClass& cls,
                        std::int64_t r) {
    if (x.base().kind() != BaseKind::ProjSpace)
        throw std::invalid_argument("filter is stated over projective space");
    const int t = x.t();
    const int s = x.base().dim();
    if (r < 2 || t != r + 1) throw std::invalid_argument("filter needs t = r+1, r >= 2");
    if (cls.fiber_part != 2) return false;
    if (s < r - 1) return false;
    if (s == r - 1) {
        for (int i = 1; i < r; ++i)
            if (x.twists()[static_cast<std::size_t>(i)][0] != 0) return false;
        const std::int64_t a_r = x.twists()[static_cast<std::size_t>(r)][0];
        const std::int64_t a_r1 = x.twists()[static_cast<std::size_t>(r + 1)][0];
        if (cls.base_part[0] != -a_r - a_r1) return false;
    }
    return true;
}

namespace {

int thread_count(const CensusQuery& query) {
    if (query.threads > 0) return query.threads;
    if (const char* env = std::getenv("SCROLLFANO_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

// Normalized twist tuples: size count, coordinates in [0, cap], sorted
// ascending, componentwise minimum zero.
void collect_twist_tuples(int rank, int count, std::int64_t cap,
                          std::vector<std::vector<Vec>>& out) {
    std::vector<Vec> alphabet;
    if (rank == 1) {
        for (std::int64_t v = 0; v <= cap; ++v) alphabet.push_back({v});
    } else {
        for (std::int64_t a = 0; a <= cap; ++a)
            for (std::int64_t b = 0; b <= cap; ++b) alphabet.push_back({a, b});
    }
    std::vector<Vec> current;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(current.size()) == count) {
            Vec cmin = current.front();
            for (const Vec& b : current)
                for (std::size_t j = 0; j < cmin.size(); ++j)
                    cmin[j] = std::min(cmin[j], b[j]);
            if (std::all_of(cmin.begin(), cmin.end(), [](std::int64_t v) { return v == 0; }))
                out.push_back(current);
            return;
        }
        for (std::size_t i = from; i < alphabet.size(); ++i) {
            current.push_back(alphabet[i]);
            self(self, i);
            current.pop_back();
        }
    };
    rec(rec, 0);
}

struct Task {
    BaseSpace base;
    std::vector<Vec> twists;
};

std::vector<Task> build_tasks(const CensusQuery& query) {
    std::vector<Task> tasks;
    const int n = query.n;
    for (int s = 1; s <= n - 1; ++s) {
        std::vector<std::vector<Vec>> tuples;
        collect_twist_tuples(1, n - s + 1, query.twist_cap, tuples);
        for (auto& tw : tuples) tasks.push_back({BaseSpace::proj_space(s), std::move(tw)});
    }
    for (int q = 3; q <= n - 1; ++q) {
        std::vector<std::vector<Vec>> tuples;
        collect_twist_tuples(1, n - q + 1, query.twist_cap, tuples);
        for (auto& tw : tuples) tasks.push_back({BaseSpace::quadric(q), std::move(tw)});
    }
    if (n >= 3) {
        std::vector<std::vector<Vec>> tuples;
        collect_twist_tuples(2, n - 1, query.twist_cap, tuples);
        for (auto& tw : tuples) tasks.push_back({BaseSpace::biproj_line(), std::move(tw)});
    }
    return tasks;
}

class FamilyMatcher {
  public:
    FamilyMatcher(int n, std::int64_t cap) {
        for (FamilyForm& form : scroll_family_forms(n, cap))
            forms_.emplace(std::make_pair(std::move(form.x), std::move(form.boundary_class)),
                           form.match);
    }

    std::optional<FamilyMatch> lookup(const ScrollVariety& x,
                                      const DivisorClass& cls) const {
        auto it = forms_.find(std::make_pair(x, cls));
        if (it == forms_.end()) return std::nullopt;
        return it->second;
    }

  private:
    std::map<std::pair<ScrollVariety, DivisorClass>, FamilyMatch> forms_;
};

void scan_task(const CensusQuery& query, const Task& task, const FamilyMatcher& matcher,
               std::vector<CensusRow>& out) {
    ScrollVariety x(task.base, task.twists);
    const int t = x.t();
    const int rank = x.base().pic_rank();
    const DivisorClass minus_k = anticanonical(x);

    Vec max_twist(static_cast<std::size_t>(rank), 0);
    for (const Vec& b : x.twists())
        for (int j = 0; j < rank; ++j)
            max_twist[static_cast<std::size_t>(j)] =
                std::max(max_twist[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(j)]);

    for (std::int64_t d = 0; d <= t; ++d) {
        // The adjoint class has degree t+1-d on a fiber line, and the index
        // (resp. pseudoindex) divides (resp. bounds) that degree.
        if (t + 1 - d < query.bound) continue;

        const bool pseudo = query.mode == CensusMode::PseudoindexAtLeast;
        const bool proj = x.base().kind() == BaseKind::ProjSpace;
        if (query.use_corollary_filters && proj && d >= 1 && pseudo && t < query.bound)
            continue;  // the pseudoindex of such a pair would be forced to t

        // Box for the base part: effectivity below, ampleness of the adjoint
        // above (its base coordinates must stay positive).
        Vec lo(static_cast<std::size_t>(rank)), hi(static_cast<std::size_t>(rank));
        bool empty = false;
        for (int j = 0; j < rank; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            lo[ju] = d == 0 ? 0 : -d * max_twist[ju];
            hi[ju] = minus_k.base_part[ju] - 1;
            if (hi[ju] < lo[ju]) empty = true;
        }
        if (empty) continue;

        Vec c = lo;
        while (true) {
            DivisorClass cls{c, d};
            bool nonzero = d != 0 ||
                           std::any_of(c.begin(), c.end(), [](std::int64_t v) { return v != 0; });
            if (nonzero) {
                bool keep = true;
                if (query.use_corollary_filters && proj && d >= 1) {
                    if (pseudo && t == query.bound)
                        keep = corollary_filter_1(x, cls, query.bound);
                    else if (!pseudo && query.bound >= 2 && t == query.bound + 1 && d == 2)
                        keep = corollary_filter_2(x, cls, query.bound);
                }
                if (keep && is_effective(x, cls)) {
                    const DivisorClass adjoint = minus_k - cls;
                    if (is_ample(x, adjoint)) {
                        const bool meets =
                            pseudo ? pseudoindex_of(x, adjoint) >= query.bound
                                   : index_of(adjoint) >= query.bound;
                        if (meets) {
                            MemberStatus status = member_status(x, cls);
                            const bool reduced_ok =
                                !query.require_reduced_member ||
                                (status.kind != MemberStatus::Kind::NoMember &&
                                 status.kind != MemberStatus::Kind::ForcedNonReduced);
                            const bool snc_ok =
                                !query.require_snc_member || snc_member_exists(x, cls);
                            if (reduced_ok && snc_ok) {
                                auto [cx, ccls] = canonical_pair_form(x, cls);
                                LogFanoPair pair(cx, {BoundarySpec::general_member(ccls)});
                                CensusRow row{cx,
                                              ccls,
                                              member_status(cx, ccls),
                                              check_pair(pair),
                                              matcher.lookup(cx, ccls)};
                                out.push_back(std::move(row));
                            }
                        }
                    }
                }
            }
            // advance the box counter
            int j = 0;
            for (; j < rank; ++j) {
                const auto ju = static_cast<std::size_t>(j);
                if (++c[ju] <= hi[ju]) break;
                c[ju] = lo[ju];
            }
            if (j == rank) break;
        }
    }
}

}  // namespace

std::vector<CensusRow> enumerate_census(const CensusQuery& query) {
    if (query.n < 2) throw std::invalid_argument("census needs dimension >= 2");
    if (query.twist_cap < 0) throw std::invalid_argument("twist cap must be >= 0");

    const std::vector<Task> tasks = build_tasks(query);
    const FamilyMatcher matcher(query.n, query.twist_cap);
    std::vector<std::vector<CensusRow>> slots(tasks.size());

    const int workers = std::min<int>(thread_count(query),
                                      std::max<std::size_t>(tasks.size(), 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            scan_task(query, tasks[i], matcher, slots[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                scan_task(query, tasks[i], matcher, slots[i]);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    std::vector<CensusRow> rows;
    for (auto& slot : slots)
        for (auto& row : slot) rows.push_back(std::move(row));
    std::sort(rows.begin(), rows.end(), row_less);
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const CensusRow& a, const CensusRow& b) {
                               return a.x == b.x && a.boundary_class == b.boundary_class;
                           }),
               rows.end());
    return rows;
}

std::vector<FamilyForm> scroll_family_forms(int n, std::int64_t cap) {
    std::vector<FamilyForm> forms;
    auto add_pair_form = [&](FamilyId id, FamilyParams p) {
        FamilyInstance inst = family(id, p);
        auto [cx, ccls] =
            canonical_pair_form(inst.pair->x, inst.pair->boundary_class());
        forms.push_back({std::move(cx), std::move(ccls), {id, p}});
    };

    if (n >= 3 && n % 2 == 1) {
        const int iota = (n + 1) / 2;
        for (std::int64_t m = 0; m <= cap; ++m)
            add_pair_form(FamilyId::TwoRMinusOne, {iota, m, 0, 0});
        return forms;
    }
    if (n < 4 || n % 2 != 0) return forms;
    const int r = n / 2;

    if (cap >= 1) add_pair_form(FamilyId::Burouappu, {r, 0, 0, 0});
    add_pair_form(FamilyId::PP, {r, 0, 0, 0});
    for (std::int64_t m2 = 1; m2 <= cap; ++m2)
        for (std::int64_t m1 = 0; m1 <= m2; ++m1)
            add_pair_form(FamilyId::Kayaku, {r, 0, m1, m2});
    if (r >= 3)
        for (std::int64_t m = 0; m <= cap; ++m)
            add_pair_form(FamilyId::RThree, {r, m, 0, 0});
    if (r == 2)
        for (std::int64_t m2 = 0; m2 <= cap; ++m2)
            for (std::int64_t m1 = 0; m1 <= m2; ++m1)
                add_pair_form(FamilyId::RTwo, {r, 0, m1, m2});
    add_pair_form(FamilyId::Pp, {r, 0, 0, 0});
    if (cap >= 1) add_pair_form(FamilyId::ZeroZeroOne, {r, 0, 0, 0});
    for (std::int64_t m = 1; m <= cap; ++m)
        add_pair_form(FamilyId::ZeroOneBig, {r, m, 0, 0});
    for (std::int64_t m = 2; m <= cap; ++m)
        add_pair_form(FamilyId::ZeroZeroBig, {r, m, 0, 0});

    // The double cover branched in |O(0;2)| over P[P^{r-1}; 0^{r+1}, 0] is
    // the product P^{r-1} x Q^{r+1}, a genuine scroll over the quadric.
    {
        ScrollVariety x(BaseSpace::quadric(r + 1),
                        std::vector<Vec>(static_cast<std::size_t>(r), Vec{0}));
        forms.push_back({std::move(x), DivisorClass{{1}, 0},
                         FamilyMatch{FamilyId::FanoQ, {r, 0, 0, 0}}});
    }
    return forms;
}

std::string describe(const FamilyMatch& match) {
    std::ostringstream out;
    out << family_id_string(match.id);
    switch (match.id) {
        case FamilyId::TwoRMinusOne:
            out << "(iota=" << match.params.r << ",m=" << match.params.m << ")";
            break;
        case FamilyId::Kayaku:
        case FamilyId::RTwo:
            out << "(r=" << match.params.r << ",m1=" << match.params.m1
                << ",m2=" << match.params.m2 << ")";
            break;
        case FamilyId::FanoQ:
        case FamilyId::RThree:
        case FamilyId::ZeroOneBig:
        case FamilyId::ZeroZeroBig:
        case FamilyId::Tp:
            out << "(r=" << match.params.r << ",m=" << match.params.m << ")";
            break;
        default:
            out << "(r=" << match.params.r << ")";
            break;
    }
    return out.str();
}

TableDiff diff_against_families(const std::vector<CensusRow>& rows, int n,
                                std::int64_t twist_cap) {
    TableDiff diff;
    std::vector<FamilyMatch> expected;
    for (const FamilyForm& form : scroll_family_forms(n, twist_cap))
        expected.push_back(form.match);

    std::vector<FamilyMatch> present;
    for (const CensusRow& row : rows) {
        if (row.matched_family) {
            diff.matched.push_back(row);
            present.push_back(*row.matched_family);
        } else {
            diff.unmatched.push_back(row);
        }
    }
    for (const FamilyMatch& want : expected)
        if (std::find(present.begin(), present.end(), want) == present.end())
            diff.absent.push_back(want);

    diff.out_of_scope.push_back(
        "fano-q with m >= 1 (double cover, not a split bundle; m = 0 appears as "
        "the product scroll over the quadric)");
    diff.out_of_scope.push_back(
        "tp (projectivized tangent bundle, not a split bundle)");
    return diff;
}

TableDiff match_table(const std::vector<CensusRow>& rows, int r,
                      std::int64_t twist_cap) {
    return diff_against_families(rows, 2 * r, twist_cap);
}

}  // namespace scrollfano
