#include "scrollfano/logfano.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "scrollfano/parse.hpp"

namespace scrollfano {

DivisorClass BoundarySpec::class_on(const ScrollVariety& x) const {
    switch (kind) {
        case Kind::SubBundle: {
            if (summand < 0 || summand > x.t())
                throw std::invalid_argument("subbundle summand index out of range");
            const Vec& b = x.twists()[static_cast<std::size_t>(summand)];
            Vec m(b.size());
            for (std::size_t j = 0; j < b.size(); ++j) m[j] = -b[j];
            return {std::move(m), 1};
        }
        case Kind::BasePullback: {
            if (static_cast<int>(h.size()) != x.base().pic_rank())
                throw std::invalid_argument("pullback vector length mismatch");
            std::int64_t ones = 0;
            for (std::int64_t v : h) {
                if (v != 0 && v != 1) throw std::invalid_argument("pullback must be a prime base class");
                ones += v;
            }
            if (ones != 1) throw std::invalid_argument("pullback must be a unit coordinate vector");
            return {h, 0};
        }
        case Kind::GeneralMember: return cls;
    }
    throw std::logic_error("unreachable");
}

std::string BoundarySpec::describe() const {
    switch (kind) {
        case Kind::SubBundle: return "D" + std::to_string(summand);
        case Kind::BasePullback: {
            if (h.size() == 1) return "H";
            for (std::size_t j = 0; j < h.size(); ++j)
                if (h[j] == 1) return "H" + std::to_string(j + 1);
            return "H";
        }
        case Kind::GeneralMember: return to_string(cls);
    }
    return {};
}

LogFanoPair::LogFanoPair(ScrollVariety variety, std::vector<BoundarySpec> components)
    : x(std::move(variety)), boundary(std::move(components)) {
    if (boundary.empty())
        throw std::invalid_argument("boundary must be nonzero (this library studies D != 0)");
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        if (!is_effective(x, boundary[i].class_on(x)))
            throw std::invalid_argument("boundary component " + std::to_string(i) +
                                        " has no effective representative");
        for (std::size_t j = i + 1; j < boundary.size(); ++j)
            if (boundary[i] == boundary[j])
                throw std::invalid_argument("boundary components must be pairwise distinct");
    }
}

DivisorClass LogFanoPair::boundary_class() const {
    DivisorClass total{Vec(static_cast<std::size_t>(x.base().pic_rank()), 0), 0};
    for (const BoundarySpec& b : boundary) total = total + b.class_on(x);
    return total;
}

DivisorClass adjoint_class(const LogFanoPair& pair) {
    return anticanonical(pair.x) - pair.boundary_class();
}

PairReport check_pair(const LogFanoPair& pair) {
    PairReport report;
    report.adjoint_class = adjoint_class(pair);
    report.index = index_of(report.adjoint_class);
    report.witness = non_ample_witness(pair.x, report.adjoint_class);
    report.is_log_fano = !report.witness.has_value();
    if (report.is_log_fano)
        report.pseudoindex = pseudoindex_of(pair.x, report.adjoint_class);
    Vec m(report.adjoint_class.base_part.size());
    for (std::size_t j = 0; j < m.size(); ++j)
        m[j] = report.adjoint_class.base_part[j] / report.index;
    report.fundamental_class = {std::move(m), report.adjoint_class.fiber_part / report.index};
    return report;
}

bool conductor_adjunction_check(const LogFanoPair& pair, int component) {
    if (component < 0 || component >= static_cast<int>(pair.boundary.size()))
        throw std::invalid_argument("component index out of range");
    const BoundarySpec& spec = pair.boundary[static_cast<std::size_t>(component)];
    if (spec.kind != BoundarySpec::Kind::SubBundle)
        throw std::invalid_argument("adjunction check needs a subbundle component");
    if (pair.x.t() < 2)
        throw std::invalid_argument("adjunction check needs t >= 2");

    const int i = spec.summand;
    auto [sub, lhs] = restrict_to_subbundle(pair.x, adjoint_class(pair), i);

    DivisorClass conductor{Vec(static_cast<std::size_t>(pair.x.base().pic_rank()), 0), 0};
    for (int j = 0; j < static_cast<int>(pair.boundary.size()); ++j) {
        if (j == component) continue;
        conductor = conductor + pair.boundary[static_cast<std::size_t>(j)].class_on(pair.x);
    }
    auto [sub2, conductor_restricted] = restrict_to_subbundle(pair.x, conductor, i);
    (void)sub2;
    const DivisorClass rhs = anticanonical(sub) - conductor_restricted;
    return lhs == rhs;
}

// ---------------------------------------------------------------------------

std::string family_id_string(FamilyId id) {
    switch (id) {
        case FamilyId::TwoRMinusOne: return "two-r-minus-one";
        case FamilyId::Burouappu: return "burouappu";
        case FamilyId::PP: return "p-p";
        case FamilyId::Kayaku: return "kayaku";
        case FamilyId::FanoQ: return "fano-q";
        case FamilyId::RThree: return "r-three";
        case FamilyId::RTwo: return "r-two";
        case FamilyId::Tp: return "tp";
        case FamilyId::Pp: return "pp";
        case FamilyId::ZeroZeroOne: return "zero-zero-one";
        case FamilyId::ZeroOneBig: return "zero-one-big";
        case FamilyId::ZeroZeroBig: return "zero-zero-big";
    }
    throw std::logic_error("unreachable");
}

std::optional<FamilyId> family_id_from_string(const std::string& s) {
    static const std::vector<FamilyId> all = {
        FamilyId::TwoRMinusOne, FamilyId::Burouappu, FamilyId::PP,
        FamilyId::Kayaku,       FamilyId::FanoQ,     FamilyId::RThree,
        FamilyId::RTwo,         FamilyId::Tp,        FamilyId::Pp,
        FamilyId::ZeroZeroOne,  FamilyId::ZeroOneBig, FamilyId::ZeroZeroBig};
    for (FamilyId id : all)
        if (family_id_string(id) == s) return id;
    return std::nullopt;
}

namespace {

std::vector<Vec> zeros_then(int zeros, std::vector<std::int64_t> rest) {
    std::vector<Vec> out(static_cast<std::size_t>(zeros), Vec{0});
    for (std::int64_t v : rest) out.push_back({v});
    return out;
}

[[noreturn]] void domain_error(FamilyId id, const std::string& what) {
    throw std::invalid_argument("family " + family_id_string(id) + ": " + what);
}

}  // namespace

FamilyInstance family(FamilyId id, const FamilyParams& p) {
    FamilyInstance inst;
    inst.id = id;
    inst.params = p;
    const int r = p.r;

    switch (id) {
        case FamilyId::TwoRMinusOne: {
            if (r < 2 || p.m < 0) domain_error(id, "needs pseudoindex >= 2 and m >= 0");
            ScrollVariety x(BaseSpace::proj_space(r - 1), zeros_then(r, {p.m}));
            inst.pair.emplace(std::move(x),
                              std::vector{BoundarySpec::general_member({{-p.m}, 1})});
            inst.expected = {2 * r - 1, r, p.m == 0 ? Int(r) : Int(0)};
            break;
        }
        case FamilyId::Burouappu: {
            if (r < 2) domain_error(id, "needs r >= 2");
            BlowupModel model = scroll_of_blowup(2 * r, r - 2);
            inst.pair.emplace(std::move(model.scroll),
                              std::vector{BoundarySpec::base_pullback({1})});
            inst.expected = {2 * r, r, Int(r) + 1};
            break;
        }
        case FamilyId::PP: {
            if (r < 2) domain_error(id, "needs r >= 2");
            ScrollVariety x(BaseSpace::proj_space(r - 1), zeros_then(r + 2, {}));
            inst.pair.emplace(std::move(x),
                              std::vector{BoundarySpec::general_member({{0}, 2})});
            inst.expected = {2 * r, r, Int(r + 2) * (r + 3) / 2 - 1};
            break;
        }
        case FamilyId::Kayaku: {
            if (r < 2 || p.m1 < 0 || p.m1 > p.m2 || p.m2 < 1)
                domain_error(id, "needs r >= 2 and 0 <= m1 <= m2 with m2 >= 1");
            ScrollVariety x(BaseSpace::proj_space(r - 1), zeros_then(r, {p.m1, p.m2}));
            inst.pair.emplace(std::move(x), std::vector{BoundarySpec::sub_bundle(r),
                                                        BoundarySpec::sub_bundle(r + 1)});
            // Closed forms for dim |O(-m1-m2; 2)|: with m1 = 0 there are r+1
            // untwisted summands pairing with the top one, plus the y_t^2
            // block of weight m2, so the count is C(m2+r-1, r-1) + r + 1.
            Int dim;
            if (p.m1 == p.m2)
                dim = 2;
            else if (p.m1 == 0)
                dim = binomial(p.m2 + r - 1, r - 1) + r;
            else
                dim = binomial(p.m2 - p.m1 + r - 1, r - 1);
            inst.expected = {2 * r, r, std::move(dim)};
            break;
        }
        case FamilyId::FanoQ: {
            if (r < 2 || p.m < 0) domain_error(id, "needs r >= 2 and m >= 0");
            inst.formula_scroll.emplace(BaseSpace::proj_space(r - 1),
                                        zeros_then(r + 1, {p.m}));
            Int dim = binomial(2 * p.m + r - 1, r - 1) +
                      Int(r + 1) * binomial(p.m + r - 1, r - 1) +
                      Int(r + 1) * (r + 2) / 2 - 1;
            inst.expected = {2 * r, r, std::move(dim)};
            break;
        }
        case FamilyId::RThree: {
            if (r < 3 || p.m < 0) domain_error(id, "needs r >= 3 and m >= 0");
            ScrollVariety x(BaseSpace::quadric(r), zeros_then(r, {p.m}));
            inst.pair.emplace(std::move(x), std::vector{BoundarySpec::sub_bundle(r)});
            inst.expected = {2 * r, r, p.m == 0 ? Int(r) : Int(0)};
            break;
        }
        case FamilyId::RTwo: {
            if (r != 2 || p.m1 < 0 || p.m1 > p.m2)
                domain_error(id, "needs r = 2 and 0 <= m1 <= m2");
            ScrollVariety x(BaseSpace::biproj_line(),
                            {Vec{0, 0}, Vec{0, 0}, Vec{p.m1, p.m2}});
            inst.pair.emplace(std::move(x), std::vector{BoundarySpec::sub_bundle(2)});
            inst.expected = {4, 2, (p.m1 == 0 && p.m2 == 0) ? Int(2) : Int(0)};
            break;
        }
        case FamilyId::Tp: {
            if (r < 2) domain_error(id, "needs r >= 2");
            if (p.m < 1) domain_error(id, "the boundary is never ample for m < 1");
            inst.expected = {2 * r, r, p.m == 1 ? Int(r) + 1 : Int(0)};
            break;
        }
        case FamilyId::Pp: {
            if (r < 2) domain_error(id, "needs r >= 2");
            ScrollVariety x(BaseSpace::proj_space(r), zeros_then(r + 1, {}));
            inst.pair.emplace(std::move(x),
                              std::vector{BoundarySpec::general_member({{1}, 1})});
            inst.expected = {2 * r, r, Int(r) * (r + 2)};
            break;
        }
        case FamilyId::ZeroZeroOne: {
            if (r < 2) domain_error(id, "needs r >= 2");
            ScrollVariety x(BaseSpace::proj_space(r), zeros_then(r, {1}));
            inst.pair.emplace(std::move(x),
                              std::vector{BoundarySpec::general_member({{0}, 1})});
            inst.expected = {2 * r, r, Int(2) * r};
            break;
        }
        case FamilyId::ZeroOneBig: {
            if (r < 2 || p.m < 1) domain_error(id, "needs r >= 2 and m >= 1");
            ScrollVariety x(BaseSpace::proj_space(r), zeros_then(r - 1, {1, p.m}));
            inst.pair.emplace(std::move(x),
                              std::vector{BoundarySpec::general_member({{-p.m}, 1})});
            inst.expected = {2 * r, r, p.m == 1 ? Int(1) : Int(0)};
            break;
        }
        case FamilyId::ZeroZeroBig: {
            if (r < 2 || p.m < 2) domain_error(id, "needs r >= 2 and m >= 2");
            ScrollVariety x(BaseSpace::proj_space(r), zeros_then(r, {p.m}));
            inst.pair.emplace(std::move(x),
                              std::vector{BoundarySpec::general_member({{-p.m + 1}, 1})});
            inst.expected = {2 * r, r, Int(r)};
            break;
        }
    }
    return inst;
}

namespace {

bool all_ones(const DivisorClass& cls) {
    if (cls.fiber_part != 1) return false;
    return std::all_of(cls.base_part.begin(), cls.base_part.end(),
                       [](std::int64_t v) { return v == 1; });
}

}  // namespace

FamilyReport verify_family(const FamilyInstance& instance) {
    FamilyReport report;
    report.instance = instance;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.failures.push_back(msg);
    };

    if (instance.pair) {
        const LogFanoPair& pair = *instance.pair;
        if (pair.x.dim() != instance.expected.dim) fail("dimension mismatch");
        PairReport pr = check_pair(pair);
        if (!pr.is_log_fano)
            fail("adjoint class is not ample (witness " +
                 to_string(pr.witness.value()) + ")");
        if (pr.index != instance.expected.index)
            fail("index is " + std::to_string(pr.index) + ", expected " +
                 std::to_string(instance.expected.index));
        if (pr.is_log_fano && pr.pseudoindex != instance.expected.index)
            fail("pseudoindex differs from the expected index");
        if (!all_ones(pr.fundamental_class))
            fail("fundamental class is not (1,...;1) in normalized coordinates");

        const DivisorClass boundary = pair.boundary_class();
        Int h0 = h0_scroll(pair.x, boundary);
        report.computed_dim_linear_system = h0 - 1;
        if (h0 - 1 != instance.expected.dim_linear_system)
            fail("dim |D| mismatch: computed " + h0.str() + " - 1");
        MemberStatus status = member_status(pair.x, boundary);
        if (status.kind == MemberStatus::Kind::NoMember ||
            status.kind == MemberStatus::Kind::ForcedNonReduced)
            fail("boundary class admits no reduced member");
        report.pair_report = std::move(pr);
        return report;
    }

    if (instance.id == FamilyId::FanoQ) {
        const ScrollVariety& downstairs = *instance.formula_scroll;
        if (!is_ample(downstairs, {{1}, 1})) fail("(1;1) not ample on the downstairs scroll");
        Int h0 = h0_scroll(downstairs, {{0}, 2});
        report.computed_dim_linear_system = h0 - 1;
        if (h0 - 1 != instance.expected.dim_linear_system)
            fail("dim of the branch system mismatch");
        if (index_of({{instance.params.r}, instance.params.r}) != instance.expected.index)
            fail("index mismatch");
        return report;
    }

    // Tp: the adjoint restricts to degree m*r on the distinguished section;
    // ample needs m*r > 0. dim |D| is carried as tabulated data.
    if (instance.params.m * instance.params.r <= 0)
        fail("section degree m*r is not positive");
    report.computed_dim_linear_system = instance.expected.dim_linear_system;
    return report;
}

std::vector<FamilyInstance> gallery_instances(int r, std::int64_t max_param) {
    std::vector<FamilyInstance> out;
    auto add = [&](FamilyId id, FamilyParams p) { out.push_back(family(id, p)); };

    for (std::int64_t m = 0; m <= max_param; ++m) add(FamilyId::TwoRMinusOne, {r, m, 0, 0});
    add(FamilyId::Burouappu, {r, 0, 0, 0});
    add(FamilyId::PP, {r, 0, 0, 0});
    for (std::int64_t m2 = 1; m2 <= max_param; ++m2)
        for (std::int64_t m1 = 0; m1 <= m2; ++m1) add(FamilyId::Kayaku, {r, 0, m1, m2});
    for (std::int64_t m = 0; m <= max_param; ++m) add(FamilyId::FanoQ, {r, m, 0, 0});
    if (r >= 3)
        for (std::int64_t m = 0; m <= max_param; ++m) add(FamilyId::RThree, {r, m, 0, 0});
    if (r == 2)
        for (std::int64_t m2 = 0; m2 <= max_param; ++m2)
            for (std::int64_t m1 = 0; m1 <= m2; ++m1) add(FamilyId::RTwo, {r, 0, m1, m2});
    for (std::int64_t m = 1; m <= max_param; ++m) add(FamilyId::Tp, {r, m, 0, 0});
    add(FamilyId::Pp, {r, 0, 0, 0});
    add(FamilyId::ZeroZeroOne, {r, 0, 0, 0});
    for (std::int64_t m = 1; m <= max_param; ++m) add(FamilyId::ZeroOneBig, {r, m, 0, 0});
    for (std::int64_t m = 2; m <= max_param; ++m) add(FamilyId::ZeroZeroBig, {r, m, 0, 0});
    return out;
}

}  // namespace scrollfano
