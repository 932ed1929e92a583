#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scrollfano/sections.hpp"

namespace scrollfano {

// One component of a boundary divisor, by construction rather than by class:
// the subbundle with summand i deleted (class (-b_i; 1)), the pullback of a
// prime divisor generating a base ray (class (h; 0) with h a unit vector),
// or a general member of a prescribed class.
struct BoundarySpec {
    enum class Kind { SubBundle, BasePullback, GeneralMember };

    static BoundarySpec sub_bundle(int summand) {
        BoundarySpec b;
        b.kind = Kind::SubBundle;
        b.summand = summand;
        return b;
    }
    static BoundarySpec base_pullback(Vec h) {
        BoundarySpec b;
        b.kind = Kind::BasePullback;
        b.h = std::move(h);
        return b;
    }
    static BoundarySpec general_member(DivisorClass cls) {
        BoundarySpec b;
        b.kind = Kind::GeneralMember;
        b.cls = std::move(cls);
        return b;
    }

    DivisorClass class_on(const ScrollVariety& x) const;
    std::string describe() const;

    Kind kind = Kind::GeneralMember;
    int summand = 0;
    Vec h;
    DivisorClass cls;

    bool operator==(const BoundarySpec&) const = default;
};

// A scroll together with a nonzero boundary decomposition. Components must
// be pairwise distinct and carry effective classes.
struct LogFanoPair {
    LogFanoPair(ScrollVariety variety, std::vector<BoundarySpec> components);

    ScrollVariety x;
    std::vector<BoundarySpec> boundary;

    DivisorClass boundary_class() const;
};

struct PairReport {
    DivisorClass adjoint_class;  // -(K_X + D)
    bool is_log_fano = false;
    std::int64_t index = 0;
    std::optional<std::int64_t> pseudoindex;  // present iff ample
    DivisorClass fundamental_class;           // adjoint = index * fundamental
    std::optional<CurveClass> witness;        // a curve of degree <= 0 when not ample
};

DivisorClass adjoint_class(const LogFanoPair& pair);

// Errors if the adjoint class is zero (index undefined).
PairReport check_pair(const LogFanoPair& pair);

// Adjunction consistency on a subbundle boundary component: restricting
// -(K_X + D) to D_i must give -(K of the subbundle + conductor), where the
// conductor is the restriction of the other components.
// Preconditions: component i is a SubBundle and t >= 2.
bool conductor_adjunction_check(const LogFanoPair& pair, int component);

// ---------------------------------------------------------------------------
// The example families and their expected invariants.

enum class FamilyId {
    TwoRMinusOne,
    Burouappu,
    PP,
    Kayaku,
    FanoQ,
    RThree,
    RTwo,
    Tp,
    Pp,
    ZeroZeroOne,
    ZeroOneBig,
    ZeroZeroBig,
};

// Stable kebab-case identifiers used by the CLI and the JSON payloads.
std::string family_id_string(FamilyId id);
std::optional<FamilyId> family_id_from_string(const std::string& s);

// Parameters: r is the expected index (the pseudoindex for TwoRMinusOne);
// m respectively (m1, m2) as each family uses them.
struct FamilyParams {
    int r = 2;
    std::int64_t m = 0;
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;

    bool operator==(const FamilyParams&) const = default;
};

struct FamilyExpected {
    int dim = 0;
    std::int64_t index = 0;
    Int dim_linear_system;
};

// FanoQ (a double cover) and Tp (a tangent-bundle projectivization) are not
// split bundles; they carry no pair and are verified through formula data:
// an auxiliary scroll for FanoQ, the section-degree product for Tp.
struct FamilyInstance {
    FamilyId id = FamilyId::Pp;
    FamilyParams params;
    std::optional<LogFanoPair> pair;              // scroll-backed families
    std::optional<ScrollVariety> formula_scroll;  // FanoQ: the downstairs scroll
    FamilyExpected expected;
};

// Errors on out-of-domain parameters (e.g. Tp with m <= 0).
FamilyInstance family(FamilyId id, const FamilyParams& params);

struct FamilyReport {
    FamilyInstance instance;
    bool ok = true;
    std::vector<std::string> failures;
    std::optional<PairReport> pair_report;
    std::optional<Int> computed_dim_linear_system;
};

FamilyReport verify_family(const FamilyInstance& instance);

// Every instance of every family with expected index (or pseudoindex) r and
// parameters m, m1, m2 <= max_param in the family's domain.
std::vector<FamilyInstance> gallery_instances(int r, std::int64_t max_param);

}  // namespace scrollfano
