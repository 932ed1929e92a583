#include "scrollfano/sections.hpp"

#include <algorithm>
#include <stdexcept>

namespace scrollfano {

Int h0_base(const BaseSpace& b, const Vec& m) { return b.h0(m); }

namespace {

// Componentwise maxima of twists[i..t], used to prune branches where no
// completion of the exponent vector can reach an effective base class.
std::vector<Vec> suffix_max(const std::vector<Vec>& twists) {
    const std::size_t rank = twists.front().size();
    std::vector<Vec> tails(twists.size() + 1, Vec(rank, 0));
    for (std::size_t i = twists.size(); i-- > 0;)
        for (std::size_t j = 0; j < rank; ++j)
            tails[i][j] = std::max(tails[i + 1][j], twists[i][j]);
    return tails;
}

bool reachable(const Vec& acc, std::int64_t left, const Vec& tail) {
    for (std::size_t j = 0; j < acc.size(); ++j)
        if (acc[j] + left * tail[j] < 0) return false;
    return true;
}

}  // namespace

Int h0_scroll(const ScrollVariety& x, const DivisorClass& cls) {
    if (cls.fiber_part < 0) return 0;
    const auto& twists = x.twists();
    const auto tails = suffix_max(twists);
    Int total = 0;
    auto walk = [&](auto&& self, std::size_t i, std::int64_t left, Vec acc) -> void {
        if (!reachable(acc, left, tails[i])) return;
        if (i + 1 == twists.size()) {
            total += x.base().h0(acc + left * twists[i]);
            return;
        }
        for (std::int64_t q = 0; q <= left; ++q)
            self(self, i + 1, left - q, acc + q * twists[i]);
    };
    walk(walk, 0, cls.fiber_part, cls.base_part);
    return total;
}

Int h0_lattice(const ScrollVariety& x, const std::vector<std::int64_t>& c,
               std::int64_t d) {
    if (x.base().kind() != BaseKind::ProjSpace)
        throw std::invalid_argument("lattice count is only defined over projective space");
    const int t = x.t();
    if (static_cast<int>(c.size()) != t)
        throw std::invalid_argument("need exactly t component multiplicities");
    const int s = x.base().dim();

    Int total = 0;
    // Q_i ranges over Q_i >= -c_i subject to sum(Q) <= 0; every P-block is a
    // simplex {P >= 0, sum P <= d + sum a_j Q_j}.
    auto walk = [&](auto&& self, int i, std::int64_t q_sum, std::int64_t twisted) -> void {
        if (i == t) {
            if (q_sum <= 0) total += simplex_points(d + twisted, s);
            return;
        }
        std::int64_t tail_min = 0;
        for (int j = i + 1; j < t; ++j) tail_min += -c[static_cast<std::size_t>(j)];
        const std::int64_t low = -c[static_cast<std::size_t>(i)];
        const std::int64_t high = -q_sum - tail_min;
        const std::int64_t a_i = x.twists()[static_cast<std::size_t>(i + 1)][0];
        for (std::int64_t q = low; q <= high; ++q)
            self(self, i + 1, q_sum + q, twisted + a_i * q);
    };
    walk(walk, 0, 0, 0);
    return total;
}

MonomialSummary monomial_summary(const ScrollVariety& x, const DivisorClass& cls) {
    const auto& twists = x.twists();
    const std::size_t summands = twists.size();
    MonomialSummary out{0, std::vector<std::int64_t>(summands, 0), cls};
    if (cls.fiber_part < 0) return out;

    const auto tails = suffix_max(twists);
    std::vector<std::int64_t> q(summands, 0);
    std::vector<std::int64_t> forced;
    auto walk = [&](auto&& self, std::size_t i, std::int64_t left, Vec acc) -> void {
        if (!reachable(acc, left, tails[i])) return;
        if (i + 1 == summands) {
            q[i] = left;
            Int h = x.base().h0(acc + left * twists[i]);
            if (h > 0) {
                out.count += h;
                if (forced.empty()) {
                    forced = q;
                } else {
                    for (std::size_t j = 0; j < summands; ++j)
                        forced[j] = std::min(forced[j], q[j]);
                }
            }
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            q[i] = v;
            self(self, i + 1, left - v, acc + v * twists[i]);
        }
    };
    walk(walk, 0, cls.fiber_part, cls.base_part);

    if (out.count == 0) return out;
    out.forced_multiplicities = forced;
    DivisorClass residual = cls;
    for (std::size_t i = 0; i < summands; ++i) {
        residual.base_part = residual.base_part + forced[i] * twists[i];
        residual.fiber_part -= forced[i];
    }
    out.residual_class = residual;
    return out;
}

MemberStatus member_status(const ScrollVariety& x, const DivisorClass& cls) {
    const MonomialSummary summary = monomial_summary(x, cls);
    if (summary.count == 0) return {MemberStatus::Kind::NoMember, {}};
    if (x.base().kind() != BaseKind::ProjSpace)
        return {MemberStatus::Kind::Unconstrained, {}};

    for (std::int64_t mu : summary.forced_multiplicities)
        if (mu >= 2) return {MemberStatus::Kind::ForcedNonReduced, {}};

    const int t = x.t();
    if (cls.fiber_part == 2 && t >= 2) {
        const std::int64_t a_t = x.twists()[static_cast<std::size_t>(t)][0];
        const std::int64_t a_t1 = x.twists()[static_cast<std::size_t>(t - 1)][0];
        const std::int64_t a_t2 = x.twists()[static_cast<std::size_t>(t - 2)][0];
        if (cls.base_part[0] == -a_t - a_t1 && a_t2 < a_t) {
            // Every reduced member splits into two subbundle-type components.
            return {MemberStatus::Kind::ForcedDecomposition,
                    {DivisorClass{{-a_t}, 1}, DivisorClass{{-a_t1}, 1}}};
        }
    }
    return {MemberStatus::Kind::Unconstrained, {}};
}

bool snc_member_exists(const ScrollVariety& x, const DivisorClass& cls) {
    const std::int64_t n = cls.fiber_part;
    if (n < 0 || n > x.t() + 1) return false;
    const auto& twists = x.twists();
    const auto tails = suffix_max(twists);
    auto walk = [&](auto&& self, std::size_t i, std::int64_t left, Vec acc) -> bool {
        if (left > static_cast<std::int64_t>(twists.size() - i)) return false;
        if (!reachable(acc, left, tails[i])) return false;
        if (i == twists.size()) return x.base().h0(acc) > 0;
        if (self(self, i + 1, left, acc)) return true;
        return left > 0 && self(self, i + 1, left - 1, acc + twists[i]);
    };
    return walk(walk, 0, n, cls.base_part);
}

}  // namespace scrollfano
