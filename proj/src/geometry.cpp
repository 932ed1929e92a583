#include "scrollfano/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace scrollfano {

DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
    a.base_part = a.base_part + b.base_part;
    a.fiber_part += b.fiber_part;
    return a;
}

DivisorClass operator-(DivisorClass a, const DivisorClass& b) {
    a.base_part = a.base_part - b.base_part;
    a.fiber_part -= b.fiber_part;
    return a;
}

DivisorClass operator*(std::int64_t k, DivisorClass a) {
    a.base_part = k * a.base_part;
    a.fiber_part *= k;
    return a;
}

namespace {

Vec componentwise_min(const std::vector<Vec>& twists) {
    Vec m = twists.front();
    for (const Vec& b : twists)
        for (std::size_t j = 0; j < m.size(); ++j) m[j] = std::min(m[j], b[j]);
    return m;
}

}  // namespace

ScrollVariety::ScrollVariety(BaseSpace base, std::vector<Vec> twists)
    : base_(base), twists_(std::move(twists)) {
    if (twists_.size() < 2)
        throw std::invalid_argument("scroll needs at least two summands (t >= 1)");
    const auto rank = static_cast<std::size_t>(base_.pic_rank());
    for (const Vec& b : twists_)
        if (b.size() != rank)
            throw std::invalid_argument("twist vector length must equal the base Picard rank");
    const Vec shift = componentwise_min(twists_);
    for (Vec& b : twists_) b = b - shift;
    std::sort(twists_.begin(), twists_.end());
}

std::pair<ScrollVariety, Vec> ScrollVariety::make_with_shift(BaseSpace base,
                                                             std::vector<Vec> twists) {
    if (twists.empty()) throw std::invalid_argument("empty twist list");
    Vec shift = componentwise_min(twists);
    ScrollVariety x(base, std::move(twists));
    return {std::move(x), std::move(shift)};
}

std::vector<CurveClass> ScrollVariety::invariant_curves() const {
    std::vector<CurveClass> curves;
    curves.push_back(CurveClass::fiber_line());
    for (int i = 0; i <= t(); ++i)
        for (int j = 0; j < base_.pic_rank(); ++j)
            curves.push_back(CurveClass::section_line(i, j));
    return curves;
}

DivisorClass transport_class(const DivisorClass& cls, const Vec& shift) {
    return {cls.base_part + cls.fiber_part * shift, cls.fiber_part};
}

DivisorClass anticanonical(const ScrollVariety& x) {
    Vec m = x.base().minus_k();
    for (const Vec& b : x.twists()) m = m - b;
    return {std::move(m), x.t() + 1};
}

DivisorClass divisor_from_components(const ScrollVariety& x,
                                     const std::vector<std::int64_t>& c,
                                     std::int64_t d) {
    if (x.base().kind() != BaseKind::ProjSpace)
        throw std::invalid_argument(
            "component representation (c_1..c_t, d) is only defined over projective space");
    if (static_cast<int>(c.size()) != x.t())
        throw std::invalid_argument("need exactly t component multiplicities");
    std::int64_t m = d;
    std::int64_t n = 0;
    for (int i = 1; i <= x.t(); ++i) {
        m -= c[static_cast<std::size_t>(i - 1)] * x.twists()[static_cast<std::size_t>(i)][0];
        n += c[static_cast<std::size_t>(i - 1)];
    }
    return {{m}, n};
}

std::int64_t degree(const ScrollVariety& x, const DivisorClass& cls,
                    const CurveClass& curve) {
    if (curve.is_fiber) return cls.fiber_part;
    const Vec& b = x.twists().at(static_cast<std::size_t>(curve.summand));
    return cls.base_part.at(static_cast<std::size_t>(curve.base_line)) +
           cls.fiber_part * b[static_cast<std::size_t>(curve.base_line)];
}

std::optional<CurveClass> non_ample_witness(const ScrollVariety& x,
                                            const DivisorClass& cls) {
    for (const CurveClass& c : x.invariant_curves())
        if (degree(x, cls, c) <= 0) return c;
    return std::nullopt;
}

bool is_nef(const ScrollVariety& x, const DivisorClass& cls) {
    for (const CurveClass& c : x.invariant_curves())
        if (degree(x, cls, c) < 0) return false;
    return true;
}

bool is_ample(const ScrollVariety& x, const DivisorClass& cls) {
    return !non_ample_witness(x, cls).has_value();
}

namespace {

// Searches for an exponent vector Q >= 0 with |Q| = n such that the shifted
// base class m + sum Q_i b_i has a section. Componentwise maxima give a
// cheap prune before the exact recursion.
bool monomial_exists(const ScrollVariety& x, const DivisorClass& cls) {
    if (cls.fiber_part < 0) return false;
    const auto& twists = x.twists();
    const std::size_t rank = cls.base_part.size();

    Vec max_twist = twists.front();
    for (const Vec& b : twists)
        for (std::size_t j = 0; j < rank; ++j) max_twist[j] = std::max(max_twist[j], b[j]);
    for (std::size_t j = 0; j < rank; ++j)
        if (cls.base_part[j] + cls.fiber_part * max_twist[j] < 0) return false;
    if (x.base().pic_rank() == 1)
        return true;  // all weight on the largest twist already works

    // P^1xP^1 base: the per-coordinate maxima may sit in different summands,
    // so search compositions explicitly.
    std::vector<Vec> tails(twists.size() + 1, Vec(rank, 0));
    for (std::size_t i = twists.size(); i-- > 0;)
        for (std::size_t j = 0; j < rank; ++j)
            tails[i][j] = std::max(tails[i + 1][j], twists[i][j]);

    auto search = [&](auto&& self, std::size_t i, std::int64_t left, Vec acc) -> bool {
        for (std::size_t j = 0; j < rank; ++j)
            if (acc[j] + left * tails[i][j] < 0) return false;
        if (i + 1 == twists.size()) {
            Vec m = acc + left * twists[i];
            return x.base().h0(m) > 0;
        }
        for (std::int64_t q = 0; q <= left; ++q)
            if (self(self, i + 1, left - q, acc + q * twists[i])) return true;
        return false;
    };
    return search(search, 0, cls.fiber_part, cls.base_part);
}

}  // namespace

bool is_effective(const ScrollVariety& x, const DivisorClass& cls) {
    return monomial_exists(x, cls);
}

std::int64_t index_of(const DivisorClass& cls) {
    std::int64_t g = cls.fiber_part < 0 ? -cls.fiber_part : cls.fiber_part;
    for (std::int64_t m : cls.base_part) g = gcd_abs(g, m);
    if (g == 0) throw std::domain_error("index of the zero class is undefined");
    return g;
}

std::int64_t pseudoindex_of(const ScrollVariety& x, const DivisorClass& ample_cls) {
    if (!is_ample(x, ample_cls))
        throw std::invalid_argument("pseudoindex requires an ample class");
    std::int64_t best = ample_cls.fiber_part;
    for (const CurveClass& c : x.invariant_curves())
        best = std::min(best, degree(x, ample_cls, c));
    return best;
}

BlowupModel scroll_of_blowup(int n, int c) {
    if (n < 2 || c < 0 || c > n - 2)
        throw std::invalid_argument("blowup center dimension must satisfy 0 <= c <= n-2");
    std::vector<Vec> twists(static_cast<std::size_t>(c) + 2, Vec{0});
    twists.back() = Vec{1};
    ScrollVariety scroll(BaseSpace::proj_space(n - c - 1), std::move(twists));
    return {n, c, std::move(scroll), {{-1}, 1}, {{0}, 1}};
}

std::pair<ScrollVariety, DivisorClass> restrict_to_subbundle(const ScrollVariety& x,
                                                             const DivisorClass& cls,
                                                             int i) {
    if (x.t() < 2)
        throw std::invalid_argument("restriction would leave a bundle of rank < 2");
    if (i < 0 || i > x.t()) throw std::invalid_argument("summand index out of range");
    std::vector<Vec> remaining;
    remaining.reserve(x.twists().size() - 1);
    for (int j = 0; j <= x.t(); ++j)
        if (j != i) remaining.push_back(x.twists()[static_cast<std::size_t>(j)]);
    auto [sub, shift] = ScrollVariety::make_with_shift(x.base(), std::move(remaining));
    return {std::move(sub), transport_class(cls, shift)};
}

}  // namespace scrollfano
