#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scrollfano/base_space.hpp"

namespace scrollfano {

// Class of a line bundle O(m; n) on a scroll: pullback of O(m) from the base
// twisted by n times the relative hyperplane class. The lattice is free of
// rank pic_rank(base) + 1.
struct DivisorClass {
    Vec base_part;
    std::int64_t fiber_part = 0;

    bool operator==(const DivisorClass&) const = default;
    auto operator<=>(const DivisorClass&) const = default;
};

DivisorClass operator+(DivisorClass a, const DivisorClass& b);
DivisorClass operator-(DivisorClass a, const DivisorClass& b);
DivisorClass operator*(std::int64_t k, DivisorClass a);

// Invariant curve classes generating the cone of curves: a line in a fiber,
// or a line of the base sitting in the section determined by one summand.
struct CurveClass {
    static CurveClass fiber_line() { return {true, 0, 0}; }
    static CurveClass section_line(int summand, int base_line) {
        return {false, summand, base_line};
    }

    bool is_fiber = false;
    int summand = 0;    // 0..t
    int base_line = 0;  // 0..pic_rank-1

    bool operator==(const CurveClass&) const = default;
};

// Split projective bundle P[V; b_0,...,b_t] over one of the admissible bases.
// Stored normalized: componentwise minimum of the twists is zero and the
// twists are sorted ascending lexicographically (projectivization is
// invariant under twisting by a line bundle, so this loses nothing).
class ScrollVariety {
  public:
    // Accepts arbitrary twists and normalizes. t = twists.size()-1 must be >= 1.
    ScrollVariety(BaseSpace base, std::vector<Vec> twists);

    // Like the constructor, but also returns the shift (the componentwise
    // minimum subtracted from the given twists). A class (m; n) expressed in
    // the original coordinates becomes (m + n*shift; n) in normalized ones.
    static std::pair<ScrollVariety, Vec> make_with_shift(BaseSpace base,
                                                         std::vector<Vec> twists);

    const BaseSpace& base() const { return base_; }
    const std::vector<Vec>& twists() const { return twists_; }
    int t() const { return static_cast<int>(twists_.size()) - 1; }
    int dim() const { return base_.dim() + t(); }
    int picard_rank() const { return base_.pic_rank() + 1; }

    std::vector<CurveClass> invariant_curves() const;

    bool operator==(const ScrollVariety&) const = default;
    auto operator<=>(const ScrollVariety&) const = default;

  private:
    BaseSpace base_;
    std::vector<Vec> twists_;
};

// Transport of a divisor class under a twist shift (see make_with_shift).
DivisorClass transport_class(const DivisorClass& cls, const Vec& shift);

// -K_X = (minus_k(base) - sum of twists; t+1).
DivisorClass anticanonical(const ScrollVariety& x);

// The class sum(c_i D_i) + d H on a scroll over projective space, where D_i
// is the subbundle with summand i deleted and H the hyperplane pullback:
// equals (d - sum(c_i a_i); sum(c_i)).
DivisorClass divisor_from_components(const ScrollVariety& x,
                                     const std::vector<std::int64_t>& c,
                                     std::int64_t d);

// Intersection number of a divisor class with an invariant curve:
// fiber line -> n, section line (i, j) -> m_j + n * (twist_i)_j.
std::int64_t degree(const ScrollVariety& x, const DivisorClass& cls,
                    const CurveClass& curve);

bool is_nef(const ScrollVariety& x, const DivisorClass& cls);
bool is_ample(const ScrollVariety& x, const DivisorClass& cls);

// A curve on which the class has degree <= 0 (< 0 for nef), if any.
std::optional<CurveClass> non_ample_witness(const ScrollVariety& x,
                                            const DivisorClass& cls);

// Whether the class has a nonzero global section (some monomial of the Cox
// ring carries the class).
bool is_effective(const ScrollVariety& x, const DivisorClass& cls);

// Largest positive integer dividing the class in the lattice. Errors on the
// zero class.
std::int64_t index_of(const DivisorClass& cls);

// Minimum degree over the invariant curve classes; requires an ample input.
std::int64_t pseudoindex_of(const ScrollVariety& x, const DivisorClass& ample_cls);

// Blowup of P^n along a linear subspace of dimension c, modeled as the
// scroll P[P^{n-c-1}; 0^{c+1}, 1].
struct BlowupModel {
    int n = 0;
    int c = 0;
    ScrollVariety scroll;
    DivisorClass exceptional_class;          // (-1; 1)
    DivisorClass hyperplane_pullback_class;  // (0; 1)
};

BlowupModel scroll_of_blowup(int n, int c);

// Deletes summand i (0 <= i <= t, t >= 2), renormalizes, and re-expresses the
// class in the renormalized coordinates.
std::pair<ScrollVariety, DivisorClass> restrict_to_subbundle(const ScrollVariety& x,
                                                             const DivisorClass& cls,
                                                             int i);

}  // namespace scrollfano
