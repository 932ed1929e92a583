#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "scrollfano/numeric.hpp"

namespace scrollfano {

// Element of the divisor lattice of a base variety (length = Picard rank of
// the base, which is 1 or 2 here). Also used for bundle twist vectors.
using Vec = std::vector<std::int64_t>;

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(std::int64_t k, Vec a);

enum class BaseKind { ProjSpace, Quadric, BiProjLine };

// One of the three admissible base varieties: P^s, a smooth quadric Q^q
// (q >= 3; the two-dimensional quadric is carried as BiProjLine), or P^1xP^1.
class BaseSpace {
  public:
    static BaseSpace proj_space(int s);
    static BaseSpace quadric(int q);
    static BaseSpace biproj_line();

    BaseKind kind() const { return kind_; }
    int dim() const { return dim_; }
    int pic_rank() const { return kind_ == BaseKind::BiProjLine ? 2 : 1; }

    // Negative of the canonical class, in the ample-generator basis:
    // (s+1) on P^s, (q) on Q^q, (2,2) on P^1xP^1. Strictly positive.
    Vec minus_k() const;

    // Dimension of the space of global sections of O(m).
    Int h0(const Vec& m) const;

    bool operator==(const BaseSpace&) const = default;
    auto operator<=>(const BaseSpace&) const = default;

  private:
    BaseSpace(BaseKind kind, int dim) : kind_(kind), dim_(dim) {}

    BaseKind kind_;
    int dim_;
};

}  // namespace scrollfano
