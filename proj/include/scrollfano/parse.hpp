#pragma once

#include <stdexcept>
#include <string>

#include "scrollfano/geometry.hpp"

namespace scrollfano {

// Grammar (canonical printed forms round-trip bit-exactly):
//   variety:  P[P2;0,0,1]   P[Q3;0,0,2]   P[P1xP1;(0,0),(1,2)]
//   class:    (m;n)         ((m1,m2);n)
// Twists given to the parser may be unnormalized; the variety is normalized
// on construction and a class parsed against the same input string can be
// transported with the reported shift.
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          pos(position) {}
    std::size_t pos;
};

struct ParsedVariety {
    ScrollVariety variety;
    Vec shift;  // subtracted from the written twists during normalization
    // summand_order[i] = position of the i-th written summand after sorting,
    // so subbundle indices given against the input can be re-addressed.
    std::vector<int> summand_order;
};

ParsedVariety parse_variety(const std::string& text);

// Class literal for a lattice of the given Picard rank (rank of the base).
DivisorClass parse_class(const std::string& text, int base_pic_rank);

std::string to_string(const ScrollVariety& x);
std::string to_string(const DivisorClass& cls);
std::string to_string(const CurveClass& curve);

}  // namespace scrollfano
