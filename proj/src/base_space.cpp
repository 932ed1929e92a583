#include "scrollfano/base_space.hpp"

#include <stdexcept>

namespace scrollfano {

Vec operator+(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec operator-(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

Vec operator*(std::int64_t k, Vec a) {
    for (auto& x : a) x *= k;
    return a;
}

BaseSpace BaseSpace::proj_space(int s) {
    if (s < 1) throw std::invalid_argument("projective space needs dimension >= 1");
    return BaseSpace(BaseKind::ProjSpace, s);
}

BaseSpace BaseSpace::quadric(int q) {
    if (q < 3) throw std::invalid_argument("quadric base needs dimension >= 3");
    return BaseSpace(BaseKind::Quadric, q);
}

BaseSpace BaseSpace::biproj_line() { return BaseSpace(BaseKind::BiProjLine, 2); }

Vec BaseSpace::minus_k() const {
    switch (kind_) {
        case BaseKind::ProjSpace: return {dim_ + 1};
        case BaseKind::Quadric: return {dim_};
        case BaseKind::BiProjLine: return {2, 2};
    }
    throw std::logic_error("unreachable");
}

Int BaseSpace::h0(const Vec& m) const {
    switch (kind_) {
        case BaseKind::ProjSpace:
            if (m[0] < 0) return 0;
            return binomial(m[0] + dim_, dim_);
        case BaseKind::Quadric: {
            if (m[0] < 0) return 0;
            // Degree-m part of the coordinate ring of a quadric hypersurface
            // in P^{q+1}: forms of degree m minus multiples of the equation.
            return binomial(m[0] + dim_ + 1, dim_ + 1) - binomial(m[0] + dim_ - 1, dim_ + 1);
        }
        case BaseKind::BiProjLine:
            if (m[0] < 0 || m[1] < 0) return 0;
            return Int(m[0] + 1) * Int(m[1] + 1);
    }
    throw std::logic_error("unreachable");
}

}  // namespace scrollfano
