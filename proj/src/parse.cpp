#include "scrollfano/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace scrollfano {

namespace {

class Cursor {
  public:
    explicit Cursor(const std::string& text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::int64_t integer() {
        const std::size_t start = pos_;
        bool negative = accept('-');
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected an integer", start);
        std::int64_t value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return negative ? -value : value;
    }

    void finish() {
        if (!done()) throw ParseError("unexpected trailing input", pos_);
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

Vec parse_vec(Cursor& cur, int rank) {
    Vec v;
    if (rank == 1) {
        v.push_back(cur.integer());
        return v;
    }
    cur.expect('(');
    v.push_back(cur.integer());
    for (int j = 1; j < rank; ++j) {
        cur.expect(',');
        v.push_back(cur.integer());
    }
    cur.expect(')');
    return v;
}

BaseSpace parse_base(Cursor& cur) {
    const std::size_t start = cur.pos();
    if (cur.accept('P')) {
        // "P1xP1" or "P<s>"
        std::int64_t s = cur.integer();
        if (s == 1 && cur.accept('x')) {
            cur.expect('P');
            if (cur.integer() != 1)
                throw ParseError("unknown base (expected P1xP1)", start);
            return BaseSpace::biproj_line();
        }
        if (s < 1) throw ParseError("projective space dimension must be >= 1", start);
        return BaseSpace::proj_space(static_cast<int>(s));
    }
    if (cur.accept('Q')) {
        std::int64_t q = cur.integer();
        if (q < 3) throw ParseError("quadric base dimension must be >= 3", start);
        return BaseSpace::quadric(static_cast<int>(q));
    }
    throw ParseError("expected a base (P<s>, Q<q> or P1xP1)", start);
}

}  // namespace

ParsedVariety parse_variety(const std::string& text) {
    Cursor cur(text);
    cur.expect('P');
    cur.expect('[');
    BaseSpace base = parse_base(cur);
    cur.expect(';');
    std::vector<Vec> twists;
    twists.push_back(parse_vec(cur, base.pic_rank()));
    while (cur.accept(',')) twists.push_back(parse_vec(cur, base.pic_rank()));
    cur.expect(']');
    cur.finish();
    if (twists.size() < 2)
        throw ParseError("a scroll needs at least two summands", cur.pos());

    // Track where each written summand lands after the sort.
    std::vector<int> indices(twists.size());
    for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = static_cast<int>(i);
    std::stable_sort(indices.begin(), indices.end(), [&](int a, int b) {
        return twists[static_cast<std::size_t>(a)] < twists[static_cast<std::size_t>(b)];
    });
    std::vector<int> order(twists.size());
    for (std::size_t pos = 0; pos < indices.size(); ++pos)
        order[static_cast<std::size_t>(indices[pos])] = static_cast<int>(pos);

    auto [variety, shift] = ScrollVariety::make_with_shift(base, std::move(twists));
    return {std::move(variety), std::move(shift), std::move(order)};
}

DivisorClass parse_class(const std::string& text, int base_pic_rank) {
    Cursor cur(text);
    cur.expect('(');
    Vec m = parse_vec(cur, base_pic_rank);
    cur.expect(';');
    std::int64_t n = cur.integer();
    cur.expect(')');
    cur.finish();
    return {std::move(m), n};
}

namespace {

void append_vec(std::ostringstream& out, const Vec& v) {
    if (v.size() == 1) {
        out << v[0];
        return;
    }
    out << '(';
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) out << ',';
        out << v[j];
    }
    out << ')';
}

}  // namespace

std::string to_string(const ScrollVariety& x) {
    std::ostringstream out;
    out << "P[";
    switch (x.base().kind()) {
        case BaseKind::ProjSpace: out << 'P' << x.base().dim(); break;
        case BaseKind::Quadric: out << 'Q' << x.base().dim(); break;
        case BaseKind::BiProjLine: out << "P1xP1"; break;
    }
    out << ';';
    for (std::size_t i = 0; i < x.twists().size(); ++i) {
        if (i) out << ',';
        append_vec(out, x.twists()[i]);
    }
    out << ']';
    return out.str();
}

std::string to_string(const DivisorClass& cls) {
    std::ostringstream out;
    out << '(';
    append_vec(out, cls.base_part);
    out << ';' << cls.fiber_part << ')';
    return out.str();
}

std::string to_string(const CurveClass& curve) {
    if (curve.is_fiber) return "fiber-line";
    std::ostringstream out;
    out << "section-line(" << curve.summand << ',' << curve.base_line << ')';
    return out.str();
}

}  // namespace scrollfano
