#include "ffcalc/bundle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffcalc {

Bundle::Bundle(std::vector<Summand> parts) {
    for (const auto& p : parts) {
        if (p.mult < 0) throw std::invalid_argument("negative multiplicity for slope " + p.slope.to_string());
    }
    std::sort(parts.begin(), parts.end(),
              [](const Summand& a, const Summand& b) { return a.slope > b.slope; });
    for (const auto& p : parts) {
        if (p.mult == 0) continue;
        if (!summands_.empty() && summands_.back().slope == p.slope) {
            summands_.back().mult = checked_add(summands_.back().mult, p.mult);
        } else {
            summands_.push_back(p);
        }
    }
}

Bundle Bundle::stable(Slope slope, std::int64_t mult) { return Bundle({Summand{slope, mult}}); }

std::int64_t Bundle::multiplicity(const Slope& slope) const noexcept {
    for (const auto& s : summands_) {
        if (s.slope == slope) return s.mult;
    }
    return 0;
}

std::string Bundle::to_string() const {
    if (summands_.empty()) return "0";
    std::string out;
    for (const auto& s : summands_) {
        if (!out.empty()) out += " + ";
        out += "O(" + s.slope.to_string() + ")";
        if (s.mult != 1) out += "^" + std::to_string(s.mult);
    }
    return out;
}

Bundle operator+(const Bundle& a, const Bundle& b) {
    std::vector<Summand> parts(a.summands().begin(), a.summands().end());
    parts.insert(parts.end(), b.summands().begin(), b.summands().end());
    return Bundle(std::move(parts));
}

std::int64_t rank(const Bundle& e) {
    std::int64_t r = 0;
    for (const auto& s : e.summands()) r = checked_add(r, checked_mul(s.mult, s.slope.den()));
    return r;
}

std::int64_t degree(const Bundle& e) {
    std::int64_t d = 0;
    for (const auto& s : e.summands()) d = checked_add(d, checked_mul(s.mult, s.slope.num()));
    return d;
}

Bundle dual(const Bundle& e) {
    std::vector<Summand> parts;
    parts.reserve(e.summands().size());
    for (const auto& s : e.summands()) parts.push_back({-s.slope, s.mult});
    return Bundle(std::move(parts));
}

Bundle twist(const Bundle& e, std::int64_t n) {
    std::vector<Summand> parts;
    parts.reserve(e.summands().size());
    for (const auto& s : e.summands()) parts.push_back({s.slope + Rational(n), s.mult});
    return Bundle(std::move(parts));
}

Bundle tensor(const Bundle& a, const Bundle& b) {
    std::vector<Summand> parts;
    parts.reserve(a.summands().size() * b.summands().size());
    for (const auto& x : a.summands()) {
        for (const auto& y : b.summands()) {
            const Slope s = x.slope + y.slope;
            // total rank of this product piece, split into stable pieces of rank s.den()
            const std::int64_t piece_rank =
                checked_mul(checked_mul(x.mult, y.mult), checked_mul(x.slope.den(), y.slope.den()));
            parts.push_back({s, piece_rank / s.den()});
        }
    }
    return Bundle(std::move(parts));
}

bool Cut::admits(const Slope& s) const noexcept {
    switch (kind) {
        case CutKind::at_least: return s >= at;
        case CutKind::above: return s > at;
        case CutKind::below: return s < at;
        case CutKind::at_most: return s <= at;
        case CutKind::equal: return s == at;
    }
    return false;
}

Bundle truncate(const Bundle& e, const Cut& cut) {
    std::vector<Summand> parts;
    for (const auto& s : e.summands()) {
        if (cut.admits(s.slope)) parts.push_back(s);
    }
    return Bundle(std::move(parts));
}

bool has_slope_zero_summand(const Bundle& e) { return e.multiplicity(Slope(0)) > 0; }

HNPolygon::HNPolygon(std::vector<PolygonVertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty() || vertices_.front() != PolygonVertex{0, 0}) {
        throw std::invalid_argument("HN polygon must start at (0,0)");
    }
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        if (vertices_[i].x <= vertices_[i - 1].x) throw std::invalid_argument("HN polygon abscissae must increase");
        if (i >= 2) {
            const Rational prev(vertices_[i - 1].y - vertices_[i - 2].y, vertices_[i - 1].x - vertices_[i - 2].x);
            const Rational cur(vertices_[i].y - vertices_[i - 1].y, vertices_[i].x - vertices_[i - 1].x);
            if (cur >= prev) throw std::invalid_argument("HN polygon must be strictly concave");
        }
    }
}

Rational HNPolygon::value_at(const Rational& x) const {
    if (x < Rational(0) || x > Rational(end().x)) throw std::out_of_range("abscissa outside polygon");
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x,
                               [](const PolygonVertex& v, const Rational& q) { return Rational(v.x) < q; });
    if (Rational(it->x) == x) return Rational(it->y);
    const auto& hi = *it;
    const auto& lo = *std::prev(it);
    const Rational slope(checked_sub(hi.y, lo.y), checked_sub(hi.x, lo.x));
    return Rational(lo.y) + slope * (x - Rational(lo.x));
}

HNPolygon hn_polygon(const Bundle& e) {
    std::vector<PolygonVertex> v{{0, 0}};
    for (const auto& s : e.summands()) {
        const auto& last = v.back();
        v.push_back({checked_add(last.x, checked_mul(s.mult, s.slope.den())),
                     checked_add(last.y, checked_mul(s.mult, s.slope.num()))});
    }
    return HNPolygon(std::move(v));
}

bool dominates(const Bundle& b, const Bundle& b2) {
    const HNPolygon p = hn_polygon(b);
    const HNPolygon q = hn_polygon(b2);
    if (p.end() != q.end()) return false;
    // Both polygons are linear between their vertices, so comparing on the
    // union of breakpoints decides every integer abscissa in [0, rank].
    std::vector<std::int64_t> xs;
    for (const auto& v : p.vertices()) xs.push_back(v.x);
    for (const auto& v : q.vertices()) xs.push_back(v.x);
    return std::all_of(xs.begin(), xs.end(),
                       [&](std::int64_t x) { return p.value_at(Rational(x)) >= q.value_at(Rational(x)); });
}

}  // namespace ffcalc
