#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tilekit/scalar.hpp"

namespace tilekit {

struct Vec2 {
    Scalar x, y;

    Vec2() = default;
    Vec2(Scalar x, Scalar y) : x(std::move(x)), y(std::move(y)) {}

    friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
    friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    friend Vec2 operator*(const Scalar& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

struct Point {
    Scalar x, y;

    Point() = default;
    Point(Scalar x, Scalar y) : x(std::move(x)), y(std::move(y)) {}

    friend Vec2 operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
    friend Point operator+(const Point& p, const Vec2& v) { return {p.x + v.x, p.y + v.y}; }
    friend bool operator==(const Point&, const Point&) = default;
    friend std::strong_ordering operator<=>(const Point& p, const Point& q) {
        if (auto c = p.x <=> q.x; c != 0) return c;
        return p.y <=> q.y;
    }

    std::size_t hash() const { return x.hash() * 2654435761u + y.hash(); }
};

inline Scalar cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline Scalar dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }
inline bool parallel(const Vec2& u, const Vec2& v) { return cross(u, v).is_zero(); }

// Affine map p -> linear * p + translation.  Linear parts stay exact in the
// ring; orthogonal-times-inflation throughout the substitution rules.
struct Transform {
    Scalar m00{1}, m01{0}, m10{0}, m11{1};
    Vec2 t{Scalar(0), Scalar(0)};

    static Transform identity() { return {}; }
    static Transform translation(Vec2 v) {
        Transform r;
        r.t = std::move(v);
        return r;
    }
    static Transform linear(Scalar a, Scalar b, Scalar c, Scalar d) {
        Transform r;
        r.m00 = std::move(a);
        r.m01 = std::move(b);
        r.m10 = std::move(c);
        r.m11 = std::move(d);
        return r;
    }
    // rotation by 90 * quarter degrees
    static Transform rot90(int quarter) {
        static const int c[4] = {1, 0, -1, 0}, s[4] = {0, 1, 0, -1};
        int q = ((quarter % 4) + 4) % 4;
        return linear(c[q], -s[q], s[q], c[q]);
    }
    // rotation by 45 * eighth degrees (introduces sqrt(2)/2 entries)
    static Transform rot45(int eighth) {
        int e = ((eighth % 8) + 8) % 8;
        if (e % 2 == 0) return rot90(e / 2);
        Scalar c = Scalar(0, 1, 1), s = c;  // cos45 = sin45 = sqrt2/2
        Transform r = rot90(e / 2);
        return compose(r, linear(c, -s, s, c));
    }

    Point apply(const Point& p) const {
        return {m00 * p.x + m01 * p.y + t.x, m10 * p.x + m11 * p.y + t.y};
    }
    Vec2 apply_vec(const Vec2& v) const { return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y}; }

    Scalar det() const { return m00 * m11 - m01 * m10; }
    bool flips() const { return det().sign() < 0; }

    static Transform compose(const Transform& f, const Transform& g) {
        // (f o g)(p) = f(g(p))
        Transform r;
        r.m00 = f.m00 * g.m00 + f.m01 * g.m10;
        r.m01 = f.m00 * g.m01 + f.m01 * g.m11;
        r.m10 = f.m10 * g.m00 + f.m11 * g.m10;
        r.m11 = f.m10 * g.m01 + f.m11 * g.m11;
        r.t = f.apply_vec(g.t) + f.t;
        return r;
    }

    Transform div_exact(long d) const {
        Transform r;
        r.m00 = m00.div_exact(d);
        r.m01 = m01.div_exact(d);
        r.m10 = m10.div_exact(d);
        r.m11 = m11.div_exact(d);
        r.t = {t.x.div_exact(d), t.y.div_exact(d)};
        return r;
    }

    friend bool operator==(const Transform&, const Transform&) = default;
};

enum class SegmentRelation { off, endpoint, interior };

// Exact classification of a point against a segment with distinct endpoints.
inline SegmentRelation segment_relation(const Point& p, const Point& s0, const Point& s1) {
    Vec2 v = s1 - s0;
    if (v.is_zero()) throw std::invalid_argument("segment_relation: degenerate segment");
    if (p == s0 || p == s1) return SegmentRelation::endpoint;
    Vec2 w = p - s0;
    if (!cross(v, w).is_zero()) return SegmentRelation::off;
    Scalar tparam = dot(v, w);
    if (tparam.sign() <= 0) return SegmentRelation::off;
    if (compare(tparam, dot(v, v)) >= 0) return SegmentRelation::off;
    return SegmentRelation::interior;
}

// The unique index j with v parallel to directions[j], if any.  Directions
// must be pairwise non-parallel.
inline std::optional<int> direction_class(const Vec2& v, const std::vector<Vec2>& directions) {
    if (v.is_zero()) throw std::invalid_argument("direction_class: zero vector");
    for (std::size_t j = 0; j < directions.size(); ++j)
        if (parallel(v, directions[j])) return static_cast<int>(j);
    return std::nullopt;
}

// The twelve angle classes between adjacent edges of the pinwheel subgraphs,
// alpha = arctan(1/2).  Rotations are stored as integer matrices scaled by an
// implicit positive denominator, so classification cross-multiplies and never
// divides.
enum class TurnClass : int {
    deg0 = 0,
    deg90,
    deg180,
    deg270,
    a2,         // 2*alpha
    b2,         // 2*beta = 180 - 2*alpha
    a4,         // 4*alpha
    b4,         // 4*beta = -4*alpha (mod 360)
    a2_plus90,  // 2*alpha + 90
    b2_plus90,
    a2_plus180,
    b2_plus180,
};

inline const char* to_string(TurnClass c) {
    static const char* names[] = {"0",     "90",    "180",    "270",    "2a",     "2b",
                                  "4a",    "4b",    "2a+90",  "2b+90",  "2a+180", "2b+180"};
    return names[static_cast<int>(c)];
}

namespace detail {
struct TurnMatrix {
    int m[4];  // row-major integer numerators; denominator implicit (1, 5 or 25)
};
// cos 2a = 3/5, sin 2a = 4/5; cos 4a = -7/25, sin 4a = 24/25; beta classes via
// 2b = 180 - 2a.
inline constexpr std::array<TurnMatrix, 12> turn_matrices{{
    {{1, 0, 0, 1}},        // 0
    {{0, -1, 1, 0}},       // 90
    {{-1, 0, 0, -1}},      // 180
    {{0, 1, -1, 0}},       // 270
    {{3, -4, 4, 3}},       // 2a
    {{-3, -4, 4, -3}},     // 2b
    {{-7, -24, 24, -7}},   // 4a
    {{-7, 24, -24, -7}},   // 4b
    {{-4, -3, 3, -4}},     // 2a+90
    {{-4, 3, -3, -4}},     // 2b+90
    {{-3, 4, -4, -3}},     // 2a+180
    {{3, 4, -4, 3}},       // 2b+180
}};
}  // namespace detail

// The unique class with d2 parallel to R*d1 and positively proportional, or
// nullopt.  Inputs must be nonzero; pinwheel subgraph edges have rational
// coordinates so everything stays exact.
inline std::optional<TurnClass> rotation_classify(const Vec2& d1, const Vec2& d2) {
    if (d1.is_zero() || d2.is_zero()) throw std::invalid_argument("rotation_classify: zero vector");
    for (int i = 0; i < 12; ++i) {
        const auto& m = detail::turn_matrices[i].m;
        Vec2 r{Scalar(m[0]) * d1.x + Scalar(m[1]) * d1.y, Scalar(m[2]) * d1.x + Scalar(m[3]) * d1.y};
        if (cross(r, d2).is_zero() && dot(r, d2).sign() > 0) return static_cast<TurnClass>(i);
    }
    return std::nullopt;
}

inline bool is_turn(TurnClass c) {
    switch (c) {
        case TurnClass::deg90:
        case TurnClass::deg270:
        case TurnClass::a2:
        case TurnClass::b2:
        case TurnClass::a2_plus180:
        case TurnClass::b2_plus180:
            return true;
        default:
            return false;
    }
}

// Exact doubled signed area of a simple polygon (shoelace).
inline Scalar polygon_area2(const std::vector<Point>& poly) {
    Scalar s(0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % poly.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

}  // namespace tilekit

template <>
struct std::hash<tilekit::Point> {
    std::size_t operator()(const tilekit::Point& p) const noexcept { return p.hash(); }
};
