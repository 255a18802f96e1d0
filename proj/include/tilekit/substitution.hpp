#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tilekit/geometry.hpp"

namespace tilekit {

enum class Tiling { chair, ab, rp, pinwheel };

inline const char* to_string(Tiling t) {
    switch (t) {
        case Tiling::chair: return "chair";
        case Tiling::ab: return "ab";
        case Tiling::rp: return "rp";
        case Tiling::pinwheel: return "pinwheel";
    }
    return "?";
}

inline Tiling tiling_from_string(const std::string& s) {
    if (s == "chair") return Tiling::chair;
    if (s == "ab") return Tiling::ab;
    if (s == "rp") return Tiling::rp;
    if (s == "pinwheel") return Tiling::pinwheel;
    throw std::invalid_argument("unknown tiling: " + s);
}

enum class TileKind : uint8_t { chair_l, ab_triangle, ab_rhombus, rp_triangle, pin_triangle };

inline const char* to_string(TileKind k) {
    switch (k) {
        case TileKind::chair_l: return "chair-l";
        case TileKind::ab_triangle: return "ab-triangle";
        case TileKind::ab_rhombus: return "ab-rhombus";
        case TileKind::rp_triangle: return "rp-triangle";
        case TileKind::pin_triangle: return "pinwheel-triangle";
    }
    return "?";
}

// Which geometric role a prototile side plays; hypotenuse bookkeeping feeds
// the pinwheel edge partition and the edge-to-edge checks.
enum class SideClass : uint8_t { chair_unit, ab_leg, ab_hyp, ab_rhombus_side, leg_short, leg_long, hyp };

// A placed tile.  The transform maps the canonical (marked) prototile onto
// the tile; det < 0 placements are mirrored copies, which for AB triangles
// also encodes the hypotenuse arrow direction.
struct TileInstance {
    TileKind kind;
    Transform place;
    std::vector<uint8_t> path;  // child indices from the seed down to this tile
    uint8_t seed_index = 0;
};

struct Patch {
    Tiling tiling;
    int level = 0;
    std::vector<Transform> seeds;              // usually one
    std::vector<TileKind> seed_kinds;
    std::vector<TileInstance> tiles;
};

// ---------------------------------------------------------------------------
// canonical prototiles

inline const std::vector<Point>& prototile_polygon(TileKind k) {
    static const Scalar r2 = Scalar::sqrt2();
    static const std::vector<Point> chair = {{0, 0}, {1, 0}, {2, 0}, {2, 1},
                                             {1, 1}, {1, 2}, {0, 2}, {0, 1}};
    static const std::vector<Point> ab_tri = {{0, 0}, {r2 + r2, Scalar(0)}, {r2, r2}};
    static const std::vector<Point> ab_rho = {{0, 0}, {2, 0}, {Scalar(2) + r2, r2}, {r2, r2}};
    static const std::vector<Point> tri24 = {{0, 0}, {2, 0}, {0, 4}};
    switch (k) {
        case TileKind::chair_l: return chair;
        case TileKind::ab_triangle: return ab_tri;
        case TileKind::ab_rhombus: return ab_rho;
        default: return tri24;
    }
}

inline const std::vector<SideClass>& prototile_side_classes(TileKind k) {
    static const std::vector<SideClass> chair(8, SideClass::chair_unit);
    static const std::vector<SideClass> ab_tri = {SideClass::ab_hyp, SideClass::ab_leg,
                                                  SideClass::ab_leg};
    static const std::vector<SideClass> ab_rho(4, SideClass::ab_rhombus_side);
    static const std::vector<SideClass> tri24 = {SideClass::leg_short, SideClass::hyp,
                                                 SideClass::leg_long};
    switch (k) {
        case TileKind::chair_l: return chair;
        case TileKind::ab_triangle: return ab_tri;
        case TileKind::ab_rhombus: return ab_rho;
        default: return tri24;
    }
}

// Placed polygon, counterclockwise.
inline std::vector<Point> tile_polygon(const TileInstance& t) {
    const auto& proto = prototile_polygon(t.kind);
    std::vector<Point> out;
    out.reserve(proto.size());
    for (const auto& p : proto) out.push_back(t.place.apply(p));
    if (t.place.flips()) std::reverse(out.begin(), out.end());
    return out;
}

struct TileSide {
    Point a, b;
    SideClass cls;
};

// Placed sides in counterclockwise order, classes kept aligned under mirror
// placements.
inline std::vector<TileSide> tile_sides(const TileInstance& t) {
    const auto& proto = prototile_polygon(t.kind);
    const auto& cls = prototile_side_classes(t.kind);
    const std::size_t n = proto.size();
    std::vector<Point> placed;
    placed.reserve(n);
    for (const auto& p : proto) placed.push_back(t.place.apply(p));
    std::vector<TileSide> out;
    out.reserve(n);
    if (!t.place.flips()) {
        for (std::size_t i = 0; i < n; ++i)
            out.push_back({placed[i], placed[(i + 1) % n], cls[i]});
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t i = (2 * n - 2 - j) % n;  // canonical side with the same endpoints
            out.push_back({placed[(n - 1 - j) % n], placed[(n - 2 - j + n) % n], cls[i]});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// substitution rules
//
// Each rule lists the child placements inside the inflated parent frame, read
// off the inflation figures.  A substitution step composes the parent
// transform with the contracted child map; the contraction denominators (2
// for chair, sqrt2-unit for AB, 5 for rp/pinwheel) always cancel against the
// seed transform, which `Scalar::div_exact` enforces.

namespace rules {

struct Child {
    TileKind kind;
    Transform map;  // inflated-frame placement (chair/ab) or Lambda-premultiplied (rp/pin)
};

inline Transform affine(int a, int b, int c, int d, Scalar tx, Scalar ty) {
    Transform t = Transform::linear(a, b, c, d);
    t.t = {std::move(tx), std::move(ty)};
    return t;
}

// chair: 2x inflation; children in the 4x4 frame, ordered bottom-left,
// bottom-right, centre, top-left.
inline const std::vector<Child>& chair_children() {
    static const std::vector<Child> kids = [] {
        std::vector<Child> v;
        auto mk = [](int quarter, long tx, long ty) {
            Transform t = Transform::rot90(quarter);
            t.t = {Scalar(tx), Scalar(ty)};
            return Child{TileKind::chair_l, t};
        };
        v.push_back(mk(0, 0, 0));
        v.push_back(mk(1, 4, 0));
        v.push_back(mk(0, 1, 1));
        v.push_back(mk(3, 0, 4));
        return v;
    }();
    return kids;
}

// AB: inflation by 1+sqrt2.  Triangle children carry the hypotenuse arrow at
// the image of the canonical arrow vertex; mirrored placements (det < 0) are
// the opposite arrow sense.
inline const std::vector<Child>& ab_triangle_children() {
    static const std::vector<Child> kids = [] {
        const Scalar r2 = Scalar::sqrt2();
        std::vector<Child> v;
        auto rot = [](int e, Scalar tx, Scalar ty) {
            Transform t = Transform::rot45(e);
            t.t = {std::move(tx), std::move(ty)};
            return t;
        };
        v.push_back({TileKind::ab_triangle, rot(5, Scalar(2), Scalar(2))});
        v.push_back({TileKind::ab_triangle,
                     affine(-1, 0, 0, 1, Scalar(2) + r2 + r2, Scalar(0))});
        v.push_back({TileKind::ab_triangle, rot(3, Scalar(4) + r2, r2)});
        v.push_back({TileKind::ab_rhombus, rot(3, Scalar(4) + r2 + r2, Scalar(0))});
        v.push_back({TileKind::ab_rhombus, rot(1, Scalar(2), Scalar(0))});
        return v;
    }();
    return kids;
}

inline const std::vector<Child>& ab_rhombus_children() {
    static const std::vector<Child> kids = [] {
        const Scalar r2 = Scalar::sqrt2();
        const Scalar h = Scalar(0, 1, 1);  // sqrt2/2
        std::vector<Child> v;
        auto rot = [](int e, Scalar tx, Scalar ty) {
            Transform t = Transform::rot45(e);
            t.t = {std::move(tx), std::move(ty)};
            return t;
        };
        auto refl = [&](Scalar a, Scalar b, Scalar c, Scalar d, Scalar tx, Scalar ty) {
            Transform t = Transform::linear(std::move(a), std::move(b), std::move(c), std::move(d));
            t.t = {std::move(tx), std::move(ty)};
            return t;
        };
        v.push_back({TileKind::ab_rhombus, rot(0, Scalar(0), Scalar(0))});                  // A
        v.push_back({TileKind::ab_triangle, rot(0, Scalar(2), Scalar(0))});                 // B
        v.push_back({TileKind::ab_triangle, refl(h, h, h, -h, r2, r2)});                    // C
        v.push_back({TileKind::ab_rhombus, rot(2, Scalar(2) + r2 + r2, Scalar(0))});        // D
        v.push_back({TileKind::ab_triangle,
                     refl(-h, -h, -h, h, Scalar(4) + r2 + r2, Scalar(2))});                 // E
        v.push_back({TileKind::ab_triangle,
                     rot(4, Scalar(2) + r2 + r2 + r2, Scalar(2) + r2)});                    // F
        v.push_back({TileKind::ab_rhombus, rot(0, Scalar(2) + r2 + r2, Scalar(2))});        // G
        return v;
    }();
    return kids;
}

// rp / pinwheel: children premultiplied by Lambda = [[2,-1],[1,2]] so that a
// substitution step is an exact integer product followed by division by 5.
// Read off the section-5/6 figures (frame: right angle (8,2), hyp x=12).
inline const std::vector<Child>& rp_children() {
    static const std::vector<Child> kids = {
        {TileKind::rp_triangle, affine(1, -2, -2, -1, 8, 4)},
        {TileKind::rp_triangle, affine(-2, -1, -1, 2, 8, 4)},
        {TileKind::rp_triangle, affine(2, 1, 1, -2, 0, 10)},
        {TileKind::rp_triangle, affine(-2, -1, -1, 2, 4, 2)},
        {TileKind::rp_triangle, affine(-2, -1, -1, 2, 4, 12)},
    };
    return kids;
}

inline const std::vector<Child>& pin_children() {
    static const std::vector<Child> kids = {
        {TileKind::pin_triangle, affine(1, -2, -2, -1, 8, 4)},
        {TileKind::pin_triangle, affine(2, -1, 1, 2, 4, 2)},
        {TileKind::pin_triangle, affine(-2, 1, -1, -2, 4, 12)},
        {TileKind::pin_triangle, affine(-2, -1, -1, 2, 4, 2)},
        {TileKind::pin_triangle, affine(-2, -1, -1, 2, 4, 12)},
    };
    return kids;
}

inline const std::vector<Child>& children_of(TileKind k) {
    switch (k) {
        case TileKind::chair_l: return chair_children();
        case TileKind::ab_triangle: return ab_triangle_children();
        case TileKind::ab_rhombus: return ab_rhombus_children();
        case TileKind::rp_triangle: return rp_children();
        case TileKind::pin_triangle: return pin_children();
    }
    throw std::logic_error("children_of: bad kind");
}

// parent transform o contracted child map
inline Transform child_transform(TileKind parent_kind, const Transform& parent, const Child& c) {
    switch (parent_kind) {
        case TileKind::chair_l: {
            Transform v = Transform::compose(parent, c.map);
            Transform r = v;
            r.m00 = v.m00.div_exact(2);
            r.m01 = v.m01.div_exact(2);
            r.m10 = v.m10.div_exact(2);
            r.m11 = v.m11.div_exact(2);
            r.t = {(v.t.x - parent.t.x).div_exact(2) + parent.t.x,
                   (v.t.y - parent.t.y).div_exact(2) + parent.t.y};
            return r;
        }
        case TileKind::ab_triangle:
        case TileKind::ab_rhombus: {
            // multiply the child map by 1/(1+sqrt2) = sqrt2 - 1 (a ring unit)
            const Scalar u = Scalar(-1, 1, 0);
            Transform w = c.map;
            w.m00 = u * w.m00;
            w.m01 = u * w.m01;
            w.m10 = u * w.m10;
            w.m11 = u * w.m11;
            w.t = {u * w.t.x, u * w.t.y};
            return Transform::compose(parent, w);
        }
        case TileKind::rp_triangle:
        case TileKind::pin_triangle: {
            Transform v = Transform::compose(parent, c.map);
            Transform r;
            r.m00 = v.m00.div_exact(5);
            r.m01 = v.m01.div_exact(5);
            r.m10 = v.m10.div_exact(5);
            r.m11 = v.m11.div_exact(5);
            r.t = {(v.t.x - parent.t.x).div_exact(5) + parent.t.x,
                   (v.t.y - parent.t.y).div_exact(5) + parent.t.y};
            return r;
        }
    }
    throw std::logic_error("child_transform: bad kind");
}

}  // namespace rules

// One substitution step: children tile the parent's region exactly, paths
// extend the parent's.
inline std::vector<TileInstance> substitute_once(const TileInstance& tile) {
    std::vector<TileInstance> out;
    const auto& kids = rules::children_of(tile.kind);
    out.reserve(kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i) {
        TileInstance c;
        c.kind = kids[i].kind;
        c.place = rules::child_transform(tile.kind, tile.place, kids[i]);
        c.path = tile.path;
        c.path.push_back(static_cast<uint8_t>(i));
        c.seed_index = tile.seed_index;
        out.push_back(std::move(c));
    }
    return out;
}

inline TileKind default_seed_kind(Tiling t) {
    switch (t) {
        case Tiling::chair: return TileKind::chair_l;
        case Tiling::ab: return TileKind::ab_triangle;
        case Tiling::rp: return TileKind::rp_triangle;
        case Tiling::pinwheel: return TileKind::pin_triangle;
    }
    throw std::logic_error("bad tiling");
}

// Seed transform at level L.  Chair/AB seeds are pure inflations; rp uses
// [[2,1],[1,-2]]^L, and pinwheel uses (5*[[2,-1],[1,2]])^L: the extra factor
// of 5 per level makes every vertex an integer even though tiles appear in
// 2*alpha-rotated orientations.
inline Transform seed_transform(Tiling t, int level) {
    Transform s = Transform::identity();
    switch (t) {
        case Tiling::chair:
            for (int i = 0; i < level; ++i) s = Transform::compose(Transform::linear(2, 0, 0, 2), s);
            return s;
        case Tiling::ab: {
            const Scalar lam = Scalar(1, 1, 0);  // 1 + sqrt2
            for (int i = 0; i < level; ++i)
                s = Transform::compose(Transform::linear(lam, Scalar(0), Scalar(0), lam), s);
            return s;
        }
        case Tiling::rp:
            for (int i = 0; i < level; ++i)
                s = Transform::compose(Transform::linear(2, 1, 1, -2), s);
            return s;
        case Tiling::pinwheel:
            for (int i = 0; i < level; ++i)
                s = Transform::compose(Transform::linear(10, -5, 5, 10), s);
            return s;
    }
    throw std::logic_error("bad tiling");
}

inline constexpr int kMaxLevel = 7;

// Deterministic level-L patch from a single seed.
inline Patch generate_patch(Tiling tiling, int level, int seed_orientation = 0,
                            TileKind seed_kind_override = TileKind::chair_l,
                            bool use_override = false) {
    if (level < 0 || level > kMaxLevel)
        throw std::invalid_argument("generate_patch: level out of range (0.." +
                                    std::to_string(kMaxLevel) + ")");
    TileKind kind = use_override ? seed_kind_override : default_seed_kind(tiling);
    Transform seed = Transform::compose(seed_transform(tiling, level),
                                        Transform::rot90(seed_orientation));
    Patch p;
    p.tiling = tiling;
    p.level = level;
    p.seeds = {seed};
    p.seed_kinds = {kind};
    TileInstance root{kind, seed, {}, 0};
    std::vector<TileInstance> cur{root};
    for (int l = 0; l < level; ++l) {
        std::vector<TileInstance> next;
        next.reserve(cur.size() * 5);
        for (const auto& t : cur)
            for (auto& c : substitute_once(t)) next.push_back(std::move(c));
        cur = std::move(next);
    }
    p.tiles = std::move(cur);
    return p;
}

// The Lemma-6.4 configuration: a pinwheel supertile glued to its mirror image
// along the hypotenuse.  The central vertex of the shared hypotenuse reaches
// degree 8.
inline Patch pinwheel_doubled(int level) {
    if (level < 1 || level > kMaxLevel) throw std::invalid_argument("pinwheel_doubled: bad level");
    Transform s1 = seed_transform(Tiling::pinwheel, level);
    // reflection across the canonical hypotenuse (through (2,0), direction (-1,2)):
    // linear (1/5)[[-3,-4],[-4,3]], translation (16/5, 8/5)
    Transform h = Transform::linear(-3, -4, -4, 3);
    h.t = {Scalar(16), Scalar(8)};
    Transform v = Transform::compose(s1, h);
    Transform s2;
    s2.m00 = v.m00.div_exact(5);
    s2.m01 = v.m01.div_exact(5);
    s2.m10 = v.m10.div_exact(5);
    s2.m11 = v.m11.div_exact(5);
    s2.t = {(v.t.x - s1.t.x).div_exact(5) + s1.t.x, (v.t.y - s1.t.y).div_exact(5) + s1.t.y};

    Patch p;
    p.tiling = Tiling::pinwheel;
    p.level = level;
    p.seeds = {s1, s2};
    p.seed_kinds = {TileKind::pin_triangle, TileKind::pin_triangle};
    std::vector<TileInstance> cur;
    cur.push_back({TileKind::pin_triangle, s1, {}, 0});
    cur.push_back({TileKind::pin_triangle, s2, {}, 1});
    for (int l = 0; l < level; ++l) {
        std::vector<TileInstance> next;
        for (const auto& t : cur)
            for (auto& c : substitute_once(t)) next.push_back(std::move(c));
        cur = std::move(next);
    }
    p.tiles = std::move(cur);
    return p;
}

// Ancestor supertile of `tile` at level k (k = 0: the tile, k = L: the seed),
// recovered by replaying the hierarchy path.
struct Ancestor {
    TileInstance instance;
    std::vector<uint8_t> sub_path;  // path from the ancestor down to the tile
};

inline Ancestor ancestor_at_level(const Patch& patch, const TileInstance& tile, int k) {
    const int L = patch.level;
    if (k < 0 || k > L) throw std::invalid_argument("ancestor_at_level: k out of range");
    TileInstance cur{patch.seed_kinds[tile.seed_index], patch.seeds[tile.seed_index], {},
                     tile.seed_index};
    const int steps = L - k;
    for (int i = 0; i < steps; ++i) {
        auto kids = substitute_once(cur);
        cur = kids.at(tile.path.at(i));
    }
    Ancestor a;
    a.instance = std::move(cur);
    a.sub_path.assign(tile.path.begin() + steps, tile.path.end());
    return a;
}

// ---------------------------------------------------------------------------
// orientation codes

namespace detail {
// index of v among the eight 45-degree directions starting east, or -1
inline int dir8(const Vec2& v) {
    static const int dirs[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    for (int j = 0; j < 8; ++j) {
        Vec2 u{Scalar(dirs[j][0]), Scalar(dirs[j][1])};
        if (cross(u, v).is_zero() && dot(u, v).sign() > 0) return j;
    }
    return -1;
}
}  // namespace detail

// Orientation codes per the paper's labelled figures.  chair: 1..4 rotation
// classes.  AB rhombus: 1..4 (period 90).  AB triangle: 1..16, arrow
// direction in 45-degree steps crossed with the apex side.  rp: 1..8,
// rotation class x reflection.  Pinwheel tiles are rejected: their
// orientation is the transform itself.
inline int orientation_code(const TileInstance& t) {
    const Transform& pl = t.place;
    switch (t.kind) {
        case TileKind::chair_l: {
            int j = detail::dir8(pl.apply_vec({Scalar(1), Scalar(0)}));
            if (j < 0 || j % 2) throw std::logic_error("chair orientation not axis aligned");
            return j / 2 + 1;
        }
        case TileKind::ab_rhombus: {
            Vec2 side = pl.apply_vec({Scalar(1), Scalar(0)});
            int j = detail::dir8(side);
            if (j < 0) throw std::logic_error("ab rhombus orientation unrecognised");
            // a mirrored placement equals a rotation composed with the rhombus's
            // own diagonal mirror, which shifts the side pair down one step
            if (pl.flips()) j = (j + 7) % 8;
            static const int code[4] = {3, 4, 1, 2};
            return code[j % 4];
        }
        case TileKind::ab_triangle: {
            bool b = pl.flips();
            Vec2 e1 = b ? pl.apply_vec({Scalar(-1), Scalar(0)}) : pl.apply_vec({Scalar(1), Scalar(0)});
            int k = detail::dir8(e1);
            if (k < 0) throw std::logic_error("ab triangle orientation unrecognised");
            int j = (k + (b ? 4 : 0)) % 8;
            return (2 * j + 4 + (b ? 1 : 0)) % 16 + 1;
        }
        case TileKind::rp_triangle: {
            bool refl = pl.flips();
            Vec2 e1 = refl ? pl.apply_vec({Scalar(-1), Scalar(0)})
                           : pl.apply_vec({Scalar(1), Scalar(0)});
            int j = detail::dir8(e1);
            if (j < 0 || j % 2) throw std::logic_error("rp orientation not axis aligned");
            return (j / 2) * 2 + (refl ? 1 : 0) + 1;
        }
        case TileKind::pin_triangle:
            throw std::invalid_argument(
                "orientation_code: pinwheel tiles have infinitely many orientations");
    }
    throw std::logic_error("orientation_code: bad kind");
}

// Exact tile area via the shoelace formula (doubled signed area halved).
inline Scalar tile_area2(const TileInstance& t) {
    auto poly = tile_polygon(t);
    return polygon_area2(poly);
}

}  // namespace tilekit
