#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "tilekit/geometry.hpp"

using namespace tilekit;

TEST_CASE("transform apply examples") {
    Point p{Scalar(3), Scalar(-7)};
    CHECK(Transform::identity().apply(p) == p);

    Transform r90 = Transform::rot90(1);
    CHECK(r90.apply({Scalar(1), Scalar(0)}) == Point{Scalar(0), Scalar(1)});

    // pinwheel inflation linear part [[2,-1],[1,2]] on (1,0) -> (2,1)
    Transform lam = Transform::linear(2, -1, 1, 2);
    CHECK(lam.apply({Scalar(1), Scalar(0)}) == Point{Scalar(2), Scalar(1)});
}

TEST_CASE("compose distributes over apply") {
    Transform a = Transform::rot45(3);
    a.t = {Scalar(1, 1, 1), Scalar(-2)};
    Transform b = Transform::linear(2, 1, 1, -2);
    b.t = {Scalar(5), Scalar(0, 3, 2)};
    Point p{Scalar(7, -1, 2), Scalar(3, 3, 0)};
    CHECK(Transform::compose(a, b).apply(p) == a.apply(b.apply(p)));
}

TEST_CASE("segment relations") {
    Point s0{Scalar(0), Scalar(0)}, s1{Scalar(2), Scalar(0)};
    CHECK(segment_relation({Scalar(1), Scalar(0)}, s0, s1) == SegmentRelation::interior);
    CHECK(segment_relation({Scalar(0), Scalar(0)}, s0, s1) == SegmentRelation::endpoint);
    CHECK(segment_relation({Scalar(1), Scalar(1)}, s0, s1) == SegmentRelation::off);
    CHECK(segment_relation({Scalar(3), Scalar(0)}, s0, s1) == SegmentRelation::off);
    CHECK(segment_relation({Scalar(-1), Scalar(0)}, s0, s1) == SegmentRelation::off);
    CHECK_THROWS_AS(segment_relation(s0, s0, s0), std::invalid_argument);
}

TEST_CASE("direction classes") {
    std::vector<Vec2> axes = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}};
    CHECK(direction_class({Scalar(3), Scalar(0)}, axes) == 0);
    CHECK(direction_class({Scalar(1), Scalar(1)}, axes) == std::nullopt);

    std::vector<Vec2> rp = {{Scalar(1), Scalar(0)},
                            {Scalar(0), Scalar(1)},
                            {Scalar(2), Scalar(1)},
                            {Scalar(-1), Scalar(2)}};
    CHECK(direction_class({Scalar(-2), Scalar(-1)}, rp) == 2);
    CHECK_THROWS_AS(direction_class({Scalar(0), Scalar(0)}, rp), std::invalid_argument);
}

TEST_CASE("rotation classify on exact turn classes") {
    Vec2 e{Scalar(1), Scalar(0)};
    CHECK(rotation_classify(e, {Scalar(0), Scalar(1)}) == TurnClass::deg90);
    CHECK(rotation_classify(e, {Scalar(3), Scalar(4)}) == TurnClass::a2);
    CHECK(rotation_classify(e, {Scalar(-7), Scalar(24)}) == TurnClass::a4);
    CHECK(rotation_classify(e, {Scalar(-3), Scalar(4)}) == TurnClass::b2);
    CHECK(rotation_classify(e, {Scalar(5), Scalar(0)}) == TurnClass::deg0);
    CHECK(rotation_classify(e, {Scalar(1), Scalar(1)}) == std::nullopt);
    CHECK(rotation_classify({Scalar(1), Scalar(2)}, {Scalar(-2), Scalar(1)}) == TurnClass::deg90);
}

TEST_CASE("turn matrices agree with floating rotations") {
    const double alpha = std::atan2(1.0, 2.0);
    const double angles[12] = {0,
                               M_PI / 2,
                               M_PI,
                               3 * M_PI / 2,
                               2 * alpha,
                               M_PI - 2 * alpha,
                               4 * alpha,
                               -4 * alpha,
                               2 * alpha + M_PI / 2,
                               (M_PI - 2 * alpha) + M_PI / 2,
                               2 * alpha + M_PI,
                               (M_PI - 2 * alpha) + M_PI};
    for (int i = 0; i < 12; ++i) {
        const auto& m = detail::turn_matrices[i].m;
        double den = std::sqrt(double(m[0]) * m[0] + double(m[2]) * m[2]);
        CHECK(m[0] / den == Catch::Approx(std::cos(angles[i])).margin(1e-12));
        CHECK(m[2] / den == Catch::Approx(std::sin(angles[i])).margin(1e-12));
    }
}

TEST_CASE("rotation classify uniqueness on random rational pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-30, 30);
    for (int it = 0; it < 3000; ++it) {
        Vec2 d1{Scalar(c(rng)), Scalar(c(rng))};
        Vec2 d2{Scalar(c(rng)), Scalar(c(rng))};
        if (d1.is_zero() || d2.is_zero()) continue;
        int matches = 0;
        for (int i = 0; i < 12; ++i) {
            const auto& m = detail::turn_matrices[i].m;
            Vec2 r{Scalar(m[0]) * d1.x + Scalar(m[1]) * d1.y,
                   Scalar(m[2]) * d1.x + Scalar(m[3]) * d1.y};
            if (cross(r, d2).is_zero() && dot(r, d2).sign() > 0) ++matches;
        }
        CHECK(matches <= 1);
    }
}

TEST_CASE("turn set membership") {
    CHECK(is_turn(TurnClass::deg90));
    CHECK(is_turn(TurnClass::deg270));
    CHECK(is_turn(TurnClass::a2));
    CHECK(is_turn(TurnClass::b2));
    CHECK(is_turn(TurnClass::a2_plus180));
    CHECK(is_turn(TurnClass::b2_plus180));
    CHECK_FALSE(is_turn(TurnClass::deg0));
    CHECK_FALSE(is_turn(TurnClass::deg180));
    CHECK_FALSE(is_turn(TurnClass::a4));
    CHECK_FALSE(is_turn(TurnClass::b4));
    CHECK_FALSE(is_turn(TurnClass::a2_plus90));
    CHECK_FALSE(is_turn(TurnClass::b2_plus90));
}
