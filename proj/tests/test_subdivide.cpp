#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <cmath>
#include <set>

using namespace testsupport;

TEST_CASE("segment bisects until below eps") {
    auto seg = SimplicialComplex::build({v2(0, 0), v2(1, 0)}, {{0, 1}}, {0});
    auto sub = subdivide(seg, 0.3);
    int edges = 0;
    for (int s = 0; s < sub.complex.num_simplices(); ++s) {
        if (sub.complex.simplex(s).dim() != 1) continue;
        ++edges;
        CHECK(sub.complex.simplex(s).diameter == doctest::Approx(0.25));
        CHECK(sub.complex.simplex(s).thickness == doctest::Approx(0.5));
    }
    CHECK(edges == 4);
    CHECK(sub.rounds == 2);
}

TEST_CASE("already fine complex is returned unchanged") {
    auto cx = unit_triangle();
    auto sub = subdivide(cx, 10.0);
    CHECK(sub.rounds == 0);
    CHECK(sub.complex.num_simplices() == cx.num_simplices());
    for (int s = 0; s < cx.num_simplices(); ++s) CHECK(sub.parent[s] == s);
}

TEST_CASE("one refinement of a right triangle gives 4 congruent children") {
    auto cx = unit_triangle();
    double parent_thickness = cx.simplex(cx.find({0, 1, 2})).thickness;
    auto sub = subdivide(cx, cx.simplex(cx.find({0, 1, 2})).diameter);  // forces one round
    CHECK(sub.rounds == 1);
    int tris = 0;
    for (int s = 0; s < sub.complex.num_simplices(); ++s) {
        if (sub.complex.simplex(s).dim() != 2) continue;
        ++tris;
        CHECK(sub.complex.simplex(s).diameter == doctest::Approx(std::sqrt(2.0) / 2));
        CHECK(sub.complex.simplex(s).thickness == doctest::Approx(parent_thickness));
    }
    CHECK(tris == 4);
    CHECK(sub.complex.validate().ok());
}

TEST_CASE("subdivision is a subdivision: children inside parents, union covers") {
    auto cx = two_triangles();
    auto sub = subdivide(cx, 0.6);
    CHECK(sub.complex.validate().ok());
    Rng rng(11);
    // Children inside their parents.
    for (int s = 0; s < sub.complex.num_simplices(); ++s) {
        auto pts = cx.points_of(sub.parent[s]);
        for (int rep = 0; rep < 5; ++rep) {
            Vec x = sub.complex.sample_interior(s, rng);
            auto ac = affine_coords(pts, x);
            CHECK(ac.residual <= cx.tol_membership());
            CHECK(ac.weights.minCoeff() >= -1e-9);
        }
        CHECK(sub.complex.simplex(s).diameter < 0.6);
    }
    // Old simplices covered by children (sampled).
    for (int old_s = 0; old_s < cx.num_simplices(); ++old_s) {
        for (int rep = 0; rep < 20; ++rep) {
            Vec x = cx.sample_interior(old_s, rng);
            BarycentricCoords bc;
            CHECK(sub.complex.try_barycentric(x, &bc));
        }
    }
    // Q carried forward: children of Q simplices are exactly the Q' marks.
    for (int s = 0; s < sub.complex.num_simplices(); ++s)
        CHECK(sub.complex.in_q(s) == cx.in_q(sub.parent[s]));
}

TEST_CASE("thickness stays constant across rounds in dims <= 3") {
    auto cx = tetrahedron();
    auto one = subdivide(cx, cx.max_simplex_diameter() * 0.999);
    CHECK(one.rounds == 1);
    CHECK(one.t0 > 0);
    auto two = subdivide(cx, one.complex.max_simplex_diameter() * 0.999);
    CHECK(two.rounds == 2);
    CHECK(two.t0 == doctest::Approx(one.t0).epsilon(1e-9));
}

TEST_CASE("tetrahedron refinement conforms and contracts") {
    auto cx = tetrahedron();
    auto sub = subdivide(cx, cx.max_simplex_diameter() * 0.999);
    CHECK(sub.rounds == 1);
    int tets = 0;
    for (int s = 0; s < sub.complex.num_simplices(); ++s)
        if (sub.complex.simplex(s).dim() == 3) ++tets;
    CHECK(tets == 8);
    CHECK(sub.complex.validate().ok());
    // The first round contracts (interior diagonals can exceed half the
    // parent diameter); once the classes repeat, rounds halve exactly.
    CHECK(sub.complex.max_simplex_diameter() < cx.max_simplex_diameter());
    auto sub2 = subdivide(cx, sub.complex.max_simplex_diameter() * 0.999);
    CHECK(sub2.rounds == 2);
    CHECK(sub2.complex.max_simplex_diameter() ==
          doctest::Approx(0.5 * sub.complex.max_simplex_diameter()));
}

TEST_CASE("4-simplex refinement stays a valid complex") {
    std::vector<Vec> vs;
    for (int i = 0; i < 5; ++i) {
        Vec v = Vec::Zero(4);
        if (i > 0) v[i - 1] = 1;
        vs.push_back(v);
    }
    auto cx = SimplicialComplex::build(vs, {{0, 1, 2, 3, 4}}, {0});
    auto sub = subdivide(cx, cx.max_simplex_diameter() * 0.999);
    CHECK(sub.rounds == 1);
    int top = 0;
    for (int s = 0; s < sub.complex.num_simplices(); ++s)
        if (sub.complex.simplex(s).dim() == 4) ++top;
    CHECK(top == 16);
    CHECK(sub.complex.validate(16, 5).ok());
    CHECK(sub.t0 > 0);  // measured, not guaranteed, above dim 3
}

TEST_CASE("grid fixtures validate") {
    CHECK(grid2d(3, 42).validate(8, 1).ok());
    CHECK(grid3d(1, 1, 1, 42).validate(6, 1).ok());
}
