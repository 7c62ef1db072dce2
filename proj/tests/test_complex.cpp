#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <cmath>
#include <set>

using namespace testsupport;

TEST_CASE("geometric independence rank test") {
    CHECK(geometrically_independent({v2(0, 0), v2(1, 0), v2(0, 1)}));
    CHECK_FALSE(geometrically_independent({v2(0, 0), v2(1, 1), v2(2, 2)}));
    CHECK_FALSE(geometrically_independent(
        {v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 0)}));  // rank 2 < 3
    CHECK(geometrically_independent({v2(0.5, 0.5)}));
    CHECK_THROWS_AS(geometrically_independent({}), std::invalid_argument);
}

TEST_CASE("barycentric point location") {
    auto cx = unit_triangle();
    int tri = cx.find({0, 1, 2});

    auto bc = cx.barycentric(v2(1.0 / 3, 1.0 / 3));
    CHECK(bc.carrier == tri);
    for (int j = 0; j < 3; ++j) CHECK(bc.weights[j] == doctest::Approx(1.0 / 3));

    auto at_vertex = cx.barycentric(v2(1, 0));
    CHECK(at_vertex.carrier == cx.find({1}));
    CHECK(at_vertex.weights[0] == doctest::Approx(1.0));

    auto on_edge = cx.barycentric(v2(0.5, 0));
    CHECK(on_edge.carrier == cx.find({0, 1}));
    CHECK(on_edge.weights[0] == doctest::Approx(0.5));
    CHECK(on_edge.weights[1] == doctest::Approx(0.5));

    CHECK_THROWS_AS(cx.barycentric(v2(2, 2)), validation_error);
    try {
        cx.barycentric(v2(2, 2));
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("nearest simplex") != std::string::npos);
    }
}

TEST_CASE("incidence relations") {
    auto cx = unit_triangle();
    int tri = cx.find({0, 1, 2});
    auto cs = cx.relation(tri, Incidence::closed_star);
    CHECK(cs.size() == 7);  // triangle + 3 edges + 3 vertices
    CHECK(cx.relation(tri, Incidence::link).empty());

    auto two = two_triangles();
    int shared = two.find({1, 2});
    auto link = two.relation(shared, Incidence::link);
    std::set<int> link_set(link.begin(), link.end());
    CHECK(link_set == std::set<int>{two.find({0}), two.find({3})});
    auto closed = two.relation(shared, Incidence::closed_star);
    CHECK(closed.size() == two.num_simplices());  // both triangles and all faces

    int v0 = two.find({0});
    auto vlink = two.relation(v0, Incidence::link);
    std::set<int> vlink_set(vlink.begin(), vlink.end());
    CHECK(vlink_set.count(two.find({1, 2})) == 1);

    // Boundary vertex of a single triangle: the link is the opposite edge.
    auto one = unit_triangle();
    auto opp = one.relation(one.find({0}), Incidence::link);
    std::set<int> opp_set(opp.begin(), opp.end());
    CHECK(opp_set == std::set<int>{one.find({1}), one.find({2}), one.find({1, 2})});

    CHECK_THROWS_AS(cx.relation(99, Incidence::faces), std::invalid_argument);
}

TEST_CASE("simplex metrics") {
    auto cx = unit_triangle();
    CHECK(cx.simplex(cx.find({0, 1, 2})).diameter == doctest::Approx(std::sqrt(2.0)));

    auto eq = SimplicialComplex::build({v2(0, 0), v2(1, 0), v2(0.5, std::sqrt(3.0) / 2)},
                                       {{0, 1, 2}}, {});
    const auto& tri = eq.simplex(eq.find({0, 1, 2}));
    CHECK(tri.radius == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))));
    CHECK(tri.thickness == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))));

    auto seg = SimplicialComplex::build({v2(0, 0), v2(2, 0)}, {{0, 1}}, {});
    const auto& e = seg.simplex(seg.find({0, 1}));
    CHECK(e.barycenter[0] == doctest::Approx(1.0));
    CHECK(e.radius == doctest::Approx(1.0));
    CHECK(e.thickness == doctest::Approx(0.5));

    const auto& vert = seg.simplex(seg.find({0}));
    CHECK(vert.diameter == 0.0);
    CHECK(std::isnan(vert.radius));
    CHECK(std::isnan(vert.thickness));
}

TEST_CASE("ray boundary intersection") {
    auto cx = unit_triangle();
    int tri = cx.find({0, 1, 2});
    Vec z = v2(0.25, 0.25);

    auto down = cx.ray_boundary(tri, z, v2(0, -1));
    CHECK(down.point[0] == doctest::Approx(0.25));
    CHECK(down.point[1] == doctest::Approx(0.0));
    CHECK(down.hit_face == cx.find({0, 1}));

    auto diag = cx.ray_boundary(tri, z, v2(1, 1));
    CHECK(diag.point[0] == doctest::Approx(0.5));
    CHECK(diag.point[1] == doctest::Approx(0.5));
    CHECK(diag.hit_face == cx.find({1, 2}));

    Vec z2 = v2(1.0 / 3, 1.0 / 3);
    auto corner = cx.ray_boundary(tri, z2, v2(0, 0) - z2);
    CHECK(corner.hit_face == cx.find({0}));

    CHECK_THROWS_AS(cx.ray_boundary(tri, v2(2, 2), v2(1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(cx.ray_boundary(tri, z, v2(0, 0)), std::invalid_argument);

    // Uniqueness on random interior points and directions.
    Rng rng(99);
    for (int i = 0; i < 1000; ++i) {
        Vec y = cx.sample_interior(tri, rng);
        Vec dir = v2(rng.next_double() - 0.5, rng.next_double() - 0.5);
        if (dir.norm() < 1e-3) continue;
        auto hit = cx.ray_boundary(tri, y, dir);
        CHECK(hit.t0 > 0);
        auto bc = affine_coords(cx.points_of(tri), hit.point);
        CHECK(bc.residual <= 1e-9);
        CHECK(bc.weights.minCoeff() >= -1e-9);
        // On the boundary: at least one vanishing weight.
        CHECK(bc.weights.minCoeff() <= 1e-9);
    }
}

TEST_CASE("opposite face") {
    auto cx = unit_triangle();
    int tri = cx.find({0, 1, 2});
    CHECK(cx.opposite_face(tri, cx.find({0})) == cx.find({1, 2}));
    CHECK(cx.opposite_face(tri, cx.find({0, 1})) == cx.find({2}));
    auto tet = tetrahedron();
    int t = tet.find({0, 1, 2, 3});
    CHECK(tet.opposite_face(t, tet.find({0, 1})) == tet.find({2, 3}));
    CHECK_THROWS_AS(cx.opposite_face(tri, tri), std::invalid_argument);
}

TEST_CASE("expand simplex") {
    // Segment (0,0)-(1,0), xi = first vertex.
    auto out = expand_simplex({v2(0, 0), v2(1, 0)}, {0});
    CHECK(out[0] == v2(0, 0));
    CHECK(out[1][0] == doctest::Approx(1.5));
    CHECK(out[1][1] == doctest::Approx(0.0));

    // Triangle, xi = one edge: opposite vertex goes to 2v - barycenter and the
    // original vertex becomes interior to chi'.
    std::vector<Vec> tri = {v2(0, 0), v2(1, 0), v2(0, 1)};
    auto big = expand_simplex(tri, {0, 1});
    CHECK(geometrically_independent(big));
    auto ac = affine_coords(big, tri[2]);
    CHECK(ac.residual <= 1e-12);
    CHECK(ac.weights.minCoeff() > 0);

    // Containment chi subset chi', sampled.
    Rng rng(7);
    for (int rep = 0; rep < 100; ++rep) {
        Vec w = uniform_barycentric(3, rng);
        Vec p = w[0] * tri[0] + w[1] * tri[1] + w[2] * tri[2];
        auto c = affine_coords(big, p);
        CHECK(c.residual <= 1e-12);
        CHECK(c.weights.minCoeff() >= -1e-12);
    }

    CHECK_THROWS_AS(expand_simplex(tri, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("validation report") {
    CHECK(two_triangles().validate().ok());

    // T-junction: a long edge overlapping two half edges.
    auto tj = SimplicialComplex::build(
        {v2(0, 0), v2(2, 0), v2(1, 1), v2(1, 0), v2(0.5, -1)}, {{0, 1, 2}, {0, 3, 4}}, {});
    auto rep = tj.validate();
    bool overlap = false;
    for (const auto& i : rep.issues) overlap |= (i.kind == "interior-overlap");
    CHECK(overlap);

    // A stray vertex sitting inside an edge's interior.
    auto stray = SimplicialComplex::build({v2(0, 0), v2(2, 0), v2(1, 0)}, {{0, 1}, {2}}, {});
    bool vertex_overlap = false;
    for (const auto& i : stray.validate().issues) vertex_overlap |= (i.kind == "interior-overlap");
    CHECK(vertex_overlap);

    // Loader auto-closes missing faces and reports them.
    BuildReport br;
    auto cx = SimplicialComplex::build({v2(0, 0), v2(1, 0), v2(0, 1)}, {{0, 1, 2}}, {}, &br);
    CHECK(br.added_faces.size() == 6);  // 3 edges + 3 vertices
    CHECK(cx.validate().ok());

    // Refined complexes stay clean (faces of cofaces must not be flagged).
    auto fine = subdivide(two_triangles(), 0.2);
    CHECK(fine.complex.validate(8, 3).ok());
}

TEST_CASE("carrier uniqueness and reconstruction") {
    auto cx = two_triangles();
    Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
        int top = (i % 2 == 0) ? cx.find({0, 1, 2}) : cx.find({1, 2, 3});
        Vec x = cx.sample_interior(top, rng);
        auto bc = cx.barycentric(x);
        // Reconstruction within tol_bary.
        Vec rec = Vec::Zero(2);
        const auto& verts = cx.simplex(bc.carrier).vertices;
        for (int j = 0; j < bc.weights.size(); ++j) rec += bc.weights[j] * cx.vertex(verts[j]);
        CHECK((rec - x).norm() <= 1e-9);
        // Exactly one simplex reports strictly-interior membership.
        int strict = 0;
        for (int s = 0; s < cx.num_simplices(); ++s) {
            auto ac = affine_coords(cx.points_of(s), x);
            if (ac.residual <= cx.tol_membership() && ac.weights.minCoeff() > tol::interior)
                ++strict;
        }
        CHECK(strict == 1);
    }
}

TEST_CASE("barycentric map is empirically Lipschitz") {
    auto cx = two_triangles();
    // Global barycentric vector over all vertices.
    auto beta = [&](const Vec& x) {
        Vec full = Vec::Zero(cx.num_vertices());
        auto bc = cx.barycentric(x);
        const auto& verts = cx.simplex(bc.carrier).vertices;
        for (int j = 0; j < bc.weights.size(); ++j) full[verts[j]] = bc.weights[j];
        return full;
    };
    auto empirical_k = [&](int n_pairs, std::uint64_t seed) {
        Rng rng(seed);
        double kmax = 0;
        for (int i = 0; i < n_pairs; ++i) {
            int sa = (rng.next_u64() % 2 == 0) ? cx.find({0, 1, 2}) : cx.find({1, 2, 3});
            int sb = (rng.next_u64() % 2 == 0) ? cx.find({0, 1, 2}) : cx.find({1, 2, 3});
            Vec x = cx.sample_interior(sa, rng);
            Vec y = cx.sample_interior(sb, rng);
            double d = (x - y).norm();
            if (d < 1e-9) continue;
            kmax = std::max(kmax, (beta(x) - beta(y)).norm() / d);
        }
        return kmax;
    };
    double k1 = empirical_k(400, 5);
    double k2 = empirical_k(1600, 17);
    CHECK(k1 < 1e3);
    CHECK(k2 < 1e3);
    CHECK(k2 <= 4.0 * std::max(k1, 1.0));  // stable across sample sizes
}

TEST_CASE("reverse triangle bound via the shared-face projection") {
    auto cx = two_triangles();
    int rho = cx.find({0, 1, 2});
    int tau = cx.find({1, 2, 3});
    int shared = cx.find({1, 2});
    Rng rng(31);
    double worst = 0;
    for (int i = 0; i < 500; ++i) {
        Vec x = cx.sample_interior(rho, rng);
        Vec y = cx.sample_interior(tau, rng);
        // x~ and y~: the z0(x)-line construction lands at the normalized
        // projection onto the shared face.
        Vec xt = cx.sigma_point(shared, cx.barycentric(x));
        Vec yt = cx.sigma_point(shared, cx.barycentric(y));
        auto in_shared = [&](const Vec& p) {
            auto ac = affine_coords(cx.points_of(shared), p);
            return ac.residual <= 1e-9 && ac.weights.minCoeff() > 0;
        };
        CHECK(in_shared(xt));
        CHECK(in_shared(yt));
        double lhs = (x - xt).norm() + (xt - yt).norm() + (yt - y).norm();
        worst = std::max(worst, lhs / (x - y).norm());
    }
    CHECK(worst < 50.0);  // K_emp' bounded over samples
}
