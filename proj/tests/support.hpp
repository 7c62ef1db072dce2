#pragma once

#include "polypush/json_io.hpp"
#include "polypush/pushout.hpp"

#include <vector>

namespace testsupport {

using namespace polypush;

inline Vec v2(double x, double y) {
    Vec v(2);
    v << x, y;
    return v;
}

inline Vec v3(double x, double y, double z) {
    Vec v(3);
    v << x, y, z;
    return v;
}

// Unit right triangle (0,0), (1,0), (0,1) with all faces; Q = everything.
SimplicialComplex unit_triangle();

// Two triangles sharing the edge (1,0)-(0,1); Q = everything.
SimplicialComplex two_triangles();

// One tetrahedron with all faces; Q = everything.
SimplicialComplex tetrahedron();

// Jittered k x k triangulated unit square; Q = everything. Always valid
// (jitter shrinks until validation passes).
SimplicialComplex grid2d(int k, std::uint64_t seed);

// Jittered Kuhn-triangulated unit cube grid (kx x ky x kz cells, 6 tets per
// cell); Q = everything.
SimplicialComplex grid3d(int kx, int ky, int kz, std::uint64_t seed);

// Random set model: n_samples interior samples on random Q simplices of
// dim >= 1, weights in (0,1]; optionally one full edge (with faces).
SetModel random_set_model(const SimplicialComplex& cx, int n_samples, double a,
                          std::uint64_t seed, bool with_full_edge = false);

}  // namespace testsupport
