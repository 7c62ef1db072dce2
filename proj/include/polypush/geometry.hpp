#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace polypush {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Numeric tolerances. tol_membership is relative to the polytope diameter and
// lives on SimplicialComplex.
namespace tol {
inline constexpr double rank = 1e-9;        // relative pivot threshold for rank tests
inline constexpr double bary = 1e-9;        // barycentric reconstruction / nonnegativity
inline constexpr double interior = 1e-10;   // strict-interior weight threshold
inline constexpr double cone_angle = 1e-6;  // radians, finite-sample cone membership
inline constexpr double membership_rel = 1e-8;
inline constexpr double apex_gap_rel = 1e-3;  // delta_z = apex_gap_rel * diam(sigma)
}  // namespace tol

// True iff v(1)-v(0), ..., v(n)-v(0) are linearly independent, decided by a
// rank test with relative pivot tolerance tol_rank.
bool geometrically_independent(const std::vector<Vec>& points, double tol_rank = tol::rank);

struct AffineCoords {
    Vec weights;      // one per vertex, sums to 1
    double residual;  // ||sum w_i v_i - x||
};

// Affine (barycentric) coordinates of x w.r.t. a vertex list, by least squares.
// Weights sum to 1; residual measures distance from x to the affine hull.
AffineCoords affine_coords(const std::vector<Vec>& verts, const Vec& x);

// Euclidean distance from p to the convex hull of verts.
double point_to_simplex_distance(const std::vector<Vec>& verts, const Vec& p);

// k-volume of the simplex spanned by verts (k = verts.size()-1) via the Gram
// determinant.
double simplex_volume(const std::vector<Vec>& verts);

// Vertices of the expanded simplex chi': keeps the vertices of the face xi and
// maps each remaining vertex v to 2v - barycenter(chi). xi is given by local
// vertex indices into chi.
std::vector<Vec> expand_simplex(const std::vector<Vec>& chi, const std::vector<int>& xi_local);

// Deterministic RNG utilities. We avoid std distributions so that a fixed seed
// produces identical bytes across runs and platforms.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    // splitmix64
    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double next_double() {  // uniform in [0,1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    Rng fork(std::uint64_t stream) const {
        Rng r(state ^ (0x9e3779b97f4a7c15ULL * (stream + 0x632be59bd9b4e019ULL)));
        r.next_u64();
        return r;
    }
};

// Uniform barycentric weights (flat Dirichlet), giving a uniform point of the
// simplex under the Lebesgue measure of its affine hull.
Vec uniform_barycentric(int n_vertices, Rng& rng);

}  // namespace polypush
