#pragma once

#include "polypush/errors.hpp"
#include "polypush/geometry.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polypush {

struct Simplex {
    std::vector<int> vertices;  // sorted global vertex ids
    Vec barycenter;
    double diameter = 0;
    double radius = std::numeric_limits<double>::quiet_NaN();     // NaN for dim 0
    double thickness = std::numeric_limits<double>::quiet_NaN();  // radius/diameter
    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

struct BarycentricCoords {
    int carrier = -1;  // the unique simplex whose interior contains the point
    Vec weights;       // strictly positive, over the carrier's vertices
};

enum class Incidence { faces, proper_faces, star, closed_star, link };

struct BuildReport {
    std::vector<std::vector<int>> added_faces;  // faces inserted by closure
    bool q_closed_under_faces = true;           // input Q needed closure?
};

struct ValidationIssue {
    std::string kind;  // missing-face | interior-overlap | dependent-vertices | q-not-closed
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Builds a face-closed complex from raw input. q_input indexes into the
    // raw `simplices` list; Q is closed under faces on load. The simplex table
    // is reindexed into a canonical order (by dimension, then vertex tuple) so
    // ids are deterministic.
    static SimplicialComplex build(std::vector<Vec> vertices,
                                   const std::vector<std::vector<int>>& simplices,
                                   const std::vector<int>& q_input = {},
                                   BuildReport* report = nullptr);

    int num_vertices() const { return static_cast<int>(verts_.size()); }
    int num_simplices() const { return static_cast<int>(simps_.size()); }
    int ambient_dim() const { return verts_.empty() ? 0 : static_cast<int>(verts_[0].size()); }
    const Vec& vertex(int v) const { return verts_[v]; }
    const Simplex& simplex(int s) const { return simps_[s]; }
    bool in_q(int s) const { return q_[s] != 0; }
    std::vector<int> q_simplices() const;

    int dim() const { return dim_; }
    int q_dim() const { return q_dim_; }
    double max_simplex_diameter() const { return max_diam_; }
    double polytope_diameter() const { return poly_diam_; }
    double tol_membership() const { return tol::membership_rel * poly_diam_; }

    // -1 if no simplex has this (unsorted ok) vertex set.
    int find(std::vector<int> key) const;

    std::vector<Vec> points_of(int s) const;

    // Incidence queries. `star` lists the simplices whose interiors compose
    // St sigma (the cofaces of sigma, including sigma); `closed_star` adds all
    // their faces; `link` is the part of the closed star not meeting sigma.
    std::vector<int> relation(int s, Incidence rel) const;

    // Face of sigma spanned by the vertices not in tau (tau a proper face).
    int opposite_face(int sigma, int tau) const;

    // Point location: the unique simplex whose interior contains x, with
    // strictly positive weights. Throws validation_error if x is not in |P|
    // (message carries a nearest-simplex diagnostic).
    BarycentricCoords barycentric(const Vec& x) const;
    bool try_barycentric(const Vec& x, BarycentricCoords* out) const;

    // sigma(x) of the pushing construction: the normalized projection of x
    // onto the vertices of sigma, using global barycentric coordinates.
    // Requires positive total weight on sigma's vertices.
    Vec sigma_point(int sigma, const BarycentricCoords& bc) const;

    // Sum of x's barycentric weights on sigma's vertices (mu in the pushing
    // construction when x lies in the closed star).
    double mu_weight(int sigma, const BarycentricCoords& bc) const;

    struct RayHit {
        double t0;
        Vec point;
        int hit_face;
    };
    // Unique boundary intersection of the ray z + t*dir, z interior to sigma.
    RayHit ray_boundary(int sigma, const Vec& z, const Vec& dir) const;

    ValidationReport validate(int samples_per_pair = 32, std::uint64_t seed = 12345) const;

    // Uniform interior point of simplex s.
    Vec sample_interior(int s, Rng& rng) const;

private:
    std::vector<Vec> verts_;
    std::vector<Simplex> simps_;
    std::map<std::vector<int>, int> index_;
    std::vector<char> q_;
    std::vector<std::vector<int>> cofaces_;  // per simplex: ids of cofaces (incl. itself)
    std::vector<std::vector<int>> faces_;    // per simplex: ids of faces (incl. itself)
    std::vector<Vec> bbox_lo_, bbox_hi_;     // point-location prefilter
    int dim_ = -1;
    int q_dim_ = -1;
    double max_diam_ = 0;
    double poly_diam_ = 0;

    void finalize_geometry();
    friend struct SubdivisionBuilder;
};

struct SubdivisionResult {
    SimplicialComplex complex;
    std::vector<int> parent;  // per new simplex: old simplex containing it
    double t0 = 0;            // measured min thickness over dims >= 1
    int rounds = 0;
};

// Edgewise (Freudenthal/Kuhn-style) refinement, iterated until every simplex
// has diameter < eps. Q is carried to the corresponding subdivision of Q.
SubdivisionResult subdivide(const SimplicialComplex& cx, double eps);

}  // namespace polypush
