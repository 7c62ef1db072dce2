#pragma once

#include "polypush/complex.hpp"
#include "polypush/set_model.hpp"

#include <optional>

namespace polypush {

// k(beta, delta, t) = exp(-beta(delta+t)/(1-beta)) for beta < 1; 0 when
// beta = 1 and delta + t > 0. (1, 0, 0) is outside the domain.
double k_fn(double beta, double delta, double t);

struct BHbar {
    double b = 0;       // in [0,1]; 1 iff y on Bd sigma, 0 iff y = z
    Vec hbar;           // radial boundary image
    int hit_face = -1;  // face whose interior contains hbar
};

// Solves b*hbar + (1-b)*z = y with hbar on Bd sigma. At y = z, b = 0 and hbar
// is the fixed convention: the boundary point in the direction of sigma's
// first vertex.
BHbar b_and_hbar(const SimplicialComplex& cx, int sigma, const Vec& z, const Vec& y);

// Orthonormal frame for the pair (sigma, tau), tau an (n-1)-face: tau lies in
// {last coordinate = 0} and the vertex opposite tau has positive last
// coordinate.
struct FaceFrame {
    Vec origin;
    Mat basis;  // columns: n-1 tau directions, then the apex normal
    double last_coord(const Vec& ambient) const {
        return basis.col(basis.cols() - 1).dot(ambient - origin);
    }
};

FaceFrame face_frame(const SimplicialComplex& cx, int sigma, int tau);

// h_{z,tau}(y) = z_n/(z_n - y_n) (y - z) + z when y lies in zeta(z; tau);
// nullopt otherwise (including y = z).
std::optional<Vec> h_to_face(const SimplicialComplex& cx, int sigma, int tau, const Vec& z,
                             const Vec& y);
// Same with a caller-cached frame (bulk evaluation).
std::optional<Vec> h_to_face(const SimplicialComplex& cx, int sigma, int tau,
                             const FaceFrame& frame, const Vec& z, const Vec& y);

// Largest singular value of Dh_{z,tau} at y: |z - h(y)| / (z_n - y_n).
// Throws domain_error if y is not in zeta(z; tau).
double lambda_eig(const SimplicialComplex& cx, int sigma, int tau, const Vec& z, const Vec& y);

// Finite-sample cone C_z: rays from the apex through the points of A = S cap
// sigma, clipped to sigma. Membership and distances use the segment bundle
// [z, hbar(p)].
struct ConeModel {
    int sigma = -1;
    Vec apex;
    std::vector<int> sample_ids;      // indices into the SetModel's sample list
    std::vector<Vec> anchors;         // the A sample points
    std::vector<Vec> images;          // hbar(A)
    std::vector<int> image_carriers;  // face holding each image
    Vec apex_image;                   // recorded hbar(z) convention
    int apex_image_face = -1;

    bool contains(const Vec& y) const;
    double distance_to(const Vec& p) const;  // dist(p, C)
    // dist(hbar(y), C); diam(sigma) at the apex by convention.
    double delta_bar(const SimplicialComplex& cx, const Vec& y) const;
};

// Builds the cone from every sample of S lying in sigma (carrier a face of
// sigma). Throws numeric_error if the apex is within the admissibility gap of
// a sample.
ConeModel cone_build(const SimplicialComplex& cx, int sigma, const Vec& z, const SetModel& S);

// s(y, t) = (1 - f) hbar(y) + f z with f = k(b(y), delta_bar(y), t); fixes
// Bd sigma pointwise. Throws domain_error at the excluded corner
// (C cap Bd sigma) x {0}.
Vec s_map(const SimplicialComplex& cx, const ConeModel& cone, const Vec& y, double t);

// Inverse of y -> s(y, t) on Int sigma for t > 0, via monotone bisection of
// k(beta, delta, t) = 1 - b(x) along the ray of x.
Vec s_hat_inverse(const SimplicialComplex& cx, const ConeModel& cone, const Vec& x, double t);

// The pushing map g on |P| minus (C cap Bd sigma).
Vec g_map(const SimplicialComplex& cx, const ConeModel& cone, const Vec& y);

}  // namespace polypush
