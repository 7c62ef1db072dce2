#pragma once

#include "polypush/maps.hpp"

#include <optional>
#include <string>

namespace polypush {

struct MeasureEstimate {
    double s = 0;
    double value = 0;
    std::vector<double> delta_ladder;
    std::vector<double> ladder_values;
    std::string method;  // covering | exact-count | weighted-sum
};

// Volume of the unit ball in R^s via the Gamma-function formula; used for any
// s >= 0.
double omega_s(double s);

// s = 0: exact count of distinct points. s > 0: greedy ball-covering estimate
// across the delta ladder (default {d/8, d/16, d/32}, d = sample diameter),
// reporting the ladder supremum.
MeasureEstimate hausdorff_points(const std::vector<Vec>& pts, double s,
                                 std::vector<double> ladder = {});

// Weighted-sum estimate of H^a(S cap |Q|) for a SetModel (weights carry the
// mass; full simplices of dimension a contribute their a-volume).
MeasureEstimate hausdorff_setmodel(const SimplicialComplex& cx, const SetModel& S);

// Concentric shrunken copy of a simplex about its barycenter; gamma in
// (1/(2(n+1)), 1).
std::vector<Vec> sigma_gamma(const std::vector<Vec>& verts, double gamma);

struct MagnificationPair {
    double bound = 0;      // sum w * (diam sigma / (z_n - y_n))^a
    double empirical = 0;  // sum w * lambda(y; z)^a
};

// Both sides of the image-measure inequality for the samples of A restricted
// to Int sigma cap zeta(z; tau).
MagnificationPair magnification_bound(const SimplicialComplex& cx, int sigma, int tau,
                                      const Vec& z, const std::vector<std::pair<Vec, double>>& A,
                                      double a);

struct PhiConstants {
    double phi_tilde = 0;
    double phi = 0;
    double gamma_star = 0;
};

// phi_tilde(a, r, t, gamma) = 2^(2r-a-2) r (r+1)^(r-a-1) (r+2) /
// ((1-gamma)^(r-1) gamma^(a+1) t^a); phi is its value at gamma* = (a+1)/(r+a).
PhiConstants phi_constants(double a, int r, double t, std::optional<double> gamma = {});

// Number of filtrations V_0 strictly increasing to V_j with |V_0| = a+1 and
// |V_j| = i+1 (ordered set partitions of the i-a added elements).
long long filtration_count(int j, int i, int a);

struct ConstantsBundle {
    double a = 0;
    int q = 0;
    bool t_min_defined = false;
    double t_min = std::numeric_limits<double>::quiet_NaN();
    double gamma_star = std::numeric_limits<double>::quiet_NaN();
    double phi = std::numeric_limits<double>::quiet_NaN();
    double psi = 1;
    double K1 = 1;
    double K2 = 1;
    double K = 1;
};

// The magnification constants of the Q subcomplex of cx for dimension a.
ConstantsBundle K_constants(const SimplicialComplex& cx, double a);

struct Z0Result {
    Vec z0;
    int draws = 0;          // candidates examined
    int accepted_index = 0; // index of the accepted candidate
    double phi = std::numeric_limits<double>::infinity();
    double gamma = 0;
    bool quantitative = false;  // face-wise bound active (n > a, mass > 0)
};

// Draws candidates uniformly in sigma_gamma (gamma = gamma*), rejects
// apex-inadmissible ones, and accepts the first whose face-wise weighted
// integrand is at most phi times the interior mass, for every (n-1)-face.
// When the bound is vacuous (n <= a, zero interior mass, or non-integer a)
// any admissible interior point is returned.
Z0Result select_z0(const SimplicialComplex& cx, int sigma, const SetModel& S, double a,
                   std::uint64_t seed, std::optional<double> phi_override = {},
                   std::optional<double> gamma_override = {});

}  // namespace polypush
