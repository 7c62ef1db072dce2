#pragma once

#include "polypush/complex.hpp"

#include <set>

namespace polypush {

struct Sample {
    Vec point;
    int carrier = -1;    // simplex whose interior holds the point
    double weight = 0;   // H^a mass carried by the sample
};

// Finite model of a closed set S: weighted samples plus "full-simplex" flags
// (Int rho contained in S). Flags are kept face-closed.
struct SetModel {
    double a = 0;
    std::vector<Sample> samples;
    std::set<int> full;

    bool is_full(int s) const { return full.count(s) != 0; }

    // Flags a simplex and all its faces.
    void flag_full(const SimplicialComplex& cx, int s);

    // Throws validation_error naming the offending sample index.
    void validate(const SimplicialComplex& cx) const;

    // Weighted H^a estimate of S intersected with |Q|: sample weights on
    // carriers of dimension >= a, plus the a-volume of full simplices of
    // dimension exactly a (integer a). For a = 0 it is a count.
    double measure_q(const SimplicialComplex& cx) const;

    // Same accounting over all of |P|.
    double measure_total(const SimplicialComplex& cx) const;

    // Distance from a point to the modeled set (sample points and full
    // simplices).
    double distance_to(const SimplicialComplex& cx, const Vec& y) const;

    // Converts samples whose carrier is a vertex into full flags on that
    // vertex. Returns the number converted.
    int normalize_vertex_samples(const SimplicialComplex& cx);
};

}  // namespace polypush
