#pragma once

#include "polypush/maps.hpp"
#include "polypush/measure.hpp"
#include "polypush/set_model.hpp"

#include <optional>

namespace polypush {

// Counts of partial simplices per dimension in Q, compared lexicographically
// with the highest dimension first.
struct RankVector {
    std::vector<long long> counts;  // counts[0] = m_q, ..., counts.back() = m_1

    bool operator<(const RankVector& o) const {
        return std::lexicographical_compare(counts.begin(), counts.end(), o.counts.begin(),
                                            o.counts.end());
    }
    bool operator==(const RankVector& o) const { return counts == o.counts; }
    bool zero() const {
        for (long long c : counts)
            if (c) return false;
        return true;
    }
};

struct Partials {
    std::vector<std::vector<int>> per_dim;  // per_dim[d] = partial d-simplices (sorted ids)
    RankVector rank;
};

// A simplex of Q is partial iff it carries interior samples and is not
// flagged full.
Partials detect_partials(const SimplicialComplex& cx, const SetModel& S);

struct PushRecord {
    int sigma = -1;
    Vec z0;
    ConeModel cone;
    RankVector rank_before, rank_after;
    double mass_in = 0;                  // interior mass pushed
    double mass_out = 0;                 // transported mass after the dim-a rule
    double magnification_empirical = 0;  // sum w lambda^a / sum w
    double magnification_bound = 0;      // face-wise integrand total / sum w
    double phi_used = std::numeric_limits<double>::infinity();
};

struct PushResult {
    SetModel after;
    PushRecord record;
};

// One push: clears Int sigma, moving interior samples to their radial images
// on Bd sigma with weights multiplied by lambda(y; z)^a (dropped to zero when
// the mass falls below dimension a). Samples outside sigma are unchanged.
PushResult push(const SimplicialComplex& cx, const SetModel& S, int sigma, const Vec& z);

struct TransportMap {
    std::vector<PushRecord> records;
};

// G = g_1 o g_2 o ... o g_m: evaluation applies the most recent push's map
// first, so each g_i acts on a point off S_i as in the recursion.
Vec transport_eval(const SimplicialComplex& cx, const TransportMap& G, const Vec& y);

struct RunStats {
    int pushes = 0;
    std::vector<double> per_push_magnification;
    double initial_measure = 0;
    double final_measure = 0;
};

struct RunResult {
    SetModel s_tilde;
    TransportMap transport;
    RunStats stats;
};

// The full recursion: repeatedly pushes a maximal-dimension partial simplex
// (lowest id first) from a selected z0 until no partial simplices remain.
RunResult run(const SimplicialComplex& cx, const SetModel& S, double a, std::uint64_t seed,
              std::optional<double> gamma_override = {});

struct NearResult {
    SimplicialComplex refined;
    std::vector<int> parent;
    SetModel rebased_input;  // the input set model relocated on the refinement
    SetModel s_tilde;
    TransportMap transport;
    RunStats stats;
    double eps = 0;
};

// Near-approximation pipeline: subdivide until diameters < eps/2, take Q =
// closure of the simplices meeting S, then run the recursion there.
NearResult approximate_near(const SimplicialComplex& cx, const SetModel& S, double a, double eps,
                            std::uint64_t seed);

// Deformation-retract chain: E_i = union of the push segments from stage i
// on, ending at S_tilde; F(i, y, t) walks stage i's segments.
struct RetractChain {
    struct Segment {
        Vec a, b;
    };
    const SimplicialComplex* cx = nullptr;
    TransportMap transport;
    std::vector<std::vector<Segment>> levels;  // levels[i] = D_i segments
    std::vector<Vec> terminal_points;          // final sample positions
    std::vector<int> terminal_full;            // final full flags

    int stages() const { return static_cast<int>(levels.size()); }
    // h_i: radial image for points interior to sigma_i, identity elsewhere.
    Vec h(int i, const Vec& y) const;
    bool in_E(int i, const Vec& y, double tol) const;
    Vec F(int i, const Vec& y, double t) const;
};

RetractChain retract_chain(const SimplicialComplex& cx, const TransportMap& G, const SetModel& S0);

}  // namespace polypush
