#include "polypush/set_model.hpp"

#include "polypush/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polypush {

void SetModel::flag_full(const SimplicialComplex& cx, int s) {
    for (int f : cx.relation(s, Incidence::faces)) full.insert(f);
}

void SetModel::validate(const SimplicialComplex& cx) const {
    if (a < 0) throw validation_error("set model: a must be >= 0");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Sample& s = samples[i];
        std::ostringstream at;
        at << "sample " << i;
        if (s.carrier < 0 || s.carrier >= cx.num_simplices())
            throw validation_error(at.str() + ": unknown carrier");
        if (!(s.weight >= 0) || !std::isfinite(s.weight))
            throw validation_error(at.str() + ": bad weight");
        if (!s.point.allFinite() || s.point.size() != cx.ambient_dim())
            throw validation_error(at.str() + ": bad point");
        auto ac = affine_coords(cx.points_of(s.carrier), s.point);
        if (ac.residual > cx.tol_membership() || ac.weights.minCoeff() <= tol::interior)
            throw validation_error(at.str() + ": point not interior to declared carrier");
    }
    for (int f : full) {
        if (f < 0 || f >= cx.num_simplices())
            throw validation_error("full flag references unknown simplex");
        for (int g : cx.relation(f, Incidence::faces))
            if (!full.count(g))
                throw validation_error("full flags not face-closed at simplex " + std::to_string(f));
    }
}

namespace {

double measure_impl(const SimplicialComplex& cx, const SetModel& sm, bool q_only) {
    const bool counting = sm.a == 0.0;
    double total = 0;
    for (const Sample& s : sm.samples) {
        if (q_only && !cx.in_q(s.carrier)) continue;
        if (counting)
            total += 1.0;
        else if (cx.simplex(s.carrier).dim() >= sm.a)
            total += s.weight;
    }
    const double a_int = std::round(sm.a);
    const bool integer_a = std::abs(sm.a - a_int) < 1e-12;
    for (int f : sm.full) {
        if (q_only && !cx.in_q(f)) continue;
        int d = cx.simplex(f).dim();
        if (counting) {
            if (d == 0) total += 1.0;
        } else if (integer_a && d == static_cast<int>(a_int)) {
            total += simplex_volume(cx.points_of(f));
        }
    }
    return total;
}

}  // namespace

double SetModel::measure_q(const SimplicialComplex& cx) const { return measure_impl(cx, *this, true); }
double SetModel::measure_total(const SimplicialComplex& cx) const {
    return measure_impl(cx, *this, false);
}

double SetModel::distance_to(const SimplicialComplex& cx, const Vec& y) const {
    double best = std::numeric_limits<double>::infinity();
    for (const Sample& s : samples) best = std::min(best, (y - s.point).norm());
    for (int f : full) best = std::min(best, point_to_simplex_distance(cx.points_of(f), y));
    return best;
}

int SetModel::normalize_vertex_samples(const SimplicialComplex& cx) {
    int converted = 0;
    std::vector<Sample> kept;
    for (Sample& s : samples) {
        if (cx.simplex(s.carrier).dim() == 0) {
            full.insert(s.carrier);
            ++converted;
        } else {
            kept.push_back(std::move(s));
        }
    }
    samples = std::move(kept);
    return converted;
}

}  // namespace polypush
