#include "polypush/pushout.hpp"

#include "polypush/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace polypush {

Partials detect_partials(const SimplicialComplex& cx, const SetModel& S) {
    Partials out;
    const int q = std::max(cx.q_dim(), 0);
    out.per_dim.assign(q + 1, {});
    std::set<int> seen;
    for (const Sample& s : S.samples) {
        if (!cx.in_q(s.carrier)) continue;
        if (cx.simplex(s.carrier).dim() < 1) continue;  // no partial 0-simplices
        if (S.is_full(s.carrier)) continue;             // Int sigma inside S
        if (seen.insert(s.carrier).second) out.per_dim[cx.simplex(s.carrier).dim()].push_back(s.carrier);
    }
    for (auto& v : out.per_dim) std::sort(v.begin(), v.end());
    out.rank.counts.assign(q, 0);  // m_q .. m_1
    for (int d = q; d >= 1; --d)
        out.rank.counts[q - d] = static_cast<long long>(out.per_dim[d].size());
    return out;
}

PushResult push(const SimplicialComplex& cx, const SetModel& S, int sigma, const Vec& z) {
    Partials before = detect_partials(cx, S);
    const int n = cx.simplex(sigma).dim();
    bool is_partial = false;
    for (int id : before.per_dim[n]) is_partial |= (id == sigma);
    if (!is_partial) throw std::invalid_argument("push: sigma is not a partial simplex of S");
    for (int d = n + 1; d < static_cast<int>(before.per_dim.size()); ++d)
        if (!before.per_dim[d].empty())
            throw std::invalid_argument("push: sigma is not of maximal partial dimension");

    auto zc = affine_coords(cx.points_of(sigma), z);
    if (zc.residual > cx.tol_membership() || zc.weights.minCoeff() <= tol::interior)
        throw std::invalid_argument("push: z must be interior to sigma");

    PushResult out;
    out.record.sigma = sigma;
    out.record.z0 = z;
    out.record.cone = cone_build(cx, sigma, z, S);  // apex-too-close error raised here
    out.record.rank_before = before.rank;

    // Deterministic tau* per hit face: lowest-id (n-1)-face containing it.
    std::vector<int> tau_faces;
    for (int f : cx.relation(sigma, Incidence::proper_faces))
        if (cx.simplex(f).dim() == n - 1) tau_faces.push_back(f);
    auto tau_star = [&](int hit_face) {
        const auto& hv = cx.simplex(hit_face).vertices;
        for (int tf : tau_faces) {
            const auto& tv = cx.simplex(tf).vertices;
            if (std::includes(tv.begin(), tv.end(), hv.begin(), hv.end())) return tf;
        }
        throw numeric_error("push: hit face not contained in any (n-1)-face");
    };

    const double a = S.a;
    out.after = S;
    const ConeModel& cone = out.record.cone;
    for (std::size_t k = 0; k < cone.sample_ids.size(); ++k) {
        Sample& smp = out.after.samples[cone.sample_ids[k]];
        if (smp.carrier != sigma) continue;  // hbar is the identity on Bd sigma
        const int tf = tau_star(cone.image_carriers[k]);
        const double lam = lambda_eig(cx, sigma, tf, z, smp.point);
        out.record.mass_in += smp.weight;
        out.record.magnification_empirical += smp.weight * std::pow(lam, a);
        const bool keeps_mass = (n > a) && (cx.simplex(cone.image_carriers[k]).dim() >= a);
        const double new_w = keeps_mass ? smp.weight * std::pow(lam, a) : 0.0;
        out.record.mass_out += new_w;
        smp.point = cone.images[k];
        smp.carrier = cone.image_carriers[k];
        smp.weight = new_w;
    }
    // Face-wise integrand totals (the quantity select_z0 bounded by phi).
    std::vector<std::pair<Vec, double>> interior;
    for (std::size_t k = 0; k < cone.sample_ids.size(); ++k) {
        const Sample& smp = S.samples[cone.sample_ids[k]];
        if (smp.carrier == sigma) interior.emplace_back(smp.point, smp.weight);
    }
    for (int tf : tau_faces)
        out.record.magnification_bound += magnification_bound(cx, sigma, tf, z, interior, a).bound;
    if (out.record.mass_in > 0) {
        out.record.magnification_empirical /= out.record.mass_in;
        out.record.magnification_bound /= out.record.mass_in;
    }
    out.after.normalize_vertex_samples(cx);
    out.record.rank_after = detect_partials(cx, out.after).rank;
    return out;
}

Vec transport_eval(const SimplicialComplex& cx, const TransportMap& G, const Vec& y) {
    Vec cur = y;
    for (auto it = G.records.rbegin(); it != G.records.rend(); ++it)
        cur = g_map(cx, it->cone, cur);
    return cur;
}

RunResult run(const SimplicialComplex& cx, const SetModel& S, double a, std::uint64_t seed,
              std::optional<double> gamma_override) {
    RunResult out;
    out.s_tilde = S;
    out.s_tilde.a = a;
    out.s_tilde.normalize_vertex_samples(cx);
    out.s_tilde.validate(cx);
    out.stats.initial_measure = out.s_tilde.measure_q(cx);

    // phi(Q): the face-bound threshold shared by every push (monotone in r
    // and 1/t, so it dominates each simplex's own phi).
    std::optional<double> phi_q;
    if (cx.q_dim() >= 1) {
        ConstantsBundle kc = K_constants(cx, a);
        if (std::isfinite(kc.phi)) phi_q = kc.phi;
    }

    long long budget = 0;
    for (int s : cx.q_simplices())
        if (cx.simplex(s).dim() >= 1) ++budget;

    Rng base(seed);
    while (true) {
        Partials p = detect_partials(cx, out.s_tilde);
        if (p.rank.zero()) break;
        if (out.stats.pushes >= budget)
            throw numeric_error("run: push budget exceeded (rank monotonicity violated)");
        int sigma = -1;
        for (int d = static_cast<int>(p.per_dim.size()) - 1; d >= 1 && sigma < 0; --d)
            if (!p.per_dim[d].empty()) sigma = p.per_dim[d].front();  // lowest id first
        Z0Result z0 = select_z0(cx, sigma, out.s_tilde, a,
                                base.fork(static_cast<std::uint64_t>(out.stats.pushes)).state,
                                phi_q, gamma_override);
        PushResult pr = push(cx, out.s_tilde, sigma, z0.z0);
        pr.record.phi_used = z0.phi;
        if (!(pr.record.rank_after < pr.record.rank_before))
            throw numeric_error("run: rank did not strictly decrease");
        out.s_tilde = std::move(pr.after);
        out.stats.per_push_magnification.push_back(pr.record.magnification_empirical);
        out.transport.records.push_back(std::move(pr.record));
        ++out.stats.pushes;
    }
    out.stats.final_measure = out.s_tilde.measure_q(cx);
    return out;
}

NearResult approximate_near(const SimplicialComplex& cx, const SetModel& S, double a, double eps,
                            std::uint64_t seed) {
    if (!(eps > 0)) throw std::invalid_argument("approximate_near: eps must be positive");
    NearResult out;
    out.eps = eps;
    SubdivisionResult sub = subdivide(cx, 0.5 * eps);
    out.parent = sub.parent;

    // Relocate samples on the refinement and propagate full flags to the
    // children of flagged simplices.
    SetModel moved;
    moved.a = a;
    for (const Sample& s : S.samples) {
        Sample ns = s;
        BarycentricCoords bc = sub.complex.barycentric(s.point);
        ns.carrier = bc.carrier;
        moved.samples.push_back(std::move(ns));
    }
    for (int i = 0; i < sub.complex.num_simplices(); ++i)
        if (S.is_full(sub.parent[i])) moved.full.insert(i);

    // Q' = closure of the simplices meeting S: carriers of samples and their
    // cofaces, plus everything sharing a face with a full simplex.
    std::set<int> meets;
    for (const Sample& s : moved.samples)
        for (int c : sub.complex.relation(s.carrier, Incidence::star)) meets.insert(c);
    for (int f : moved.full) {
        for (int i = 0; i < sub.complex.num_simplices(); ++i) {
            const auto& av = sub.complex.simplex(i).vertices;
            const auto& bv = sub.complex.simplex(f).vertices;
            bool share = false;
            for (int v : bv)
                if (std::binary_search(av.begin(), av.end(), v)) {
                    share = true;
                    break;
                }
            if (share) meets.insert(i);
        }
    }
    std::set<int> q_ids;
    for (int m : meets)
        for (int f : sub.complex.relation(m, Incidence::faces)) q_ids.insert(f);

    // Rebuild the refined complex with the new Q.
    std::vector<Vec> verts;
    for (int v = 0; v < sub.complex.num_vertices(); ++v) verts.push_back(sub.complex.vertex(v));
    std::vector<std::vector<int>> simp_keys;
    std::vector<int> q_input;
    for (int i = 0; i < sub.complex.num_simplices(); ++i) {
        if (q_ids.count(i)) q_input.push_back(static_cast<int>(simp_keys.size()));
        simp_keys.push_back(sub.complex.simplex(i).vertices);
    }
    SimplicialComplex refined = SimplicialComplex::build(std::move(verts), simp_keys, q_input);
    // Ids are preserved: the table was already in canonical order.
    out.refined = std::move(refined);
    std::vector<int> parent_fixed(out.refined.num_simplices());
    for (std::size_t i = 0; i < simp_keys.size(); ++i)
        parent_fixed[out.refined.find(simp_keys[i])] = sub.parent[i];
    out.parent = std::move(parent_fixed);

    out.rebased_input = moved;
    RunResult rr = run(out.refined, moved, a, seed);
    out.s_tilde = std::move(rr.s_tilde);
    out.transport = std::move(rr.transport);
    out.stats = std::move(rr.stats);
    return out;
}

Vec RetractChain::h(int i, const Vec& y) const {
    const PushRecord& rec = transport.records[i];
    BarycentricCoords bc;
    if (!cx->try_barycentric(y, &bc)) return y;
    if (bc.carrier != rec.sigma) return y;
    return b_and_hbar(*cx, rec.sigma, rec.z0, y).hbar;
}

bool RetractChain::in_E(int i, const Vec& y, double tol) const {
    for (int j = i; j < stages(); ++j)
        for (const Segment& seg : levels[j]) {
            Vec d = seg.b - seg.a;
            double l2 = d.squaredNorm();
            double t = l2 == 0 ? 0.0 : std::clamp((y - seg.a).dot(d) / l2, 0.0, 1.0);
            if ((y - (seg.a + t * d)).norm() <= tol) return true;
        }
    for (const Vec& p : terminal_points)
        if ((y - p).norm() <= tol) return true;
    for (int f : terminal_full)
        if (point_to_simplex_distance(cx->points_of(f), y) <= tol) return true;
    return false;
}

Vec RetractChain::F(int i, const Vec& y, double t) const {
    if (i < 0 || i >= stages()) throw std::invalid_argument("retract: stage index out of range");
    const double tol = cx->tol_membership();
    if (in_E(i + 1, y, tol)) return y;
    if (!in_E(i, y, tol)) throw std::invalid_argument("retract: y not in E_i");
    return (1.0 - t) * y + t * h(i, y);
}

RetractChain retract_chain(const SimplicialComplex& cx, const TransportMap& G,
                           const SetModel& S0) {
    RetractChain chain;
    chain.cx = &cx;
    chain.transport = G;
    SetModel cur = S0;
    cur.normalize_vertex_samples(cx);
    for (const PushRecord& rec : G.records) {
        std::vector<RetractChain::Segment> segs;
        SetModel next = cur;
        for (std::size_t k = 0; k < cur.samples.size(); ++k) {
            const Sample& s = cur.samples[k];
            if (s.carrier == rec.sigma) {
                auto bh = b_and_hbar(cx, rec.sigma, rec.z0, s.point);
                segs.push_back({s.point, bh.hbar});
                next.samples[k].point = bh.hbar;
                next.samples[k].carrier = bh.hit_face;
            } else {
                segs.push_back({s.point, s.point});  // trivial segment
            }
        }
        next.normalize_vertex_samples(cx);
        chain.levels.push_back(std::move(segs));
        cur = std::move(next);
    }
    for (const Sample& s : cur.samples) chain.terminal_points.push_back(s.point);
    chain.terminal_full.assign(cur.full.begin(), cur.full.end());
    return chain;
}

}  // namespace polypush
