#include "polypush/complex.hpp"

#include "polypush/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace polypush {

namespace {

std::vector<int> sorted_key(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

void enumerate_subsets(const std::vector<int>& verts, std::vector<std::vector<int>>& out) {
    const int m = static_cast<int>(verts.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> f;
        for (int j = 0; j < m; ++j)
            if (mask & (1u << j)) f.push_back(verts[j]);
        out.push_back(std::move(f));
    }
}

std::string key_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

}  // namespace

SimplicialComplex SimplicialComplex::build(std::vector<Vec> vertices,
                                           const std::vector<std::vector<int>>& simplices,
                                           const std::vector<int>& q_input, BuildReport* report) {
    SimplicialComplex cx;
    cx.verts_ = std::move(vertices);
    for (const Vec& v : cx.verts_)
        if (!v.allFinite()) throw validation_error("vertex with non-finite coordinate");

    // Collect the face closure of the input simplices.
    std::set<std::vector<int>> keys;
    for (const auto& s : simplices) {
        if (s.empty()) throw validation_error("empty simplex in input");
        for (int v : s)
            if (v < 0 || v >= cx.num_vertices())
                throw validation_error("simplex references unknown vertex " + std::to_string(v));
        auto k = sorted_key(s);
        if (std::adjacent_find(k.begin(), k.end()) != k.end())
            throw validation_error("simplex with repeated vertex: " + key_str(s));
        std::vector<std::vector<int>> subs;
        enumerate_subsets(k, subs);
        for (auto& f : subs) keys.insert(f);
    }
    if (report) {
        std::set<std::vector<int>> given;
        for (const auto& s : simplices) given.insert(sorted_key(s));
        for (const auto& k : keys)
            if (!given.count(k)) report->added_faces.push_back(k);
    }

    // Canonical ids: sort by (dim, vertex tuple).
    std::vector<std::vector<int>> ordered(keys.begin(), keys.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    cx.simps_.reserve(ordered.size());
    for (auto& k : ordered) {
        Simplex s;
        s.vertices = k;
        cx.index_[k] = static_cast<int>(cx.simps_.size());
        cx.simps_.push_back(std::move(s));
    }

    // Q: face closure of the referenced input simplices.
    cx.q_.assign(cx.simps_.size(), 0);
    std::set<std::vector<int>> q_given;
    for (int qi : q_input) {
        if (qi < 0 || qi >= static_cast<int>(simplices.size()))
            throw validation_error("Q references unknown simplex index " + std::to_string(qi));
        auto k = sorted_key(simplices[qi]);
        q_given.insert(k);
        std::vector<std::vector<int>> subs;
        enumerate_subsets(k, subs);
        for (auto& f : subs) {
            int id = cx.index_.at(f);
            if (!cx.q_[id] && !q_given.count(f) && report) report->q_closed_under_faces = false;
            cx.q_[id] = 1;
        }
    }

    cx.finalize_geometry();
    return cx;
}

void SimplicialComplex::finalize_geometry() {
    dim_ = -1;
    q_dim_ = -1;
    max_diam_ = 0;
    const int n = num_simplices();
    faces_.assign(n, {});
    cofaces_.assign(n, {});
    for (int i = 0; i < n; ++i) {
        Simplex& s = simps_[i];
        dim_ = std::max(dim_, s.dim());
        if (q_[i]) q_dim_ = std::max(q_dim_, s.dim());
        auto pts = points_of(i);
        s.barycenter = Vec::Zero(ambient_dim());
        for (const Vec& p : pts) s.barycenter += p;
        s.barycenter /= static_cast<double>(pts.size());
        s.diameter = 0;
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b)
                s.diameter = std::max(s.diameter, (pts[a] - pts[b]).norm());
        max_diam_ = std::max(max_diam_, s.diameter);
        if (s.dim() >= 1) {
            double r = std::numeric_limits<double>::infinity();
            for (std::size_t drop = 0; drop < pts.size(); ++drop) {
                std::vector<Vec> face;
                for (std::size_t j = 0; j < pts.size(); ++j)
                    if (j != drop) face.push_back(pts[j]);
                r = std::min(r, point_to_simplex_distance(face, s.barycenter));
            }
            s.radius = r;
            s.thickness = r / s.diameter;
        }
        std::vector<std::vector<int>> subs;
        enumerate_subsets(s.vertices, subs);
        for (auto& f : subs) {
            int id = index_.at(f);
            faces_[i].push_back(id);
            cofaces_[id].push_back(i);
        }
    }
    for (auto& v : faces_) std::sort(v.begin(), v.end());
    for (auto& v : cofaces_) std::sort(v.begin(), v.end());
    bbox_lo_.resize(n);
    bbox_hi_.resize(n);
    for (int i = 0; i < n; ++i) {
        auto pts = points_of(i);
        bbox_lo_[i] = pts[0];
        bbox_hi_[i] = pts[0];
        for (const Vec& p : pts) {
            bbox_lo_[i] = bbox_lo_[i].cwiseMin(p);
            bbox_hi_[i] = bbox_hi_[i].cwiseMax(p);
        }
    }
    poly_diam_ = 0;
    for (int a = 0; a < num_vertices(); ++a)
        for (int b = a + 1; b < num_vertices(); ++b)
            poly_diam_ = std::max(poly_diam_, (verts_[a] - verts_[b]).norm());
}

std::vector<int> SimplicialComplex::q_simplices() const {
    std::vector<int> out;
    for (int i = 0; i < num_simplices(); ++i)
        if (q_[i]) out.push_back(i);
    return out;
}

int SimplicialComplex::find(std::vector<int> key) const {
    std::sort(key.begin(), key.end());
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
}

std::vector<Vec> SimplicialComplex::points_of(int s) const {
    std::vector<Vec> pts;
    pts.reserve(simps_[s].vertices.size());
    for (int v : simps_[s].vertices) pts.push_back(verts_[v]);
    return pts;
}

std::vector<int> SimplicialComplex::relation(int s, Incidence rel) const {
    if (s < 0 || s >= num_simplices()) throw std::invalid_argument("unknown simplex id");
    switch (rel) {
        case Incidence::faces:
            return faces_[s];
        case Incidence::proper_faces: {
            std::vector<int> out;
            for (int f : faces_[s])
                if (f != s) out.push_back(f);
            return out;
        }
        case Incidence::star:
            return cofaces_[s];
        case Incidence::closed_star: {
            std::set<int> out;
            for (int c : cofaces_[s])
                for (int f : faces_[c]) out.insert(f);
            return {out.begin(), out.end()};
        }
        case Incidence::link: {
            const auto& sv = simps_[s].vertices;
            std::set<int> out;
            for (int c : cofaces_[s]) {
                for (int f : faces_[c]) {
                    const auto& fv = simps_[f].vertices;
                    bool touches = false;
                    for (int v : fv)
                        if (std::binary_search(sv.begin(), sv.end(), v)) {
                            touches = true;
                            break;
                        }
                    if (!touches) out.insert(f);
                }
            }
            return {out.begin(), out.end()};
        }
    }
    return {};
}

int SimplicialComplex::opposite_face(int sigma, int tau) const {
    const auto& sv = simps_[sigma].vertices;
    const auto& tv = simps_[tau].vertices;
    if (sigma == tau) throw std::invalid_argument("opposite_face: tau must be a proper face");
    std::vector<int> rest;
    for (int v : sv)
        if (!std::binary_search(tv.begin(), tv.end(), v)) rest.push_back(v);
    for (int v : tv)
        if (!std::binary_search(sv.begin(), sv.end(), v))
            throw std::invalid_argument("opposite_face: tau is not a face of sigma");
    if (rest.empty()) throw std::invalid_argument("opposite_face: tau must be a proper face");
    int id = find(rest);
    if (id < 0) throw validation_error("opposite face missing from complex");
    return id;
}

bool SimplicialComplex::try_barycentric(const Vec& x, BarycentricCoords* out) const {
    const double tol_mem = tol_membership();
    // Scan top-down; any containing simplex narrows to the carrier face.
    for (int d = dim_; d >= 0; --d) {
        for (int i = 0; i < num_simplices(); ++i) {
            if (simps_[i].dim() != d) continue;
            bool in_box = true;
            for (int c = 0; c < ambient_dim() && in_box; ++c)
                in_box = x[c] >= bbox_lo_[i][c] - tol_mem && x[c] <= bbox_hi_[i][c] + tol_mem;
            if (!in_box) continue;
            auto ac = affine_coords(points_of(i), x);
            if (ac.residual > tol_mem) continue;
            if (ac.weights.minCoeff() < -tol::bary) continue;
            // Carrier: the face spanned by the strictly positive weights.
            std::vector<int> cv;
            for (int j = 0; j < ac.weights.size(); ++j)
                if (ac.weights[j] > tol::interior) cv.push_back(simps_[i].vertices[j]);
            int carrier = find(cv);
            if (carrier < 0) continue;
            auto cc = affine_coords(points_of(carrier), x);
            if (cc.residual > tol_mem || cc.weights.minCoeff() <= tol::interior) continue;
            out->carrier = carrier;
            out->weights = cc.weights;
            return true;
        }
    }
    return false;
}

BarycentricCoords SimplicialComplex::barycentric(const Vec& x) const {
    BarycentricCoords bc;
    if (try_barycentric(x, &bc)) return bc;
    // Nearest-simplex diagnostic.
    double best = std::numeric_limits<double>::infinity();
    int arg = -1;
    for (int i = 0; i < num_simplices(); ++i) {
        double d = point_to_simplex_distance(points_of(i), x);
        if (d < best) {
            best = d;
            arg = i;
        }
    }
    std::ostringstream os;
    os << "point not in |P|; nearest simplex " << arg << " " << key_str(simps_[arg].vertices)
       << " at distance " << best;
    throw validation_error(os.str());
}

Vec SimplicialComplex::sigma_point(int sigma, const BarycentricCoords& bc) const {
    const auto& sv = simps_[sigma].vertices;
    const auto& cv = simps_[bc.carrier].vertices;
    Vec acc = Vec::Zero(ambient_dim());
    double total = 0;
    for (int j = 0; j < static_cast<int>(cv.size()); ++j) {
        if (std::binary_search(sv.begin(), sv.end(), cv[j])) {
            acc += bc.weights[j] * verts_[cv[j]];
            total += bc.weights[j];
        }
    }
    if (total <= 0) throw std::invalid_argument("sigma_point: no weight on sigma's vertices");
    return acc / total;
}

double SimplicialComplex::mu_weight(int sigma, const BarycentricCoords& bc) const {
    const auto& sv = simps_[sigma].vertices;
    const auto& cv = simps_[bc.carrier].vertices;
    double total = 0;
    for (int j = 0; j < static_cast<int>(cv.size()); ++j)
        if (std::binary_search(sv.begin(), sv.end(), cv[j])) total += bc.weights[j];
    return total;
}

SimplicialComplex::RayHit SimplicialComplex::ray_boundary(int sigma, const Vec& z,
                                                          const Vec& dir) const {
    const Simplex& s = simps_[sigma];
    if (s.dim() == 0) throw std::invalid_argument("ray_boundary: sigma must have dim >= 1");
    if (dir.norm() == 0) throw std::invalid_argument("ray_boundary: zero direction");
    auto pts = points_of(sigma);
    auto zc = affine_coords(pts, z);
    if (zc.residual > tol_membership() || zc.weights.minCoeff() <= tol::interior)
        throw std::invalid_argument("ray_boundary: z must be interior to sigma");
    // Express dir in the affine hull: weights of (z + dir) minus weights of z.
    auto dc = affine_coords(pts, z + dir);
    if (dc.residual > tol_membership() + dir.norm() * 1e-9)
        throw std::invalid_argument("ray_boundary: direction leaves the affine hull of sigma");
    Vec dw = dc.weights - zc.weights;
    double t0 = std::numeric_limits<double>::infinity();
    for (int j = 0; j < dw.size(); ++j)
        if (dw[j] < 0) t0 = std::min(t0, zc.weights[j] / (-dw[j]));
    if (!std::isfinite(t0))
        throw numeric_error("ray_boundary: ray never exits (degenerate direction)");
    Vec hit_w = zc.weights + t0 * dw;
    std::vector<int> cv;
    for (int j = 0; j < hit_w.size(); ++j)
        if (hit_w[j] > tol::interior) cv.push_back(s.vertices[j]);
    RayHit out;
    out.t0 = t0;
    out.point = Vec::Zero(ambient_dim());
    for (int j = 0; j < hit_w.size(); ++j) out.point += std::max(hit_w[j], 0.0) * pts[j];
    out.hit_face = find(cv);
    if (out.hit_face < 0) throw numeric_error("ray_boundary: hit face missing");
    return out;
}

Vec SimplicialComplex::sample_interior(int s, Rng& rng) const {
    auto pts = points_of(s);
    Vec w = uniform_barycentric(static_cast<int>(pts.size()), rng);
    Vec x = Vec::Zero(ambient_dim());
    for (std::size_t j = 0; j < pts.size(); ++j) x += w[j] * pts[j];
    return x;
}

ValidationReport SimplicialComplex::validate(int samples_per_pair, std::uint64_t seed) const {
    ValidationReport rep;
    // Geometric independence per simplex.
    for (int i = 0; i < num_simplices(); ++i) {
        if (!geometrically_independent(points_of(i)))
            rep.issues.push_back({"dependent-vertices", "simplex " + key_str(simps_[i].vertices)});
    }
    // Face closure (holds by construction; re-checked for loaded data).
    for (int i = 0; i < num_simplices(); ++i) {
        std::vector<std::vector<int>> subs;
        enumerate_subsets(simps_[i].vertices, subs);
        for (auto& f : subs)
            if (!index_.count(f))
                rep.issues.push_back({"missing-face", key_str(f)});
    }
    // Q face-closed.
    for (int i = 0; i < num_simplices(); ++i) {
        if (!q_[i]) continue;
        for (int f : faces_[i])
            if (!q_[f]) rep.issues.push_back({"q-not-closed", key_str(simps_[f].vertices)});
    }
    // Interior overlaps, sampled on pairs with intersecting bounding boxes.
    // A sweep along the first axis prunes the pair loop.
    const int ns = num_simplices();
    std::vector<Vec> lo(ns), hi(ns);
    for (int i = 0; i < ns; ++i) {
        auto pts = points_of(i);
        lo[i] = pts[0];
        hi[i] = pts[0];
        for (const Vec& p : pts) {
            lo[i] = lo[i].cwiseMin(p);
            hi[i] = hi[i].cwiseMax(p);
        }
    }
    std::vector<int> order(ns);
    for (int i = 0; i < ns; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lo[a][0] < lo[b][0]; });

    Rng rng(seed);
    auto check_pair = [&](int i, int j) {
        // Samples the interior of i and tests strict membership in j. Only
        // meaningful for dim(i) <= dim(j): sampling the higher-dimensional
        // interior against a thin target would flag points that merely come
        // within tolerance of its hull. A genuine overlap always places part
        // of the lower interior inside the higher simplex.
        auto pj = points_of(j);
        Rng local = rng.fork(static_cast<std::uint64_t>(std::min(i, j)) * ns + std::max(i, j));
        for (int k = 0; k < samples_per_pair; ++k) {
            Vec x = sample_interior(i, local);
            auto ac = affine_coords(pj, x);
            if (ac.residual <= tol_membership() && ac.weights.minCoeff() > tol::interior)
                return true;
        }
        return false;
    };
    for (int a = 0; a < ns; ++a) {
        const int i = order[a];
        for (int b = a + 1; b < ns; ++b) {
            const int j = order[b];
            if (lo[j][0] > hi[i][0] + tol_membership()) break;  // sorted on axis 0
            bool boxes_meet = true;
            for (int d = 1; d < ambient_dim() && boxes_meet; ++d)
                boxes_meet = lo[i][d] <= hi[j][d] + tol_membership() &&
                             lo[j][d] <= hi[i][d] + tol_membership();
            if (!boxes_meet) continue;
            const int di = simps_[i].dim(), dj = simps_[j].dim();
            bool bad = false;
            if (di <= dj) bad = check_pair(i, j);
            if (!bad && dj <= di) bad = check_pair(j, i);
            if (bad)
                rep.issues.push_back({"interior-overlap",
                                      key_str(simps_[std::min(i, j)].vertices) + " vs " +
                                          key_str(simps_[std::max(i, j)].vertices)});
        }
    }
    return rep;
}

}  // namespace polypush
