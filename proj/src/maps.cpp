#include "polypush/maps.hpp"

#include "polypush/errors.hpp"

#include <algorithm>
#include <cmath>

namespace polypush {

namespace {

double point_segment_distance(const Vec& p, const Vec& a, const Vec& b) {
    Vec d = b - a;
    double l2 = d.squaredNorm();
    if (l2 == 0) return (p - a).norm();
    double t = std::clamp((p - a).dot(d) / l2, 0.0, 1.0);
    return (p - (a + t * d)).norm();
}

}  // namespace

double k_fn(double beta, double delta, double t) {
    if (beta > 1.0 + 1e-15) throw std::domain_error("k: beta must be <= 1");
    if (beta >= 1.0) {
        if (delta + t > 0) return 0.0;
        throw std::domain_error("k: (1, 0, 0) outside domain");
    }
    return std::exp(-beta * (delta + t) / (1.0 - beta));
}

BHbar b_and_hbar(const SimplicialComplex& cx, int sigma, const Vec& z, const Vec& y) {
    BHbar out;
    const Vec d = y - z;
    const double dist = d.norm();
    if (dist <= 1e-14 * std::max(1.0, cx.simplex(sigma).diameter)) {
        // b(z) = 0; hbar(z) fixed to the image of the first vertex direction.
        Vec dir = cx.vertex(cx.simplex(sigma).vertices[0]) - z;
        auto hit = cx.ray_boundary(sigma, z, dir);
        out.b = 0;
        out.hbar = hit.point;
        out.hit_face = hit.hit_face;
        return out;
    }
    auto hit = cx.ray_boundary(sigma, z, d);
    out.hbar = hit.point;
    out.hit_face = hit.hit_face;
    out.b = dist / (out.hbar - z).norm();
    out.b = std::min(out.b, 1.0);
    return out;
}

FaceFrame face_frame(const SimplicialComplex& cx, int sigma, int tau) {
    const Simplex& s = cx.simplex(sigma);
    const Simplex& f = cx.simplex(tau);
    if (f.dim() != s.dim() - 1)
        throw std::invalid_argument("face_frame: tau must be an (n-1)-face of sigma");
    for (int v : f.vertices)
        if (!std::binary_search(s.vertices.begin(), s.vertices.end(), v))
            throw std::invalid_argument("face_frame: tau is not a face of sigma");
    int apex = cx.simplex(cx.opposite_face(sigma, tau)).vertices[0];

    FaceFrame fr;
    fr.origin = cx.vertex(f.vertices[0]);
    const int n = s.dim();
    Mat raw(cx.ambient_dim(), n);
    for (int j = 1; j <= f.dim(); ++j) raw.col(j - 1) = cx.vertex(f.vertices[j]) - fr.origin;
    raw.col(n - 1) = cx.vertex(apex) - fr.origin;
    // Gram-Schmidt; the apex direction comes last so tau spans the first n-1
    // coordinates and the last coordinate of the apex is positive.
    fr.basis = Mat(cx.ambient_dim(), n);
    for (int j = 0; j < n; ++j) {
        Vec v = raw.col(j);
        for (int k = 0; k < j; ++k) v -= fr.basis.col(k).dot(v) * fr.basis.col(k);
        double nv = v.norm();
        if (nv <= 1e-14) throw numeric_error("face_frame: degenerate simplex");
        fr.basis.col(j) = v / nv;
    }
    return fr;
}

std::optional<Vec> h_to_face(const SimplicialComplex& cx, int sigma, int tau, const Vec& z,
                             const Vec& y) {
    return h_to_face(cx, sigma, tau, face_frame(cx, sigma, tau), z, y);
}

std::optional<Vec> h_to_face(const SimplicialComplex& cx, int sigma, int tau,
                             const FaceFrame& fr, const Vec& z, const Vec& y) {
    const double zn = fr.last_coord(z);
    const double yn = fr.last_coord(y);
    if (zn <= 0) throw std::invalid_argument("h_to_face: z must be interior to sigma");
    const double scale = cx.simplex(sigma).diameter;
    if ((y - z).norm() <= 1e-14 * std::max(1.0, scale)) return std::nullopt;  // apex excluded
    if (yn < -tol::bary * scale || yn >= zn) return std::nullopt;
    Vec h = (zn / (zn - yn)) * (y - z) + z;
    auto ac = affine_coords(cx.points_of(tau), h);
    if (ac.residual > cx.tol_membership() || ac.weights.minCoeff() < -tol::bary)
        return std::nullopt;
    return h;
}

double lambda_eig(const SimplicialComplex& cx, int sigma, int tau, const Vec& z, const Vec& y) {
    auto h = h_to_face(cx, sigma, tau, z, y);
    if (!h) throw std::domain_error("lambda_eig: y not in zeta(z; tau)");
    FaceFrame fr = face_frame(cx, sigma, tau);
    double zn = fr.last_coord(z);
    double yn = fr.last_coord(y);
    return (z - *h).norm() / (zn - yn);
}

bool ConeModel::contains(const Vec& y) const {
    Vec d = y - apex;
    double dn = d.norm();
    if (dn == 0) return true;  // z in C
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        Vec r = images[i] - apex;
        double rn = r.norm();
        if (rn == 0) continue;
        double cosang = std::clamp(d.dot(r) / (dn * rn), -1.0, 1.0);
        if (std::acos(cosang) <= tol::cone_angle && dn <= rn * (1.0 + 1e-12)) return true;
    }
    return false;
}

double ConeModel::distance_to(const Vec& p) const {
    double best = (p - apex).norm();
    for (const Vec& img : images) best = std::min(best, point_segment_distance(p, apex, img));
    return best;
}

double ConeModel::delta_bar(const SimplicialComplex& cx, const Vec& y) const {
    if ((y - apex).norm() <= 1e-14 * std::max(1.0, cx.simplex(sigma).diameter))
        return cx.simplex(sigma).diameter;
    auto bh = b_and_hbar(cx, sigma, apex, y);
    return distance_to(bh.hbar);
}

ConeModel cone_build(const SimplicialComplex& cx, int sigma, const Vec& z, const SetModel& S) {
    ConeModel cone;
    cone.sigma = sigma;
    cone.apex = z;
    const auto faces = cx.relation(sigma, Incidence::faces);
    const double gap = tol::apex_gap_rel * cx.simplex(sigma).diameter;
    for (std::size_t i = 0; i < S.samples.size(); ++i) {
        const Sample& s = S.samples[i];
        if (!std::binary_search(faces.begin(), faces.end(), s.carrier)) continue;
        if ((s.point - z).norm() < gap)
            throw numeric_error("cone_build: apex too close to a sample of A");
        cone.sample_ids.push_back(static_cast<int>(i));
        cone.anchors.push_back(s.point);
        if (s.carrier == sigma) {
            auto bh = b_and_hbar(cx, sigma, z, s.point);
            cone.images.push_back(bh.hbar);
            cone.image_carriers.push_back(bh.hit_face);
        } else {
            cone.images.push_back(s.point);  // hbar is the identity on Bd sigma
            cone.image_carriers.push_back(s.carrier);
        }
    }
    auto bh = b_and_hbar(cx, sigma, z, z);
    cone.apex_image = bh.hbar;
    cone.apex_image_face = bh.hit_face;
    return cone;
}

Vec s_map(const SimplicialComplex& cx, const ConeModel& cone, const Vec& y, double t) {
    auto bh = b_and_hbar(cx, cone.sigma, cone.apex, y);
    if (bh.b >= 1.0 - 1e-12) {
        if (t <= 0 && cone.contains(y))
            throw std::domain_error("s: (y, 0) with y in C cap Bd sigma is outside B_z");
        return y;
    }
    double f = k_fn(bh.b, cone.delta_bar(cx, y), t);
    return (1.0 - f) * bh.hbar + f * cone.apex;
}

Vec s_hat_inverse(const SimplicialComplex& cx, const ConeModel& cone, const Vec& x, double t) {
    if (!(t > 0)) throw std::invalid_argument("s_hat_inverse: t must be positive");
    const double scale = cx.simplex(cone.sigma).diameter;
    if ((x - cone.apex).norm() <= 1e-14 * std::max(1.0, scale)) return cone.apex;
    auto bh = b_and_hbar(cx, cone.sigma, cone.apex, x);
    if (bh.b >= 1.0 - 1e-12)
        throw std::invalid_argument("s_hat_inverse: x must be interior to sigma");
    const double delta = cone.distance_to(bh.hbar);  // delta_bar along the shared ray
    const double target = 1.0 - bh.b;
    double lo = 0.0, hi = 1.0 - 1e-16;
    if (k_fn(lo, delta, t) < target || k_fn(hi, delta, t) > target)
        throw numeric_error("s_hat_inverse: bisection not bracketing");
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        double mid = 0.5 * (lo + hi);
        (k_fn(mid, delta, t) > target ? lo : hi) = mid;
    }
    double beta = 0.5 * (lo + hi);
    return bh.hbar + (1.0 - beta) * (cone.apex - bh.hbar);
}

Vec g_map(const SimplicialComplex& cx, const ConeModel& cone, const Vec& y) {
    const int sigma = cone.sigma;
    BarycentricCoords bc = cx.barycentric(y);
    const int xi = bc.carrier;
    if (xi == sigma) return s_map(cx, cone, y, 0.0);

    const auto& sv = cx.simplex(sigma).vertices;
    const auto& xv = cx.simplex(xi).vertices;
    bool xi_face_of_sigma = std::includes(sv.begin(), sv.end(), xv.begin(), xv.end());
    if (xi_face_of_sigma) {  // y on Bd sigma
        if (cone.contains(y)) throw std::domain_error("g: y in C cap Bd sigma");
        return y;
    }
    bool sigma_face_of_xi = std::includes(xv.begin(), xv.end(), sv.begin(), sv.end());
    if (!sigma_face_of_xi) return y;  // outside the closed star, in Lk, or sigma(y) in Bd sigma

    double mu = cx.mu_weight(sigma, bc);
    Vec sig_y = cx.sigma_point(sigma, bc);        // in Int sigma
    Vec s_val = s_map(cx, cone, sig_y, 1.0 - mu);  // t = 1 - mu in (0,1)
    return mu * s_val + (y - mu * sig_y);
}

}  // namespace polypush
