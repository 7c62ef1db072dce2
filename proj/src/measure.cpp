#include "polypush/measure.hpp"

#include "polypush/errors.hpp"

#include <algorithm>
#include <cmath>

namespace polypush {

double omega_s(double s) {
    if (s < 0) throw std::invalid_argument("omega_s: s must be >= 0");
    return std::pow(std::tgamma(0.5), s) / std::tgamma(0.5 * s + 1.0);
}

MeasureEstimate hausdorff_points(const std::vector<Vec>& pts, double s,
                                 std::vector<double> ladder) {
    if (s < 0) throw std::invalid_argument("hausdorff_points: s must be >= 0");
    MeasureEstimate est;
    est.s = s;
    if (s == 0.0) {
        est.method = "exact-count";
        std::vector<const Vec*> distinct;
        for (const Vec& p : pts) {
            bool dup = false;
            for (const Vec* q : distinct)
                if ((p - *q).norm() <= 1e-12) {
                    dup = true;
                    break;
                }
            if (!dup) distinct.push_back(&p);
        }
        est.value = static_cast<double>(distinct.size());
        return est;
    }
    est.method = "covering";
    if (pts.empty()) return est;
    double d = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            d = std::max(d, (pts[i] - pts[j]).norm());
    if (d == 0) {
        est.value = 0;  // a single point has H^s = 0 for s > 0
        return est;
    }
    if (ladder.empty()) ladder = {d / 8.0, d / 16.0, d / 32.0};
    std::sort(ladder.begin(), ladder.end(), std::greater<double>());
    const double ws = omega_s(s);
    double running = 0;
    for (double delta : ladder) {
        if (!(delta > 0)) throw std::invalid_argument("hausdorff_points: ladder entries must be > 0");
        // Greedy cover: anchor the next uncovered point, cluster everything
        // within delta/2 of it (so each set has diameter <= delta), and charge
        // the cluster by its actual diameter.
        std::vector<char> covered(pts.size(), 0);
        double raw = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (covered[i]) continue;
            double cluster_diam = 0;
            std::vector<std::size_t> members;
            for (std::size_t j = i; j < pts.size(); ++j) {
                if (covered[j]) continue;
                if ((pts[j] - pts[i]).norm() <= 0.5 * delta) {
                    covered[j] = 1;
                    members.push_back(j);
                }
            }
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b)
                    cluster_diam =
                        std::max(cluster_diam, (pts[members[a]] - pts[members[b]]).norm());
            raw += ws * std::pow(0.5 * cluster_diam, s);
        }
        running = std::max(running, raw);  // H^s_delta is monotone in delta
        est.delta_ladder.push_back(delta);
        est.ladder_values.push_back(running);
    }
    est.value = running;
    return est;
}

MeasureEstimate hausdorff_setmodel(const SimplicialComplex& cx, const SetModel& S) {
    MeasureEstimate est;
    est.s = S.a;
    est.method = S.a == 0.0 ? "exact-count" : "weighted-sum";
    est.value = S.measure_q(cx);
    return est;
}

std::vector<Vec> sigma_gamma(const std::vector<Vec>& verts, double gamma) {
    const int n = static_cast<int>(verts.size()) - 1;
    if (!(gamma > 1.0 / (2.0 * (n + 1)) && gamma < 1.0))
        throw std::invalid_argument("sigma_gamma: gamma outside (1/(2(n+1)), 1)");
    Vec bc = Vec::Zero(verts[0].size());
    for (const Vec& v : verts) bc += v;
    bc /= static_cast<double>(verts.size());
    std::vector<Vec> out;
    out.reserve(verts.size());
    for (const Vec& v : verts) out.push_back(gamma * v + (1.0 - gamma) * bc);
    return out;
}

MagnificationPair magnification_bound(const SimplicialComplex& cx, int sigma, int tau,
                                      const Vec& z, const std::vector<std::pair<Vec, double>>& A,
                                      double a) {
    MagnificationPair out;
    FaceFrame fr = face_frame(cx, sigma, tau);
    const double zn = fr.last_coord(z);
    const double diam = cx.simplex(sigma).diameter;
    for (const auto& [y, w] : A) {
        auto h = h_to_face(cx, sigma, tau, z, y);
        if (!h) continue;
        const double yn = fr.last_coord(y);
        out.bound += w * std::pow(diam / (zn - yn), a);
        out.empirical += w * std::pow((z - *h).norm() / (zn - yn), a);
    }
    return out;
}

PhiConstants phi_constants(double a, int r, double t, std::optional<double> gamma) {
    if (!(r >= a + 1 && a >= 1))
        throw std::invalid_argument("phi_constants: need r >= a+1 and a >= 1");
    if (!(t > 0)) throw std::invalid_argument("phi_constants: t must be positive");
    PhiConstants out;
    out.gamma_star = (a + 1.0) / (r + a);
    double g = gamma.value_or(out.gamma_star);
    if (!(g > 1.0 / (2.0 * (r + 1)) && g < 1.0))
        throw std::invalid_argument("phi_constants: gamma outside (1/(2(r+1)), 1)");
    auto phi_tilde_at = [&](double gg) {
        return std::pow(2.0, 2.0 * r - a - 2.0) * r * std::pow(r + 1.0, r - a - 1.0) * (r + 2.0) /
               (std::pow(1.0 - gg, r - 1.0) * std::pow(gg, a + 1.0) * std::pow(t, a));
    };
    out.phi_tilde = phi_tilde_at(g);
    out.phi = phi_tilde_at(out.gamma_star);
    return out;
}

long long filtration_count(int j, int i, int a) {
    if (i < a || j < 0) throw std::invalid_argument("filtration_count: need i >= a, j >= 0");
    const int n = i - a;  // elements added across the filtration
    if (j == 0) return n == 0 ? 1 : 0;
    if (j > n) return 0;
    // Surjections {1..n} -> {1..j}: ordered set partitions into j blocks.
    std::vector<std::vector<long long>> surj(n + 1, std::vector<long long>(j + 1, 0));
    surj[0][0] = 1;
    for (int nn = 1; nn <= n; ++nn)
        for (int jj = 1; jj <= std::min(nn, j); ++jj)
            surj[nn][jj] = jj * (surj[nn - 1][jj - 1] + surj[nn - 1][jj]);
    return surj[n][j];
}

namespace {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

}  // namespace

ConstantsBundle K_constants(const SimplicialComplex& cx, double a) {
    ConstantsBundle out;
    out.a = a;
    out.q = cx.q_dim();
    const int q = out.q;
    if (q < 0) throw std::invalid_argument("K_constants: empty Q");

    // K1: the a = q path. Computed whenever Q has top-dimensional simplices.
    double total_q = 0, min_q = std::numeric_limits<double>::infinity();
    for (int s : cx.q_simplices()) {
        if (cx.simplex(s).dim() != q) continue;
        double v = simplex_volume(cx.points_of(s));
        total_q += v;
        min_q = std::min(min_q, v);
    }
    out.K1 = (std::isfinite(min_q) && min_q > 0) ? total_q / min_q : 1.0;

    out.t_min = std::numeric_limits<double>::infinity();
    for (int s : cx.q_simplices())
        if (cx.simplex(s).dim() > a) out.t_min = std::min(out.t_min, cx.simplex(s).thickness);
    out.t_min_defined = std::isfinite(out.t_min);
    if (!out.t_min_defined) out.t_min = std::numeric_limits<double>::quiet_NaN();

    const double a_round = std::round(a);
    const bool integer_a = std::abs(a - a_round) < 1e-12;
    const int ai = static_cast<int>(a_round);

    double psi = 1.0;
    if (integer_a && ai >= 1 && q > ai && out.t_min_defined) {
        auto pc = phi_constants(a, q, out.t_min);
        out.gamma_star = pc.gamma_star;
        out.phi = pc.phi;
        for (int m = ai + 1; m <= q; ++m) {
            double psi_m = 0;
            for (int j = 1; j <= m - ai; ++j)
                psi_m += static_cast<double>(filtration_count(j, m, ai)) * std::pow(out.phi, j);
            psi = std::max(psi, psi_m);
        }
    }
    out.psi = psi;
    const int binom_k = integer_a ? ai + 1 : static_cast<int>(std::floor(a)) + 1;
    out.K2 = binomial(q + 1, std::min(binom_k, q + 1)) * psi;
    out.K2 = std::max(out.K2, 1.0);
    out.K = std::max(out.K1, out.K2);
    return out;
}

Z0Result select_z0(const SimplicialComplex& cx, int sigma, const SetModel& S, double a,
                   std::uint64_t seed, std::optional<double> phi_override,
                   std::optional<double> gamma_override) {
    const Simplex& s = cx.simplex(sigma);
    const int n = s.dim();
    if (n < 1) throw std::invalid_argument("select_z0: sigma must have dim >= 1");
    auto pts = cx.points_of(sigma);
    const auto faces = cx.relation(sigma, Incidence::faces);

    std::vector<std::pair<Vec, double>> interior;  // A cap Int sigma
    std::vector<Vec> all_a;
    double mass = 0;
    for (const Sample& sm : S.samples) {
        if (!std::binary_search(faces.begin(), faces.end(), sm.carrier)) continue;
        all_a.push_back(sm.point);
        if (sm.carrier == sigma) {
            interior.emplace_back(sm.point, sm.weight);
            mass += sm.weight;
        }
    }

    Z0Result out;
    const double a_round = std::round(a);
    const bool integer_a = std::abs(a - a_round) < 1e-12;
    out.quantitative = integer_a && a >= 1 && n > a && mass > 0 &&
                       (!phi_override || std::isfinite(*phi_override));
    double gamma;
    if (out.quantitative) {
        gamma = gamma_override.value_or((a + 1.0) / (n + a));
        out.phi = phi_override ? *phi_override : phi_constants(a, n, s.thickness).phi;
    } else {
        gamma = gamma_override.value_or(0.5);
    }
    if (!(gamma > 1.0 / (2.0 * (n + 1)) && gamma < 1.0))
        throw std::invalid_argument("select_z0: gamma outside (1/(2(n+1)), 1)");
    out.gamma = gamma;
    auto region = sigma_gamma(pts, gamma);

    std::vector<int> tau_faces;  // (n-1)-faces
    for (int f : faces)
        if (cx.simplex(f).dim() == n - 1) tau_faces.push_back(f);
    std::vector<FaceFrame> frames;
    for (int tf : tau_faces) frames.push_back(face_frame(cx, sigma, tf));

    const double gap = tol::apex_gap_rel * s.diameter;
    const int budget = 64 * (n + 2);
    Rng base(seed);
    for (int i = 0; i < budget; ++i) {
        Rng rng = base.fork(static_cast<std::uint64_t>(i));
        Vec w = uniform_barycentric(n + 1, rng);
        Vec z = Vec::Zero(cx.ambient_dim());
        for (int j = 0; j <= n; ++j) z += w[j] * region[j];
        ++out.draws;
        bool admissible = true;
        for (const Vec& p : all_a)
            if ((p - z).norm() < gap) {
                admissible = false;
                break;
            }
        if (!admissible) continue;
        bool ok = true;
        if (out.quantitative) {
            for (std::size_t f = 0; f < tau_faces.size() && ok; ++f) {
                double zn = frames[f].last_coord(z);
                double total = 0;
                for (const auto& [y, wt] : interior) {
                    if (!h_to_face(cx, sigma, tau_faces[f], frames[f], z, y)) continue;
                    double yn = frames[f].last_coord(y);
                    total += wt * std::pow(s.diameter / (zn - yn), a);
                }
                ok = total <= out.phi * mass * (1.0 + 1e-12);
            }
        }
        if (ok) {
            out.z0 = z;
            out.accepted_index = i;
            return out;
        }
    }
    throw numeric_error("select_z0: draw budget exhausted for simplex " + std::to_string(sigma) +
                        " (draws=" + std::to_string(out.draws) + ")");
}

}  // namespace polypush
