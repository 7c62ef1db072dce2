#include "polypush/geometry.hpp"

#include "polypush/errors.hpp"

#include <algorithm>
#include <cmath>

namespace polypush {

bool geometrically_independent(const std::vector<Vec>& points, double tol_rank) {
    if (points.empty()) throw std::invalid_argument("geometrically_independent: empty point list");
    const int n = static_cast<int>(points.size()) - 1;
    if (n == 0) return true;
    const auto N = points[0].size();
    if (n > N) return false;
    Mat d(N, n);
    for (int j = 0; j < n; ++j) d.col(j) = points[j + 1] - points[0];
    Eigen::ColPivHouseholderQR<Mat> qr(d);
    qr.setThreshold(tol_rank);
    return qr.rank() == n;
}

AffineCoords affine_coords(const std::vector<Vec>& verts, const Vec& x) {
    const int m = static_cast<int>(verts.size());
    if (m == 0) throw std::invalid_argument("affine_coords: empty vertex list");
    AffineCoords out;
    if (m == 1) {
        out.weights = Vec::Ones(1);
        out.residual = (x - verts[0]).norm();
        return out;
    }
    Mat d(verts[0].size(), m - 1);
    for (int j = 1; j < m; ++j) d.col(j - 1) = verts[j] - verts[0];
    Vec mu = d.colPivHouseholderQr().solve(x - verts[0]);
    out.weights = Vec(m);
    out.weights[0] = 1.0 - mu.sum();
    for (int j = 1; j < m; ++j) out.weights[j] = mu[j - 1];
    Vec rec = Vec::Zero(verts[0].size());
    for (int j = 0; j < m; ++j) rec += out.weights[j] * verts[j];
    out.residual = (rec - x).norm();
    return out;
}

double point_to_simplex_distance(const std::vector<Vec>& verts, const Vec& p) {
    const int m = static_cast<int>(verts.size());
    double best = std::numeric_limits<double>::infinity();
    // The closest point lies in the relative interior of some face; enumerate
    // vertex subsets and keep projections with nonnegative affine weights.
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<Vec> sub;
        for (int j = 0; j < m; ++j)
            if (mask & (1u << j)) sub.push_back(verts[j]);
        if (sub.size() == 1) {
            best = std::min(best, (p - sub[0]).norm());
            continue;
        }
        // Project p onto the affine hull of sub.
        Mat d(sub[0].size(), sub.size() - 1);
        for (std::size_t j = 1; j < sub.size(); ++j) d.col(j - 1) = sub[j] - sub[0];
        Vec mu = (d.transpose() * d).ldlt().solve(d.transpose() * (p - sub[0]));
        double w0 = 1.0 - mu.sum();
        bool inside = w0 >= -tol::bary;
        for (int j = 0; j < mu.size() && inside; ++j) inside = mu[j] >= -tol::bary;
        if (!inside) continue;
        Vec proj = sub[0] + d * mu;
        best = std::min(best, (p - proj).norm());
    }
    return best;
}

double simplex_volume(const std::vector<Vec>& verts) {
    const int k = static_cast<int>(verts.size()) - 1;
    if (k <= 0) return 0.0;
    Mat e(verts[0].size(), k);
    for (int j = 0; j < k; ++j) e.col(j) = verts[j + 1] - verts[0];
    double g = (e.transpose() * e).determinant();
    if (g < 0) g = 0;
    double fact = 1.0;
    for (int j = 2; j <= k; ++j) fact *= j;
    return std::sqrt(g) / fact;
}

std::vector<Vec> expand_simplex(const std::vector<Vec>& chi, const std::vector<int>& xi_local) {
    const int m = static_cast<int>(chi.size());
    if (static_cast<int>(xi_local.size()) >= m)
        throw std::invalid_argument("expand_simplex: xi must be a proper face of chi");
    if (xi_local.empty() && m == 0) throw std::invalid_argument("expand_simplex: empty simplex");
    std::vector<char> in_xi(m, 0);
    for (int j : xi_local) {
        if (j < 0 || j >= m) throw std::invalid_argument("expand_simplex: bad local index");
        in_xi[j] = 1;
    }
    Vec bc = Vec::Zero(chi[0].size());
    for (const Vec& v : chi) bc += v;
    bc /= static_cast<double>(m);
    std::vector<Vec> out(m);
    for (int j = 0; j < m; ++j) out[j] = in_xi[j] ? chi[j] : Vec(2.0 * chi[j] - bc);
    return out;
}

Vec uniform_barycentric(int n_vertices, Rng& rng) {
    Vec w(n_vertices);
    double s = 0;
    for (int i = 0; i < n_vertices; ++i) {
        double u = rng.next_double();
        if (u <= 0) u = 0x1.0p-53;
        w[i] = -std::log(u);
        s += w[i];
    }
    w /= s;
    return w;
}

}  // namespace polypush
