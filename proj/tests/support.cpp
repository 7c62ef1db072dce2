#include "support.hpp"

#include <algorithm>

namespace testsupport {

SimplicialComplex unit_triangle() {
    return SimplicialComplex::build({v2(0, 0), v2(1, 0), v2(0, 1)}, {{0, 1, 2}}, {0});
}

SimplicialComplex two_triangles() {
    return SimplicialComplex::build({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)},
                                    {{0, 1, 2}, {1, 2, 3}}, {0, 1});
}

SimplicialComplex tetrahedron() {
    return SimplicialComplex::build({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)},
                                    {{0, 1, 2, 3}}, {0});
}

SimplicialComplex grid2d(int k, std::uint64_t seed) {
    for (double jitter = 0.2; ; jitter *= 0.5) {
        Rng rng(seed);
        const double h = 1.0 / k;
        std::vector<Vec> verts;
        auto id = [&](int i, int j) { return i * (k + 1) + j; };
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) {
                double x = i * h, y = j * h;
                if (i > 0 && i < k && j > 0 && j < k) {
                    x += (rng.next_double() - 0.5) * jitter * h;
                    y += (rng.next_double() - 0.5) * jitter * h;
                }
                verts.push_back(v2(x, y));
            }
        std::vector<std::vector<int>> tris;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
                tris.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
            }
        std::vector<int> q(tris.size());
        for (std::size_t t = 0; t < tris.size(); ++t) q[t] = static_cast<int>(t);
        auto cx = SimplicialComplex::build(std::move(verts), tris, q);
        if (cx.validate(8, seed).ok() || jitter < 1e-3) return cx;
    }
}

SimplicialComplex grid3d(int kx, int ky, int kz, std::uint64_t seed) {
    for (double jitter = 0.15; ; jitter *= 0.5) {
        Rng rng(seed);
        const double h = 1.0 / std::max({kx, ky, kz});
        std::vector<Vec> verts;
        auto id = [&](int i, int j, int l) { return (i * (ky + 1) + j) * (kz + 1) + l; };
        for (int i = 0; i <= kx; ++i)
            for (int j = 0; j <= ky; ++j)
                for (int l = 0; l <= kz; ++l) {
                    double x = i * h, y = j * h, z = l * h;
                    if (i > 0 && i < kx && j > 0 && j < ky && l > 0 && l < kz) {
                        x += (rng.next_double() - 0.5) * jitter * h;
                        y += (rng.next_double() - 0.5) * jitter * h;
                        z += (rng.next_double() - 0.5) * jitter * h;
                    }
                    verts.push_back(v3(x, y, z));
                }
        // Kuhn triangulation: 6 tets per cell along vertex chains.
        std::vector<std::vector<int>> tets;
        int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (int i = 0; i < kx; ++i)
            for (int j = 0; j < ky; ++j)
                for (int l = 0; l < kz; ++l)
                    for (auto& p : perms) {
                        int c[3] = {0, 0, 0};
                        std::vector<int> chain = {id(i, j, l)};
                        for (int step = 0; step < 3; ++step) {
                            c[p[step]] = 1;
                            chain.push_back(id(i + c[0], j + c[1], l + c[2]));
                        }
                        tets.push_back(chain);
                    }
        std::vector<int> q(tets.size());
        for (std::size_t t = 0; t < tets.size(); ++t) q[t] = static_cast<int>(t);
        auto cx = SimplicialComplex::build(std::move(verts), tets, q);
        if (cx.validate(6, seed).ok() || jitter < 1e-3) return cx;
    }
}

SetModel random_set_model(const SimplicialComplex& cx, int n_samples, double a,
                          std::uint64_t seed, bool with_full_edge) {
    Rng rng(seed);
    SetModel sm;
    sm.a = a;
    std::vector<int> candidates;
    for (int s : cx.q_simplices())
        if (cx.simplex(s).dim() >= 1) candidates.push_back(s);
    for (int i = 0; i < n_samples && !candidates.empty(); ++i) {
        int s = candidates[rng.next_u64() % candidates.size()];
        Sample smp;
        smp.carrier = s;
        smp.point = cx.sample_interior(s, rng);
        smp.weight = 0.05 + 0.95 * rng.next_double();
        sm.samples.push_back(std::move(smp));
    }
    if (with_full_edge) {
        std::vector<int> edges;
        for (int s : cx.q_simplices())
            if (cx.simplex(s).dim() == 1) edges.push_back(s);
        if (!edges.empty()) sm.flag_full(cx, edges[rng.next_u64() % edges.size()]);
    }
    return sm;
}

}  // namespace testsupport
