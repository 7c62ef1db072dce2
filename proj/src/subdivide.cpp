#include "polypush/complex.hpp"
#include "polypush/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace polypush {

namespace {

// A child vertex of the degree-2 edgewise template: the midpoint of parent
// vertices (i, j), with i == j meaning the parent vertex itself.
using MidKey = std::pair<int, int>;
using Child = std::vector<MidKey>;  // n+1 vertices

// Children of the reference Kuhn simplex K = {1 >= x_1 >= ... >= x_n >= 0}
// under halving: unit Kuhn simplices (c, pi) with K_pi + c inside 2K. Child
// vertices come out as parent-vertex pairs via the chain coordinates.
std::vector<Child> edgewise_template(int n) {
    static std::map<int, std::vector<Child>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n > 8) throw std::invalid_argument("edgewise subdivision limited to dim <= 8");

    std::vector<Child> children;
    if (n == 0) {
        children.push_back({{0, 0}});
        cache[n] = children;
        return children;
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> c(n, 0);
    auto monotone_ok = [&](const std::vector<int>& u) {
        if (u[0] > 2) return false;
        for (int d = 0; d + 1 < n; ++d)
            if (u[d] < u[d + 1]) return false;
        return u[n - 1] >= 0;
    };
    // Barycentric weights of u/2 over the parent chain vertices w_0..w_n.
    auto to_midkey = [&](const std::vector<int>& u) -> MidKey {
        std::array<int, 16> twolam{};  // 2 * lambda_j in {0,1,2}
        twolam[0] = 2 - u[0];
        for (int j = 1; j < n; ++j) twolam[j] = u[j - 1] - u[j];
        twolam[n] = u[n - 1];
        int a = -1, b = -1;
        for (int j = 0; j <= n; ++j) {
            if (twolam[j] == 2) return {j, j};
            if (twolam[j] == 1) (a < 0 ? a : b) = j;
        }
        return {a, b};
    };

    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        for (int d = 0; d < n; ++d) c[d] = (mask >> d) & 1;
        std::sort(perm.begin(), perm.end());
        do {
            // Vertices of K_perm + c: u_0 = c, u_k = u_{k-1} + e_perm(k).
            std::vector<std::vector<int>> us;
            std::vector<int> u = c;
            us.push_back(u);
            bool ok = monotone_ok(u);
            for (int k = 0; k < n && ok; ++k) {
                u[perm[k]] += 1;
                ok = monotone_ok(u);
                us.push_back(u);
            }
            if (!ok) continue;
            Child child;
            for (auto& uv : us) child.push_back(to_midkey(uv));
            children.push_back(std::move(child));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (static_cast<int>(children.size()) != (1 << n))
        throw numeric_error("edgewise template: wrong child count");
    cache[n] = children;
    return children;
}

struct OneRound {
    SimplicialComplex complex;
    std::vector<int> parent;  // per new simplex: old simplex id
};

OneRound refine_once(const SimplicialComplex& cx) {
    // New vertices: the old ones (pair (v,v)) plus one midpoint per edge. Ids
    // follow the lexicographic pair order, so the sorted vertex order of every
    // child coincides with its Kuhn chain order; that keeps the congruence
    // classes (and hence the thickness set) stable under iterated refinement.
    std::map<MidKey, int> vertex_id;
    for (int v = 0; v < cx.num_vertices(); ++v) vertex_id[{v, v}] = -1;
    for (int s = 0; s < cx.num_simplices(); ++s)
        if (cx.simplex(s).dim() == 1)
            vertex_id[{cx.simplex(s).vertices[0], cx.simplex(s).vertices[1]}] = -1;
    std::vector<Vec> new_verts;
    new_verts.reserve(vertex_id.size());
    for (auto& [key, id] : vertex_id) {
        id = static_cast<int>(new_verts.size());
        new_verts.push_back(0.5 * (cx.vertex(key.first) + cx.vertex(key.second)));
    }
    auto midpoint_id = [&](int a, int b) {
        return vertex_id.at({std::min(a, b), std::max(a, b)});
    };

    // Children of every old simplex, processed in increasing dimension so a
    // face-closure insertion can be attributed to the simplex being refined.
    std::map<std::vector<int>, std::pair<int, char>> emitted;  // key -> (parent, in_q)
    std::vector<int> order(cx.num_simplices());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cx.simplex(a).dim() < cx.simplex(b).dim(); });
    for (int s : order) {
        const auto& verts = cx.simplex(s).vertices;  // sorted: consistent chain order
        const int n = cx.simplex(s).dim();
        char inq = cx.in_q(s) ? 1 : 0;
        for (const Child& child : edgewise_template(n)) {
            std::vector<int> cvs;
            for (auto [i, j] : child) cvs.push_back(midpoint_id(verts[i], verts[j]));
            std::sort(cvs.begin(), cvs.end());
            // The child and all its faces live inside s.
            const int m = static_cast<int>(cvs.size());
            for (unsigned mask = 1; mask < (1u << m); ++mask) {
                std::vector<int> f;
                for (int j = 0; j < m; ++j)
                    if (mask & (1u << j)) f.push_back(cvs[j]);
                auto it = emitted.find(f);
                if (it == emitted.end())
                    emitted[f] = {s, inq};
                else if (inq)
                    it->second.second = 1;
            }
        }
    }

    std::vector<std::vector<int>> simplices;
    std::vector<int> parents;
    std::vector<int> q_idx;
    simplices.reserve(emitted.size());
    for (auto& [key, info] : emitted) {
        if (info.second) q_idx.push_back(static_cast<int>(simplices.size()));
        simplices.push_back(key);
        parents.push_back(info.first);
    }
    OneRound out;
    out.complex = SimplicialComplex::build(std::move(new_verts), simplices, q_idx);
    // Reindex parents into the canonical id order of the built complex.
    out.parent.assign(out.complex.num_simplices(), -1);
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        int id = out.complex.find(simplices[i]);
        out.parent[id] = parents[i];
    }
    return out;
}

}  // namespace

SubdivisionResult subdivide(const SimplicialComplex& cx, double eps) {
    if (!(eps > 0)) throw std::invalid_argument("subdivide: eps must be positive");
    SubdivisionResult res;
    res.complex = cx;
    res.parent.assign(cx.num_simplices(), 0);
    std::iota(res.parent.begin(), res.parent.end(), 0);
    res.rounds = 0;

    // Each round at least halves diameters for the edgewise scheme in low
    // dimension; cap generously and fail loudly instead of looping.
    const int max_rounds =
        std::max(8, static_cast<int>(std::ceil(std::log2(std::max(
                        1.0, cx.max_simplex_diameter() / eps)))) + 8);
    while (res.complex.max_simplex_diameter() >= eps) {
        if (res.rounds >= max_rounds)
            throw numeric_error("subdivide: diameter did not drop below eps within round budget");
        OneRound r = refine_once(res.complex);
        std::vector<int> lifted(r.complex.num_simplices());
        for (int i = 0; i < r.complex.num_simplices(); ++i) lifted[i] = res.parent[r.parent[i]];
        res.complex = std::move(r.complex);
        res.parent = std::move(lifted);
        ++res.rounds;
    }
    res.t0 = std::numeric_limits<double>::infinity();
    for (int i = 0; i < res.complex.num_simplices(); ++i)
        if (res.complex.simplex(i).dim() >= 1)
            res.t0 = std::min(res.t0, res.complex.simplex(i).thickness);
    if (!std::isfinite(res.t0)) res.t0 = 0;
    return res;
}

}  // namespace polypush
