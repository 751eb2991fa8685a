// Finite simplicial complexes standing in for the nerve of a good cover.
// Simplices are stored with ascending vertex indices; every face of a listed
// simplex must be listed (auto-inserted with a warning unless strict).
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xmod/result.hpp"

namespace xmod {

struct Nerve {
    int vertices = 0;
    std::vector<std::array<int, 2>> edges;       // sorted lexicographically
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 4>> tetrahedra;
    std::vector<int> component;  // per vertex
    int components = 0;
    std::vector<std::string> warnings;  // face-closure insertions

    int edge_count() const { return static_cast<int>(edges.size()); }
    int triangle_count() const { return static_cast<int>(triangles.size()); }

    int edge_index(int i, int j) const {
        std::array<int, 2> key{std::min(i, j), std::max(i, j)};
        auto it = std::lower_bound(edges.begin(), edges.end(), key);
        if (it == edges.end() || *it != key) return -1;
        return static_cast<int>(it - edges.begin());
    }
    int euler_characteristic() const {
        return vertices - edge_count() + triangle_count() -
               static_cast<int>(tetrahedra.size());
    }
    bool operator==(const Nerve& o) const {
        return vertices == o.vertices && edges == o.edges && triangles == o.triangles &&
               tetrahedra == o.tetrahedra;
    }
};

using NervePtr = std::shared_ptr<const Nerve>;

inline bool same_nerve(const NervePtr& a, const NervePtr& b) {
    return a == b || (a && b && *a == *b);
}

inline Result<Nerve> validate_nerve(int vertices, std::vector<std::array<int, 2>> edges,
                                    std::vector<std::array<int, 3>> triangles = {},
                                    std::vector<std::array<int, 4>> tetrahedra = {},
                                    bool strict = false) {
    if (vertices <= 0) return make_diag("bad-vertices", "vertex count must be positive");
    Nerve n;
    n.vertices = vertices;

    auto in_range = [&](int v) { return v >= 0 && v < vertices; };
    auto sort_check = [&](auto& simplex) -> bool {
        std::sort(simplex.begin(), simplex.end());
        for (size_t i = 0; i < simplex.size(); ++i) {
            if (!in_range(simplex[i])) return false;
            if (i > 0 && simplex[i] == simplex[i - 1]) return false;  // repeated vertex
        }
        return true;
    };
    for (auto& e : edges)
        if (!sort_check(e))
            return make_diag("bad-simplex", "edge with repeated or out-of-range vertex",
                             {e[0], e[1]});
    for (auto& t : triangles)
        if (!sort_check(t))
            return make_diag("bad-simplex", "triangle with repeated or out-of-range vertex",
                             {t[0], t[1], t[2]});
    for (auto& q : tetrahedra)
        if (!sort_check(q))
            return make_diag("bad-simplex", "tetrahedron with repeated or out-of-range vertex",
                             {q[0], q[1], q[2], q[3]});

    auto dedupe = [](auto& v, const char* what) -> std::optional<Diagnostic> {
        std::sort(v.begin(), v.end());
        auto dup = std::adjacent_find(v.begin(), v.end());
        if (dup != v.end())
            return make_diag("duplicate-simplex", std::string("duplicate ") + what);
        return std::nullopt;
    };
    if (auto d = dedupe(edges, "edge")) return *d;
    if (auto d = dedupe(triangles, "triangle")) return *d;
    if (auto d = dedupe(tetrahedra, "tetrahedron")) return *d;

    // face closure, top down
    for (const auto& q : tetrahedra) {
        std::array<std::array<int, 3>, 4> faces = {{{q[0], q[1], q[2]},
                                                    {q[0], q[1], q[3]},
                                                    {q[0], q[2], q[3]},
                                                    {q[1], q[2], q[3]}}};
        for (const auto& f : faces) {
            if (!std::binary_search(triangles.begin(), triangles.end(), f)) {
                if (strict)
                    return make_diag("missing-face", "tetrahedron face not listed",
                                     {f[0], f[1], f[2]});
                triangles.push_back(f);
                std::sort(triangles.begin(), triangles.end());
                n.warnings.push_back("inserted missing triangle [" + std::to_string(f[0]) + "," +
                                     std::to_string(f[1]) + "," + std::to_string(f[2]) + "]");
            }
        }
    }
    for (const auto& t : triangles) {
        std::array<std::array<int, 2>, 3> faces = {{{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
        for (const auto& f : faces) {
            if (!std::binary_search(edges.begin(), edges.end(), f)) {
                if (strict)
                    return make_diag("missing-face", "triangle edge not listed", {f[0], f[1]});
                edges.push_back(f);
                std::sort(edges.begin(), edges.end());
                n.warnings.push_back("inserted missing edge [" + std::to_string(f[0]) + "," +
                                     std::to_string(f[1]) + "]");
            }
        }
    }

    n.edges = std::move(edges);
    n.triangles = std::move(triangles);
    n.tetrahedra = std::move(tetrahedra);

    // components by union-find over edges
    std::vector<int> parent(vertices);
    for (int v = 0; v < vertices; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : n.edges) parent[find(e[0])] = find(e[1]);
    n.component.assign(vertices, -1);
    n.components = 0;
    for (int v = 0; v < vertices; ++v) {
        int r = find(v);
        if (n.component[r] < 0) n.component[r] = n.components++;
        n.component[v] = n.component[r];
    }
    return n;
}

// Deterministic BFS spanning forest: roots are the least vertex of each
// component, adjacency scanned in ascending order.
struct SpanningForest {
    std::vector<int> parent;       // per vertex, -1 at roots
    std::vector<int> parent_edge;  // edge index to parent, -1 at roots
    std::vector<int> bfs_order;    // all vertices, roots first within component
    std::vector<char> tree_edge;   // per edge
    std::vector<int> root;         // per component
};

inline SpanningForest spanning_forest(const Nerve& n) {
    SpanningForest f;
    f.parent.assign(n.vertices, -1);
    f.parent_edge.assign(n.vertices, -1);
    f.tree_edge.assign(n.edges.size(), 0);
    f.root.assign(n.components, -1);

    std::vector<std::vector<std::pair<int, int>>> adj(n.vertices);  // (neighbor, edge idx)
    for (size_t e = 0; e < n.edges.size(); ++e) {
        adj[n.edges[e][0]].push_back({n.edges[e][1], static_cast<int>(e)});
        adj[n.edges[e][1]].push_back({n.edges[e][0], static_cast<int>(e)});
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<char> visited(n.vertices, 0);
    for (int s = 0; s < n.vertices; ++s) {
        if (visited[s]) continue;
        f.root[n.component[s]] = s;
        std::vector<int> queue{s};
        visited[s] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            f.bfs_order.push_back(v);
            for (auto [w, e] : adj[v]) {
                if (visited[w]) continue;
                visited[w] = 1;
                f.parent[w] = v;
                f.parent_edge[w] = e;
                f.tree_edge[e] = 1;
                queue.push_back(w);
            }
        }
    }
    return f;
}

}  // namespace xmod
