// Built-in catalog: the shipped groups, crossed modules, nerves and edge
// labelings that tests and the CLI refer to by name.
//
//   J_n   : (Z2, Z_n) with trivial t and inversion action (Jandl models)
//   V4    : (Z2, Z4) with t the mod-2 surjection and trivial action
//   AdS3  : the adjoint module S3 -> Aut(S3)
//   D1Z4, D1S3 : (G, G, id, Ad)
//
//   Disc2 : one filled triangle       Circ3 : hollow triangle
//   Sphere: boundary of the 3-simplex RP26  : 6-vertex projective plane,
//           built as the antipodal quotient of the icosahedron.
#pragma once

#include <map>

#include "xmod/cocycle.hpp"

namespace xmod {
namespace fixtures {

inline std::map<std::string, GroupPtr> groups() {
    std::map<std::string, GroupPtr> g;
    g["Z2"] = cyclic_group(2);
    g["Z3"] = cyclic_group(3);
    g["Z4"] = cyclic_group(4);
    g["Z2xZ2"] = direct_product(cyclic_group(2), cyclic_group(2));
    g["S3"] = symmetric_s3();
    g["D4"] = dihedral_d4();
    return g;
}

// Z2 acting on Z_n by inversion.
inline XModPtr jandl_module(int n) {
    GroupPtr zn = cyclic_group(n);
    GroupPtr z2 = cyclic_group(2);
    GroupHom t{zn, z2, std::vector<int>(n, 0)};
    std::vector<int> act(2 * n);
    for (int g = 0; g < n; ++g) {
        act[g] = g;
        act[n + g] = (n - g) % n;
    }
    return validate_crossed_module(zn, z2, std::move(t),
                                   validate_action(z2, zn, std::move(act)).value())
        .value();
}

inline XModPtr v4_module() {
    GroupPtr z4 = cyclic_group(4);
    GroupPtr z2 = cyclic_group(2);
    std::vector<int> tmap = {0, 1, 0, 1};
    GroupHom t = validate_hom(z4, z2, std::move(tmap)).value();
    return validate_crossed_module(z4, z2, std::move(t), trivial_action(z2, z4)).value();
}

inline XModPtr identity_module(GroupPtr g) {
    std::vector<int> act(static_cast<size_t>(g->order) * g->order);
    for (int h = 0; h < g->order; ++h)
        for (int x = 0; x < g->order; ++x) act[h * g->order + x] = g->conj(h, x);
    return validate_crossed_module(g, g, identity_hom(g),
                                   validate_action(g, g, std::move(act)).value())
        .value();
}

inline std::map<std::string, XModPtr> crossed_modules() {
    std::map<std::string, XModPtr> xm;
    xm["J2"] = jandl_module(2);
    xm["J3"] = jandl_module(3);
    xm["J4"] = jandl_module(4);
    xm["V4"] = v4_module();
    xm["AdS3"] = adjoint_module(symmetric_s3()).value();
    xm["D1Z4"] = identity_module(cyclic_group(4));
    xm["D1S3"] = identity_module(symmetric_s3());
    return xm;
}

// ---------------------------------------------------------------------------
// Nerves

inline Nerve disc2() {
    return validate_nerve(3, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}}).value();
}

inline Nerve circ3() { return validate_nerve(3, {{0, 1}, {0, 2}, {1, 2}}).value(); }

inline Nerve sphere() {
    return validate_nerve(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                          {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})
        .value();
}

// The 6-vertex projective plane, constructed as the antipodal quotient of the
// icosahedron (apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11;
// the antipode of upper vertex u_i is lower vertex l_{i+2}).
inline Nerve rp26() {
    std::vector<std::array<int, 3>> faces;
    auto up = [](int i) { return 1 + (i % 5 + 5) % 5; };
    auto lo = [](int i) { return 6 + (i % 5 + 5) % 5; };
    for (int i = 0; i < 5; ++i) {
        faces.push_back({0, up(i), up(i + 1)});
        faces.push_back({11, lo(i), lo(i + 1)});
        faces.push_back({up(i), up(i + 1), lo(i)});
        faces.push_back({up(i + 1), lo(i), lo(i + 1)});
    }
    std::vector<int> antipode(12);
    antipode[0] = 11;
    antipode[11] = 0;
    for (int i = 0; i < 5; ++i) {
        antipode[up(i)] = lo(i + 2);
        antipode[lo(i + 2)] = up(i);
    }
    // orbit representatives get ids 0..5
    std::vector<int> orbit(12, -1);
    int next = 0;
    for (int v = 0; v < 12; ++v)
        if (orbit[v] < 0) orbit[v] = orbit[antipode[v]] = next++;
    std::vector<std::array<int, 3>> tris;
    for (auto& f : faces) {
        std::array<int, 3> q{orbit[f[0]], orbit[f[1]], orbit[f[2]]};
        std::sort(q.begin(), q.end());
        tris.push_back(q);
    }
    std::sort(tris.begin(), tris.end());
    tris.erase(std::unique(tris.begin(), tris.end()), tris.end());
    Nerve n = validate_nerve(6, {}, std::move(tris)).value();  // edges by face closure
    if (n.euler_characteristic() != 1 || n.edge_count() != 15 || n.triangle_count() != 10)
        throw std::logic_error("rp26: quotient is not the projective plane");
    return n;
}

inline std::map<std::string, NervePtr> nerves() {
    std::map<std::string, NervePtr> n;
    n["Disc2"] = std::make_shared<const Nerve>(disc2());
    n["Circ3"] = std::make_shared<const Nerve>(circ3());
    n["Sphere"] = std::make_shared<const Nerve>(sphere());
    n["RP26"] = std::make_shared<const Nerve>(rp26());
    return n;
}

// ---------------------------------------------------------------------------
// Named edge labelings (tau documents for the obstruction, bare g-cocycles
// for the structures command)

struct EdgeLabeling {
    std::string nerve;        // fixture/workspace name
    std::vector<int> values;  // per edge; group interpreted per use

    bool operator==(const EdgeLabeling& o) const {
        return nerve == o.nerve && values == o.values;
    }
};

// w1: a representative of the nontrivial class of H^1(RP26, Z2), found by
// spanning-tree enumeration of the Z2 cocycles on RP26.
inline EdgeLabeling w1_labeling(const NervePtr& rp) {
    XModPtr j2 = jandl_module(2);  // G1 = Z2; reduced cocycles = H^1(RP26, Z2) reps
    auto reduced = enumerate_reduced_cocycles(*rp, *j2);
    for (const auto& labels : reduced)
        if (std::any_of(labels.begin(), labels.end(), [](int v) { return v != 0; }))
            return EdgeLabeling{"RP26", labels};
    throw std::logic_error("w1: no nontrivial class on RP26");
}

inline std::map<std::string, EdgeLabeling> labelings(const std::map<std::string, NervePtr>& n) {
    std::map<std::string, EdgeLabeling> out;
    out["w1"] = w1_labeling(n.at("RP26"));
    // one unit of holonomy around the hollow triangle, on the edge [1,2]
    EdgeLabeling hol;
    hol.nerve = "Circ3";
    hol.values.assign(n.at("Circ3")->edge_count(), 0);
    hol.values[n.at("Circ3")->edge_index(1, 2)] = 1;
    out["hol1"] = hol;
    return out;
}

// Sample cocycles over J3 x Circ3: the trivial one and the holonomy-1 class.
inline std::map<std::string, BibundleCocycle> cocycles(
    const std::map<std::string, NervePtr>& nerves,
    const std::map<std::string, XModPtr>& xms) {
    std::map<std::string, BibundleCocycle> out;
    NervePtr c3 = nerves.at("Circ3");
    XModPtr j3 = xms.at("J3");
    out["triv_J3_Circ3"] = trivial_cocycle(c3, j3);
    std::vector<int> g(c3->edge_count(), 0);
    g[c3->edge_index(1, 2)] = 1;
    out["hol1_J3_Circ3"] = validate_cocycle(c3, j3, std::move(g),
                                            std::vector<int>(c3->vertices, 0)).value();
    return out;
}

}  // namespace fixtures
}  // namespace xmod
