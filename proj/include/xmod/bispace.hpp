// (H,G) bispaces at desk scale: a finite right G-torsor X together with an
// equivariant map psi: X -> H, psi(xg) = psi(x) t(g). The induced left action
// is g x = x alpha(psi(x))^-1(g). Tensor and dual are computed by literal
// orbit enumeration so they can serve as the oracle for the cocycle-level
// formulas; the T(xi) shortcut is only a cross-check.
#pragma once

#include <map>

#include "xmod/crossed_module.hpp"

namespace xmod {

struct Bispace {
    XModPtr xm;
    int points = 0;             // always |G|
    std::vector<int> raction;   // points x |G|
    std::vector<int> psi;       // per point, H element

    int ract(int x, int g) const { return raction[x * xm->G->order + g]; }
    // unique g with x.g == y
    int translation(int x, int y) const {
        for (int g = 0; g < xm->G->order; ++g)
            if (ract(x, g) == y) return g;
        return -1;
    }
    bool operator==(const Bispace& o) const {
        return points == o.points && raction == o.raction && psi == o.psi && same_xm(xm, o.xm);
    }
};

inline Result<Bispace> validate_bispace(XModPtr xm, int points, std::vector<int> raction,
                                        std::vector<int> psi) {
    int ng = xm->G->order;
    if (points != ng)
        return make_diag("not-torsor", "carrier size " + std::to_string(points) +
                                           " differs from |G| = " + std::to_string(ng));
    if (static_cast<int>(raction.size()) != points * ng)
        return make_diag("bad-table", "right action table has wrong size");
    if (static_cast<int>(psi.size()) != points)
        return make_diag("bad-table", "psi table has wrong size");
    for (int v : raction)
        if (v < 0 || v >= points) return make_diag("bad-table", "right action value out of range");
    for (int v : psi)
        if (v < 0 || v >= xm->H->order) return make_diag("bad-table", "psi value out of range");

    Bispace x{xm, points, std::move(raction), std::move(psi)};
    // action axioms
    for (int p = 0; p < points; ++p) {
        if (x.ract(p, 0) != p) return make_diag("not-action", "identity does not fix point", {p});
        for (int g1 = 0; g1 < ng; ++g1)
            for (int g2 = 0; g2 < ng; ++g2)
                if (x.ract(p, xm->G->op(g1, g2)) != x.ract(x.ract(p, g1), g2))
                    return make_diag("not-action", "right action law fails", {p, g1, g2});
    }
    // torsor: for each (p,q) exactly one g with p.g == q
    for (int p = 0; p < points; ++p) {
        std::vector<int> hits(points, 0);
        for (int g = 0; g < ng; ++g) ++hits[x.ract(p, g)];
        for (int q = 0; q < points; ++q)
            if (hits[q] != 1)
                return make_diag("not-torsor",
                                 "point pair (" + std::to_string(p) + "," + std::to_string(q) +
                                     ") reached by " + std::to_string(hits[q]) + " group elements",
                                 {p, q});
    }
    // equivariance and the one-coset consequence
    for (int p = 0; p < points; ++p)
        for (int g = 0; g < ng; ++g)
            if (x.psi[x.ract(p, g)] != xm->H->op(x.psi[p], xm->tmap(g)))
                return make_diag("not-equivariant", "psi(xg) != psi(x) t(g)", {p, g});
    for (int p = 1; p < points; ++p)
        if (xm->type_of(x.psi[p]) != xm->type_of(x.psi[0]))
            return make_diag("not-one-coset", "psi values span several tG cosets", {p});
    return x;
}

// T(xi): carrier G, right multiplication, psi(x) = xi t(x).
inline Bispace standard_bispace(XModPtr xm, int xi) {
    int ng = xm->G->order;
    std::vector<int> ract(static_cast<size_t>(ng) * ng), psi(ng);
    for (int x = 0; x < ng; ++x) {
        psi[x] = xm->H->op(xi, xm->tmap(x));
        for (int g = 0; g < ng; ++g) ract[x * ng + g] = xm->G->op(x, g);
    }
    return validate_bispace(xm, ng, std::move(ract), std::move(psi)).value();
}

inline Bispace trivial_bispace(XModPtr xm) { return standard_bispace(xm, 0); }

struct TypeValue {
    XModPtr xm;
    int coset = 0;  // pi0 element
    bool operator==(const TypeValue& o) const { return coset == o.coset && same_xm(xm, o.xm); }
};

inline TypeValue type_of(const Bispace& x) { return TypeValue{x.xm, x.xm->type_of(x.psi[0])}; }

// Eq-style induced left action: g x = x alpha(psi(x)^-1)(g).
inline int left_action(const Bispace& x, int g, int p) {
    int hinv = x.xm->H->invof(x.psi[p]);
    return x.ract(p, x.xm->act(hinv, g));
}

// ---------------------------------------------------------------------------
// Morphisms and the type-injectivity search

struct BispaceMorphism {
    std::vector<int> map;  // source point -> target point, always bijective
};

// Some morphism X -> Y, or absent. Exists iff the types agree: choose x0, find
// y0 with psi(y0) = psi(x0) and send x0 g -> y0 g.
inline std::optional<BispaceMorphism> find_isomorphism(const Bispace& x, const Bispace& y) {
    if (!same_xm(x.xm, y.xm))
        throw std::invalid_argument("find_isomorphism: bispaces over different crossed modules");
    if (!(type_of(x) == type_of(y))) return std::nullopt;
    int x0 = 0, y0 = -1;
    for (int q = 0; q < y.points; ++q)
        if (y.psi[q] == x.psi[x0]) {
            y0 = q;
            break;
        }
    if (y0 < 0) return std::nullopt;  // unreachable when types agree
    std::vector<int> map(x.points, -1);
    for (int g = 0; g < x.xm->G->order; ++g) map[x.ract(x0, g)] = y.ract(y0, g);
    return BispaceMorphism{std::move(map)};
}

inline bool is_bispace_morphism(const Bispace& x, const Bispace& y, const BispaceMorphism& f) {
    std::vector<char> hit(y.points, 0);
    for (int p = 0; p < x.points; ++p) {
        int q = f.map[p];
        if (q < 0 || q >= y.points || hit[q]) return false;
        hit[q] = 1;
        if (y.psi[q] != x.psi[p]) return false;
        for (int g = 0; g < x.xm->G->order; ++g)
            if (f.map[x.ract(p, g)] != y.ract(q, g)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Tensor and dual

// Tensor with the orbit structure kept around: orbit_of[x*|Y|+y] is the point
// id of x (x) y, so cocycle-level formulas can be checked against it simplex
// by simplex.
struct TensorResult {
    Bispace space;
    std::vector<int> orbit_of;
};

inline TensorResult tensor_detailed(const Bispace& x, const Bispace& y) {
    if (!same_xm(x.xm, y.xm))
        throw std::invalid_argument("tensor: bispaces over different crossed modules");
    const XModPtr& xm = x.xm;
    int ng = xm->G->order;
    int np = x.points * y.points;
    std::vector<int> orbit(np, -1);
    std::vector<std::pair<int, int>> reps;
    for (int p = 0; p < x.points; ++p)
        for (int q = 0; q < y.points; ++q) {
            int cell = p * y.points + q;
            if (orbit[cell] >= 0) continue;
            int id = static_cast<int>(reps.size());
            reps.push_back({p, q});
            for (int g = 0; g < ng; ++g) {
                // (p,q) ~ (p g, g^-1 q)
                int pg = x.ract(p, g);
                int gq = left_action(y, xm->G->invof(g), q);
                orbit[pg * y.points + gq] = id;
            }
        }
    std::vector<int> ract(static_cast<size_t>(reps.size()) * ng), psi(reps.size());
    for (size_t c = 0; c < reps.size(); ++c) {
        auto [p, q] = reps[c];
        psi[c] = xm->H->op(x.psi[p], y.psi[q]);
        for (int g = 0; g < ng; ++g) ract[c * ng + g] = orbit[p * y.points + y.ract(q, g)];
    }
    Bispace t = validate_bispace(xm, static_cast<int>(reps.size()), std::move(ract),
                                 std::move(psi)).value();
    return TensorResult{std::move(t), std::move(orbit)};
}

inline Bispace tensor(const Bispace& x, const Bispace& y) { return tensor_detailed(x, y).space; }

// Same carrier, psi* = psi^-1, x .* g = x . alpha(psi(x)^-1)(g^-1).
inline Bispace dual(const Bispace& x) {
    const XModPtr& xm = x.xm;
    int ng = xm->G->order;
    std::vector<int> ract(static_cast<size_t>(x.points) * ng), psi(x.points);
    for (int p = 0; p < x.points; ++p) {
        psi[p] = xm->H->invof(x.psi[p]);
        int hinv = xm->H->invof(x.psi[p]);
        for (int g = 0; g < ng; ++g)
            ract[p * ng + g] = x.ract(p, xm->act(hinv, xm->G->invof(g)));
    }
    return validate_bispace(xm, x.points, std::move(ract), std::move(psi)).value();
}

// Relabel so the basepoint (least point id) identifies X with T(psi(x0)).
struct CanonicalForm {
    int xi = 0;               // psi at the basepoint
    BispaceMorphism to_standard;  // X -> T(xi)
};

inline CanonicalForm canonicalize(const Bispace& x) {
    CanonicalForm cf;
    cf.xi = x.psi[0];
    std::vector<int> map(x.points, -1);
    for (int g = 0; g < x.xm->G->order; ++g) map[x.ract(0, g)] = g;
    cf.to_standard = BispaceMorphism{std::move(map)};
    return cf;
}

// ---------------------------------------------------------------------------
// Reduction and extension

// X1 = { x : psi(x) = 1 } as a bispace over the kernel module (1, G1);
// non-empty iff Type(X) = 1.
struct KernelReduction {
    Bispace sub;                     // over kernel_module(xm).module
    std::vector<int> points;         // original point ids, sorted
    CrossedModuleMorphism inclusion; // (1,G1) -> (H,G)
};

inline std::optional<KernelReduction> reduce_to_kernel(const Bispace& x) {
    std::vector<int> pts;
    for (int p = 0; p < x.points; ++p)
        if (x.psi[p] == 0) pts.push_back(p);
    if (pts.empty()) return std::nullopt;
    KernelModule km = kernel_module(x.xm);
    const std::vector<int>& embed = km.inclusion.v.map;  // G1 index -> G element
    int n1 = static_cast<int>(embed.size());
    auto pos = [&](int orig) {
        return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), orig) - pts.begin());
    };
    std::vector<int> ract(static_cast<size_t>(pts.size()) * n1), psi(pts.size(), 0);
    for (size_t i = 0; i < pts.size(); ++i)
        for (int g = 0; g < n1; ++g) ract[i * n1 + g] = pos(x.ract(pts[i], embed[g]));
    Bispace sub = validate_bispace(km.module, static_cast<int>(pts.size()), std::move(ract),
                                   std::move(psi)).value();
    return KernelReduction{std::move(sub), std::move(pts), std::move(km.inclusion)};
}

// X(G') = X x_G G' along a morphism (u,v): (x,g') g = (xg, v(g^-1) g'),
// psi'([x,g']) = u(psi(x)) t'(g').
inline Bispace extend(const Bispace& x, const CrossedModuleMorphism& m) {
    if (!same_xm(x.xm, m.source))
        throw std::invalid_argument("extend: bispace is not over the morphism source");
    const XModPtr& tgt = m.target;
    int ng = x.xm->G->order, ng2 = tgt->G->order;
    int cells = x.points * ng2;
    std::vector<int> orbit(cells, -1);
    std::vector<std::pair<int, int>> reps;
    for (int p = 0; p < x.points; ++p)
        for (int q = 0; q < ng2; ++q) {
            if (orbit[p * ng2 + q] >= 0) continue;
            int id = static_cast<int>(reps.size());
            reps.push_back({p, q});
            for (int g = 0; g < ng; ++g)
                orbit[x.ract(p, g) * ng2 + tgt->G->op(m.v.map[x.xm->G->invof(g)], q)] = id;
        }
    std::vector<int> ract(reps.size() * static_cast<size_t>(ng2)), psi(reps.size());
    for (size_t c = 0; c < reps.size(); ++c) {
        auto [p, q] = reps[c];
        psi[c] = tgt->H->op(m.u.map[x.psi[p]], tgt->tmap(q));
        for (int g2 = 0; g2 < ng2; ++g2) ract[c * ng2 + g2] = orbit[p * ng2 + tgt->G->op(q, g2)];
    }
    return validate_bispace(tgt, static_cast<int>(reps.size()), std::move(ract), std::move(psi))
        .value();
}

// ---------------------------------------------------------------------------
// pi0 of the bispace groupoid

struct Pi0Bispaces {
    XModPtr xm;
    std::vector<int> xi;   // class c is represented by T(xi[c]); xi = pi0 section
    GroupPtr group;        // tensor class group; equals the pi0 table
    bool matches_pi0 = false;
};

inline Pi0Bispaces pi0_group(XModPtr xm) {
    Pi0Bispaces out;
    out.xm = xm;
    out.xi = xm->pi0.section;
    int n = xm->pi0.group->order;
    std::vector<Bispace> reps;
    reps.reserve(n);
    for (int c = 0; c < n; ++c) reps.push_back(standard_bispace(xm, out.xi[c]));
    // distinct section representatives are pairwise non-isomorphic
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (find_isomorphism(reps[a], reps[b]).has_value() != (a == b))
                throw std::logic_error("pi0_group: type does not separate classes");
    std::vector<int> table(static_cast<size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Bispace prod = tensor(reps[a], reps[b]);
            int cls = xm->type_of(prod.psi[0]);
            table[static_cast<size_t>(a) * n + b] = cls;
            // the explicit isomorphism backs the table entry
            if (!find_isomorphism(prod, reps[cls]))
                throw std::logic_error("pi0_group: tensor class has no isomorphism witness");
        }
    out.group = make_group(validate_group(n, std::move(table)));
    out.matches_pi0 = out.group->mul == xm->pi0.group->mul;
    return out;
}

// ---------------------------------------------------------------------------
// G bispaces presented by commuting left/right action tables

// Recovers psi: X -> Aut(G) from xg = psi(x)(g) x and returns the bispace over
// the adjoint module of G.
inline Result<Bispace> from_biaction(GroupPtr g, int points, const std::vector<int>& laction,
                                     const std::vector<int>& raction, int cap = 64) {
    int ng = g->order;
    if (points != ng) return make_diag("not-torsor", "carrier size differs from |G|");
    if (static_cast<int>(laction.size()) != ng * points ||
        static_cast<int>(raction.size()) != points * ng)
        return make_diag("bad-table", "action table has wrong size");
    auto lact = [&](int gg, int p) { return laction[gg * points + p]; };
    auto ract = [&](int p, int gg) { return raction[p * ng + gg]; };
    // free + transitive on both sides
    for (int p = 0; p < points; ++p) {
        std::vector<int> hitl(points, 0), hitr(points, 0);
        for (int gg = 0; gg < ng; ++gg) {
            ++hitl[lact(gg, p)];
            ++hitr[ract(p, gg)];
        }
        for (int q = 0; q < points; ++q) {
            if (hitr[q] != 1) return make_diag("not-torsor", "right action not free/transitive", {p, q});
            if (hitl[q] != 1) return make_diag("not-torsor", "left action not free/transitive", {p, q});
        }
    }
    for (int p = 0; p < points; ++p) {
        if (lact(0, p) != p || ract(p, 0) != p)
            return make_diag("not-action", "identity does not act trivially", {p});
        for (int g1 = 0; g1 < ng; ++g1) {
            for (int g2 = 0; g2 < ng; ++g2) {
                if (ract(p, g->op(g1, g2)) != ract(ract(p, g1), g2))
                    return make_diag("not-action", "right action law fails", {p, g1, g2});
                if (lact(g->op(g1, g2), p) != lact(g1, lact(g2, p)))
                    return make_diag("not-action", "left action law fails", {p, g1, g2});
                if (lact(g1, ract(p, g2)) != ract(lact(g1, p), g2))
                    return make_diag("not-commuting",
                                     "left and right actions disagree at (g,x,g') = (" +
                                         std::to_string(g1) + "," + std::to_string(p) + "," +
                                         std::to_string(g2) + ")",
                                     {g1, p, g2});
            }
        }
    }
    auto adj = adjoint_module(g, cap);
    if (!adj.ok()) return adj.error();
    XModPtr xm = adj.value();
    // psi(x)(k) is the unique l with x k = l x
    std::vector<int> psi(points, -1);
    for (int p = 0; p < points; ++p) {
        std::vector<int> perm(ng, -1);
        for (int k = 0; k < ng; ++k) {
            int target = ract(p, k);
            for (int l = 0; l < ng; ++l)
                if (lact(l, p) == target) {
                    perm[k] = l;
                    break;
                }
        }
        for (int k1 = 0; k1 < ng; ++k1)
            for (int k2 = 0; k2 < ng; ++k2)
                if (perm[g->op(k1, k2)] != g->op(perm[k1], perm[k2]))
                    return make_diag("not-automorphism",
                                     "psi(x) fails multiplicativity at (x,g,g') = (" +
                                         std::to_string(p) + "," + std::to_string(k1) + "," +
                                         std::to_string(k2) + ")",
                                     {p, k1, k2});
        // locate within Aut(G); H of the adjoint module indexes the same list
        std::vector<int> act_row(ng);
        for (int k = 0; k < ng; ++k) act_row[k] = perm[k];
        int idx = -1;
        for (int h = 0; h < xm->H->order; ++h) {
            bool match = true;
            for (int k = 0; k < ng && match; ++k) match = xm->act(h, k) == act_row[k];
            if (match) {
                idx = h;
                break;
            }
        }
        if (idx < 0) return make_diag("not-automorphism", "psi(x) is not in Aut(G)", {p});
        psi[p] = idx;
    }
    return validate_bispace(xm, points, raction, std::move(psi));
}

}  // namespace xmod
