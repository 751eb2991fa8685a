// Crossed modules (H,G): a homomorphism t: G -> H and an action alpha of H on
// G subject to
//   (1)  t(alpha(h)(g)) = h t(g) h^-1
//   (2)  alpha(t(g))(k) = g k g^-1
// Validation computes the derived data: G1 = ker t (central), tG = im t
// (normal in H), pi0 = H/tG with its least-representative section, pi1 = G1.
#pragma once

#include "xmod/automorphisms.hpp"
#include "xmod/group.hpp"

namespace xmod {

struct CrossedModule {
    GroupPtr G, H;
    GroupHom t;         // G -> H
    GroupAction alpha;  // H acting on G

    Subgroup G1;          // ker t, subgroup of G
    Subgroup tG;          // im t, subgroup of H
    QuotientResult pi0;   // H / tG
    Subgroup pi1;         // = G1
    std::vector<int> t_section;  // per H element: least g with t(g) = h, or -1

    int act(int h, int g) const { return alpha(h, g); }
    int tmap(int g) const { return t.map[g]; }
    int type_of(int h) const { return pi0.projection(h); }  // coset in pi0
    // least H-representative of a pi0 element
    int pi0_rep(int c) const { return pi0.section[c]; }
};

using XModPtr = std::shared_ptr<const CrossedModule>;

inline bool same_xm(const XModPtr& a, const XModPtr& b) {
    return a == b || (a && b && same_group(a->G, b->G) && same_group(a->H, b->H) &&
                      a->t.map == b->t.map && a->alpha.act == b->alpha.act);
}

inline Result<XModPtr> validate_crossed_module(GroupPtr G, GroupPtr H, GroupHom t,
                                               GroupAction alpha) {
    if (!same_group(t.source, G) || !same_group(t.target, H))
        return make_diag("mismatch", "t is not a homomorphism G -> H");
    if (!same_group(alpha.actor, H) || !same_group(alpha.space, G))
        return make_diag("mismatch", "alpha is not an action of H on G");

    // axiom 1, reported with the lexicographically least witness (h,g)
    for (int h = 0; h < H->order; ++h)
        for (int g = 0; g < G->order; ++g)
            if (t.map[alpha(h, g)] != H->conj(h, t.map[g]))
                return make_diag("axiom1",
                                 "t(alpha(h)(g)) != h t(g) h^-1 at (h,g) = (" + std::to_string(h) +
                                     "," + std::to_string(g) + ")",
                                 {h, g});
    // axiom 2
    for (int g = 0; g < G->order; ++g)
        for (int k = 0; k < G->order; ++k)
            if (alpha(t.map[g], k) != G->conj(g, k))
                return make_diag("axiom2",
                                 "alpha(t(g)) != Ad(g) at (g,k) = (" + std::to_string(g) + "," +
                                     std::to_string(k) + ")",
                                 {g, k});

    CrossedModule xm;
    xm.G = G;
    xm.H = H;
    xm.t = std::move(t);
    xm.alpha = std::move(alpha);

    std::vector<int> ker, img;
    xm.t_section.assign(H->order, -1);
    for (int g = 0; g < G->order; ++g) {
        int h = xm.t.map[g];
        if (h == 0) ker.push_back(g);
        if (xm.t_section[h] < 0) xm.t_section[h] = g;  // least preimage
        img.push_back(h);
    }
    xm.G1 = make_subgroup(G, std::move(ker)).value();
    xm.tG = make_subgroup(H, std::move(img)).value();
    auto q = quotient_group(H, xm.tG);
    if (!q.ok()) return q.error();  // unreachable: tG is normal in H
    xm.pi0 = std::move(q).value();
    xm.pi1 = xm.G1;
    return std::make_shared<const CrossedModule>(std::move(xm));
}

// ---------------------------------------------------------------------------
// Morphisms

struct CrossedModuleMorphism {
    XModPtr source, target;
    GroupHom u;  // H -> H'
    GroupHom v;  // G -> G'
};

inline Result<CrossedModuleMorphism> validate_morphism(XModPtr src, XModPtr tgt, GroupHom u,
                                                       GroupHom v) {
    if (!same_group(u.source, src->H) || !same_group(u.target, tgt->H) ||
        !same_group(v.source, src->G) || !same_group(v.target, tgt->G))
        return make_diag("mismatch", "morphism components do not match the crossed modules");
    for (int g = 0; g < src->G->order; ++g)
        if (u.map[src->tmap(g)] != tgt->tmap(v.map[g]))
            return make_diag("square", "u(t(g)) != t'(v(g)) at g = " + std::to_string(g), {g});
    for (int h = 0; h < src->H->order; ++h)
        for (int g = 0; g < src->G->order; ++g)
            if (v.map[src->act(h, g)] != tgt->act(u.map[h], v.map[g]))
                return make_diag("equivariance",
                                 "v(alpha(h)(g)) != alpha'(u(h))(v(g)) at (h,g) = (" +
                                     std::to_string(h) + "," + std::to_string(g) + ")",
                                 {h, g});
    return CrossedModuleMorphism{std::move(src), std::move(tgt), std::move(u), std::move(v)};
}

inline CrossedModuleMorphism identity_morphism(XModPtr xm) {
    return CrossedModuleMorphism{xm, xm, identity_hom(xm->H), identity_hom(xm->G)};
}

inline Result<CrossedModuleMorphism> compose_morphisms(const CrossedModuleMorphism& second,
                                                       const CrossedModuleMorphism& first) {
    if (!same_xm(first.target, second.source))
        return make_diag("mismatch", "morphisms are not composable");
    return validate_morphism(first.source, second.target, compose_homs(second.u, first.u),
                             compose_homs(second.v, first.v));
}

// ---------------------------------------------------------------------------
// Canonical constructions

// G -> Aut(G) -> Aut(G) with t = Ad and alpha = evaluation.
inline Result<XModPtr> adjoint_module(GroupPtr g, int cap = 64) {
    auto aut = enumerate_automorphisms(g, cap);
    if (!aut.ok()) return aut.error();
    const AutGroupData& data = aut.value();
    const FiniteGroup& base = *g;

    std::vector<int> tmap(base.order);
    for (int c = 0; c < base.order; ++c) {
        std::vector<int> ad(base.order);
        for (int e = 0; e < base.order; ++e) ad[e] = base.conj(c, e);
        tmap[c] = data.index_of(ad);
    }
    auto t = validate_hom(g, data.group, std::move(tmap));
    if (!t.ok()) return t.error();

    std::vector<int> act(static_cast<size_t>(data.group->order) * base.order);
    for (int a = 0; a < data.group->order; ++a)
        for (int e = 0; e < base.order; ++e)
            act[static_cast<size_t>(a) * base.order + e] = data.autos[a][e];
    auto alpha = validate_action(data.group, g, std::move(act));
    if (!alpha.ok()) return alpha.error();

    return validate_crossed_module(g, data.group, std::move(t).value(), std::move(alpha).value());
}

// The crossed submodule (1, G1); inclusion morphism into xm.
struct KernelModule {
    XModPtr module;
    CrossedModuleMorphism inclusion;
};

inline KernelModule kernel_module(XModPtr xm) {
    auto g1 = subgroup_as_group(xm->G1);
    GroupPtr one = make_group(validate_group(1, {0}, {"1"}));
    GroupHom t{g1.group, one, std::vector<int>(g1.group->order, 0)};
    GroupAction alpha = trivial_action(one, g1.group);
    XModPtr sub = validate_crossed_module(g1.group, one, std::move(t), std::move(alpha)).value();
    GroupHom u{one, xm->H, {0}};
    auto m = validate_morphism(sub, xm, std::move(u),
                               GroupHom{g1.group, xm->G, g1.inclusion.map});
    return KernelModule{sub, std::move(m).value()};
}

// The quotient crossed module (H, tG) with t' the inclusion and alpha' the
// conjugation action of H on its normal subgroup tG; projection morphism has
// u = id and v = t (corestricted).
struct ImageModule {
    XModPtr module;
    CrossedModuleMorphism projection;
};

inline ImageModule quotient_module(XModPtr xm) {
    auto tg = subgroup_as_group(xm->tG);
    std::vector<int> incl = tg.inclusion.map;
    GroupHom t{tg.group, xm->H, incl};
    std::vector<int> act(static_cast<size_t>(xm->H->order) * tg.group->order);
    for (int h = 0; h < xm->H->order; ++h)
        for (int e = 0; e < tg.group->order; ++e)
            act[static_cast<size_t>(h) * tg.group->order + e] =
                xm->tG.index_of(xm->H->conj(h, incl[e]));
    GroupAction alpha{xm->H, tg.group, std::move(act)};
    XModPtr quot = validate_crossed_module(tg.group, xm->H, std::move(t), std::move(alpha)).value();
    std::vector<int> v(xm->G->order);
    for (int g = 0; g < xm->G->order; ++g) v[g] = xm->tG.index_of(xm->tmap(g));
    auto m = validate_morphism(xm, quot, identity_hom(xm->H), GroupHom{xm->G, tg.group, std::move(v)});
    return ImageModule{quot, std::move(m).value()};
}

// ---------------------------------------------------------------------------
// The associated 2-group, as a finite groupoid

struct TwoGroupGroupoid {
    XModPtr xm;
    GroupPtr morphisms;  // H ⋊ G, pair (h,g) at index h*|G|+g
    std::vector<int> src, tgt;        // per morphism
    std::vector<int> object_component;  // per object (H element)
    int components = 0;

    int object_count() const { return xm->H->order; }
    int morphism_count() const { return morphisms->order; }
    int identity_at(int h) const { return h * xm->G->order; }
    int inverse_morphism(int m) const {
        int ng = xm->G->order;
        return tgt[m] * ng + xm->G->invof(m % ng);
    }
    // compose f then g, defined iff tgt(f) == src(g)
    std::optional<int> compose(int f, int g) const {
        if (tgt[f] != src[g]) return std::nullopt;
        int ng = xm->G->order;
        return src[f] * ng + xm->G->op(f % ng, g % ng);
    }
};

inline TwoGroupGroupoid two_group(XModPtr xm) {
    TwoGroupGroupoid gp;
    gp.xm = xm;
    gp.morphisms = semidirect_product(xm->H, xm->G, xm->alpha);
    int ng = xm->G->order;
    gp.src.resize(gp.morphisms->order);
    gp.tgt.resize(gp.morphisms->order);
    for (int m = 0; m < gp.morphisms->order; ++m) {
        int h = m / ng, g = m % ng;
        gp.src[m] = h;
        gp.tgt[m] = xm->H->op(h, xm->tmap(g));
    }
    // objects h, h' connected iff they share a tG coset
    gp.object_component.resize(xm->H->order);
    for (int h = 0; h < xm->H->order; ++h) gp.object_component[h] = xm->type_of(h);
    gp.components = xm->pi0.group->order;
    // vertex group at the identity object is ker t
    int loops = 0;
    for (int m = 0; m < gp.morphisms->order; ++m)
        if (gp.src[m] == 0 && gp.tgt[m] == 0) ++loops;
    if (loops != xm->pi1.size())
        throw std::logic_error("two_group: vertex group does not match pi1");
    return gp;
}

}  // namespace xmod
