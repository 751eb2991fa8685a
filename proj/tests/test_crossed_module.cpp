#include <catch2/catch_amalgamated.hpp>

#include "xmod/fixtures.hpp"

using namespace xmod;

namespace {

std::map<std::string, XModPtr> catalog() { return fixtures::crossed_modules(); }

}  // namespace

TEST_CASE("abelian groups give crossed modules over the trivial group") {
    auto z3 = cyclic_group(3);
    auto one = make_group(validate_group(1, {0}));
    auto r = validate_crossed_module(z3, one, GroupHom{z3, one, {0, 0, 0}},
                                     trivial_action(one, z3));
    REQUIRE(r.ok());
    REQUIRE(r.value()->G1.size() == 3);
    REQUIRE(r.value()->pi0.group->order == 1);
}

TEST_CASE("S3 over the trivial group fails the Peiffer axiom with a witness") {
    auto s3 = symmetric_s3();
    auto one = make_group(validate_group(1, {0}));
    auto r = validate_crossed_module(s3, one, GroupHom{s3, one, std::vector<int>(6, 0)},
                                     trivial_action(one, s3));
    REQUIRE(!r.ok());
    REQUIRE(r.error().code == "axiom2");
    REQUIRE(r.error().witness.size() == 2);
    auto [g, k] = std::pair(static_cast<int>(r.error().witness[0]),
                            static_cast<int>(r.error().witness[1]));
    REQUIRE(s3->conj(g, k) != k);  // the witness really is a non-commuting pair
}

TEST_CASE("Jandl models validate with the right invariants") {
    auto xms = catalog();
    for (int n : {2, 3, 4}) {
        auto xm = xms.at("J" + std::to_string(n));
        REQUIRE(xm->G->order == n);
        REQUIRE(xm->H->order == 2);
        REQUIRE(xm->G1.size() == n);      // t trivial
        REQUIRE(xm->tG.size() == 1);
        REQUIRE(xm->pi0.group->order == 2);
        REQUIRE(xm->pi1.size() == n);
    }
}

TEST_CASE("V4 invariants") {
    auto v4 = catalog().at("V4");
    REQUIRE(v4->G1.elements == std::vector<int>{0, 2});
    REQUIRE(v4->tG.size() == 2);
    REQUIRE(v4->pi0.group->order == 1);
}

TEST_CASE("derived consequences hold across the catalog") {
    for (const auto& [name, xm] : catalog()) {
        CAPTURE(name);
        auto z = center(xm->G);
        for (int g1 : xm->G1.elements) REQUIRE(z.contains(g1));
        REQUIRE(is_normal(xm->tG));
        // pi1 abelian
        for (int a : xm->pi1.elements)
            for (int b : xm->pi1.elements)
                REQUIRE(xm->G->op(a, b) == xm->G->op(b, a));
        // section really sections the projection
        for (int c = 0; c < xm->pi0.group->order; ++c)
            REQUIRE(xm->pi0.projection(xm->pi0_rep(c)) == c);
    }
}

TEST_CASE("adjoint modules") {
    SECTION("S3: everything trivial") {
        auto ad = adjoint_module(symmetric_s3()).value();
        REQUIRE(ad->H->order == 6);
        REQUIRE(ad->pi0.group->order == 1);
        REQUIRE(ad->pi1.size() == 1);
    }
    SECTION("Z4: H = Z2, Ad trivial") {
        auto ad = adjoint_module(cyclic_group(4)).value();
        REQUIRE(ad->H->order == 2);
        for (int g = 0; g < 4; ++g) REQUIRE(ad->tmap(g) == 0);
        REQUIRE(ad->pi0.group->order == 2);
        REQUIRE(ad->pi1.size() == 4);
    }
    SECTION("Z2: all trivial except pi1") {
        auto ad = adjoint_module(cyclic_group(2)).value();
        REQUIRE(ad->H->order == 1);
        REQUIRE(ad->pi0.group->order == 1);
        REQUIRE(ad->pi1.size() == 2);
    }
    SECTION("pi0 is the outer automorphism group") {
        for (GroupPtr g : {cyclic_group(4), symmetric_s3(), dihedral_d4(),
                           direct_product(cyclic_group(2), cyclic_group(2))}) {
            auto ad = adjoint_module(g).value();
            auto aut = enumerate_automorphisms(g).value();
            REQUIRE(ad->pi0.group->order == static_cast<int>(aut.outer_reps.size()));
            auto out = quotient_group(aut.group, aut.inner).value();
            REQUIRE(find_group_isomorphism(*ad->pi0.group, *out.group).has_value());
        }
    }
}

TEST_CASE("morphisms") {
    auto xms = catalog();
    SECTION("identity morphism validates everywhere") {
        for (const auto& [name, xm] : xms) {
            CAPTURE(name);
            auto m = validate_morphism(xm, xm, identity_hom(xm->H), identity_hom(xm->G));
            REQUIRE(m.ok());
        }
    }
    SECTION("kernel inclusion (1,G1) -> (H,G)") {
        for (const auto& [name, xm] : xms) {
            CAPTURE(name);
            auto km = kernel_module(xm);
            REQUIRE(km.module->G->order == xm->G1.size());
            REQUIRE(validate_morphism(km.module, xm, km.inclusion.u, km.inclusion.v).ok());
        }
    }
    SECTION("J4 -> J2 reduction") {
        auto j4 = xms.at("J4");
        auto j2 = xms.at("J2");
        std::vector<int> v = {0, 1, 0, 1};  // Z4 -> Z2
        auto m = validate_morphism(j4, j2, identity_hom(j4->H),
                                   validate_hom(j4->G, j2->G, v).value());
        REQUIRE(m.ok());
    }
    SECTION("equivariance failure carries a witness") {
        // J3 -> J3 with v = id but u trivial: inversion no longer intertwines
        auto j3 = xms.at("J3");
        auto u = validate_hom(j3->H, j3->H, {0, 0}).value();
        auto m = validate_morphism(j3, j3, u, identity_hom(j3->G));
        REQUIRE(!m.ok());
        REQUIRE(m.error().code == "equivariance");
        REQUIRE(m.error().witness == std::vector<long long>{1, 1});
    }
    SECTION("square failure carries a witness") {
        // V4 -> V4 with u = id, v = doubling: t(v(1)) = 0 but u(t(1)) = 1
        auto v4 = xms.at("V4");
        auto v = validate_hom(v4->G, v4->G, {0, 2, 0, 2}).value();
        auto m = validate_morphism(v4, v4, identity_hom(v4->H), v);
        REQUIRE(!m.ok());
        REQUIRE(m.error().code == "square");
        REQUIRE(m.error().witness == std::vector<long long>{1});
    }
    SECTION("composition of valid morphisms is valid") {
        auto j4 = xms.at("J4");
        auto j2 = xms.at("J2");
        auto red = validate_morphism(j4, j2, identity_hom(j4->H),
                                     validate_hom(j4->G, j2->G, {0, 1, 0, 1}).value())
                       .value();
        auto idm = identity_morphism(j2);
        auto comp = compose_morphisms(idm, red);
        REQUIRE(comp.ok());
        REQUIRE(comp.value().v.map == red.v.map);
        // kernel inclusion composed with reduction
        auto km = kernel_module(j4);
        auto comp2 = compose_morphisms(red, km.inclusion);
        REQUIRE(comp2.ok());
    }
}

TEST_CASE("quotient module (H, tG)") {
    auto v4 = catalog().at("V4");
    auto im = quotient_module(v4);
    REQUIRE(im.module->G->order == 2);  // tG = Z2
    REQUIRE(validate_morphism(v4, im.module, im.projection.u, im.projection.v).ok());
}

TEST_CASE("two-group groupoids") {
    auto xms = catalog();
    SECTION("J3: two components, vertex group Z3") {
        auto gp = two_group(xms.at("J3"));
        REQUIRE(gp.object_count() == 2);
        REQUIRE(gp.morphism_count() == 6);
        REQUIRE(gp.components == 2);
        // loops at object 0 = ker t
        std::vector<int> loops;
        for (int m = 0; m < gp.morphism_count(); ++m)
            if (gp.src[m] == 0 && gp.tgt[m] == 0) loops.push_back(m);
        REQUIRE(loops.size() == 3);
    }
    SECTION("t = id: one component, trivial vertex group") {
        auto gp = two_group(xms.at("D1S3"));
        REQUIRE(gp.components == 1);
        int loops = 0;
        for (int m = 0; m < gp.morphism_count(); ++m)
            if (gp.src[m] == 0 && gp.tgt[m] == 0) ++loops;
        REQUIRE(loops == 1);
    }
    SECTION("adjoint S3: 6 objects, 36 morphisms, 1 component") {
        auto gp = two_group(xms.at("AdS3"));
        REQUIRE(gp.object_count() == 6);
        REQUIRE(gp.morphism_count() == 36);
        REQUIRE(gp.components == 1);
    }
    SECTION("source, target and composition laws") {
        for (const auto& name : {"J3", "V4", "AdS3"}) {
            auto xm = xms.at(name);
            auto gp = two_group(xm);
            int ng = xm->G->order;
            // a groupoid object in groups: src and tgt are homomorphisms
            REQUIRE(validate_hom(gp.morphisms, xm->H, gp.src).ok());
            REQUIRE(validate_hom(gp.morphisms, xm->H, gp.tgt).ok());
            for (int m = 0; m < gp.morphism_count(); ++m) {
                REQUIRE(gp.src[m] == m / ng);
                REQUIRE(gp.tgt[m] == xm->H->op(m / ng, xm->tmap(m % ng)));
                // inverses compose to the identity at the source
                int inv = gp.inverse_morphism(m);
                auto comp = gp.compose(m, inv);
                REQUIRE(comp.has_value());
                REQUIRE(*comp == gp.identity_at(gp.src[m]));
            }
            // components biject with pi0, vertex group with pi1
            std::set<int> comps(gp.object_component.begin(), gp.object_component.end());
            REQUIRE(static_cast<int>(comps.size()) == xm->pi0.group->order);
            int loops = 0;
            for (int m = 0; m < gp.morphism_count(); ++m)
                if (gp.src[m] == 0 && gp.tgt[m] == 0) ++loops;
            REQUIRE(loops == xm->pi1.size());
        }
    }
}

TEST_CASE("crossed module document invariants (fixture count)") {
    auto xms = catalog();
    REQUIRE(xms.size() == 7);
    for (const auto& name : {"J2", "J3", "J4", "V4", "AdS3", "D1Z4", "D1S3"})
        REQUIRE(xms.count(name) == 1);
}
