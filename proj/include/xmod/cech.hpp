// Abelian Cech cohomology of a nerve with finite abelian coefficients. The
// coefficient group is split into cyclic factors; per factor, cocycle and
// coboundary questions become integer linear algebra with congruence side
// conditions, solved exactly through the Smith normal form.
//
// Sign conventions, fixed once:
//   (d0 x)_{ij}  = x_j - x_i
//   (d1 y)_{ijk} = y_{jk} - y_{ik} + y_{ij}
//   (d2 z)_{ijkl} = z_{jkl} - z_{ikl} + z_{ijl} - z_{ijk}
#pragma once

#include <map>
#include <numeric>

#include "xmod/group.hpp"
#include "xmod/nerve.hpp"
#include "xmod/snf.hpp"

namespace xmod {

// ---------------------------------------------------------------------------
// Cyclic decomposition of a finite abelian group

struct CyclicDecomposition {
    GroupPtr group;
    std::vector<int> factors;                 // cyclic orders n1..nr
    std::vector<int> generators;              // group element per factor
    std::vector<std::vector<int>> elem_to_vec;  // |A| x r exponent vectors

    int rank() const { return static_cast<int>(factors.size()); }
    int from_vec(const std::vector<int>& e) const {
        int x = 0;
        for (int f = 0; f < rank(); ++f) {
            int ef = ((e[f] % factors[f]) + factors[f]) % factors[f];
            x = group->op(x, group->power(generators[f], ef));
        }
        return x;
    }
};

// Max-order element first, then recurse on the quotient; lifts are chosen with
// matching order, which is always possible for abelian groups.
inline Result<CyclicDecomposition> cyclic_decomposition(GroupPtr a) {
    if (!a->abelian()) return make_diag("not-abelian", "coefficient group is not abelian");
    CyclicDecomposition d;
    d.group = a;
    if (a->order == 1) {
        d.elem_to_vec = {{}};
        return d;
    }

    // peel one maximal-order generator per step, working in successive quotients
    GroupPtr current = a;
    std::vector<GroupHom> projections;  // a -> current, composed
    GroupHom proj = identity_hom(a);
    while (current->order > 1) {
        int best = 1, best_ord = 1;
        for (int x = 1; x < current->order; ++x) {
            int o = current->element_order(x);
            if (o > best_ord) {
                best = x;
                best_ord = o;
            }
        }
        // lift `best` through proj to an element of A of the same order
        int lifted = -1;
        for (int x = 0; x < a->order; ++x)
            if (proj.map[x] == best && a->element_order(x) == best_ord) {
                lifted = x;
                break;
            }
        if (lifted < 0) return make_diag("internal", "no order-preserving lift found");
        d.generators.push_back(lifted);
        d.factors.push_back(best_ord);
        auto sub = make_subgroup(current, [&] {
            std::vector<int> cyc;
            int x = 0;
            do {
                cyc.push_back(x);
                x = current->op(x, best);
            } while (x != 0);
            return cyc;
        }());
        auto q = quotient_group(current, sub.value());
        if (!q.ok()) return q.error();
        proj = compose_homs(q.value().projection, proj);
        current = q.value().group;
    }

    // verify the product map is a bijection and record exponent vectors
    int r = d.rank();
    std::vector<int> radix(r);
    for (int f = 0; f < r; ++f) radix[f] = d.factors[f];
    long long total = 1;
    for (int n : radix) total *= n;
    if (total != a->order) return make_diag("internal", "cyclic factors do not multiply to |A|");
    d.elem_to_vec.assign(a->order, {});
    std::vector<char> seen(a->order, 0);
    std::vector<int> e(r, 0);
    while (true) {
        int x = d.from_vec(e);
        if (seen[x]) return make_diag("internal", "cyclic decomposition not bijective");
        seen[x] = 1;
        d.elem_to_vec[x] = e;
        int f = r - 1;
        while (f >= 0 && ++e[f] == radix[f]) e[f--] = 0;
        if (f < 0) break;
    }
    return d;
}

// Canonical invariant factors (each dividing the next) from a bag of cyclic orders.
inline std::vector<int> invariant_factors(std::vector<int> orders) {
    std::map<int, std::vector<int>> by_prime;  // prime -> exponents, descending later
    for (int n : orders) {
        for (int p = 2; p * p <= n; ++p)
            while (n % p == 0) {
                int pk = p;
                while (n % (pk * p) == 0) pk *= p;
                by_prime[p].push_back(pk);
                n /= pk;
            }
        if (n > 1) by_prime[n].push_back(n);
    }
    size_t slots = 0;
    for (auto& [p, v] : by_prime) {
        std::sort(v.rbegin(), v.rend());
        slots = std::max(slots, v.size());
    }
    std::vector<int> out(slots, 1);
    for (auto& [p, v] : by_prime)
        for (size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
    std::sort(out.begin(), out.end());  // ascending, d1 | d2 | ...
    out.erase(std::remove(out.begin(), out.end(), 1), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// The cochain complex of a nerve

struct AbelianCochainComplex {
    NervePtr nerve;
    CyclicDecomposition coeff;
    IMat d0, d1, d2;  // E x V, T x E, Q x T integer sign matrices

    int cochain_dim(int q) const {
        switch (q) {
            case 0: return nerve->vertices;
            case 1: return nerve->edge_count();
            case 2: return nerve->triangle_count();
            default: return static_cast<int>(nerve->tetrahedra.size());
        }
    }
    const IMat& coboundary(int q) const { return q == 0 ? d0 : (q == 1 ? d1 : d2); }
};

inline AbelianCochainComplex build_complex(NervePtr nerve, const CyclicDecomposition& coeff) {
    AbelianCochainComplex c;
    c.nerve = nerve;
    c.coeff = coeff;
    const Nerve& n = *nerve;
    c.d0.assign(n.edge_count(), std::vector<long long>(n.vertices, 0));
    for (int e = 0; e < n.edge_count(); ++e) {
        c.d0[e][n.edges[e][1]] += 1;
        c.d0[e][n.edges[e][0]] -= 1;
    }
    c.d1.assign(n.triangle_count(), std::vector<long long>(n.edge_count(), 0));
    for (int t = 0; t < n.triangle_count(); ++t) {
        auto [i, j, k] = std::tuple(n.triangles[t][0], n.triangles[t][1], n.triangles[t][2]);
        c.d1[t][n.edge_index(j, k)] += 1;
        c.d1[t][n.edge_index(i, k)] -= 1;
        c.d1[t][n.edge_index(i, j)] += 1;
    }
    c.d2.assign(n.tetrahedra.size(), std::vector<long long>(n.triangle_count(), 0));
    auto tri_index = [&](int i, int j, int k) {
        std::array<int, 3> key{i, j, k};
        return static_cast<int>(std::lower_bound(n.triangles.begin(), n.triangles.end(), key) -
                                n.triangles.begin());
    };
    for (size_t q = 0; q < n.tetrahedra.size(); ++q) {
        auto [i, j, k, l] = std::tuple(n.tetrahedra[q][0], n.tetrahedra[q][1], n.tetrahedra[q][2],
                                       n.tetrahedra[q][3]);
        c.d2[q][tri_index(j, k, l)] += 1;
        c.d2[q][tri_index(i, k, l)] -= 1;
        c.d2[q][tri_index(i, j, l)] += 1;
        c.d2[q][tri_index(i, j, k)] -= 1;
    }
    return c;
}

inline Result<AbelianCochainComplex> build_complex(NervePtr nerve, GroupPtr coeff) {
    auto d = cyclic_decomposition(coeff);
    if (!d.ok()) return d.error();
    return build_complex(nerve, d.value());
}

// Cochains are stored as coefficient-group element indices per q-simplex;
// per-factor integer vectors are derived on demand.
inline std::vector<long long> cochain_factor(const AbelianCochainComplex& c,
                                             const std::vector<int>& cochain, int factor) {
    std::vector<long long> v(cochain.size());
    for (size_t i = 0; i < cochain.size(); ++i)
        v[i] = c.coeff.elem_to_vec[cochain[i]][factor];
    return v;
}

// d(cochain) as element indices on the (q+1)-simplices
inline std::vector<int> coboundary_of(const AbelianCochainComplex& c, int q,
                                      const std::vector<int>& cochain) {
    const IMat& d = c.coboundary(q);
    int out_dim = c.cochain_dim(q + 1);
    int r = c.coeff.rank();
    std::vector<std::vector<int>> vecs(out_dim, std::vector<int>(r, 0));
    for (int f = 0; f < r; ++f) {
        int n = c.coeff.factors[f];
        for (int row = 0; row < out_dim; ++row) {
            long long acc = 0;
            for (size_t col = 0; col < cochain.size(); ++col)
                acc += d[row][col] * c.coeff.elem_to_vec[cochain[col]][f];
            vecs[row][f] = static_cast<int>(((acc % n) + n) % n);
        }
    }
    std::vector<int> out(out_dim);
    for (int row = 0; row < out_dim; ++row) out[row] = c.coeff.from_vec(vecs[row]);
    return out;
}

inline bool is_cocycle(const AbelianCochainComplex& c, int q, const std::vector<int>& cochain) {
    if (q >= 2 && c.cochain_dim(q + 1) == 0) return true;
    auto d = coboundary_of(c, q, cochain);
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Cohomology groups and coboundary membership

struct CohomologyGroup {
    std::vector<int> factors;  // canonical invariant factors, each > 1
    long long order() const {
        return std::accumulate(factors.begin(), factors.end(), 1LL,
                               [](long long a, int b) { return a * b; });
    }
    bool trivial() const { return factors.empty(); }
};

// H^q with Z_n coefficients: Z~ = { x : d_q x = 0 mod n }, B~ = im d_{q-1} + n Z^dim,
// quotient read off from the SNF of B~'s generators expressed in a basis of Z~.
inline std::vector<int> cohomology_mod_n(const AbelianCochainComplex& c, int q, int n) {
    int dim = c.cochain_dim(q);
    if (dim == 0) return {};
    const IMat& dq = c.coboundary(q);
    const IMat& dprev = c.coboundary(q - 1);
    int dim_next = c.cochain_dim(q + 1);
    int dim_prev = c.cochain_dim(q - 1);

    // kernel of [d_q | n I] projected to the x block gives generators of Z~
    IMat stacked(dim_next, std::vector<long long>(dim + dim_next, 0));
    for (int i = 0; i < dim_next; ++i) {
        for (int j = 0; j < dim; ++j) stacked[i][j] = dq[i][j];
        stacked[i][dim + i] = n;
    }
    auto kernel = integer_kernel_basis(stacked, dim + dim_next);
    IMat zgen;  // columns as rows here for convenience
    for (auto& col : kernel) zgen.push_back(std::vector<long long>(col.begin(), col.begin() + dim));

    // extract a lattice basis of Z~ from its generators: columns of (gen^T) V at
    // nonzero diagonal positions of the SNF
    IMat genmat(dim, std::vector<long long>(zgen.size(), 0));
    for (size_t j = 0; j < zgen.size(); ++j)
        for (int i = 0; i < dim; ++i) genmat[i][j] = zgen[j][i];
    SmithResult s = smith_normal_form(genmat);
    IMat basis(dim, std::vector<long long>(s.rank, 0));  // dim x rank
    {
        // basis column k = genmat * V e_k
        int gcols = static_cast<int>(zgen.size());
        for (int k = 0; k < s.rank; ++k)
            for (int i = 0; i < dim; ++i) {
                long long acc = 0;
                for (int j = 0; j < gcols; ++j) acc += genmat[i][j] * s.v[j][k];
                basis[i][k] = acc;
            }
    }

    // generators of B~: columns of d_{q-1}^T plus n e_i
    std::vector<std::vector<long long>> bgens;
    for (int j = 0; j < dim_prev; ++j) {
        std::vector<long long> col(dim);
        for (int i = 0; i < dim; ++i) col[i] = dprev[i][j];
        bgens.push_back(std::move(col));
    }
    for (int i = 0; i < dim; ++i) {
        std::vector<long long> col(dim, 0);
        col[i] = n;
        bgens.push_back(std::move(col));
    }

    // express each generator in the Z~ basis; solutions exist and are unique
    IMat w(s.rank, std::vector<long long>(bgens.size(), 0));
    for (size_t bj = 0; bj < bgens.size(); ++bj) {
        auto sol = solve_integer(basis, s.rank, bgens[bj]);
        if (!sol) throw std::logic_error("cohomology: coboundary escapes the cocycle lattice");
        for (int i = 0; i < s.rank; ++i) w[i][bj] = (*sol)[i];
    }
    SmithResult ws = smith_normal_form(w);
    if (ws.rank < s.rank) throw std::logic_error("cohomology: unexpected free quotient");
    std::vector<int> orders;
    for (int i = 0; i < ws.rank; ++i)
        if (ws.diag(i) > 1) orders.push_back(static_cast<int>(ws.diag(i)));
    return orders;
}

inline Result<CohomologyGroup> cohomology(const AbelianCochainComplex& c, int q) {
    if (q != 1 && q != 2) return make_diag("bad-degree", "degree must be 1 or 2");
    std::vector<int> orders;
    for (int f = 0; f < c.coeff.rank(); ++f) {
        auto part = cohomology_mod_n(c, q, c.coeff.factors[f]);
        orders.insert(orders.end(), part.begin(), part.end());
    }
    return CohomologyGroup{invariant_factors(std::move(orders))};
}

struct CechClass {
    int degree = 0;
    std::vector<int> representative;  // coefficient element per q-simplex
    bool is_zero = false;
    std::vector<int> witness;  // (q-1)-cochain with d(witness) = representative, when zero
};

// Decides coboundary membership of a q-cocycle and produces a primitive.
inline Result<CechClass> classify_cocycle(const AbelianCochainComplex& c, int q,
                                          const std::vector<int>& rep) {
    if (q != 1 && q != 2) return make_diag("bad-degree", "degree must be 1 or 2");
    if (static_cast<int>(rep.size()) != c.cochain_dim(q))
        return make_diag("bad-cochain", "representative has wrong length");
    for (int x : rep)
        if (x < 0 || x >= c.coeff.group->order)
            return make_diag("bad-cochain", "representative value out of range");
    if (!is_cocycle(c, q, rep)) return make_diag("not-cocycle", "representative is not a cocycle");

    CechClass cls;
    cls.degree = q;
    cls.representative = rep;
    int dim = c.cochain_dim(q), dim_prev = c.cochain_dim(q - 1);
    const IMat& dprev = c.coboundary(q - 1);
    int r = c.coeff.rank();
    std::vector<std::vector<int>> wit_vecs(dim_prev, std::vector<int>(r, 0));
    cls.is_zero = true;
    for (int f = 0; f < r && cls.is_zero; ++f) {
        int n = c.coeff.factors[f];
        IMat sys(dim, std::vector<long long>(dim_prev + dim, 0));
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim_prev; ++j) sys[i][j] = dprev[i][j];
            sys[i][dim_prev + i] = n;
        }
        auto b = cochain_factor(c, rep, f);
        auto sol = solve_integer(sys, dim_prev + dim, b);
        if (!sol) {
            cls.is_zero = false;
            break;
        }
        for (int j = 0; j < dim_prev; ++j)
            wit_vecs[j][f] = static_cast<int>((((*sol)[j] % n) + n) % n);
    }
    if (cls.is_zero) {
        cls.witness.resize(dim_prev);
        for (int j = 0; j < dim_prev; ++j) cls.witness[j] = c.coeff.from_vec(wit_vecs[j]);
    }
    return cls;
}

}  // namespace xmod
