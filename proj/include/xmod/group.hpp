// Finite groups as dense multiplication tables over indices 0..n-1, with the
// identity pinned at index 0. Homomorphisms, subgroups, quotients, actions and
// the semidirect product live here; everything is immutable after validation.
#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "xmod/result.hpp"

namespace xmod {

struct FiniteGroup {
    int order = 0;
    std::vector<int> mul;             // row-major order x order
    std::vector<int> inv;             // per element
    std::vector<std::string> labels;  // empty, or one display string per element

    int op(int a, int b) const { return mul[a * order + b]; }
    int invof(int a) const { return inv[a]; }
    int conj(int g, int x) const { return op(op(g, x), invof(g)); }  // g x g^-1

    bool abelian() const {
        for (int a = 0; a < order; ++a)
            for (int b = a + 1; b < order; ++b)
                if (op(a, b) != op(b, a)) return false;
        return true;
    }

    int element_order(int a) const {
        int k = 1, x = a;
        while (x != 0) {
            x = op(x, a);
            ++k;
        }
        return k;
    }

    int power(int a, long long e) const {
        long long n = element_order(a);
        e %= n;
        if (e < 0) e += n;
        int x = 0;
        for (long long i = 0; i < e; ++i) x = op(x, a);
        return x;
    }

    std::string label(int a) const {
        if (a >= 0 && a < static_cast<int>(labels.size()) && !labels[a].empty())
            return labels[a];
        return std::to_string(a);
    }

    bool operator==(const FiniteGroup& o) const {
        return order == o.order && mul == o.mul && labels == o.labels;
    }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
    return a == b || (a && b && a->order == b->order && a->mul == b->mul);
}

// ---------------------------------------------------------------------------
// Validation

inline Result<FiniteGroup> validate_group(int order, std::vector<int> mul,
                                          std::vector<std::string> labels = {}) {
    if (order <= 0) return make_diag("bad-order", "order must be positive");
    if (static_cast<int>(mul.size()) != order * order)
        return make_diag("not-square", "mul table has " + std::to_string(mul.size()) +
                                           " entries, expected " + std::to_string(order * order));
    if (!labels.empty() && static_cast<int>(labels.size()) != order)
        return make_diag("bad-labels", "labels list does not match order");
    for (int i = 0; i < order * order; ++i)
        if (mul[i] < 0 || mul[i] >= order)
            return make_diag("out-of-range", "entry mul(" + std::to_string(i / order) + "," +
                                                 std::to_string(i % order) + ") = " +
                                                 std::to_string(mul[i]) + " out of range",
                             {i / order, i % order});

    FiniteGroup g;
    g.order = order;
    g.mul = std::move(mul);
    g.labels = std::move(labels);

    for (int a = 0; a < order; ++a) {
        if (g.op(0, a) != a || g.op(a, 0) != a)
            return make_diag("bad-identity", "0 is not a two-sided identity at " + std::to_string(a),
                             {a});
    }
    g.inv.assign(order, -1);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            if (g.op(a, b) == 0 && g.op(b, a) == 0) {
                g.inv[a] = b;
                break;
            }
        }
        if (g.inv[a] < 0)
            return make_diag("no-inverse", "no inverse for " + std::to_string(a), {a});
    }
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                    return make_diag("not-associative",
                                     "associativity fails at (" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(c) + ")",
                                     {a, b, c});
    return g;
}

inline GroupPtr make_group(Result<FiniteGroup> r) {
    return std::make_shared<const FiniteGroup>(std::move(r).value());
}

// ---------------------------------------------------------------------------
// Homomorphisms

struct GroupHom {
    GroupPtr source, target;
    std::vector<int> map;  // source index -> target index

    int operator()(int a) const { return map[a]; }
};

inline Result<GroupHom> validate_hom(GroupPtr source, GroupPtr target, std::vector<int> map) {
    if (static_cast<int>(map.size()) != source->order)
        return make_diag("bad-hom", "map size does not match source order");
    for (int x : map)
        if (x < 0 || x >= target->order) return make_diag("bad-hom", "map value out of range");
    if (map[0] != 0) return make_diag("bad-hom", "map(0) != 0");
    for (int a = 0; a < source->order; ++a)
        for (int b = 0; b < source->order; ++b)
            if (map[source->op(a, b)] != target->op(map[a], map[b]))
                return make_diag("not-multiplicative",
                                 "hom fails at (" + std::to_string(a) + "," + std::to_string(b) + ")",
                                 {a, b});
    return GroupHom{std::move(source), std::move(target), std::move(map)};
}

inline GroupHom identity_hom(GroupPtr g) {
    std::vector<int> id(g->order);
    std::iota(id.begin(), id.end(), 0);
    return GroupHom{g, g, std::move(id)};
}

inline GroupHom compose_homs(const GroupHom& second, const GroupHom& first) {
    // (second ∘ first)(x) = second(first(x)); targets must line up
    std::vector<int> map(first.source->order);
    for (int a = 0; a < first.source->order; ++a) map[a] = second.map[first.map[a]];
    return GroupHom{first.source, second.target, std::move(map)};
}

// ---------------------------------------------------------------------------
// Subgroups

struct Subgroup {
    GroupPtr parent;
    std::vector<int> elements;  // sorted, always contains 0

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(int x) const {
        return std::binary_search(elements.begin(), elements.end(), x);
    }
    // position of parent element within `elements`, -1 if absent
    int index_of(int x) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), x);
        if (it == elements.end() || *it != x) return -1;
        return static_cast<int>(it - elements.begin());
    }
};

inline Result<Subgroup> make_subgroup(GroupPtr parent, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (int x : elements)
        if (x < 0 || x >= parent->order)
            return make_diag("out-of-range", "subgroup element out of range", {x});
    Subgroup s{parent, elements};
    if (!s.contains(0)) return make_diag("no-identity", "subgroup does not contain 0");
    for (int a : elements) {
        if (!s.contains(parent->invof(a)))
            return make_diag("not-closed", "inverse of " + std::to_string(a) + " missing", {a});
        for (int b : elements)
            if (!s.contains(parent->op(a, b)))
                return make_diag("not-closed",
                                 "product " + std::to_string(a) + "*" + std::to_string(b) +
                                     " escapes subgroup",
                                 {a, b});
    }
    return s;
}

inline Subgroup subgroup_closure(GroupPtr parent, const std::vector<int>& gens) {
    std::vector<char> in(parent->order, 0);
    std::vector<int> frontier{0};
    in[0] = 1;
    for (int g : gens)
        if (!in[g]) {
            in[g] = 1;
            frontier.push_back(g);
        }
    for (size_t i = 0; i < frontier.size(); ++i)
        for (size_t j = 0; j < frontier.size(); ++j) {
            int p = parent->op(frontier[i], frontier[j]);
            if (!in[p]) {
                in[p] = 1;
                frontier.push_back(p);
            }
        }
    std::vector<int> elems;
    for (int x = 0; x < parent->order; ++x)
        if (in[x]) elems.push_back(x);
    return Subgroup{parent, std::move(elems)};
}

// Witness pair (n, g) with g n g^-1 outside the subgroup, when not normal.
inline bool is_normal(const Subgroup& s, std::array<int, 2>* witness = nullptr) {
    const auto& g = *s.parent;
    for (int n : s.elements)
        for (int x = 0; x < g.order; ++x)
            if (!s.contains(g.conj(x, n))) {
                if (witness) *witness = {n, x};
                return false;
            }
    return true;
}

inline Subgroup center(GroupPtr g) {
    std::vector<int> elems;
    for (int z = 0; z < g->order; ++z) {
        bool central = true;
        for (int x = 0; x < g->order && central; ++x) central = g->op(z, x) == g->op(x, z);
        if (central) elems.push_back(z);
    }
    return Subgroup{g, std::move(elems)};
}

// Re-index a subgroup as a standalone group (element k = k-th smallest member).
// The identity lands at index 0 since elements are sorted and 0 is a member.
struct GroupWithInclusion {
    GroupPtr group;
    GroupHom inclusion;  // group -> parent
};

inline GroupWithInclusion subgroup_as_group(const Subgroup& s) {
    std::vector<int> elems = s.elements;  // sorted; elems[0] == 0 since 0 in s
    int n = s.size();
    std::vector<int> table(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[a * n + b] = s.index_of(s.parent->op(elems[a], elems[b]));
    std::vector<std::string> labels;
    if (!s.parent->labels.empty()) {
        for (int e : elems) labels.push_back(s.parent->label(e));
    }
    GroupPtr g = make_group(validate_group(n, std::move(table), std::move(labels)));
    return GroupWithInclusion{g, GroupHom{g, s.parent, elems}};
}

// ---------------------------------------------------------------------------
// Quotients

struct QuotientResult {
    GroupPtr group;
    GroupHom projection;       // parent -> quotient
    std::vector<int> section;  // quotient index -> least parent representative
};

inline Result<QuotientResult> quotient_group(GroupPtr g, const Subgroup& n) {
    if (!same_group(g, n.parent)) return make_diag("mismatch", "subgroup of a different group");
    std::array<int, 2> w{};
    if (!is_normal(n, &w))
        return make_diag("not-normal",
                         "conjugate of " + std::to_string(w[0]) + " by " + std::to_string(w[1]) +
                             " escapes the subgroup",
                         {w[0], w[1]});

    // cosets keyed by least representative; coset of the identity sorts first
    std::vector<int> coset_of(g->order, -1);
    std::vector<int> reps;
    for (int x = 0; x < g->order; ++x) {
        if (coset_of[x] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int m : n.elements) coset_of[g->op(x, m)] = id;
    }
    int q = static_cast<int>(reps.size());
    std::vector<int> table(q * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) table[a * q + b] = coset_of[g->op(reps[a], reps[b])];
    auto validated = validate_group(q, std::move(table));
    if (!validated.ok()) return validated.error();  // cannot happen for a normal subgroup
    GroupPtr quot = make_group(std::move(validated));
    return QuotientResult{quot, GroupHom{g, quot, std::move(coset_of)}, std::move(reps)};
}

// ---------------------------------------------------------------------------
// Actions and semidirect products

struct GroupAction {
    GroupPtr actor;         // H
    GroupPtr space;         // G
    std::vector<int> act;   // actor.order x space.order

    int operator()(int h, int g) const { return act[h * space->order + g]; }
};

inline Result<GroupAction> validate_action(GroupPtr actor, GroupPtr space,
                                           std::vector<int> table) {
    int nh = actor->order, ng = space->order;
    if (static_cast<int>(table.size()) != nh * ng)
        return make_diag("bad-action", "action table has wrong size");
    for (int v : table)
        if (v < 0 || v >= ng) return make_diag("bad-action", "action value out of range");
    GroupAction a{actor, space, std::move(table)};
    for (int g = 0; g < ng; ++g)
        if (a(0, g) != g) return make_diag("bad-action", "identity of H does not act trivially", {g});
    for (int h = 0; h < nh; ++h) {
        std::vector<char> seen(ng, 0);
        if (a(h, 0) != 0)
            return make_diag("not-automorphism", "a(h) does not fix the identity", {h});
        for (int g = 0; g < ng; ++g) {
            if (seen[a(h, g)])
                return make_diag("not-automorphism", "a(" + std::to_string(h) + ") not bijective",
                                 {h, g});
            seen[a(h, g)] = 1;
        }
        for (int x = 0; x < ng; ++x)
            for (int y = 0; y < ng; ++y)
                if (a(h, space->op(x, y)) != space->op(a(h, x), a(h, y)))
                    return make_diag("not-automorphism",
                                     "a(" + std::to_string(h) + ") not multiplicative at (" +
                                         std::to_string(x) + "," + std::to_string(y) + ")",
                                     {h, x, y});
    }
    for (int h1 = 0; h1 < nh; ++h1)
        for (int h2 = 0; h2 < nh; ++h2)
            for (int g = 0; g < ng; ++g)
                if (a(actor->op(h1, h2), g) != a(h1, a(h2, g)))
                    return make_diag("not-action", "composition law fails", {h1, h2, g});
    return a;
}

inline GroupAction trivial_action(GroupPtr actor, GroupPtr space) {
    std::vector<int> table(actor->order * space->order);
    for (int h = 0; h < actor->order; ++h)
        for (int g = 0; g < space->order; ++g) table[h * space->order + g] = g;
    return GroupAction{actor, space, std::move(table)};
}

// Pairs (h,g) with (h,g)(h',g') = (h h', a(h'^-1)(g) g'). With this twist the
// projection (h,g) -> h and the groupoid target (h,g) -> h t(g) are both
// homomorphisms, which is what the two-group construction needs.
inline GroupPtr semidirect_product(GroupPtr h, GroupPtr g, const GroupAction& alpha) {
    int nh = h->order, ng = g->order, n = nh * ng;
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int h1 = 0; h1 < nh; ++h1)
        for (int g1 = 0; g1 < ng; ++g1)
            for (int h2 = 0; h2 < nh; ++h2)
                for (int g2 = 0; g2 < ng; ++g2) {
                    int a = h1 * ng + g1, b = h2 * ng + g2;
                    int gg = g->op(alpha(h->invof(h2), g1), g2);
                    table[static_cast<size_t>(a) * n + b] = h->op(h1, h2) * ng + gg;
                }
    std::vector<std::string> labels;
    if (!h->labels.empty() || !g->labels.empty()) {
        labels.reserve(n);
        for (int h1 = 0; h1 < nh; ++h1)
            for (int g1 = 0; g1 < ng; ++g1)
                labels.push_back("(" + h->label(h1) + "," + g->label(g1) + ")");
    }
    return make_group(validate_group(n, std::move(table), std::move(labels)));
}

inline GroupPtr direct_product(GroupPtr a, GroupPtr b) {
    return semidirect_product(a, b, trivial_action(a, b));
}

// ---------------------------------------------------------------------------
// Builders for the shipped fixture groups

inline GroupPtr cyclic_group(int n, const std::string& name = "") {
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
    std::vector<std::string> labels;
    std::string base = name.empty() ? "" : name + ":";
    for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
    return make_group(validate_group(n, std::move(table), std::move(labels)));
}

// S3 on points {0,1,2}; elements are the permutations in lexicographic order,
// composed as (s*t)(x) = s(t(x)). Index 0 is the identity.
inline GroupPtr symmetric_s3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int n = static_cast<int>(perms.size());
    std::vector<int> table(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            table[a * n + b] =
                static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    std::vector<std::string> labels = {"e", "(12)", "(01)", "(012)", "(021)", "(02)"};
    return make_group(validate_group(n, std::move(table), std::move(labels)));
}

// Dihedral group of the square, elements r^a s^b with b in {0,1}, index 2a+b.
inline GroupPtr dihedral_d4() {
    int n = 8;
    auto idx = [](int a, int b) { return 2 * ((a % 4 + 4) % 4) + b; };
    std::vector<int> table(n * n);
    for (int a1 = 0; a1 < 4; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 4; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    // r^a1 s^b1 r^a2 s^b2 = r^(a1 + a2*(-1)^b1) s^(b1+b2)
                    int a = b1 ? a1 - a2 : a1 + a2;
                    table[idx(a1, b1) * n + idx(a2, b2)] = idx(a, (b1 + b2) % 2);
                }
    std::vector<std::string> labels;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 2; ++b)
            labels.push_back(std::string("r") + std::to_string(a) + (b ? "s" : ""));
    return make_group(validate_group(n, std::move(table), std::move(labels)));
}

// ---------------------------------------------------------------------------
// Isomorphism search (generator images, order-filtered backtracking)

inline std::vector<int> greedy_generators(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<char> in(g.order, 0);
    in[0] = 1;
    auto grown = [&](int x) { return in[x] != 0; };
    while (true) {
        int next = -1;
        for (int x = 0; x < g.order; ++x)
            if (!grown(x)) {
                next = x;
                break;
            }
        if (next < 0) break;
        gens.push_back(next);
        // grow closure of current generators
        std::vector<int> frontier;
        for (int x = 0; x < g.order; ++x)
            if (in[x]) frontier.push_back(x);
        frontier.push_back(next);
        in[next] = 1;
        for (size_t i = 0; i < frontier.size(); ++i)
            for (size_t j = 0; j < frontier.size(); ++j) {
                int p = g.op(frontier[i], frontier[j]);
                if (!in[p]) {
                    in[p] = 1;
                    frontier.push_back(p);
                }
            }
    }
    return gens;
}

namespace detail {

// Extends gen -> image assignments to a full homomorphism A -> B, or fails.
inline bool extend_hom(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens,
                       const std::vector<int>& images, std::vector<int>& out) {
    out.assign(a.order, -1);
    out[0] = 0;
    std::vector<int> known{0};
    for (size_t i = 0; i < gens.size(); ++i) {
        if (out[gens[i]] >= 0) {
            if (out[gens[i]] != images[i]) return false;
        } else {
            out[gens[i]] = images[i];
            known.push_back(gens[i]);
        }
    }
    for (size_t i = 0; i < known.size(); ++i)
        for (size_t j = 0; j < known.size(); ++j) {
            int p = a.op(known[i], known[j]);
            int q = b.op(out[known[i]], out[known[j]]);
            if (out[p] < 0) {
                out[p] = q;
                known.push_back(p);
            } else if (out[p] != q) {
                return false;
            }
        }
    if (static_cast<int>(known.size()) != a.order) return false;  // gens must generate
    for (int x = 0; x < a.order; ++x)
        for (int y = 0; y < a.order; ++y)
            if (out[a.op(x, y)] != b.op(out[x], out[y])) return false;
    return true;
}

}  // namespace detail

// Explicit isomorphism A -> B if one exists; brute force over generator images.
inline std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& a,
                                                              const FiniteGroup& b) {
    if (a.order != b.order) return std::nullopt;
    std::vector<int> gens = greedy_generators(a);
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        int ord = a.element_order(gens[i]);
        for (int y = 0; y < b.order; ++y)
            if (b.element_order(y) == ord) candidates[i].push_back(y);
        if (candidates[i].empty()) return std::nullopt;
    }
    std::vector<int> images(gens.size(), 0), map;
    std::vector<size_t> pos(gens.size(), 0);
    size_t k = 0;
    while (true) {
        if (k == gens.size()) {
            if (detail::extend_hom(a, b, gens, images, map)) {
                std::vector<char> hit(b.order, 0);
                bool bij = true;
                for (int v : map) {
                    if (hit[v]) bij = false;
                    hit[v] = 1;
                }
                if (bij) return map;
            }
            // backtrack
            while (k > 0 && pos[k - 1] + 1 >= candidates[k - 1].size()) --k;
            if (k == 0) return std::nullopt;
            ++pos[k - 1];
            images[k - 1] = candidates[k - 1][pos[k - 1]];
            continue;
        }
        pos[k] = 0;
        images[k] = candidates[k][0];
        ++k;
    }
}

}  // namespace xmod
