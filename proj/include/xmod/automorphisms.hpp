// Automorphism groups by generator-image search. A minimal generating set is
// chosen greedily; candidate images are filtered by element order and extended
// through the multiplication table, so the search never touches the full n!
// space of bijections.
#pragma once

#include <algorithm>
#include <set>

#include "xmod/group.hpp"

namespace xmod {

struct AutGroupData {
    GroupPtr base;
    std::vector<std::vector<int>> autos;  // permutation tables, sorted lex; autos[0] = id
    GroupPtr group;                       // composition table: op(a,b) = autos[a] after autos[b]
    Subgroup inner;                       // image of Ad inside `group`
    std::vector<int> outer_reps;          // least index per Inn-coset

    int index_of(const std::vector<int>& perm) const {
        auto it = std::lower_bound(autos.begin(), autos.end(), perm);
        if (it == autos.end() || *it != perm) return -1;
        return static_cast<int>(it - autos.begin());
    }
};

inline Result<AutGroupData> enumerate_automorphisms(GroupPtr g, int cap = 64) {
    if (g->order > cap)
        return make_diag("cap-exceeded", "group order " + std::to_string(g->order) +
                                             " above automorphism cap " + std::to_string(cap));
    const FiniteGroup& a = *g;
    std::vector<int> gens = greedy_generators(a);
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        int ord = a.element_order(gens[i]);
        for (int y = 0; y < a.order; ++y)
            if (a.element_order(y) == ord) candidates[i].push_back(y);
    }

    std::set<std::vector<int>> found;
    std::vector<int> images(gens.size(), 0), map;
    if (gens.empty()) {
        found.insert({0});
    } else {
        std::vector<size_t> pos(gens.size(), 0);
        size_t k = 0;
        while (true) {
            if (k == gens.size()) {
                if (detail::extend_hom(a, a, gens, images, map)) {
                    std::vector<char> hit(a.order, 0);
                    bool bij = true;
                    for (int v : map) {
                        if (hit[v]) bij = false;
                        hit[v] = 1;
                    }
                    if (bij) found.insert(map);
                }
                while (k > 0 && pos[k - 1] + 1 >= candidates[k - 1].size()) --k;
                if (k == 0) break;
                ++pos[k - 1];
                images[k - 1] = candidates[k - 1][pos[k - 1]];
                continue;
            }
            pos[k] = 0;
            images[k] = candidates[k][0];
            ++k;
        }
    }

    AutGroupData data;
    data.base = g;
    data.autos.assign(found.begin(), found.end());  // set iteration = lex order; id is least
    int n = static_cast<int>(data.autos.size());

    std::vector<int> table(static_cast<size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::vector<int> comp(a.order);
            for (int e = 0; e < a.order; ++e) comp[e] = data.autos[x][data.autos[y][e]];
            int idx = data.index_of(comp);
            if (idx < 0) return make_diag("internal", "automorphism set not closed");
            table[static_cast<size_t>(x) * n + y] = idx;
        }
    auto vg = validate_group(n, std::move(table));
    if (!vg.ok()) return vg.error();
    data.group = make_group(std::move(vg));

    std::vector<int> inner_elems;
    for (int c = 0; c < a.order; ++c) {
        std::vector<int> ad(a.order);
        for (int e = 0; e < a.order; ++e) ad[e] = a.conj(c, e);
        inner_elems.push_back(data.index_of(ad));
    }
    auto inner = make_subgroup(data.group, std::move(inner_elems));
    if (!inner.ok()) return inner.error();
    data.inner = inner.value();

    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        data.outer_reps.push_back(x);
        for (int m : data.inner.elements) seen[data.group->op(x, m)] = 1;
    }
    return data;
}

}  // namespace xmod
