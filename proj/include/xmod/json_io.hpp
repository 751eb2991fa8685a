// JSON document formats and the workspace loader. One interchange format,
// stable key order (objects serialize alphabetically), edge tables keyed by
// "[i,j]" strings. Loading validates every object through the module
// validators and aggregates all failures instead of stopping at the first.
#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "xmod/fixtures.hpp"

namespace xmod {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Serializers (canonical document forms)

inline Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["order"] = g.order;
    Json rows = Json::array();
    for (int a = 0; a < g.order; ++a) {
        Json row = Json::array();
        for (int b = 0; b < g.order; ++b) row.push_back(g.op(a, b));
        rows.push_back(row);
    }
    j["mul"] = rows;
    if (!g.labels.empty()) j["labels"] = g.labels;
    return j;
}

inline Json xm_to_json(const CrossedModule& xm) {
    Json j;
    j["G"] = group_to_json(*xm.G);
    j["H"] = group_to_json(*xm.H);
    j["t"] = xm.t.map;
    Json alpha = Json::array();
    for (int h = 0; h < xm.H->order; ++h) {
        Json row = Json::array();
        for (int g = 0; g < xm.G->order; ++g) row.push_back(xm.act(h, g));
        alpha.push_back(row);
    }
    j["alpha"] = alpha;
    return j;
}

inline Json nerve_to_json(const Nerve& n) {
    Json j;
    j["vertices"] = n.vertices;
    j["edges"] = n.edges;
    j["triangles"] = n.triangles;
    j["tetrahedra"] = n.tetrahedra;
    return j;
}

inline std::string edge_key(int i, int j) {
    return "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

inline Json cocycle_to_json(const BibundleCocycle& c, const std::string& nerve_name,
                            const std::string& xm_name) {
    Json j;
    j["nerve"] = nerve_name;
    j["xm"] = xm_name;
    Json g = Json::object();
    for (int e = 0; e < c.nerve->edge_count(); ++e)
        g[edge_key(c.nerve->edges[e][0], c.nerve->edges[e][1])] = c.g[e];
    j["g"] = g;
    j["h"] = c.h;
    return j;
}

inline Json bispace_to_json(const Bispace& b, const std::string& xm_name) {
    Json j;
    j["xm"] = xm_name;
    j["carrier"] = b.points;
    Json rows = Json::array();
    for (int p = 0; p < b.points; ++p) {
        Json row = Json::array();
        for (int g = 0; g < b.xm->G->order; ++g) row.push_back(b.ract(p, g));
        rows.push_back(row);
    }
    j["raction"] = rows;
    j["psi"] = b.psi;
    return j;
}

inline Json labeling_to_json(const fixtures::EdgeLabeling& l, const Nerve& n) {
    Json j;
    j["nerve"] = l.nerve;
    Json vals = Json::object();
    for (int e = 0; e < n.edge_count(); ++e)
        vals[edge_key(n.edges[e][0], n.edges[e][1])] = l.values[e];
    j["values"] = vals;
    return j;
}

// ---------------------------------------------------------------------------
// Workspace

struct Workspace {
    std::map<std::string, GroupPtr> groups;
    std::map<std::string, XModPtr> crossed_modules;
    std::map<std::string, NervePtr> nerves;
    std::map<std::string, Bispace> bispaces;
    std::map<std::string, BibundleCocycle> cocycles;
    std::map<std::string, fixtures::EdgeLabeling> labelings;
};

inline Workspace builtin_workspace() {
    Workspace ws;
    ws.groups = fixtures::groups();
    ws.crossed_modules = fixtures::crossed_modules();
    ws.nerves = fixtures::nerves();
    ws.labelings = fixtures::labelings(ws.nerves);
    ws.cocycles = fixtures::cocycles(ws.nerves, ws.crossed_modules);
    return ws;
}

// ---------------------------------------------------------------------------
// Parsers. Each returns Result<T>; the loader collects diagnostics per object.

namespace io_detail {

inline Result<std::vector<int>> int_list(const Json& j, const std::string& what) {
    if (!j.is_array()) return make_diag("parse", what + " must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) return make_diag("parse", what + " must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

inline Result<std::vector<int>> flat_table(const Json& j, const std::string& what) {
    if (!j.is_array()) return make_diag("parse", what + " must be an array of rows");
    std::vector<int> out;
    for (const auto& row : j) {
        auto r = int_list(row, what + " row");
        if (!r.ok()) return r.error();
        out.insert(out.end(), r.value().begin(), r.value().end());
    }
    return out;
}

inline Result<std::pair<int, int>> parse_edge_key(const std::string& key) {
    // "[i,j]"
    if (key.size() < 5 || key.front() != '[' || key.back() != ']')
        return make_diag("parse", "bad edge key '" + key + "'");
    auto comma = key.find(',');
    if (comma == std::string::npos) return make_diag("parse", "bad edge key '" + key + "'");
    try {
        int i = std::stoi(key.substr(1, comma - 1));
        int j = std::stoi(key.substr(comma + 1, key.size() - comma - 2));
        return std::pair{i, j};
    } catch (const std::exception&) {
        return make_diag("parse", "bad edge key '" + key + "'");
    }
}

}  // namespace io_detail

inline Result<GroupPtr> group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("mul"))
        return make_diag("parse", "group document needs 'order' and 'mul'");
    auto mul = io_detail::flat_table(j["mul"], "mul");
    if (!mul.ok()) return mul.error();
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
    }
    auto vg = validate_group(j["order"].get<int>(), std::move(mul).value(), std::move(labels));
    if (!vg.ok()) return vg.error();
    return make_group(std::move(vg));
}

inline Result<GroupPtr> resolve_group(const Json& j, const Workspace& ws) {
    if (j.is_string()) {
        auto it = ws.groups.find(j.get<std::string>());
        if (it == ws.groups.end())
            return make_diag("dangling", "unknown group '" + j.get<std::string>() + "'");
        return it->second;
    }
    return group_from_json(j);
}

inline Result<XModPtr> xm_from_json(const Json& j, const Workspace& ws) {
    if (!j.is_object()) return make_diag("parse", "crossed-module document must be an object");
    for (const char* key : {"G", "H", "t", "alpha"})
        if (!j.contains(key))
            return make_diag("parse", std::string("crossed-module document needs '") + key + "'");
    auto g = resolve_group(j["G"], ws);
    if (!g.ok()) return g.error();
    auto h = resolve_group(j["H"], ws);
    if (!h.ok()) return h.error();
    auto tmap = io_detail::int_list(j["t"], "t");
    if (!tmap.ok()) return tmap.error();
    auto t = validate_hom(g.value(), h.value(), std::move(tmap).value());
    if (!t.ok()) return t.error();
    auto table = io_detail::flat_table(j["alpha"], "alpha");
    if (!table.ok()) return table.error();
    auto alpha = validate_action(h.value(), g.value(), std::move(table).value());
    if (!alpha.ok()) return alpha.error();
    return validate_crossed_module(g.value(), h.value(), std::move(t).value(),
                                   std::move(alpha).value());
}

inline Result<NervePtr> nerve_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices"))
        return make_diag("parse", "nerve document needs 'vertices'");
    auto read = [&](const char* key, int len) -> Result<std::vector<std::vector<int>>> {
        std::vector<std::vector<int>> out;
        if (!j.contains(key)) return out;
        for (const auto& s : j[key]) {
            auto r = io_detail::int_list(s, key);
            if (!r.ok()) return r.error();
            if (static_cast<int>(r.value().size()) != len)
                return make_diag("parse", std::string(key) + " entry of wrong length");
            out.push_back(r.value());
        }
        return out;
    };
    auto e = read("edges", 2);
    if (!e.ok()) return e.error();
    auto t = read("triangles", 3);
    if (!t.ok()) return t.error();
    auto q = read("tetrahedra", 4);
    if (!q.ok()) return q.error();
    std::vector<std::array<int, 2>> edges;
    for (auto& v : e.value()) edges.push_back({v[0], v[1]});
    std::vector<std::array<int, 3>> tris;
    for (auto& v : t.value()) tris.push_back({v[0], v[1], v[2]});
    std::vector<std::array<int, 4>> tets;
    for (auto& v : q.value()) tets.push_back({v[0], v[1], v[2], v[3]});
    auto n = validate_nerve(j["vertices"].get<int>(), std::move(edges), std::move(tris),
                            std::move(tets));
    if (!n.ok()) return n.error();
    return std::make_shared<const Nerve>(std::move(n).value());
}

inline Result<NervePtr> resolve_nerve(const Json& j, const Workspace& ws) {
    if (j.is_string()) {
        auto it = ws.nerves.find(j.get<std::string>());
        if (it == ws.nerves.end())
            return make_diag("dangling", "unknown nerve '" + j.get<std::string>() + "'");
        return it->second;
    }
    return nerve_from_json(j);
}

inline Result<XModPtr> resolve_xm(const Json& j, const Workspace& ws) {
    if (j.is_string()) {
        auto it = ws.crossed_modules.find(j.get<std::string>());
        if (it == ws.crossed_modules.end())
            return make_diag("dangling", "unknown crossed module '" + j.get<std::string>() + "'");
        return it->second;
    }
    return xm_from_json(j, ws);
}

inline Result<std::vector<int>> edge_table_from_json(const Json& j, const Nerve& n,
                                                     const std::string& what) {
    if (!j.is_object()) return make_diag("parse", what + " must be an object keyed by edges");
    std::vector<int> out(n.edge_count(), -1);
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto key = io_detail::parse_edge_key(it.key());
        if (!key.ok()) return key.error();
        int e = n.edge_index(key.value().first, key.value().second);
        if (e < 0)
            return make_diag("dangling", what + " labels unknown edge " + it.key());
        out[e] = it.value().get<int>();
    }
    for (int e = 0; e < n.edge_count(); ++e)
        if (out[e] < 0)
            return make_diag("parse", what + " missing edge " +
                                          edge_key(n.edges[e][0], n.edges[e][1]));
    return out;
}

inline Result<BibundleCocycle> cocycle_from_json(const Json& j, const Workspace& ws) {
    if (!j.is_object() || !j.contains("nerve") || !j.contains("xm") || !j.contains("g") ||
        !j.contains("h"))
        return make_diag("parse", "cocycle document needs 'nerve', 'xm', 'g', 'h'");
    auto n = resolve_nerve(j["nerve"], ws);
    if (!n.ok()) return n.error();
    auto xm = resolve_xm(j["xm"], ws);
    if (!xm.ok()) return xm.error();
    auto g = edge_table_from_json(j["g"], *n.value(), "g");
    if (!g.ok()) return g.error();
    auto h = io_detail::int_list(j["h"], "h");
    if (!h.ok()) return h.error();
    return validate_cocycle(n.value(), xm.value(), std::move(g).value(), std::move(h).value());
}

inline Result<Bispace> bispace_from_json(const Json& j, const Workspace& ws) {
    if (!j.is_object() || !j.contains("xm"))
        return make_diag("parse", "bispace document needs 'xm'");
    auto xm = resolve_xm(j["xm"], ws);
    if (!xm.ok()) return xm.error();
    if (j.contains("standard")) {
        int xi = j["standard"].get<int>();
        if (xi < 0 || xi >= xm.value()->H->order)
            return make_diag("out-of-range", "standard bispace label out of range");
        return standard_bispace(xm.value(), xi);
    }
    if (!j.contains("carrier") || !j.contains("raction") || !j.contains("psi"))
        return make_diag("parse", "bispace document needs 'carrier', 'raction', 'psi'");
    auto ract = io_detail::flat_table(j["raction"], "raction");
    if (!ract.ok()) return ract.error();
    auto psi = io_detail::int_list(j["psi"], "psi");
    if (!psi.ok()) return psi.error();
    return validate_bispace(xm.value(), j["carrier"].get<int>(), std::move(ract).value(),
                            std::move(psi).value());
}

inline Result<fixtures::EdgeLabeling> labeling_from_json(const Json& j, const Workspace& ws) {
    if (!j.is_object() || !j.contains("nerve") || !j.contains("values"))
        return make_diag("parse", "labeling document needs 'nerve' and 'values'");
    if (!j["nerve"].is_string())
        return make_diag("parse", "labeling 'nerve' must be a fixture or document name");
    auto n = resolve_nerve(j["nerve"], ws);
    if (!n.ok()) return n.error();
    auto vals = edge_table_from_json(j["values"], *n.value(), "values");
    if (!vals.ok()) return vals.error();
    return fixtures::EdgeLabeling{j["nerve"].get<std::string>(), std::move(vals).value()};
}

// ---------------------------------------------------------------------------
// Loader

struct LoadOutcome {
    Workspace workspace;
    std::vector<Diagnostic> diagnostics;  // empty on success
    bool ok() const { return diagnostics.empty(); }
};

inline LoadOutcome load_workspace(const std::vector<std::string>& paths) {
    LoadOutcome out;
    out.workspace = builtin_workspace();
    Workspace& ws = out.workspace;
    auto fail = [&](const std::string& where, Diagnostic d) {
        d.message = where + ": " + d.message;
        out.diagnostics.push_back(std::move(d));
    };

    for (const auto& path : paths) {
        std::ifstream in(path);
        if (!in) {
            fail(path, make_diag("io", "cannot open file"));
            continue;
        }
        Json doc;
        try {
            in >> doc;
        } catch (const Json::parse_error& e) {
            fail(path, make_diag("parse", e.what()));
            continue;
        }
        if (!doc.is_object()) {
            fail(path, make_diag("parse", "workspace file must be an object of catalogs"));
            continue;
        }
        auto each = [&](const char* catalog, auto&& handler) {
            if (!doc.contains(catalog)) return;
            for (auto it = doc[catalog].begin(); it != doc[catalog].end(); ++it)
                handler(it.key(), it.value());
        };
        each("groups", [&](const std::string& name, const Json& j) {
            if (ws.groups.count(name))
                return fail(path + ":" + name, make_diag("duplicate", "name already defined"));
            auto g = group_from_json(j);
            if (!g.ok()) return fail(path + ":" + name, g.error());
            ws.groups[name] = g.value();
        });
        each("crossed_modules", [&](const std::string& name, const Json& j) {
            if (ws.crossed_modules.count(name))
                return fail(path + ":" + name, make_diag("duplicate", "name already defined"));
            auto x = xm_from_json(j, ws);
            if (!x.ok()) return fail(path + ":" + name, x.error());
            ws.crossed_modules[name] = x.value();
        });
        each("nerves", [&](const std::string& name, const Json& j) {
            if (ws.nerves.count(name))
                return fail(path + ":" + name, make_diag("duplicate", "name already defined"));
            auto n = nerve_from_json(j);
            if (!n.ok()) return fail(path + ":" + name, n.error());
            ws.nerves[name] = n.value();
        });
        each("bispaces", [&](const std::string& name, const Json& j) {
            if (ws.bispaces.count(name))
                return fail(path + ":" + name, make_diag("duplicate", "name already defined"));
            auto b = bispace_from_json(j, ws);
            if (!b.ok()) return fail(path + ":" + name, b.error());
            ws.bispaces.emplace(name, std::move(b).value());
        });
        each("cocycles", [&](const std::string& name, const Json& j) {
            if (ws.cocycles.count(name))
                return fail(path + ":" + name, make_diag("duplicate", "name already defined"));
            auto c = cocycle_from_json(j, ws);
            if (!c.ok()) return fail(path + ":" + name, c.error());
            ws.cocycles.emplace(name, std::move(c).value());
        });
        each("labelings", [&](const std::string& name, const Json& j) {
            if (ws.labelings.count(name))
                return fail(path + ":" + name, make_diag("duplicate", "name already defined"));
            auto l = labeling_from_json(j, ws);
            if (!l.ok()) return fail(path + ":" + name, l.error());
            ws.labelings.emplace(name, std::move(l).value());
        });
    }
    return out;
}

}  // namespace xmod
