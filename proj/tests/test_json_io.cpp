#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "xmod/json_io.hpp"

using namespace xmod;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& contents)
        : path("io_test_" + name + ".json") {
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("built-in fixtures round-trip through their documents") {
    Workspace ws = builtin_workspace();
    SECTION("groups") {
        for (const auto& [name, g] : ws.groups) {
            CAPTURE(name);
            auto back = group_from_json(group_to_json(*g));
            REQUIRE(back.ok());
            REQUIRE(*back.value() == *g);
        }
    }
    SECTION("crossed modules") {
        for (const auto& [name, xm] : ws.crossed_modules) {
            CAPTURE(name);
            auto back = xm_from_json(xm_to_json(*xm), ws);
            REQUIRE(back.ok());
            REQUIRE(same_xm(back.value(), xm));
        }
    }
    SECTION("nerves") {
        for (const auto& [name, n] : ws.nerves) {
            CAPTURE(name);
            auto back = nerve_from_json(nerve_to_json(*n));
            REQUIRE(back.ok());
            REQUIRE(*back.value() == *n);
        }
    }
    SECTION("cocycles") {
        for (const auto& [name, c] : ws.cocycles) {
            CAPTURE(name);
            auto back = cocycle_from_json(cocycle_to_json(c, "Circ3", "J3"), ws);
            REQUIRE(back.ok());
            REQUIRE(back.value() == c);
        }
    }
    SECTION("labelings") {
        for (const auto& [name, l] : ws.labelings) {
            CAPTURE(name);
            const Nerve& n = *ws.nerves.at(l.nerve);
            auto back = labeling_from_json(labeling_to_json(l, n), ws);
            REQUIRE(back.ok());
            REQUIRE(back.value() == l);
        }
    }
    SECTION("bispaces, including the standard shorthand") {
        Bispace b = standard_bispace(ws.crossed_modules.at("J3"), 1);
        auto back = bispace_from_json(bispace_to_json(b, "J3"), ws);
        REQUIRE(back.ok());
        REQUIRE(back.value() == b);
        Json shorthand;
        shorthand["xm"] = "J3";
        shorthand["standard"] = 1;
        auto std_back = bispace_from_json(shorthand, ws);
        REQUIRE(std_back.ok());
        REQUIRE(std_back.value() == b);
    }
}

TEST_CASE("workspace loading") {
    SECTION("built-ins only") {
        auto load = load_workspace({});
        REQUIRE(load.ok());
        for (const auto& name : {"J2", "J3", "J4", "V4", "AdS3"})
            REQUIRE(load.workspace.crossed_modules.count(name) == 1);
        for (const auto& name : {"Disc2", "Circ3", "Sphere", "RP26"})
            REQUIRE(load.workspace.nerves.count(name) == 1);
        REQUIRE(load.workspace.labelings.count("w1") == 1);
    }
    SECTION("a file defining a group and a crossed module extends the catalog by two names") {
        Workspace base = builtin_workspace();
        Json doc;
        doc["groups"]["MyS3"] = group_to_json(*base.groups.at("S3"));
        Json myxm = xm_to_json(*base.crossed_modules.at("AdS3"));
        myxm["G"] = "MyS3";  // reference the sibling definition by name
        doc["crossed_modules"]["MyAdS3"] = myxm;
        TempFile f("extend", doc.dump());
        auto load = load_workspace({f.path});
        REQUIRE(load.ok());
        REQUIRE(load.workspace.groups.count("MyS3") == 1);
        REQUIRE(load.workspace.crossed_modules.count("MyAdS3") == 1);
        REQUIRE(same_xm(load.workspace.crossed_modules.at("MyAdS3"),
                        base.crossed_modules.at("AdS3")));
    }
    SECTION("a non-associative table is diagnosed with its witness triple") {
        Json doc;
        // identity and inverses fine; (1*1)*2 = 2 but 1*(1*2) = 0
        doc["groups"]["Broken"] = {{"order", 3},
                                   {"mul", {{0, 1, 2}, {1, 0, 1}, {2, 2, 0}}}};
        TempFile f("broken", doc.dump());
        auto load = load_workspace({f.path});
        REQUIRE(!load.ok());
        REQUIRE(load.diagnostics.size() == 1);
        const auto& d = load.diagnostics[0];
        REQUIRE(d.code == "not-associative");
        REQUIRE(d.witness.size() == 3);
    }
    SECTION("failures aggregate instead of stopping at the first") {
        Json doc;
        doc["groups"]["BadA"] = {{"order", 2}, {"mul", {{0, 1}, {1, 7}}}};
        doc["groups"]["BadB"] = {{"order", 2}, {"mul", {{0}}}};
        doc["nerves"]["BadN"] = {{"vertices", 2}, {"edges", {{0, 0}}}};
        TempFile f("multi", doc.dump());
        auto load = load_workspace({f.path});
        REQUIRE(load.diagnostics.size() == 3);
    }
    SECTION("dangling references are reported") {
        Json doc;
        doc["cocycles"]["orphan"] = {{"nerve", "NoSuchNerve"},
                                     {"xm", "J3"},
                                     {"g", Json::object()},
                                     {"h", Json::array()}};
        TempFile f("dangling", doc.dump());
        auto load = load_workspace({f.path});
        REQUIRE(!load.ok());
        REQUIRE(load.diagnostics[0].code == "dangling");
    }
    SECTION("duplicate names are rejected") {
        Json doc;
        doc["groups"]["Z2"] = group_to_json(*cyclic_group(2));
        TempFile f("dup", doc.dump());
        auto load = load_workspace({f.path});
        REQUIRE(!load.ok());
        REQUIRE(load.diagnostics[0].code == "duplicate");
    }
    SECTION("unreadable and malformed files") {
        auto load = load_workspace({"does_not_exist.json"});
        REQUIRE(!load.ok());
        REQUIRE(load.diagnostics[0].code == "io");
        TempFile f("garbage", "not json {");
        auto load2 = load_workspace({f.path});
        REQUIRE(!load2.ok());
        REQUIRE(load2.diagnostics[0].code == "parse");
    }
}

TEST_CASE("edge keys") {
    Workspace ws = builtin_workspace();
    const Nerve& circ = *ws.nerves.at("Circ3");
    SECTION("bad keys are parse errors") {
        Json g;
        g["not an edge"] = 0;
        auto r = edge_table_from_json(g, circ, "g");
        REQUIRE(!r.ok());
    }
    SECTION("unknown edges are dangling") {
        Json g;
        g[edge_key(0, 1)] = 0;
        g[edge_key(0, 2)] = 0;
        g[edge_key(1, 2)] = 0;
        g[edge_key(2, 5)] = 0;
        auto r = edge_table_from_json(g, circ, "g");
        REQUIRE(!r.ok());
        REQUIRE(r.error().code == "dangling");
    }
    SECTION("missing edges are reported") {
        Json g;
        g[edge_key(0, 1)] = 0;
        auto r = edge_table_from_json(g, circ, "g");
        REQUIRE(!r.ok());
        REQUIRE(r.error().message.find("missing edge") != std::string::npos);
    }
}
