// End-to-end tests against the built binary: exit-code contract, report
// shape, and byte-for-byte determinism across repeated runs.
#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#ifndef XMOD_BIN
#error "XMOD_BIN must point at the built CLI"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(XMOD_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// timing is the one report field allowed to differ between runs
std::string strip_timing(const std::string& s) {
    std::istringstream in(s);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.find("\"timing_ms\"") == std::string::npos) out << line << "\n";
    return out.str();
}

nlohmann::json parse_report(const std::string& s) {
    auto j = nlohmann::json::parse(s);
    REQUIRE(j["schema"] == 1);
    return j;
}

}  // namespace

TEST_CASE("check subcommand") {
    auto r = run("check J3");
    REQUIRE(r.exit_code == 0);
    auto j = parse_report(r.out);
    REQUIRE(j["status"] == "ok");
    REQUIRE(j["payload"]["axioms"] == "pass");
    REQUIRE(j["payload"]["pi0_order"] == 2);
    REQUIRE(j["payload"]["pi1_order"] == 3);
    REQUIRE(j["payload"]["G1_central"] == true);
    REQUIRE(j["payload"]["tG_normal"] == true);
}

TEST_CASE("aut subcommand") {
    auto r = run("aut S3");
    REQUIRE(r.exit_code == 0);
    auto j = parse_report(r.out);
    REQUIRE(j["payload"]["aut_order"] == 6);
    REQUIRE(j["payload"]["inn_order"] == 6);
    REQUIRE(j["payload"]["out_order"] == 1);
}

TEST_CASE("bispace subcommand") {
    auto r = run("bispace --xm J3");
    REQUIRE(r.exit_code == 0);
    auto j = parse_report(r.out);
    REQUIRE(j["payload"]["group_order"] == 2);
    REQUIRE(j["payload"]["matches_pi0"] == true);
}

TEST_CASE("cocycle subcommand") {
    SECTION("validation") {
        auto r = run("cocycle --check hol1_J3_Circ3");
        REQUIRE(r.exit_code == 0);
    }
    SECTION("enumeration") {
        auto r = run("cocycle --enumerate --xm J3 --nerve Circ3");
        REQUIRE(r.exit_code == 0);
        auto j = parse_report(r.out);
        REQUIRE(j["payload"]["classes"] == 6);
        REQUIRE(j["payload"]["group_order"] == 6);
    }
    SECTION("negative equivalence exits 1 with a witness") {
        auto r = run("cocycle --equivalent triv_J3_Circ3 hol1_J3_Circ3");
        REQUIRE(r.exit_code == 1);
        auto j = parse_report(r.out);
        REQUIRE(j["status"] == "fail");
        REQUIRE(j["payload"]["equivalent"] == false);
        REQUIRE(!j["witnesses"].empty());
    }
    SECTION("positive triviality exits 0 with a gauge") {
        auto r = run("cocycle --is-trivial triv_J3_Circ3");
        REQUIRE(r.exit_code == 0);
        auto j = parse_report(r.out);
        REQUIRE(j["payload"]["trivial"] == true);
    }
    SECTION("negative triviality exits 1") {
        REQUIRE(run("cocycle --is-trivial hol1_J3_Circ3").exit_code == 1);
    }
}

TEST_CASE("cohomology subcommand") {
    auto r = run("cohomology --nerve RP26 --coeff Z2 --deg 2");
    REQUIRE(r.exit_code == 0);
    auto j = parse_report(r.out);
    REQUIRE(j["payload"]["invariant_factors"] == nlohmann::json::array({2}));
    REQUIRE(j["payload"]["order"] == 2);
    SECTION("coboundary decision: the generator of H^1 has no primitive") {
        auto neg = run("cohomology --nerve RP26 --coeff Z2 --deg 1 --labeling w1");
        REQUIRE(neg.exit_code == 1);
        auto jn = parse_report(neg.out);
        REQUIRE(jn["payload"]["coboundary"] == false);
    }
    SECTION("coboundary decision: a genuine coboundary returns its primitive") {
        std::ofstream f("cli_cob.json");
        f << R"({"labelings": {"cob": {"nerve": "Circ3",
                "values": {"[0,1]": 1, "[0,2]": 1, "[1,2]": 0}}}})";
        f.close();
        auto pos =
            run("--workspace cli_cob.json cohomology --nerve Circ3 --coeff Z3 --deg 1 "
                "--labeling cob");
        REQUIRE(pos.exit_code == 0);
        auto jp = parse_report(pos.out);
        REQUIRE(jp["payload"]["coboundary"] == true);
        REQUIRE(jp["payload"].contains("primitive"));
        std::remove("cli_cob.json");
    }
}

TEST_CASE("obstruction subcommand") {
    SECTION("nonzero class exits 1 with the certificate") {
        auto r = run("obstruction --xm V4 --nerve RP26 --tau w1");
        REQUIRE(r.exit_code == 1);
        auto j = parse_report(r.out);
        REQUIRE(j["status"] == "fail");
        REQUIRE(j["payload"]["zero"] == false);
        REQUIRE(!j["witnesses"].empty());
    }
    SECTION("vanishing class exits 0 with the corrected lift") {
        auto r = run("obstruction --xm V4 --nerve Circ3 --tau hol1");
        REQUIRE(r.exit_code == 0);
        auto j = parse_report(r.out);
        REQUIRE(j["payload"]["zero"] == true);
        REQUIRE(j["payload"].contains("corrected_lift"));
    }
}

TEST_CASE("exactseq subcommand") {
    auto r = run("exactseq --xm J3 --nerve Circ3");
    REQUIRE(r.exit_code == 0);
    auto j = parse_report(r.out);
    REQUIRE(j["payload"]["H1_order"] == 3);
    REQUIRE(j["payload"]["pi0_bibun"] == 6);
    REQUIRE(j["payload"]["map_order"] == 2);
    REQUIRE(j["payload"]["exact"] == true);
}

TEST_CASE("structures subcommand") {
    SECTION("no structures exits 1 with the failing cycle") {
        auto r = run("structures --xm D1S3 --nerve Circ3 --g hol1");
        REQUIRE(r.exit_code == 1);
        auto j = parse_report(r.out);
        REQUIRE(j["payload"]["count"] == 0);
        REQUIRE(!j["witnesses"].empty());
    }
    SECTION("Jandl propagation admits |H| structures per component") {
        auto r = run("structures --xm J3 --nerve Circ3 --g hol1");
        REQUIRE(r.exit_code == 0);
        auto j = parse_report(r.out);
        REQUIRE(j["payload"]["count"] == 2);
    }
}

TEST_CASE("usage and validation errors exit 2") {
    REQUIRE(run("frobnicate").exit_code == 2);
    REQUIRE(run("check NoSuchThing").exit_code == 2);
    REQUIRE(run("aut NoSuchGroup").exit_code == 2);
    REQUIRE(run("cohomology --nerve Circ3 --coeff S3 --deg 1").exit_code == 2);  // nonabelian
    REQUIRE(run("cocycle --enumerate --xm AdS3 --nerve RP26 --max-enum 1000").exit_code == 2);
    SECTION("workspace validation failures") {
        std::ofstream f("cli_bad_ws.json");
        f << R"({"groups": {"Bad": {"order": 2, "mul": [[0,1],[1,5]]}}})";
        f.close();
        REQUIRE(run("--workspace cli_bad_ws.json check J3").exit_code == 2);
        std::remove("cli_bad_ws.json");
    }
}

TEST_CASE("reports are byte-identical across runs, timing aside") {
    std::vector<std::string> invocations = {
        "check J3",
        "check V4",
        "aut S3",
        "aut D4",
        "bispace --xm J3",
        "bispace --xm AdS3",
        "cocycle --enumerate --xm J3 --nerve Circ3",
        "cocycle --is-trivial hol1_J3_Circ3",
        "cocycle --equivalent triv_J3_Circ3 hol1_J3_Circ3",
        "cohomology --nerve RP26 --coeff Z2 --deg 1",
        "cohomology --nerve Sphere --coeff Z3 --deg 2",
        "cohomology --nerve RP26 --coeff Z2 --deg 1 --labeling w1",
        "check w1",
        "obstruction --xm V4 --nerve RP26 --tau w1",
        "exactseq --xm J3 --nerve Circ3",
        "exactseq --xm V4 --nerve Sphere",
        "structures --xm J3 --nerve Circ3 --g hol1",
    };
    for (const auto& args : invocations) {
        CAPTURE(args);
        auto a = run(args), b = run(args);
        REQUIRE(a.exit_code == b.exit_code);
        REQUIRE(strip_timing(a.out) == strip_timing(b.out));
        REQUIRE(!a.out.empty());
    }
}

TEST_CASE("human mode stays readable") {
    auto r = run("--human check J3");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("check: ok") != std::string::npos);
}
