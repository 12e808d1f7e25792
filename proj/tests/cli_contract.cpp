// Exercises the command-line surface against its exit-code contract:
//   0 = all checks PASS, 1 = axiom/adjunction FAIL, 2 = parse/structural error.
// Takes the CLI binary path as argv[1]; builds its fixtures in a temp dir.

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "codual/duality.hpp"
#include "codual/io.hpp"
#include "codual/random.hpp"

namespace fs = std::filesystem;
using namespace codual;

namespace {

int failures = 0;

#define CHECK_THAT(cond, msg)                                              \
    do {                                                                   \
        if (!(cond)) {                                                     \
            std::cerr << "[FAIL] " << msg << " (" << __LINE__ << ")\n";    \
            ++failures;                                                    \
        }                                                                  \
    } while (0)

std::string cli;
fs::path dir;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    fs::path out = dir / "cmd_output.txt";
    std::string cmd = cli + " " + args + " > " + out.string() + " 2> " + (dir / "err.txt").string();
    int rc = std::system(cmd.c_str());
    int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    return RunResult{code, ss.str()};
}

std::string put(const std::string& name, const json& j) {
    write_json_file(dir / name, j);
    return (dir / name).string();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_contract <path-to-cli>\n";
        return 1;
    }
    cli = argv[1];
    dir = fs::temp_directory_path() / "codual_cli_contract";
    fs::create_directories(dir);

    RatField q;
    SplitMix64 rng(2024);
    auto g2 = grouplike(q, 2);
    auto dp1 = divided_power(q, 1);

    // --- check: exit 0 on certified structures of every kind
    auto x = random_comodule(g2, rng, 2);
    while (x.dim == 0) x = random_comodule(g2, rng, 2);
    auto z = comodule_to_contramodule(x);
    auto rc = random_right_comodule(g2, rng, 2);
    while (rc.dim == 0) rc = random_right_comodule(g2, rng, 2);
    auto lm = LeftModuleFile<RatField>{random_left_module(g2, rng), g2};
    auto rm = RightModuleFile<RatField>{random_right_module(g2, rng), g2};
    auto bi = random_bicomodule(g2, dp1, rng, 1);
    FiniteTower<RatField> tower{g2, {z, z}, {Matrix<RatField>::identity(q, z.dim)}};

    CHECK_THAT(run("check " + put("c.json", to_json(g2))).exit_code == 0, "check coalgebra");
    CHECK_THAT(run("check " + put("a.json", to_json(dual_algebra(g2)))).exit_code == 0,
               "check algebra");
    CHECK_THAT(run("check " + put("x.json", to_json(x))).exit_code == 0, "check comodule");
    CHECK_THAT(run("check " + put("rc.json", to_json(rc))).exit_code == 0, "check right_comodule");
    CHECK_THAT(run("check " + put("z.json", to_json(z))).exit_code == 0, "check contramodule");
    CHECK_THAT(run("check " + put("lm.json", to_json(lm))).exit_code == 0, "check left_module");
    CHECK_THAT(run("check " + put("rm.json", to_json(rm))).exit_code == 0, "check right_module");
    CHECK_THAT(run("check " + put("bi.json", to_json(bi))).exit_code == 0, "check bicomodule");
    CHECK_THAT(run("check " + put("tw.json", to_json(tower))).exit_code == 0, "check tower");

    // --- check: exit 1 with named diagram and witness on a mutated structure
    auto broken = g2;
    broken.delta(tensor_index(2, 0, 0), 0) = q.zero();
    broken.delta(tensor_index(2, 0, 1), 0) = q.one();
    auto r = run("check --format json " + put("broken.json", to_json(broken)));
    CHECK_THAT(r.exit_code == 1, "mutated coalgebra exits 1");
    auto report = json::parse(r.output);
    bool counit_witnessed = false;
    for (const auto& v : report["verdicts"])
        if (v["diagram"] == "counit" && v["pass"] == false && v.contains("witness") &&
            v["witness"]["basis_index"] == 0)
            counit_witnessed = true;
    CHECK_THAT(counit_witnessed, "report names counit with witness basis 0");

    auto bad_x = mutate_comodule(x, rng);
    CHECK_THAT(run("check " + put("bad_x.json", to_json(bad_x))).exit_code == 1,
               "mutated comodule exits 1");

    // --- exit 2 on every parse/structural error class
    {
        std::ofstream f(dir / "malformed.json");
        f << "{ not json";
    }
    CHECK_THAT(run("check " + (dir / "malformed.json").string()).exit_code == 2, "malformed JSON");
    json unknown = to_json(g2);
    unknown["kind"] = "frobenius";
    CHECK_THAT(run("check " + put("unknown.json", unknown)).exit_code == 2, "unknown kind");
    json misshapen = to_json(g2);
    misshapen["delta"] = json::array({json::array({"1", "0"})});
    CHECK_THAT(run("check " + put("misshapen.json", misshapen)).exit_code == 2, "shape mismatch");
    json bad_entry = to_json(g2);
    bad_entry["eps"][0][0] = "1/0";
    CHECK_THAT(run("check " + put("bad_entry.json", bad_entry)).exit_code == 2, "bad field element");
    PrimeField f3(3);
    json gf_range = to_json(grouplike(f3, 1));
    gf_range["eps"][0][0] = 5;
    CHECK_THAT(run("check " + put("gf_range.json", gf_range)).exit_code == 2, "GF out of range");
    CHECK_THAT(run("check " + (dir / "nonexistent.json").string()).exit_code == 2, "missing file");

    // --- dual: functor application and roundtrip
    CHECK_THAT(run("dual " + (dir / "x.json").string() + " --out " + (dir / "xz.json").string())
                       .exit_code == 0,
               "dual comodule");
    CHECK_THAT(run("check " + (dir / "xz.json").string()).exit_code == 0, "dual output certified");
    CHECK_THAT(run("dual " + (dir / "xz.json").string() + " --out " + (dir / "xzz.json").string())
                       .exit_code == 0,
               "dual back");
    auto j1 = load_json_file(dir / "x.json");
    auto j2 = load_json_file(dir / "xzz.json");
    CHECK_THAT(j1["rho"] == j2["rho"], "dual dual = identity on coordinates");
    CHECK_THAT(run("dual " + (dir / "c.json").string()).exit_code == 0, "dual coalgebra");
    CHECK_THAT(run("dual " + (dir / "lm.json").string()).exit_code == 0, "dual left module");
    CHECK_THAT(run("dual " + (dir / "rm.json").string()).exit_code == 0, "dual right module");
    CHECK_THAT(run("dual " + (dir / "rc.json").string()).exit_code == 2,
               "no duality functor for right_comodule");
    CHECK_THAT(run("dual " + (dir / "broken.json").string()).exit_code == 1,
               "dual of failing coalgebra exits 1");

    // --- cotensor / cohom / adjoint
    CHECK_THAT(run("cotensor " + (dir / "rc.json").string() + " " + (dir / "x.json").string())
                       .exit_code == 0,
               "cotensor report");
    auto nfile = put("n.json", to_json(comodule_to_contramodule(graded_comodule(dp1, {1, 1}))));
    (void)nfile;
    auto bi_n = random_contramodule(dp1, rng, 1);
    put("bin.json", to_json(bi_n));
    CHECK_THAT(run("cohom " + (dir / "bi.json").string() + " " + (dir / "bin.json").string() +
                   " --out " + (dir / "h.json").string())
                       .exit_code == 0,
               "cohom");
    CHECK_THAT(run("check " + (dir / "h.json").string()).exit_code == 0, "cohom output certified");
    CHECK_THAT(run("adjoint " + (dir / "rc.json").string() + " " + (dir / "bi.json").string() +
                   " " + (dir / "bin.json").string())
                       .exit_code == 0,
               "adjoint passes");
    // mismatched fields across files
    put("c5.json", to_json(grouplike(PrimeField(5), 2)));
    CHECK_THAT(run("cotensor " + (dir / "rc.json").string() + " " + (dir / "c5.json").string())
                       .exit_code == 2,
               "field mismatch across files");

    // --- random: emitted structures always certify
    for (std::string kind : {"coalgebra", "comodule", "right_comodule", "contramodule",
                             "left_module", "right_module", "tower"}) {
        std::string extra = kind == "coalgebra" ? " --builder zoo" : " --over " + (dir / "c.json").string();
        auto out = (dir / ("r_" + kind + ".json")).string();
        CHECK_THAT(run("random " + kind + extra + " --seed 9 --out " + out).exit_code == 0,
                   "random " + kind);
        CHECK_THAT(run("check " + out).exit_code == 0, "random " + kind + " certifies");
    }
    CHECK_THAT(run("random bicomodule --over " + (dir / "c.json").string() + " --over-right " +
                   (dir / "c.json").string() + " --seed 9 --out " + (dir / "r_bi.json").string())
                       .exit_code == 0,
               "random bicomodule");
    CHECK_THAT(run("check " + (dir / "r_bi.json").string()).exit_code == 0,
               "random bicomodule certifies");
    CHECK_THAT(run("random comodule --over " + (dir / "c.json").string() + " --seed 4 --field GF:5")
                       .exit_code == 2,
               "field mismatch between --field and --over");

    // --- determinism: byte-identical selftest and random output for fixed seed
    auto s1 = run("selftest --seed 1 --count 4 --format json");
    auto s2 = run("selftest --seed 1 --count 4 --format json");
    CHECK_THAT(s1.exit_code == 0, "selftest passes");
    CHECK_THAT(s1.output == s2.output, "selftest byte-identical across runs");
    auto r1 = run("random comodule --over " + (dir / "c.json").string() + " --seed 11");
    auto r2 = run("random comodule --over " + (dir / "c.json").string() + " --seed 11");
    CHECK_THAT(r1.output == r2.output, "random byte-identical across runs");
    auto r3 = run("random comodule --over " + (dir / "c.json").string() + " --seed 12");
    CHECK_THAT(r1.output != r3.output, "different seeds differ");

    if (failures == 0) {
        std::cout << "cli_contract: all checks passed\n";
        return 0;
    }
    std::cerr << "cli_contract: " << failures << " failures\n";
    return 1;
}
