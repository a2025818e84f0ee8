#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exitCode = -1;
    std::string out;
};

// Runs the CLI from the golden directory so file paths in the command echo
// stay relative and the outputs stay byte-stable.
RunResult run(const std::string& args, bool mergeStderr = false) {
    std::string cmd = "cd " GOLDEN_DIR " && " CLI_BIN " " + args;
    cmd += mergeStderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(GOLDEN_DIR "/") + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("gen emits the golden matrix") {
    RunResult r = run("gen --n 3 --d 2");
    CHECK(r.exitCode == 0);
    CHECK(r.out == golden("f32.txt"));
}

TEST_CASE("gen output round-trips through validate") {
    RunResult r = run("gen --n 4 --d 3 | " CLI_BIN " validate --input -");
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("input normalized: true") != std::string::npos);

    RunResult fam = run("gen --n 5 --d 3 --family one | " CLI_BIN
                        " degree --input -");
    CHECK(fam.exitCode == 0);
    CHECK(fam.out.find("birational: true") != std::string::npos);
}

TEST_CASE("degree matches the golden text report") {
    RunResult r = run("degree --input cremona.txt");
    CHECK(r.exitCode == 0);
    CHECK(r.out == golden("degree_cremona.txt"));
}

TEST_CASE("multidegree --json matches the golden document") {
    RunResult r = run("multidegree --input f32.txt --json");
    CHECK(r.exitCode == 0);
    CHECK(r.out == golden("multidegree_f32.json"));
}

TEST_CASE("bounds --json matches the golden document") {
    RunResult r = run("bounds --input f32.txt --json");
    CHECK(r.exitCode == 0);
    CHECK(r.out == golden("bounds_f32.json"));
}

TEST_CASE("inverse") {
    RunResult r = run("inverse --input f22.txt");
    CHECK(r.exitCode == 0);
    CHECK(r.out == "d(f^-1): 2\ninverse matrix:\n1 1 0\n0 2 0\n1 0 1\n");

    RunResult bad = run("inverse --input powers.txt", true);
    CHECK(bad.exitCode == 1);
    CHECK(bad.out.find("not birational: |det(M)| = 4") != std::string::npos);
}

TEST_CASE("compose") {
    RunResult r = run("compose --input cremona.txt --input cremona.txt");
    CHECK(r.exitCode == 0);
    CHECK(r.out == "d: 1\ncomposite matrix:\n1 0 0\n0 1 0\n0 0 1\n");
}

TEST_CASE("indet and witness") {
    RunResult locus = run("indet --input cremona.txt");
    CHECK(locus.exitCode == 0);
    CHECK(locus.out ==
          "codim: 2\ndim: 0\ntopCount: 3\ncomponents:\n  0 1\n  0 2\n  1 2\n");

    RunResult empty = run("indet --input powers.txt");
    CHECK(empty.exitCode == 0);
    CHECK(empty.out == "indeterminacy: empty\n");

    RunResult w = run("witness --input f32.txt");
    CHECK(w.exitCode == 0);
    CHECK(w.out.find("size: 2 (bound 2)") != std::string::npos);
}

TEST_CASE("search subcommand") {
    RunResult r = run("search --n 2 --d 2");
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("maxInverseDegree: 2") != std::string::npos);
    CHECK(r.out.find("status: CONFIRMED-AT-THIS-SIZE") != std::string::npos);

    RunResult thm = run("search --n 2 --d 2 --mode theorem");
    CHECK(thm.exitCode == 0);
    CHECK(thm.out.find("violations: 0") != std::string::npos);

    RunResult list = run("search --n 1 --d 2 --mode list");
    CHECK(list.exitCode == 0);
    CHECK(list.out == "0 2\n2 0\n\n");  // the only normalized matrix

    RunResult infeasible = run("search --n 9 --d 9", true);
    CHECK(infeasible.exitCode == 2);
    CHECK(infeasible.out.find("refused") != std::string::npos);
}

TEST_CASE("error exit codes") {
    RunResult missing = run("degree --input does-not-exist.txt", true);
    CHECK(missing.exitCode == 1);

    RunResult badFamily = run("gen --n 4 --d 3 --family nope", true);
    CHECK(badFamily.exitCode == 1);
    CHECK(badFamily.out.find("unknown family") != std::string::npos);

    RunResult ragged = run("degree --input ragged.txt", true);
    CHECK(ragged.exitCode == 1);
}
