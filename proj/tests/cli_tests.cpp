// End-to-end checks of the command-line tool: exit codes, report determinism,
// schema output, JSON input. Invoked by ctest with the binary path as argv[1].
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int checks = 0, failures = 0;

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run(const std::string& cmd) {
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failures;
        std::cerr << "cli check failed: " << what << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-binary>\n";
        return 2;
    }
    std::string bin = argv[1];
    std::string tmp = "/tmp/barq_cli_test";
    run("mkdir -p " + tmp);

    expect(run(bin + " catalog > " + tmp + "/catalog.txt 2>/dev/null") == 0, "catalog exits 0");
    expect(slurp(tmp + "/catalog.txt").find("dual0") != std::string::npos, "catalog lists dual0");

    expect(run(bin + " schema > " + tmp + "/schema.txt 2>/dev/null") == 0, "schema exits 0");
    expect(slurp(tmp + "/schema.txt").find("basis") != std::string::npos, "schema mentions basis");

    // a passing verify exits 0; reports are byte-identical across runs and jobs
    expect(run(bin + " verify bar --catalog dual0 --max-weight 4 --out " + tmp + "/r1.json 2>/dev/null") == 0,
           "verify bar dual0 exits 0");
    expect(run(bin + " verify bar --catalog dual0 --max-weight 4 --out " + tmp + "/r2.json 2>/dev/null") == 0,
           "verify bar dual0 exits 0 again");
    expect(slurp(tmp + "/r1.json") == slurp(tmp + "/r2.json"), "reports byte-identical across runs");
    expect(run(bin + " verify all --catalog k --max-weight 3 --jobs 1 --out " + tmp + "/j1.json 2>/dev/null") == 0,
           "verify all k jobs=1");
    expect(run(bin + " verify all --catalog k --max-weight 3 --jobs 2 --out " + tmp + "/j2.json 2>/dev/null") == 0,
           "verify all k jobs=2");
    expect(slurp(tmp + "/j1.json") == slurp(tmp + "/j2.json"), "reports byte-identical across jobs");

    // the flagship run: the full suite on dual numbers at weight 5
    expect(run(bin + " verify all --catalog dual0 --max-weight 5 --out " + tmp + "/all.json 2>/dev/null") == 0,
           "verify all dual0 at weight 5 exits 0");

    // the negative control makes the run fail with exit 1 and a witness
    expect(run(bin + " verify em-leibniz --catalog ext1 --max-weight 4 --negative-control standard-signs"
                     " --out " +
               tmp + "/neg.json 2>/dev/null") == 1,
           "standard-sign control exits 1 on ext1");
    expect(slurp(tmp + "/neg.json").find("witness") != std::string::npos, "negative report has a witness");

    // input/schema errors exit 2, distinct from check failures
    expect(run(bin + " verify bar --catalog nosuch 2>/dev/null") == 2, "unknown catalog exits 2");
    expect(run(bin + " verify bar --catalog dual0 --max-weight 99 2>/dev/null") == 2, "cap violation exits 2");
    expect(run(bin + " verify nosuch --catalog dual0 2>/dev/null") == 2, "unknown suite exits 2");
    expect(run(bin + " verify bar 2>/dev/null") == 2, "missing source exits 2");

    // homology tables
    expect(run(bin + " homology --catalog cone --complex cobar-bar --max-weight 4 --out " + tmp +
               "/h.json 2>/dev/null") == 0,
           "homology verb exits 0");
    {
        std::string h = slurp(tmp + "/h.json");
        size_t at = h.find("\"table\"");
        expect(at != std::string::npos, "homology report has a table");
        std::string table = h.substr(at);
        expect(table.find(": 1") == std::string::npos && table.find(": 2") == std::string::npos,
               "cone cobar-bar homology is all zero");
    }

    // JSON algebra input goes through the same pipeline
    {
        std::ofstream f(tmp + "/dual.json");
        f << R"({"name":"dualJ","basis":[{"label":"1","degree":0},{"label":"x","degree":0}],
                 "unit":"1","differential":[],
                 "product":[
                   {"left":"1","right":"1","result":[{"label":"1","coeff":"1"}]},
                   {"left":"1","right":"x","result":[{"label":"x","coeff":"1"}]},
                   {"left":"x","right":"1","result":[{"label":"x","coeff":"1"}]}]})";
    }
    expect(run(bin + " verify bar --input " + tmp + "/dual.json --max-weight 3 2>/dev/null") == 0,
           "JSON input verifies");
    {
        std::ofstream f(tmp + "/bad.json");
        f << "{\"basis\": oops";
    }
    expect(run(bin + " verify bar --input " + tmp + "/bad.json 2>/dev/null") == 2, "bad JSON exits 2");

    std::cout << (failures == 0 ? "cli tests: all pass (" : "cli tests: FAILURES (")
              << (checks - failures) << "/" << checks << ")\n";
    return failures == 0 ? 0 : 1;
}
