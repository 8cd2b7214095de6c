#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    const std::string command = std::string(SEABENCH_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("seabbc_cli_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("compare runs a smoke preset end to end") {
    TempDir dir("compare");
    const int code = run_cli("compare --preset smoke --runs 3 --seed 1 --jobs 2 --out " +
                             dir.path.string());
    CHECK(code == 0);
    const std::string sga = slurp(dir.path / "onemax_sga_batch.csv");
    const std::string sea = slurp(dir.path / "onemax_sea_batch.csv");
    CHECK(sga.rfind("run,seed,success,gen_to_opt,best_fitness\n", 0) == 0);
    CHECK(sea.rfind("run,seed,success,gen_to_opt,best_fitness\n", 0) == 0);
    // 3 runs -> header plus 3 rows
    CHECK(std::count(sga.begin(), sga.end(), '\n') == 4);
}

TEST_CASE("compare can write a per-generation trace") {
    TempDir dir("trace");
    const int code = run_cli("compare --preset smoke --runs 1 --seed 2 --trace --out " +
                             dir.path.string());
    CHECK(code == 0);
    const std::string trace = slurp(dir.path / "onemax_trace_sea.csv");
    CHECK(trace.rfind("gen,best_fitness,count_state0,count_state1\n", 0) == 0);
}

TEST_CASE("fixed seeds give byte-identical output for any jobs value") {
    TempDir a("jobs1");
    TempDir b("jobs8");
    CHECK(run_cli("compare --preset smoke --runs 4 --seed 42 --jobs 1 --out " + a.path.string()) == 0);
    CHECK(run_cli("compare --preset smoke --runs 4 --seed 42 --jobs 8 --out " + b.path.string()) == 0);
    CHECK(slurp(a.path / "onemax_sga_batch.csv") == slurp(b.path / "onemax_sga_batch.csv"));
    CHECK(slurp(a.path / "onemax_sea_batch.csv") == slurp(b.path / "onemax_sea_batch.csv"));
}

TEST_CASE("dumping a resolved configuration reproduces the run") {
    TempDir dir("roundtrip");
    const fs::path config = dir.path / "resolved.cfg";
    const fs::path out1 = dir.path / "first";
    const fs::path out2 = dir.path / "second";
    CHECK(run_cli("compare --preset smoke --runs 3 --seed 9 --max-gen 50 --dump-config " +
                  config.string() + " --out " + out1.string()) == 0);
    // out is deliberately overridden; everything else comes from the file
    CHECK(run_cli("compare --config " + config.string() + " --out " + out2.string()) == 0);
    CHECK(slurp(out1 / "onemax_sga_batch.csv") == slurp(out2 / "onemax_sga_batch.csv"));
    CHECK(slurp(out1 / "onemax_sea_batch.csv") == slurp(out2 / "onemax_sea_batch.csv"));
    // the dump really carries the explicit override
    CHECK(slurp(config).find("max-gen = 50") != std::string::npos);
}

TEST_CASE("sweep and blocksize write their grids") {
    TempDir dir("grids");
    CHECK(run_cli("sweep --preset smoke --step 0.5 --runs 2 --seed 3 --jobs 2 --out " +
                  dir.path.string()) == 0);
    const std::string sweep = slurp(dir.path / "onemax_sweep.csv");
    CHECK(sweep.rfind("p_mut_state,p_mut_per_bit,sr_percent,gnto_all\n", 0) == 0);
    CHECK(std::count(sweep.begin(), sweep.end(), '\n') == 10); // header + 3x3 cells

    CHECK(run_cli("blocksize --preset smoke --k 1,3 --runs 2 --seed 3 --jobs 2 --out " +
                  dir.path.string()) == 0);
    const std::string blocks = slurp(dir.path / "onemax_blocksize.csv");
    CHECK(blocks.rfind("k,sr_percent,gnto_all,gnto_success\n", 0) == 0);
    CHECK(std::count(blocks.begin(), blocks.end(), '\n') == 3);

    // without --k the study covers the odd sizes 1..19
    CHECK(run_cli("blocksize --preset smoke --runs 1 --seed 3 --jobs 2 --max-gen 40 --out " +
                  dir.path.string()) == 0);
    const std::string defaults = slurp(dir.path / "onemax_blocksize.csv");
    CHECK(std::count(defaults.begin(), defaults.end(), '\n') == 11);
}

TEST_CASE("clouds needs no problem selection") {
    TempDir dir("clouds_default");
    CHECK(run_cli("clouds --count 3 --n 10 --k 3 --pflip 0.25 --seed 7 --out " +
                  dir.path.string()) == 0);
    const std::string clouds = slurp(dir.path / "clouds.csv");
    CHECK(std::count(clouds.begin(), clouds.end(), '\n') == 4);
}

TEST_CASE("clouds respects count, including zero") {
    TempDir dir("clouds");
    CHECK(run_cli("clouds --problem onemax --count 0 --n 20 --k 3 --pflip 0.25 --seed 5 --out " +
                  dir.path.string()) == 0);
    CHECK(slurp(dir.path / "clouds.csv") == "idx,f,m,m_conv1,m_conv0,m_conv1_m_conv0,m_conv0_m_conv1\n");

    CHECK(run_cli("clouds --problem onemax --count 7 --n 20 --k 3 --pflip 0 --seed 5 --out " +
                  dir.path.string()) == 0);
    const std::string clouds = slurp(dir.path / "clouds.csv");
    CHECK(std::count(clouds.begin(), clouds.end(), '\n') == 8);
    // with a zero flip rate every column equals the base fitness
    std::istringstream lines(clouds);
    std::string line;
    std::getline(lines, line); // header
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string cell;
        std::getline(fields, cell, ','); // idx
        std::getline(fields, cell, ',');
        const std::string f = cell;
        while (std::getline(fields, cell, ',')) CHECK(cell == f);
    }
}

TEST_CASE("usage errors exit with status 2") {
    TempDir dir("usage");
    CHECK(run_cli("compare --problem nope --runs 1 --out " + dir.path.string()) == 2);
    CHECK(run_cli("compare --runs 1 --out " + dir.path.string()) == 2); // no problem, no preset
    CHECK(run_cli("compare --preset unknown --runs 1 --out " + dir.path.string()) == 2);
    CHECK(run_cli("sweep --preset smoke --step 1.5 --runs 1 --out " + dir.path.string()) == 2);
    CHECK(run_cli("sweep --preset smoke --step 0 --runs 1 --out " + dir.path.string()) == 2);
    CHECK(run_cli("blocksize --preset smoke --k 1,2 --runs 1 --out " + dir.path.string()) == 2);
    CHECK(run_cli("compare --preset smoke --k 4 --runs 1 --out " + dir.path.string()) == 2);
    CHECK(run_cli("compare --preset smoke --runs 0 --out " + dir.path.string()) == 2);
    CHECK(run_cli("nonsense") == 2);

    const fs::path bad = dir.path / "bad.cfg";
    std::ofstream(bad) << "mystery = 1\n";
    CHECK(run_cli("compare --preset smoke --config " + bad.string()) == 2);
    std::ofstream(bad) << "preset = smoke\n";
    CHECK(run_cli("compare --config " + bad.string()) == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("compare --help") == 0);
}
