#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sea/csv.hpp"
#include "sea/experiments.hpp"
#include "sea/presets.hpp"

namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fully resolved invocation parameters. Precedence: built-in defaults, then the
// preset (explicit --preset, or the problem's paper-P* row when only --problem
// is given), then --config file entries, then explicit flags.
struct Settings {
    std::string problem;
    int runs = 100;
    std::uint64_t seed = 42;
    int jobs = 1;
    std::string out = ".";
    int n = 100;
    int k = 3;
    int max_gen = 3000;
    int pop_size = 100;
    int t_size = 2;
    double p_cross = 0.6;
    double p_mut = 1.0;
    double p_mut_per_bit = 0.05;
    double p_mut_state = 1.0;
    double step = 0.05;
    double pflip = 0.25;
    int count = 100;
    std::vector<int> k_list;
    bool trace = false;
};

long long parse_int(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &pos);
    } catch (const std::exception&) {
        throw UsageError("config: bad integer for '" + key + "': " + value);
    }
    if (pos != value.size()) throw UsageError("config: bad integer for '" + key + "': " + value);
    return v;
}

double parse_real(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw UsageError("config: bad number for '" + key + "': " + value);
    }
    if (pos != value.size()) throw UsageError("config: bad number for '" + key + "': " + value);
    return v;
}

void apply_key_value(Settings& s, const std::string& key, const std::string& value) {
    if (key == "problem") s.problem = value;
    else if (key == "runs") s.runs = static_cast<int>(parse_int(key, value));
    else if (key == "seed") s.seed = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "jobs") s.jobs = static_cast<int>(parse_int(key, value));
    else if (key == "out") s.out = value;
    else if (key == "n") s.n = static_cast<int>(parse_int(key, value));
    else if (key == "k") s.k = static_cast<int>(parse_int(key, value));
    else if (key == "max-gen") s.max_gen = static_cast<int>(parse_int(key, value));
    else if (key == "pop-size") s.pop_size = static_cast<int>(parse_int(key, value));
    else if (key == "t-size") s.t_size = static_cast<int>(parse_int(key, value));
    else if (key == "p-cross") s.p_cross = parse_real(key, value);
    else if (key == "p-mut") s.p_mut = parse_real(key, value);
    else if (key == "p-mut-per-bit") s.p_mut_per_bit = parse_real(key, value);
    else if (key == "p-mut-state") s.p_mut_state = parse_real(key, value);
    else if (key == "step") s.step = parse_real(key, value);
    else if (key == "pflip") s.pflip = parse_real(key, value);
    else if (key == "count") s.count = static_cast<int>(parse_int(key, value));
    else if (key == "preset") throw UsageError("config: 'preset' is not allowed in config files; they hold resolved values");
    else throw UsageError("config: unknown key '" + key + "'");
}

std::vector<std::pair<std::string, std::string>> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("config: cannot open " + path);
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    auto trim = [](std::string v) {
        const auto begin = v.find_first_not_of(" \t\r");
        const auto end = v.find_last_not_of(" \t\r");
        return begin == std::string::npos ? std::string() : v.substr(begin, end - begin + 1);
    };
    while (std::getline(in, line)) {
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw UsageError("config: expected 'key = value', got: " + line);
        pairs.emplace_back(trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
    }
    return pairs;
}

void dump_config(const Settings& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "problem = " << s.problem << '\n'
        << "runs = " << s.runs << '\n'
        << "seed = " << s.seed << '\n'
        << "jobs = " << s.jobs << '\n'
        << "out = " << s.out << '\n'
        << "n = " << s.n << '\n'
        << "k = " << s.k << '\n'
        << "max-gen = " << s.max_gen << '\n'
        << "pop-size = " << s.pop_size << '\n'
        << "t-size = " << s.t_size << '\n'
        << "p-cross = " << sea::format_number(s.p_cross) << '\n'
        << "p-mut = " << sea::format_number(s.p_mut) << '\n'
        << "p-mut-per-bit = " << sea::format_number(s.p_mut_per_bit) << '\n'
        << "p-mut-state = " << sea::format_number(s.p_mut_state) << '\n'
        << "step = " << sea::format_number(s.step) << '\n'
        << "pflip = " << sea::format_number(s.pflip) << '\n'
        << "count = " << s.count << '\n';
}

void apply_preset(Settings& s, const sea::Preset& p) {
    s.problem = sea::Problem::make(p.problem, p.blocks_n).name();
    s.n = p.blocks_n;
    s.k = p.block_k;
    s.max_gen = p.max_gen;
    s.pop_size = p.pop_size;
    s.t_size = p.t_size;
    s.p_cross = p.p_cross;
    s.p_mut = p.p_mut;
    s.p_mut_per_bit = p.p_mut_per_bit;
    s.p_mut_state = p.p_mut_state;
}

sea::ProblemId problem_id_of(const std::string& name) {
    // lengths are irrelevant here; from_name validates the name
    return sea::Problem::from_name(name, 100).id;
}

// Raw flag values plus where they were bound, for explicit-flag detection.
struct Cli {
    Settings raw;
    std::string preset_name;
    std::string config_path;
    std::string dump_path;
};

Settings resolve(CLI::App* sub, Cli& cli, bool problem_required) {
    std::vector<std::pair<std::string, std::string>> file_pairs;
    if (sub->count("--config")) file_pairs = load_config_file(cli.config_path);

    std::string problem_hint;
    if (sub->count("--problem")) problem_hint = cli.raw.problem;
    else {
        for (const auto& [key, value] : file_pairs) {
            if (key == "problem") problem_hint = value;
        }
    }

    Settings s;
    s.problem = "onemax";
    if (sub->count("--preset")) {
        const auto preset = sea::find_preset(cli.preset_name);
        if (!preset) throw UsageError("unknown preset: " + cli.preset_name);
        apply_preset(s, *preset);
    } else if (!problem_hint.empty()) {
        apply_preset(s, sea::default_preset_for(problem_id_of(problem_hint)));
    } else if (problem_required) {
        throw UsageError("give --preset or --problem");
    }
    // clouds probes the coding itself and scores through the ones-count
    // objective, so it runs fine on the built-in defaults

    for (const auto& [key, value] : file_pairs) apply_key_value(s, key, value);

    auto given = [&](const char* flag) { return sub->count(flag) > 0; };
    if (given("--problem")) s.problem = cli.raw.problem;
    if (given("--runs")) s.runs = cli.raw.runs;
    if (given("--seed")) s.seed = cli.raw.seed;
    if (given("--jobs")) s.jobs = cli.raw.jobs;
    if (given("--out")) s.out = cli.raw.out;
    if (given("--n")) s.n = cli.raw.n;
    if (sub->get_option_no_throw("--k") != nullptr && given("--k")) {
        s.k = cli.raw.k;
        s.k_list = cli.raw.k_list;
    }
    if (given("--max-gen")) s.max_gen = cli.raw.max_gen;
    if (given("--pop-size")) s.pop_size = cli.raw.pop_size;
    if (given("--t-size")) s.t_size = cli.raw.t_size;
    if (given("--p-cross")) s.p_cross = cli.raw.p_cross;
    if (given("--p-mut")) s.p_mut = cli.raw.p_mut;
    if (given("--p-mut-per-bit")) s.p_mut_per_bit = cli.raw.p_mut_per_bit;
    if (given("--p-mut-state")) s.p_mut_state = cli.raw.p_mut_state;
    if (sub->get_option_no_throw("--step") != nullptr && given("--step")) s.step = cli.raw.step;
    if (sub->get_option_no_throw("--pflip") != nullptr && given("--pflip")) s.pflip = cli.raw.pflip;
    if (sub->get_option_no_throw("--count") != nullptr && given("--count")) s.count = cli.raw.count;
    if (sub->get_option_no_throw("--trace") != nullptr && given("--trace")) s.trace = cli.raw.trace;

    if (s.runs < 1) throw UsageError("--runs must be >= 1");
    if (s.jobs < 1) throw UsageError("--jobs must be >= 1");
    if (s.count < 0) throw UsageError("--count must be >= 0");
    if (!(s.step > 0.0) || s.step > 1.0) throw UsageError("--step must lie in (0,1]");
    if (s.pflip < 0.0 || s.pflip > 1.0) throw UsageError("--pflip must lie in [0,1]");
    if (s.k < 1 || s.k % 2 == 0) throw UsageError("--k must be odd and >= 1");
    for (int k : s.k_list) {
        if (k < 1 || k % 2 == 0) throw UsageError("--k values must be odd and >= 1");
    }

    if (sub->count("--dump-config")) dump_config(s, cli.dump_path);
    return s;
}

sea::SeaConfig build_config(const Settings& s) {
    sea::GaConfig ga;
    ga.max_gen = s.max_gen;
    ga.pop_size = s.pop_size;
    ga.blocks_n = s.n;
    ga.block_k = s.k;
    ga.t_size = s.t_size;
    ga.p_cross = s.p_cross;
    ga.p_mut = s.p_mut;
    ga.p_mut_per_bit = s.p_mut_per_bit;
    sea::SeaConfig cfg = sea::SeaConfig::bbc(ga, s.p_mut_state);
    cfg.validate();
    return cfg;
}

fs::path ensure_out_dir(const Settings& s) {
    fs::path dir(s.out);
    if (!dir.empty()) fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    body(out);
}

int cmd_compare(const Settings& s) {
    const sea::Problem problem = sea::Problem::from_name(s.problem, s.n);
    const sea::SeaConfig cfg = build_config(s);
    const fs::path dir = ensure_out_dir(s);

    const auto sga = sea::run_batch(sea::Algorithm::Sga, cfg, problem, s.runs, s.seed, s.jobs);
    const auto sea_report = sea::run_batch(sea::Algorithm::Sea, cfg, problem, s.runs, s.seed, s.jobs);

    std::printf("problem=%s  n=%d  k=%d  pop=%d  max_gen=%d  runs=%d  seed=%llu\n", problem.name(),
                s.n, s.k, s.pop_size, s.max_gen, s.runs,
                static_cast<unsigned long long>(s.seed));
    std::printf("%-10s %-8s %s\n", "algorithm", "SR%", "GNTO");
    std::printf("%-10s %-8s %s\n", "sga", sea::format_number(sga.sr_percent).c_str(),
                sea::gnto_render(sga, s.max_gen).c_str());
    const std::string sea_name = std::to_string(cfg.n_states()) + "-sea";
    std::printf("%-10s %-8s %s\n", sea_name.c_str(),
                sea::format_number(sea_report.sr_percent).c_str(),
                sea::gnto_render(sea_report, s.max_gen).c_str());

    write_file(dir / (std::string(problem.name()) + "_sga_batch.csv"),
               [&](std::ostream& os) { sea::write_batch_csv(os, sga); });
    write_file(dir / (std::string(problem.name()) + "_sea_batch.csv"),
               [&](std::ostream& os) { sea::write_batch_csv(os, sea_report); });

    if (s.trace) {
        sea::SeaConfig traced = cfg;
        traced.record_state_counts = true;
        const sea::RunRecord rec =
            sea::run_one(sea::Algorithm::Sea, traced, problem, sea::mix_seed(s.seed, 0));
        write_file(dir / (std::string(problem.name()) + "_trace_sea.csv"),
                   [&](std::ostream& os) { sea::write_trace_csv(os, rec); });
    }
    return 0;
}

int cmd_sweep(const Settings& s) {
    const sea::Problem problem = sea::Problem::from_name(s.problem, s.n);
    const sea::SeaConfig cfg = build_config(s);
    const fs::path dir = ensure_out_dir(s);
    const auto cells = sea::sweep_grid(problem, cfg, s.step, s.runs, s.seed, s.jobs);
    write_file(dir / (std::string(problem.name()) + "_sweep.csv"),
               [&](std::ostream& os) { sea::write_sweep_csv(os, cells); });
    std::printf("%zu cells written\n", cells.size());
    return 0;
}

int cmd_blocksize(const Settings& s) {
    const sea::Problem problem = sea::Problem::from_name(s.problem, s.n);
    const sea::SeaConfig cfg = build_config(s);
    const fs::path dir = ensure_out_dir(s);
    std::vector<int> ks = s.k_list;
    if (ks.empty()) {
        for (int k = 1; k <= 19; k += 2) ks.push_back(k);
    }
    const auto rows = sea::block_size_study(problem, cfg, ks, s.runs, s.seed, s.jobs);
    write_file(dir / (std::string(problem.name()) + "_blocksize.csv"),
               [&](std::ostream& os) { sea::write_blocksize_csv(os, rows); });
    std::printf("%zu block sizes written\n", rows.size());
    return 0;
}

int cmd_clouds(const Settings& s) {
    const fs::path dir = ensure_out_dir(s);
    const auto rows = sea::fitness_clouds(s.count, s.n, s.k, s.pflip, s.seed);
    write_file(dir / "clouds.csv", [&](std::ostream& os) { sea::write_clouds_csv(os, rows); });
    std::printf("%zu cloud rows written\n", rows.size());
    return 0;
}

void add_common_options(CLI::App* sub, Cli& cli, bool k_is_list) {
    sub->add_option("--problem", cli.raw.problem, "problem name: onemax, needle, onoff, alternation");
    sub->add_option("--preset", cli.preset_name, "preset name: paper-P1..paper-P4, smoke");
    sub->add_option("--config", cli.config_path, "key/value config file; flags override it");
    sub->add_option("--dump-config", cli.dump_path, "write the resolved configuration to a file");
    sub->add_option("--runs", cli.raw.runs, "independent runs per batch");
    sub->add_option("--seed", cli.raw.seed, "master seed; all run seeds derive from it");
    sub->add_option("--jobs", cli.raw.jobs, "worker threads; output is identical for any value");
    sub->add_option("--out", cli.raw.out, "output directory for CSV files");
    sub->add_option("--n", cli.raw.n, "phenotype length (number of blocks)");
    if (k_is_list) {
        sub->add_option("--k", cli.raw.k_list, "comma-separated odd block sizes")->delimiter(',');
    } else {
        sub->add_option("--k", cli.raw.k, "block size (odd)");
    }
    sub->add_option("--max-gen", cli.raw.max_gen, "generation budget");
    sub->add_option("--pop-size", cli.raw.pop_size, "population size (total across states)");
    sub->add_option("--t-size", cli.raw.t_size, "tournament size");
    sub->add_option("--p-cross", cli.raw.p_cross, "crossover probability");
    sub->add_option("--p-mut", cli.raw.p_mut, "per-offspring mutation probability");
    sub->add_option("--p-mut-per-bit", cli.raw.p_mut_per_bit, "per-bit flip probability");
    sub->add_option("--p-mut-state", cli.raw.p_mut_state, "per-member state mutation (conversion) rate");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"seabench: states-based evolutionary algorithm benchmarks over binary block coding"};
    app.require_subcommand(1);

    Cli cli;
    auto* compare = app.add_subcommand(
        "compare", "run the GA baseline and the two-state engine, print SR%/GNTO, write batch CSVs");
    add_common_options(compare, cli, false);
    compare->add_flag("--trace", cli.raw.trace, "also write a per-generation trace of the first engine run");

    auto* sweep = app.add_subcommand("sweep", "success-rate grid over p-mut-state x p-mut-per-bit");
    add_common_options(sweep, cli, false);
    sweep->add_option("--step", cli.raw.step, "grid step in (0,1]");

    auto* blocksize = app.add_subcommand("blocksize", "re-run the engine across block sizes");
    add_common_options(blocksize, cli, true);

    auto* clouds = app.add_subcommand("clouds",
                                      "fitness clouds of the conversion operators under bit-flip noise");
    add_common_options(clouds, cli, false);
    clouds->add_option("--pflip", cli.raw.pflip, "bit-flip rate for every mutation pass");
    clouds->add_option("--count", cli.raw.count, "number of sampled genomes");

    try {
        app.parse(argc, argv);
        CLI::App* sub = app.get_subcommands().front();
        const Settings s = resolve(sub, cli, sub != clouds);
        if (sub == compare) return cmd_compare(s);
        if (sub == sweep) return cmd_sweep(s);
        if (sub == blocksize) return cmd_blocksize(s);
        if (sub == clouds) return cmd_clouds(s);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
