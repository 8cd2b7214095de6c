#include "sea/experiments.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "sea/csv.hpp"

namespace sea {

namespace {

// Runs body(0..count-1) on up to `jobs` worker threads. Bodies write into
// index-addressed slots, so the caller's aggregation order never depends on
// scheduling.
template <typename Body>
void parallel_for(int count, int jobs, Body&& body) {
    if (jobs > count) jobs = count;
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            try {
                for (int i; (i = next.fetch_add(1)) < count;) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(count);
            }
        });
    }
    for (auto& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

ExperimentReport aggregate(std::vector<RunRecord> records, int max_gen) {
    ExperimentReport report;
    report.runs = static_cast<int>(records.size());
    int successes = 0;
    double sum_all = 0.0;
    double sum_success = 0.0;
    for (const RunRecord& r : records) {
        if (r.success) {
            ++successes;
            sum_all += r.gen_to_opt;
            sum_success += r.gen_to_opt;
        } else {
            sum_all += max_gen;
        }
    }
    report.sr_percent = 100.0 * successes / report.runs;
    report.gnto_all = sum_all / report.runs;
    if (successes > 0) report.gnto_success = sum_success / successes;
    report.per_run = std::move(records);
    return report;
}

} // namespace

RunRecord run_one(Algorithm alg, const SeaConfig& cfg, const Problem& problem, std::uint64_t seed) {
    return alg == Algorithm::Sga ? run_sga(cfg.ga, problem, seed) : run_sea(cfg, problem, seed);
}

ExperimentReport run_batch(Algorithm alg, const SeaConfig& cfg, const Problem& problem, int runs,
                           std::uint64_t master_seed, int jobs) {
    if (runs < 1) throw std::invalid_argument("run_batch: runs must be >= 1");
    std::vector<RunRecord> records(static_cast<std::size_t>(runs));
    parallel_for(runs, jobs, [&](int i) {
        records[static_cast<std::size_t>(i)] =
            run_one(alg, cfg, problem, mix_seed(master_seed, static_cast<std::uint64_t>(i)));
    });
    return aggregate(std::move(records), cfg.ga.max_gen);
}

std::vector<double> sweep_axis(double step) {
    if (!(step > 0.0) || step > 1.0) throw std::invalid_argument("sweep: step must lie in (0,1]");
    std::vector<double> values;
    for (int i = 0;; ++i) {
        const double v = std::round(i * step * 1e4) / 1e4;
        if (v > 1.0 + 1e-9) break;
        values.push_back(std::min(v, 1.0));
    }
    return values;
}

std::vector<SweepCell> sweep_grid(const Problem& problem, const SeaConfig& base, double step,
                                  int runs, std::uint64_t master_seed, int jobs) {
    if (runs < 1) throw std::invalid_argument("sweep: runs must be >= 1");
    const std::vector<double> axis = sweep_axis(step);
    const int cells = static_cast<int>(axis.size() * axis.size());

    std::vector<SeaConfig> configs;
    std::vector<std::uint64_t> cell_seeds;
    configs.reserve(static_cast<std::size_t>(cells));
    cell_seeds.reserve(static_cast<std::size_t>(cells));
    for (double ps : axis) {
        for (double pb : axis) {
            SeaConfig cfg = base;
            cfg.p_mut_state = ps;
            cfg.ga.p_mut_per_bit = pb;
            configs.push_back(std::move(cfg));
            const auto cs = static_cast<std::uint64_t>(std::llround(ps * 1e4));
            const auto cb = static_cast<std::uint64_t>(std::llround(pb * 1e4));
            cell_seeds.push_back(mix_seed(mix_seed(master_seed, cs), cb));
        }
    }

    // One flat task list over (cell, run) keeps all workers busy even when a few
    // cells dominate the cost.
    const int tasks = cells * runs;
    std::vector<std::uint8_t> success(static_cast<std::size_t>(tasks), 0);
    std::vector<int> gens(static_cast<std::size_t>(tasks), 0);
    parallel_for(tasks, jobs, [&](int t) {
        const int cell = t / runs;
        const int run = t % runs;
        const SeaConfig& cfg = configs[static_cast<std::size_t>(cell)];
        const RunRecord rec =
            run_sea(cfg, problem,
                    mix_seed(cell_seeds[static_cast<std::size_t>(cell)],
                             static_cast<std::uint64_t>(run)));
        success[static_cast<std::size_t>(t)] = rec.success ? 1 : 0;
        gens[static_cast<std::size_t>(t)] = rec.success ? rec.gen_to_opt : cfg.ga.max_gen;
    });

    std::vector<SweepCell> out;
    out.reserve(static_cast<std::size_t>(cells));
    for (int cell = 0; cell < cells; ++cell) {
        int successes = 0;
        double sum = 0.0;
        for (int run = 0; run < runs; ++run) {
            const int t = cell * runs + run;
            successes += success[static_cast<std::size_t>(t)];
            sum += gens[static_cast<std::size_t>(t)];
        }
        SweepCell c;
        c.p_mut_state = configs[static_cast<std::size_t>(cell)].p_mut_state;
        c.p_mut_per_bit = configs[static_cast<std::size_t>(cell)].ga.p_mut_per_bit;
        c.sr_percent = 100.0 * successes / runs;
        c.gnto_all = sum / runs;
        out.push_back(c);
    }
    return out;
}

std::vector<BlockSizeRow> block_size_study(const Problem& problem, const SeaConfig& base,
                                           const std::vector<int>& k_values, int runs,
                                           std::uint64_t master_seed, int jobs) {
    if (runs < 1) throw std::invalid_argument("block size study: runs must be >= 1");
    if (k_values.empty()) throw std::invalid_argument("block size study: no block sizes given");
    for (int k : k_values) {
        if (k < 1 || k % 2 == 0) throw std::invalid_argument("block size study: block sizes must be odd");
    }

    std::vector<SeaConfig> configs;
    configs.reserve(k_values.size());
    for (int k : k_values) {
        SeaConfig cfg = base;
        cfg.ga.block_k = k;
        configs.push_back(std::move(cfg));
    }

    const int tasks = static_cast<int>(k_values.size()) * runs;
    std::vector<std::uint8_t> success(static_cast<std::size_t>(tasks), 0);
    std::vector<int> gens(static_cast<std::size_t>(tasks), 0);
    parallel_for(tasks, jobs, [&](int t) {
        const int ki = t / runs;
        const int run = t % runs;
        const SeaConfig& cfg = configs[static_cast<std::size_t>(ki)];
        const std::uint64_t seed =
            mix_seed(mix_seed(master_seed, static_cast<std::uint64_t>(k_values[static_cast<std::size_t>(ki)])),
                     static_cast<std::uint64_t>(run));
        const RunRecord rec = run_sea(cfg, problem, seed);
        success[static_cast<std::size_t>(t)] = rec.success ? 1 : 0;
        gens[static_cast<std::size_t>(t)] = rec.success ? rec.gen_to_opt : cfg.ga.max_gen;
    });

    std::vector<BlockSizeRow> rows;
    rows.reserve(k_values.size());
    for (std::size_t ki = 0; ki < k_values.size(); ++ki) {
        int successes = 0;
        double sum_all = 0.0;
        double sum_success = 0.0;
        for (int run = 0; run < runs; ++run) {
            const auto t = static_cast<std::size_t>(ki) * static_cast<std::size_t>(runs) +
                           static_cast<std::size_t>(run);
            successes += success[t];
            sum_all += gens[t];
            if (success[t]) sum_success += gens[t];
        }
        BlockSizeRow row;
        row.k = k_values[ki];
        row.sr_percent = 100.0 * successes / runs;
        row.gnto_all = sum_all / runs;
        if (successes > 0) row.gnto_success = sum_success / successes;
        rows.push_back(row);
    }
    return rows;
}

std::vector<CloudRow> fitness_clouds(int count, int n, int k, double p_bit_flip,
                                     std::uint64_t seed) {
    if (count < 0) throw std::invalid_argument("clouds: count must be >= 0");
    if (n < 1) throw std::invalid_argument("clouds: n must be >= 1");
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("clouds: k must be odd and >= 1");
    if (p_bit_flip < 0.0 || p_bit_flip > 1.0) {
        throw std::invalid_argument("clouds: flip rate must lie in [0,1]");
    }

    const Problem ones = Problem::make(ProblemId::OneMax, n);
    RandomSource rng(seed);

    auto flip_pass = [&](BlockGenome g) {
        for (std::size_t i = 0; i < g.bits.size(); ++i) {
            if (rng.next_bool(p_bit_flip)) g.bits.flip(i);
        }
        return g;
    };

    std::vector<CloudRow> rows;
    rows.reserve(static_cast<std::size_t>(count));
    for (int idx = 0; idx < count; ++idx) {
        BitString bits(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < bits.size(); ++i) bits.set(i, rng.next_bool(0.5));
        const BlockGenome x = BlockGenome::make(std::move(bits), k);

        CloudRow row;
        row.idx = idx;
        row.f = evaluate_bbc(ones, x);
        row.m = evaluate_bbc(ones, flip_pass(x));

        const BlockGenome c1 = convert(x, CodingState::One);
        const BlockGenome c0 = convert(x, CodingState::Zero);
        if (evaluate_bbc(ones, c1) != row.f || evaluate_bbc(ones, c0) != row.f) {
            throw std::logic_error("clouds: conversion changed a fitness value");
        }
        row.m_conv1 = evaluate_bbc(ones, flip_pass(c1));
        row.m_conv0 = evaluate_bbc(ones, flip_pass(c0));
        // Tours, in application order: conv_1 -> flip -> conv_0 -> flip, and the
        // reverse. The last conversion applied is the one named last.
        row.m_conv1_m_conv0 =
            evaluate_bbc(ones, flip_pass(convert(flip_pass(c1), CodingState::Zero)));
        row.m_conv0_m_conv1 =
            evaluate_bbc(ones, flip_pass(convert(flip_pass(c0), CodingState::One)));
        rows.push_back(row);
    }
    return rows;
}

std::string gnto_render(const ExperimentReport& report, int max_gen) {
    if (report.sr_percent < 100.0 && report.gnto_all >= static_cast<double>(max_gen)) {
        return std::to_string(max_gen) + "+";
    }
    return format_number(report.gnto_all);
}

void write_batch_csv(std::ostream& os, const ExperimentReport& report) {
    os << "run,seed,success,gen_to_opt,best_fitness\n";
    for (std::size_t i = 0; i < report.per_run.size(); ++i) {
        const RunRecord& r = report.per_run[i];
        os << i << ',' << r.seed << ',' << (r.success ? 1 : 0) << ',' << r.gen_to_opt << ','
           << format_number(r.final_best()) << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells) {
    os << "p_mut_state,p_mut_per_bit,sr_percent,gnto_all\n";
    for (const SweepCell& c : cells) {
        os << format_number(c.p_mut_state) << ',' << format_number(c.p_mut_per_bit) << ','
           << format_number(c.sr_percent) << ',' << format_number(c.gnto_all) << '\n';
    }
}

void write_blocksize_csv(std::ostream& os, const std::vector<BlockSizeRow>& rows) {
    os << "k,sr_percent,gnto_all,gnto_success\n";
    for (const BlockSizeRow& r : rows) {
        os << r.k << ',' << format_number(r.sr_percent) << ',' << format_number(r.gnto_all) << ','
           << (r.gnto_success ? format_number(*r.gnto_success) : std::string("n/a")) << '\n';
    }
}

void write_clouds_csv(std::ostream& os, const std::vector<CloudRow>& rows) {
    os << "idx,f,m,m_conv1,m_conv0,m_conv1_m_conv0,m_conv0_m_conv1\n";
    for (const CloudRow& r : rows) {
        os << r.idx << ',' << format_number(r.f) << ',' << format_number(r.m) << ','
           << format_number(r.m_conv1) << ',' << format_number(r.m_conv0) << ','
           << format_number(r.m_conv1_m_conv0) << ',' << format_number(r.m_conv0_m_conv1) << '\n';
    }
}

void write_trace_csv(std::ostream& os, const RunRecord& rec) {
    os << "gen,best_fitness";
    for (int s = 0; s < rec.n_states; ++s) os << ",count_state" << s;
    os << '\n';
    for (std::size_t g = 0; g < rec.best_curve.size(); ++g) {
        os << g << ',' << format_number(rec.best_curve[g]);
        for (int s = 0; s < rec.n_states; ++s) {
            os << ',' << rec.state_counts[g * static_cast<std::size_t>(rec.n_states) +
                                          static_cast<std::size_t>(s)];
        }
        os << '\n';
    }
}

} // namespace sea
