#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <thread>

#include "carrylab/kernel_serde.hpp"
#include "carrylab/kernels.hpp"
#include "carrylab/sweep.hpp"

// Times the carry-count sweep over all digital sets of Z_q with m digits, once
// on a single worker and once on all hardware threads, and checks that both
// runs fold to the same accumulator.

namespace cl = carrylab;
namespace ck = carrylab::kernels;

namespace {

constexpr std::size_t kCap = 64;

struct BenchResult {
    double seconds = 0.0;
    nlohmann::ordered_json state;
};

BenchResult run(std::int64_t q, std::int64_t m, int workers) {
    const ck::DigitalSpace space = ck::DigitalSpace::make(q, m);
    cl::SweepJob<ck::SetSweepAcc> job;
    job.layout = cl::ShardLayout::for_total(space.size());
    job.workers = workers;
    job.fold = [&space](std::uint32_t, std::uint64_t begin, std::uint64_t end) {
        ck::Workspace ws;
        return ck::sweep_digital_range(space, ck::Stat::CarryCount, INT64_MIN, nullptr, begin,
                                       end, kCap, ws);
    };
    job.merge = [](ck::SetSweepAcc& into, const ck::SetSweepAcc& from) {
        into.merge(from, kCap);
    };

    const auto start = std::chrono::steady_clock::now();
    const ck::SetSweepAcc acc = cl::run_sweep(job, nullptr);
    BenchResult result;
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.state = ck::acc_to_json(acc);
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    std::int64_t q = 36, m = 6;
    int repeats = 3;
    if (argc >= 3) {
        q = std::stoll(argv[1]);
        m = std::stoll(argv[2]);
    }
    if (argc >= 4) repeats = std::stoi(argv[3]);

    const int threads = static_cast<int>(std::thread::hardware_concurrency());
    const int parallel = threads > 1 ? threads : 4;
    std::cout << "sweep of Z_" << q << " digital sets with m = " << m << "\n";

    double best_serial = 0.0, best_parallel = 0.0;
    for (int i = 0; i < repeats; ++i) {
        const BenchResult serial = run(q, m, 1);
        const BenchResult wide = run(q, m, parallel);
        if (serial.state != wide.state) {
            std::cerr << "mismatch: parallel folds disagree with the serial sweep\n";
            return 1;
        }
        if (i == 0 || serial.seconds < best_serial) best_serial = serial.seconds;
        if (i == 0 || wide.seconds < best_parallel) best_parallel = wide.seconds;
        std::cout << "  run " << (i + 1) << ": serial " << serial.seconds << " s, " << parallel
                  << " workers " << wide.seconds << " s\n";
    }
    std::cout << "best serial:   " << best_serial << " s\n";
    std::cout << "best parallel: " << best_parallel << " s (" << parallel << " workers)\n";
    if (best_parallel > 0.0)
        std::cout << "speedup:       " << best_serial / best_parallel << "x\n";
    std::cout << "results identical across worker counts\n";
    return 0;
}
