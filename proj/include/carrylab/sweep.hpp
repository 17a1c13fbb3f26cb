#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carrylab/error.hpp"
#include "json.hpp"

// Deterministic sharded sweep engine. A sweep over [0, total) is cut into
// shards whose boundaries depend only on `total`; shards are folded
// independently (in parallel when OpenMP is available) and merged in shard
// order, so the result is a pure function of the configuration regardless of
// worker count. Checkpoints persist the merged prefix after each wave of
// shards.

namespace carrylab {

struct ShardLayout {
    std::uint64_t total = 0;
    std::uint64_t shard_size = 1;
    std::uint32_t shard_count = 0;

    // Boundaries are a function of `total` alone, never of the worker count.
    static ShardLayout for_total(std::uint64_t total);

    std::pair<std::uint64_t, std::uint64_t> range(std::uint32_t shard) const;
};

// 64-bit FNV-1a, rendered as 16 hex digits; used to fingerprint a sweep's
// canonical configuration so checkpoints refuse to resume a different run.
std::string fingerprint(const std::string& canonical_config);

class CheckpointFile {
  public:
    CheckpointFile(std::string path, std::string config_fingerprint);

    // Missing file -> nullopt. Wrong format or fingerprint -> CheckpointMismatch.
    std::optional<std::pair<std::uint32_t, nlohmann::ordered_json>> load() const;

    // Atomic: writes a temporary file, then renames over the target.
    void save(std::uint32_t next_shard, const nlohmann::ordered_json& accumulator) const;

    const std::string& path() const { return path_; }

  private:
    std::string path_;
    std::string fingerprint_;
};

template <class Acc>
struct SweepJob {
    ShardLayout layout;
    int workers = 1;
    std::function<Acc(std::uint32_t shard, std::uint64_t begin, std::uint64_t end)> fold;
    std::function<void(Acc&, const Acc&)> merge;
    // Both must be set for checkpointing; unused otherwise.
    std::function<nlohmann::ordered_json(const Acc&)> to_json;
    std::function<Acc(const nlohmann::ordered_json&)> from_json;
};

template <class Acc>
Acc run_sweep(const SweepJob<Acc>& job, CheckpointFile* checkpoint) {
    Acc total{};
    std::uint32_t next = 0;
    if (checkpoint != nullptr) {
        if (auto state = checkpoint->load()) {
            next = state->first;
            if (next > job.layout.shard_count)
                throw Error(Errc::CheckpointMismatch, "checkpoint is ahead of this sweep");
            total = job.from_json(state->second);
        }
    }
    const int workers = job.workers > 1 ? job.workers : 1;
    const std::uint32_t wave = static_cast<std::uint32_t>(workers) * 8;
    std::vector<Acc> parts;
    while (next < job.layout.shard_count) {
        const std::uint32_t wave_end =
            std::min<std::uint64_t>(job.layout.shard_count, std::uint64_t{next} + wave);
        const int count = static_cast<int>(wave_end - next);
        parts.assign(static_cast<std::size_t>(count), Acc{});
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers) if (workers > 1)
        for (int i = 0; i < count; ++i) {
            const std::uint32_t shard = next + static_cast<std::uint32_t>(i);
            auto [begin, end] = job.layout.range(shard);
            parts[static_cast<std::size_t>(i)] = job.fold(shard, begin, end);
        }
        for (int i = 0; i < count; ++i) job.merge(total, parts[static_cast<std::size_t>(i)]);
        next = wave_end;
        if (checkpoint != nullptr) checkpoint->save(next, job.to_json(total));
    }
    return total;
}

}  // namespace carrylab
