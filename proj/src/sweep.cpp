#include "carrylab/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace carrylab {

ShardLayout ShardLayout::for_total(std::uint64_t total) {
    ShardLayout layout;
    layout.total = total;
    std::uint64_t size = (total + 255) / 256;
    size = std::clamp<std::uint64_t>(size, 1024, std::uint64_t{1} << 20);
    layout.shard_size = size;
    layout.shard_count = static_cast<std::uint32_t>((total + size - 1) / size);
    return layout;
}

std::pair<std::uint64_t, std::uint64_t> ShardLayout::range(std::uint32_t shard) const {
    const std::uint64_t begin = shard_size * shard;
    return {begin, std::min(total, begin + shard_size)};
}

std::string fingerprint(const std::string& canonical_config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical_config) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CheckpointFile::CheckpointFile(std::string path, std::string config_fingerprint)
    : path_(std::move(path)), fingerprint_(std::move(config_fingerprint)) {}

std::optional<std::pair<std::uint32_t, nlohmann::ordered_json>> CheckpointFile::load() const {
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::CheckpointMismatch,
                    "checkpoint file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object() || j.value("format_version", "") != "carrylab-checkpoint/1")
        throw Error(Errc::CheckpointMismatch, "not a carrylab-checkpoint/1 file: " + path_);
    if (j.value("fingerprint", "") != fingerprint_)
        throw Error(Errc::CheckpointMismatch,
                    "checkpoint belongs to a different sweep configuration: " + path_);
    return std::make_pair(j.at("next_shard").get<std::uint32_t>(), j.at("accumulator"));
}

void CheckpointFile::save(std::uint32_t next_shard,
                          const nlohmann::ordered_json& accumulator) const {
    nlohmann::ordered_json j;
    j["format_version"] = "carrylab-checkpoint/1";
    j["fingerprint"] = fingerprint_;
    j["next_shard"] = next_shard;
    j["accumulator"] = accumulator;
    const std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error(Errc::BadArgument, "cannot write checkpoint file: " + tmp);
        out << j.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path_);
}

}  // namespace carrylab
