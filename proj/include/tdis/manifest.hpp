#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tdis/error.hpp"

namespace tdis {

inline constexpr const char* tool_version = "0.1.0";

// FNV-1a over raw bytes; good enough to fingerprint inputs in manifests
inline std::uint64_t fnv1a64(const void* data, std::size_t size)
{
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string file_digest(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open '" + path.string() + "'");
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const auto got = static_cast<std::size_t>(in.gcount());
        for (std::size_t i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ULL;
        }
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return hex;
}

/* Every command emits one of these next to (or inside) its result so a run
 * can be reproduced bit for bit: command, resolved parameters, master seed
 * and input digests. */
struct run_manifest {
    std::string command;
    std::uint64_t seed = 0;
    nlohmann::json params = nlohmann::json::object();
    std::vector<std::pair<std::string, std::string>> inputs; // (path, digest)

    void add_input(const std::filesystem::path& path)
    {
        inputs.emplace_back(path.string(), file_digest(path));
    }

    nlohmann::json to_json() const
    {
        nlohmann::json j;
        j["schema"] = 1;
        j["tool"] = std::string("tdis ") + tool_version;
        j["command"] = command;
        j["seed"] = seed;
        j["params"] = params;
        auto in = nlohmann::json::array();
        for (const auto& [path, digest] : inputs)
            in.push_back({{"path", path}, {"digest", digest}});
        j["inputs"] = in;
        return j;
    }

    void write_alongside(const std::filesystem::path& artifact) const
    {
        const auto path = artifact.string() + ".manifest.json";
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw io_error("cannot write '" + path + "'");
        out << to_json().dump(2) << '\n';
    }
};

} // namespace tdis
