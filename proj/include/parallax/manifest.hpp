// manifest.hpp
//
// Reproducibility manifest written next to every command's outputs: tool
// version, the command line, content digests of all inputs, the full
// parameter set, and the sorted list of files produced. Deliberately free
// of timestamps and absolute paths so identical runs produce identical
// manifests.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "corpus.hpp"

namespace parallax {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// FNV-1a 64-bit content digest, rendered as 16 hex digits.
inline std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct RunManifest {
    std::string command;                                // subcommand name
    std::vector<std::pair<std::string, std::string>> inputs;  // (path as given, digest)
    std::map<std::string, std::string> parameters;
    std::vector<std::string> outputs;  // paths relative to the output dir

    std::string to_json() const {
        nlohmann::ordered_json j;
        j["tool_version"] = std::string(kToolVersion);
        j["command"] = command;
        nlohmann::ordered_json ins = nlohmann::ordered_json::array();
        for (const auto& [path, digest] : inputs)
            ins.push_back({{"path", path}, {"digest", digest}});
        j["inputs"] = std::move(ins);
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : parameters) params[k] = v;  // map is already sorted
        j["parameters"] = std::move(params);
        std::vector<std::string> outs = outputs;
        std::sort(outs.begin(), outs.end());
        j["outputs"] = outs;
        return j.dump(2) + "\n";
    }
};

}  // namespace parallax
