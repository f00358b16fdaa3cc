#pragma once

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "qnetopt/json_io.hpp"

namespace qnetopt::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class LogLevel { error = 0, info = 1, debug = 2 };

inline LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("QNETOPT_LOG");
        if (!env) return LogLevel::info;
        const std::string v(env);
        if (v == "error") return LogLevel::error;
        if (v == "debug") return LogLevel::debug;
        return LogLevel::info;
    }();
    return level;
}

inline void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::info) std::cerr << "[info] " << msg << '\n';
}

inline void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::debug) std::cerr << "[debug] " << msg << '\n';
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[19] = "0x";
    for (int i = 0; i < 16; ++i)
        buf[17 - i] = "0123456789abcdef"[(v >> (4 * i)) & 0xf];
    buf[18] = '\0';
    return buf;
}

/// Shortest round-trip decimal text for CSV cells.
inline std::string fmt_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

/// Meta block embedded in every output: tool version, the seed, a hash
/// of the effective configuration, and the configuration echo itself.
inline json make_meta(std::uint64_t seed, const json& config_echo) {
    json meta;
    meta["version"] = kVersion;
    meta["seed"] = seed;
    meta["config_hash"] = hex64(fnv1a64(config_echo.dump()));
    meta["config"] = config_echo;
    return meta;
}

inline std::string csv_meta_line(std::uint64_t seed, const json& config_echo) {
    return "# version=" + std::string(kVersion) + " seed=" + std::to_string(seed) +
           " config_hash=" + hex64(fnv1a64(config_echo.dump())) +
           " config=" + config_echo.dump();
}

} // namespace qnetopt::cli
