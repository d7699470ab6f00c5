#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace swapsim {

using Bytes = std::uint64_t;
using Nanos = std::int64_t;  // simulation time; integer ns keeps traces bit-exact

inline constexpr Bytes operator""_KiB(unsigned long long v) { return Bytes{v} * 1024; }
inline constexpr Bytes operator""_MiB(unsigned long long v) { return Bytes{v} * 1024 * 1024; }

constexpr std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
    return (a + b - 1) / b;
}

constexpr double ns_to_sec(Nanos ns) { return static_cast<double>(ns) * 1e-9; }

inline Nanos sec_to_ns(double sec) {
    return static_cast<Nanos>(sec * 1e9 + 0.5);
}

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parses "16K", "1M", "2G" or a plain byte count. Suffixes are 1024-based,
// matching SRAM sizing conventions.
inline Bytes parse_size(std::string_view text) {
    if (text.empty()) throw ValidationError("empty size string");
    std::uint64_t scale = 1;
    std::string_view digits = text;
    switch (text.back()) {
        case 'K': case 'k': scale = 1024ull; digits.remove_suffix(1); break;
        case 'M': case 'm': scale = 1024ull * 1024; digits.remove_suffix(1); break;
        case 'G': case 'g': scale = 1024ull * 1024 * 1024; digits.remove_suffix(1); break;
        default: break;
    }
    if (digits.empty()) throw ValidationError("bad size string: " + std::string(text));
    std::uint64_t value = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') throw ValidationError("bad size string: " + std::string(text));
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return value * scale;
}

inline std::string format_size(Bytes b) {
    if (b >= 1024ull * 1024 * 1024 && b % (1024ull * 1024 * 1024) == 0)
        return std::to_string(b / (1024ull * 1024 * 1024)) + "G";
    if (b >= 1024ull * 1024 && b % (1024ull * 1024) == 0)
        return std::to_string(b / (1024ull * 1024)) + "M";
    if (b >= 1024 && b % 1024 == 0)
        return std::to_string(b / 1024) + "K";
    return std::to_string(b);
}

}  // namespace swapsim
