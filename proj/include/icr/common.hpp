#pragma once

// Shared error taxonomy, size cap, and small utilities used across the library.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace icr {

// A request failed because input text (group spec, pair spec, table text,
// command line) could not be interpreted. CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// A request was understood but exceeds a size budget (group order above the
// cap, enumeration too large to materialize). CLI maps this to exit code 3.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& m) : std::runtime_error(m) {}
};

// Structured input failed a mathematical validity test (table is not a group,
// map is not an endomorphism, pair is not image-commuting, subset is not an
// ideal, ...). Carries a human-readable witness where one exists.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};

// Two supposedly equivalent evaluation routes disagreed (structural vs
// exhaustive). This is a bug in the library or in the theory it encodes, so it
// is a logic error and deliberately loud.
class InternalCheckError : public std::logic_error {
public:
    explicit InternalCheckError(const std::string& m) : std::logic_error(m) {}
};

inline constexpr int kDefaultSizeCap = 256;

// Maximum group order accepted anywhere. Defaults to 256; override with the
// ICR_CAP environment variable (read once per process).
int size_cap();

// Hard library limits that keep "enumerate everything" honest: these are
// workload guards, not knobs.
inline constexpr std::uint64_t kEndoEnumLimit = 4'200'000;    // maps materialized
inline constexpr std::uint64_t kClassifyPairLimit = 300'000'000;  // pair workload
inline constexpr std::uint64_t kPairStreamLimit = 50'000'000;  // pairs streamed

// Deterministic 64-bit mixer (splitmix64 finalizer); used for pinned-seed
// sampling so "sampled" checks are reproducible byte for byte.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace icr
