#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace znt {

// Moebius mu(n) and von Mangoldt Lambda(n) for 1 <= n <= limit.
// Storage is 9 bytes per entry (int8 mu + float64 Lambda).
struct SieveTable {
    std::uint64_t limit = 0;
    std::vector<std::int8_t> mobius;    // index 0 unused
    std::vector<double> lambda_log;     // Lambda(n) in natural-log units

    std::int8_t mu(std::uint64_t n) const { return mobius[n]; }
    double lambda(std::uint64_t n) const { return lambda_log[n]; }

    void save(const std::string& path) const;
    static SieveTable load(const std::string& path);
};

struct MertensPrefix {
    std::uint64_t limit = 0;
    std::vector<std::int64_t> values;   // values[n] = M(n), index 0 unused
};

// Linear (Euler) sieve for mu plus prime-power pass for Lambda.
// Throws CapacityError if the table would exceed memory_ceiling_bytes.
SieveTable build_sieve(std::uint64_t limit,
                       std::uint64_t memory_ceiling_bytes = 4ull << 30);

MertensPrefix mertens_prefix(const SieveTable& table);

// M(floor(x)) from a prebuilt table.  Throws CoverageError if x > limit.
std::int64_t mertens(double x, const SieveTable& table);

struct SegmentedMertensResult {
    std::int64_t value = 0;
    double max_ratio = 0.0;  // max over n <= x of |M(n)|/sqrt(n)
};

// Memory-bounded Mertens: O(segment_size + sqrt(x)).  Segments are sieved
// independently (parallelizable) and reduced in index order, so the result
// is identical for any thread count.
SegmentedMertensResult mertens_segmented(double x,
                                         std::uint64_t segment_size = 1u << 22,
                                         unsigned threads = 1);

} // namespace znt
