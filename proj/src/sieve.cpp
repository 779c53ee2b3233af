#include "znt/sieve.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>

#include "znt/errors.hpp"
#include "znt/parallel.hpp"

namespace znt {

SieveTable build_sieve(std::uint64_t limit, std::uint64_t memory_ceiling_bytes) {
    if (limit < 1) throw DomainError("build_sieve: limit must be >= 1");
    // 9 bytes/entry (int8 mu + float64 Lambda) plus the transient prime list
    if (limit * 9ull + (limit / 8ull) > memory_ceiling_bytes)
        throw CapacityError("build_sieve: limit exceeds memory ceiling");

    SieveTable t;
    t.limit = limit;
    t.mobius.assign(limit + 1, 0);
    t.lambda_log.assign(limit + 1, 0.0);
    t.mobius[1] = 1;

    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(std::uint32_t(i));
            t.mobius[i] = -1;
        }
        for (std::uint32_t p : primes) {
            if (i * p > limit) break;
            composite[i * p] = true;
            if (i % p == 0) {
                t.mobius[i * p] = 0;
                break;
            }
            t.mobius[i * p] = -t.mobius[i];
        }
    }
    for (std::uint32_t p : primes) {
        double lp = std::log(double(p));
        for (std::uint64_t q = p; q <= limit; q *= p) {
            t.lambda_log[q] = lp;
            if (q > limit / p) break;
        }
    }
    return t;
}

MertensPrefix mertens_prefix(const SieveTable& table) {
    MertensPrefix m;
    m.limit = table.limit;
    m.values.assign(table.limit + 1, 0);
    std::int64_t acc = 0;
    for (std::uint64_t n = 1; n <= table.limit; ++n) {
        acc += table.mobius[n];
        m.values[n] = acc;
    }
    return m;
}

std::int64_t mertens(double x, const SieveTable& table) {
    if (x < 1.0) throw DomainError("mertens: x must be >= 1");
    std::uint64_t n = std::uint64_t(std::floor(x));
    if (n > table.limit) throw CoverageError("mertens: x exceeds sieve limit");
    std::int64_t acc = 0;
    for (std::uint64_t k = 1; k <= n; ++k) acc += table.mobius[k];
    return acc;
}

namespace {

struct SegmentStats {
    std::int64_t sum = 0;
    // running-extremum record points (n, prefix-relative-to-segment-start);
    // only these can realize the max of |M(n)|/sqrt(n) within the segment
    std::vector<std::pair<std::uint64_t, std::int64_t>> hi_records, lo_records;
};

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        primes.push_back(std::uint32_t(i));
        for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return primes;
}

// mu(n) for n in [lo, hi) given the primes up to sqrt(hi-1)
void sieve_segment(std::uint64_t lo, std::uint64_t hi,
                   const std::vector<std::uint32_t>& primes,
                   std::vector<std::int8_t>& mu_out) {
    std::uint64_t len = hi - lo;
    std::vector<std::uint64_t> rem(len);
    std::vector<std::int8_t> sgn(len, 1);
    std::vector<bool> zero(len, false);
    for (std::uint64_t i = 0; i < len; ++i) rem[i] = lo + i;

    for (std::uint32_t p : primes) {
        std::uint64_t p2 = std::uint64_t(p) * p;
        std::uint64_t start = ((lo + p - 1) / p) * p;
        for (std::uint64_t m = start; m < hi; m += p) {
            sgn[m - lo] = -sgn[m - lo];
            rem[m - lo] /= p;
        }
        if (p2 < hi) {
            std::uint64_t s2 = ((lo + p2 - 1) / p2) * p2;
            for (std::uint64_t m = s2; m < hi; m += p2) zero[m - lo] = true;
        }
    }
    mu_out.resize(len);
    for (std::uint64_t i = 0; i < len; ++i) {
        if (zero[i])
            mu_out[i] = 0;
        else if (rem[i] > 1)
            mu_out[i] = -sgn[i];  // one residual prime factor > sqrt(x)
        else
            mu_out[i] = sgn[i];
        if (lo + i == 1) mu_out[i] = 1;
    }
}

} // namespace

SegmentedMertensResult mertens_segmented(double x, std::uint64_t segment_size,
                                         unsigned threads) {
    if (x < 1.0) throw DomainError("mertens_segmented: x must be >= 1");
    if (segment_size < 2) throw DomainError("mertens_segmented: segment_size must be >= 2");
    std::uint64_t n = std::uint64_t(std::floor(x));
    std::uint64_t root = std::uint64_t(std::sqrt(double(n))) + 2;
    auto primes = primes_up_to(root);

    std::size_t nseg = std::size_t((n + segment_size - 1) / segment_size);
    std::function<SegmentStats(std::size_t)> job = [&](std::size_t k) {
        std::uint64_t lo = 1 + std::uint64_t(k) * segment_size;
        std::uint64_t hi = std::min<std::uint64_t>(n + 1, lo + segment_size);
        std::vector<std::int8_t> mu;
        sieve_segment(lo, hi, primes, mu);
        SegmentStats st;
        std::int64_t acc = 0, hi_rec = INT64_MIN, lo_rec = INT64_MAX;
        for (std::uint64_t i = 0; i < mu.size(); ++i) {
            acc += mu[i];
            if (acc > hi_rec) {
                hi_rec = acc;
                st.hi_records.emplace_back(lo + i, acc);
            }
            if (acc < lo_rec) {
                lo_rec = acc;
                st.lo_records.emplace_back(lo + i, acc);
            }
        }
        st.sum = acc;
        return st;
    };
    auto stats = parallel_map<SegmentStats>(nseg, job, threads);

    SegmentedMertensResult r;
    std::int64_t base = 0;
    double max_ratio = 0.0;
    for (const auto& st : stats) {
        for (const auto& [pos, val] : st.hi_records)
            max_ratio = std::max(max_ratio, double(base + val) / std::sqrt(double(pos)));
        for (const auto& [pos, val] : st.lo_records)
            max_ratio = std::max(max_ratio, double(-(base + val)) / std::sqrt(double(pos)));
        base += st.sum;
    }
    r.value = base;
    r.max_ratio = max_ratio;
    return r;
}

void SieveTable::save(const std::string& path) const {
    std::unique_ptr<std::FILE, int (*)(std::FILE*)> f(std::fopen(path.c_str(), "wb"),
                                                      &std::fclose);
    if (!f) throw DomainError("SieveTable::save: cannot open " + path);
    // little-endian layout: magic, N, mu[1..N] as int8, Lambda[1..N] as float64
    const char magic[8] = {'Z', 'N', 'T', 'S', 'I', 'E', 'V', '1'};
    std::fwrite(magic, 1, 8, f.get());
    std::uint64_t n = limit;
    std::fwrite(&n, sizeof n, 1, f.get());
    std::fwrite(mobius.data() + 1, sizeof(std::int8_t), limit, f.get());
    std::fwrite(lambda_log.data() + 1, sizeof(double), limit, f.get());
}

SieveTable SieveTable::load(const std::string& path) {
    std::unique_ptr<std::FILE, int (*)(std::FILE*)> f(std::fopen(path.c_str(), "rb"),
                                                      &std::fclose);
    if (!f) throw DomainError("SieveTable::load: cannot open " + path);
    char magic[8];
    if (std::fread(magic, 1, 8, f.get()) != 8 ||
        std::memcmp(magic, "ZNTSIEV1", 8) != 0)
        throw DomainError("SieveTable::load: bad magic in " + path);
    SieveTable t;
    if (std::fread(&t.limit, sizeof t.limit, 1, f.get()) != 1)
        throw DomainError("SieveTable::load: truncated header");
    t.mobius.assign(t.limit + 1, 0);
    t.lambda_log.assign(t.limit + 1, 0.0);
    if (std::fread(t.mobius.data() + 1, sizeof(std::int8_t), t.limit, f.get()) != t.limit ||
        std::fread(t.lambda_log.data() + 1, sizeof(double), t.limit, f.get()) != t.limit)
        throw DomainError("SieveTable::load: truncated data");
    return t;
}

} // namespace znt
