#include "tcc/analysis.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tcc/errors.hpp"
#include "tcc/rng.hpp"

namespace tcc {

std::uint64_t sauer_shelah_bound(std::uint64_t n, std::uint64_t d) {
    const std::uint64_t top = std::min(d, n);
    unsigned __int128 term = 1, total = 1;
    for (std::uint64_t i = 1; i <= top; ++i) {
        term = term * (n - i + 1) / i;  // exact: C(n,i-1)*(n-i+1) is divisible by i
        total += term;
        if (total > UINT64_MAX || term > UINT64_MAX)
            throw CapacityError("Sauer-Shelah bound for n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                                " exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(total);
}

bool is_shattered(const ComponentFamily& family, std::span<const Vertex> A) {
    if (A.size() > kShatterCap)
        throw CapacityError("shattering check limited to " + std::to_string(kShatterCap) + " vertices");
    std::vector<bool> trace(std::size_t{1} << A.size(), false);
    for (const auto& set : family.sets) {
        std::size_t mask = 0;
        for (std::size_t i = 0; i < A.size(); ++i)
            if (std::binary_search(set.begin(), set.end(), A[i])) mask |= std::size_t{1} << i;
        trace[mask] = true;
    }
    return std::all_of(trace.begin(), trace.end(), [](bool b) { return b; });
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) { return splitmix64(splitmix64(seed) + trial); }

std::vector<CensusRow> vc_census(std::size_t n, std::size_t k, std::size_t hops, std::size_t trials, std::uint64_t seed,
                                 const CensusOptions& options) {
    if (n < 2 || k < 1 || hops < 1 || trials < 1) throw ValidationError("census parameters must be positive (n >= 2)");
    const std::uint64_t bound = sauer_shelah_bound(n, 2 * k + 1);
    std::vector<CensusRow> rows(trials);
    auto run = [&](std::size_t t) {
        CensusRow& row = rows[t];
        row.n = n;
        row.k = k;
        row.seed = trial_seed(seed, t);
        row.bound = bound;
        const auto start = std::chrono::steady_clock::now();
        const PathCover cover = random_kpath(n, k, hops, row.seed, options.labels, options.flags);
        const TemporalGraph g = validate_cover(cover);
        EnumerationStats stats;
        const ComponentFamily family = enumerate_maximal_open(g, &stats);
        row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        row.component_count = family.size();
        row.nodes = stats.nodes;
        row.leaves = stats.leaves;
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(trials)));
    if (threads == 1) {
        for (std::size_t t = 0; t < trials; ++t) run(t);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t t = w; t < trials; t += threads) run(t);
            });
        for (auto& th : pool) th.join();
    }
    for (const auto& row : rows) {
        if (row.component_count > bound)
            throw std::logic_error("trial seed " + std::to_string(row.seed) + ": " + std::to_string(row.component_count) +
                                   " components exceed the bound " + std::to_string(bound));
        if (row.nodes > 2 * bound - 1)
            throw std::logic_error("trial seed " + std::to_string(row.seed) + ": " + std::to_string(row.nodes) +
                                   " search nodes exceed " + std::to_string(2 * bound - 1));
    }
    return rows;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream os;
    os << "n,k,seed,components,bound,nodes,ms\n";
    for (const auto& r : rows)
        os << r.n << ',' << r.k << ',' << r.seed << ',' << r.component_count << ',' << r.bound << ',' << r.nodes << ','
           << std::fixed << std::setprecision(3) << r.ms << '\n';
    return os.str();
}

}  // namespace tcc
