#include "growth/enumeration.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>

#include "growth/decimal.hpp"
#include "growth/parallel.hpp"

namespace growth {

namespace {

void dfs(WalkState& st, int n_max, int coordination, std::vector<std::uint64_t>& counts) {
    for (int d = 0; d < coordination; ++d) {
        if (!st.can_push(d)) continue;
        st.push(d);
        ++counts[st.length()];
        if (st.length() < n_max) dfs(st, n_max, coordination, counts);
        st.pop();
    }
}

// Allowed prefixes of a fixed length that start eastward; shorter ones are
// counted on the way.
void collect_prefixes(WalkState& st, int depth, int coordination, std::vector<std::vector<int>>& out,
                      std::vector<std::uint64_t>& counts) {
    if (st.length() == depth) {
        out.push_back(st.steps());
        return;
    }
    for (int d = 0; d < coordination; ++d) {
        if (!st.can_push(d)) continue;
        st.push(d);
        ++counts[st.length()];
        collect_prefixes(st, depth, coordination, out, counts);
        st.pop();
    }
}

}  // namespace

std::vector<mpz_class> count_walks(const WalkRule& rule, int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    const int c = planar_lattice(rule.lattice).coordination();

    // Every rule is invariant under rotations, so count walks starting east.
    std::vector<std::uint64_t> total(n_max + 1, 0);
    const int prefix_depth = std::min(n_max, 4);
    std::vector<std::vector<int>> prefixes;
    {
        WalkState st(rule, n_max);
        st.push(0);
        total[1] = 1;
        collect_prefixes(st, prefix_depth, c, prefixes, total);
    }

    std::mutex mu;
    parallel_for(prefixes.size(), [&](std::size_t i) {
        std::vector<std::uint64_t> local(n_max + 1, 0);
        WalkState st(rule, n_max);
        for (int s : prefixes[i]) st.push(s);
        if (st.length() < n_max) dfs(st, n_max, c, local);
        std::lock_guard<std::mutex> lock(mu);
        for (int n = 0; n <= n_max; ++n) total[n] += local[n];
    });

    std::vector<mpz_class> out;
    for (int n = 1; n <= n_max; ++n) {
        mpz_class v;
        mpz_import(v.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &total[n]);
        out.push_back(v * c);
    }
    return out;
}

std::vector<std::string> mu_upper_from_counts(const std::vector<mpz_class>& counts) {
    if (counts.empty()) throw std::invalid_argument("no counts given");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < counts.size(); ++i) out.push_back(ceil_root_decimal(counts[i], i + 1, 5));
    return out;
}

}  // namespace growth
