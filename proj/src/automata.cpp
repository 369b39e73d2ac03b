#include "growth/automata.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "growth/decimal.hpp"
#include "growth/parallel.hpp"

namespace growth {

namespace {

std::string key_of(const Steps& s) { return std::string(s.begin(), s.end()); }

bool allowed_fresh(const WalkRule& rule, const Steps& steps, std::size_t from = 0) {
    if (steps.size() <= from) return true;
    WalkState st(rule, static_cast<int>(steps.size() - from));
    for (std::size_t i = from; i < steps.size(); ++i) {
        if (!st.can_push(steps[i])) return false;
        st.push(steps[i]);
    }
    return true;
}

struct LoopSearch {
    WalkRule rule;
    int k;
    int c;
    std::map<int, std::vector<Steps>> found;

    void explore(WalkState& st, bool straight) {
        const int m = st.length();
        for (int d = 0; d < c; ++d) {
            if (straight && d != 0 && d > c / 2) continue;  // reflection of an upward turn
            if (st.can_push(d)) {
                if (m + 1 < k) {
                    st.push(d);
                    explore(st, straight && d == 0);
                    st.pop();
                }
                continue;
            }
            Steps loop = st.steps();
            loop.push_back(d);
            if (allowed_fresh(rule, loop, 1)) found[m + 1].push_back(std::move(loop));
        }
    }
};

}  // namespace

Steps canonical_steps(const Steps& steps, LatticeId lattice) {
    const Lattice& lat = planar_lattice(lattice);
    Steps best;
    Steps img(steps.size());
    for (const auto& g : lat.group()) {
        for (std::size_t i = 0; i < steps.size(); ++i) img[i] = g.perm[steps[i]];
        if (best.empty() || img < best) best = img;
    }
    return best;
}

std::map<int, std::vector<Steps>> find_loops_up_to(const WalkRule& rule, int k) {
    if (k < 2) throw std::invalid_argument("loop size must be >= 2");
    const int c = planar_lattice(rule.lattice).coordination();
    // Split the search below the first step so workers own disjoint subtrees.
    std::vector<LoopSearch> parts(c, LoopSearch{rule, k, c, {}});
    parallel_for(c, [&](std::size_t d) {
        LoopSearch& part = parts[d];
        WalkState st(rule, k);
        st.push(0);
        if (static_cast<int>(d) > c / 2 && d != 0) return;
        if (!st.can_push(static_cast<int>(d))) {
            Steps loop{0, static_cast<int>(d)};
            if (allowed_fresh(rule, loop, 1)) part.found[2].push_back(loop);
            return;
        }
        if (k == 2) return;
        st.push(static_cast<int>(d));
        part.explore(st, d == 0);
    });
    std::map<int, std::vector<Steps>> out;
    for (int size = 2; size <= k; ++size) out[size];
    for (auto& part : parts)
        for (auto& [size, loops] : part.found)
            for (auto& l : loops) out[size].push_back(std::move(l));
    for (auto& [size, loops] : out) std::sort(loops.begin(), loops.end());
    return out;
}

std::vector<Steps> find_loops(const WalkRule& rule, int k) {
    auto all = find_loops_up_to(rule, k);
    return all[k];
}

int SuffixClassBasis::index_of(const Steps& canonical) const {
    auto it = index_.find(key_of(canonical));
    return it == index_.end() ? -1 : it->second;
}

void SuffixClassBasis::rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < classes.size(); ++i) index_[key_of(classes[i])] = static_cast<int>(i);
    start = index_of(Steps{0});
    if (start < 0) throw std::logic_error("basis lacks the single-step class");
}

SuffixClassBasis build_basis(const std::map<int, std::vector<Steps>>& loops, LatticeId lattice) {
    std::set<Steps> seen{Steps{0}};
    for (const auto& [size, list] : loops)
        for (const auto& loop : list)
            for (std::size_t m = 2; m + 1 <= loop.size(); ++m)
                seen.insert(canonical_steps(Steps(loop.begin(), loop.begin() + m), lattice));
    SuffixClassBasis basis;
    basis.lattice = lattice;
    basis.classes.assign(seen.begin(), seen.end());
    std::stable_sort(basis.classes.begin(), basis.classes.end(),
                     [](const Steps& a, const Steps& b) { return a.size() < b.size(); });
    basis.rebuild_index();
    return basis;
}

TransferMatrix build_matrix(const SuffixClassBasis& basis, const WalkRule& rule) {
    const int c = planar_lattice(rule.lattice).coordination();
    const int dim = static_cast<int>(basis.classes.size());
    std::vector<std::vector<Triplet>> columns(dim);
    parallel_for(dim, [&](std::size_t a) {
        const Steps& cls = basis.classes[a];
        for (int d = 0; d < c; ++d) {
            Steps ext = cls;
            ext.push_back(d);
            if (!allowed_fresh(rule, ext)) continue;
            int target = -1;
            for (std::size_t drop = 0; drop < ext.size() && target < 0; ++drop)
                target = basis.index_of(canonical_steps(Steps(ext.begin() + drop, ext.end()), basis.lattice));
            if (target < 0) throw std::logic_error("extension maps to no class");
            columns[a].push_back({target, static_cast<int>(a), 1});
        }
    });
    std::vector<Triplet> all;
    for (auto& col : columns) all.insert(all.end(), col.begin(), col.end());
    return {SparseMatrix(dim, std::move(all)), basis.start};
}

std::string to_string(LoopSizes s) { return s == LoopSizes::All ? "all" : "odd"; }

LoopSizes parse_loop_sizes(const std::string& name) {
    if (name == "all") return LoopSizes::All;
    if (name == "odd") return LoopSizes::Odd;
    throw std::invalid_argument("unknown loop-size policy '" + name + "'");
}

AutomataReport automata_bound(const WalkRule& rule, int k, long double tol, LoopSizes sizes) {
    AutomataReport rep;
    rep.rule = rule;
    rep.k = k;
    rep.sizes = sizes;
    auto loops = find_loops_up_to(rule, k);
    if (sizes == LoopSizes::Odd)
        for (auto& [size, list] : loops)
            if (size > 2 && size % 2 == 0) list.clear();
    for (const auto& [size, list] : loops) rep.loops_per_size[size] = static_cast<int>(list.size());
    const auto basis = build_basis(loops, rule.lattice);
    rep.transfer = build_matrix(basis, rule);
    rep.dim = rep.transfer.matrix.dim();
    rep.bracket = certified_dominant_eigenvalue(rep.transfer.matrix, tol);
    rep.bound = ceil_decimal(rep.bracket.upper, 5);
    // The rounding margins can push an exactly representable radius (e.g. 3)
    // past a decimal boundary; try the lower decimal with an exact certificate.
    const std::string tighter = ceil_decimal(rep.bracket.upper - 1e-12L, 5);
    if (tighter != rep.bound && certify_radius_at_most(rep.transfer.matrix, decimal_to_rational(tighter)))
        rep.bound = tighter;
    return rep;
}

}  // namespace growth
