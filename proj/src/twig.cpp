#include "growth/twig.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "growth/parallel.hpp"

namespace growth {

namespace {

using Code = std::uint32_t;
using u128 = unsigned __int128;
constexpr int kOffset = 32;

Code pack(const FaceCoord& f) {
    Code c = 0;
    for (int i = 0; i < f.dim(); ++i) c |= static_cast<Code>(f.c[i] + kOffset) << (6 * i);
    return c;
}

FaceCoord unpack(Code c, int d) {
    FaceCoord f;
    for (int i = 0; i < d; ++i) f.c.push_back(static_cast<int>((c >> (6 * i)) & 63) - kOffset);
    return f;
}

int coord(Code c, int i) { return static_cast<int>((c >> (6 * i)) & 63) - kOffset; }
Code shift(Code c, int i, int s) { return static_cast<Code>(static_cast<int>(c) + s * (1 << (6 * i))); }

struct Geometry {
    int d;
    Code first;
    Code zeroth = 0;    // d = 2
    Code entering = 0;  // d = 3, an edge

    explicit Geometry(int dim) : d(dim) {
        if (d != 2 && d != 3) throw std::invalid_argument("twigs are implemented for d = 2 and d = 3");
        first = pack(twig_first_cell(d));
        if (d == 2) zeroth = pack(twig_entering_face(d));
        else entering = pack(twig_entering_edge(d));
    }

    void edges_of(Code f, std::vector<Code>& out) const {
        out.clear();
        for (int i = 0; i < d; ++i)
            if (coord(f, i) & 1) {
                out.push_back(shift(f, i, -1));
                out.push_back(shift(f, i, 1));
            }
    }

    void faces_at(Code e, std::vector<Code>& out) const {
        out.clear();
        for (int i = 0; i < d; ++i)
            if (!(coord(e, i) & 1)) {
                out.push_back(shift(e, i, -1));
                out.push_back(shift(e, i, 1));
            }
    }

    void neighbors(Code f, std::vector<Code>& out) const {
        out.clear();
        std::vector<Code> es, fs;
        edges_of(f, es);
        for (Code e : es) {
            faces_at(e, fs);
            for (Code g : fs)
                if (g != f) out.push_back(g);
        }
    }
};

bool contains(const std::vector<Code>& sorted, Code c) { return std::binary_search(sorted.begin(), sorted.end(), c); }

void sort_unique(std::vector<Code>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct RawTwig {
    std::vector<Code> dead;   // sorted
    std::vector<Code> alive;  // sorted
};

// Candidates and edge-capacity constraints for turning the alive cells of a
// twig dead and attaching new cells to them.
struct Expansion {
    std::vector<Code> dead;        // dead after the conversion, sorted
    std::vector<Code> candidates;  // sorted
    std::vector<int> capacity;     // per active constraint
    std::vector<std::vector<int>> members;        // candidates per constraint
    std::vector<std::vector<int>> constraints_of;  // constraints per candidate

    Expansion(const Geometry& g, const RawTwig& t) {
        dead = t.dead;
        dead.insert(dead.end(), t.alive.begin(), t.alive.end());
        sort_unique(dead);

        std::vector<Code> blocked = dead, nb, fs;
        std::vector<Code> older = t.dead;
        if (g.d == 2) {
            older.push_back(g.zeroth);
            blocked.push_back(g.zeroth);
        } else {
            g.faces_at(g.entering, fs);
            blocked.insert(blocked.end(), fs.begin(), fs.end());
        }
        for (Code f : older) {
            g.neighbors(f, nb);
            blocked.insert(blocked.end(), nb.begin(), nb.end());
        }
        sort_unique(blocked);
        for (Code f : t.alive) {
            g.neighbors(f, nb);
            for (Code c : nb)
                if (!contains(blocked, c)) candidates.push_back(c);
        }
        sort_unique(candidates);

        constraints_of.resize(candidates.size());
        if (g.d == 2) return;  // an edge of the square lattice bounds exactly two cells
        std::map<Code, std::vector<int>> at_edge;
        std::vector<Code> es;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            g.edges_of(candidates[i], es);
            for (Code e : es) at_edge[e].push_back(static_cast<int>(i));
        }
        for (auto& [e, list] : at_edge) {
            g.faces_at(e, fs);
            int used = 0;
            for (Code f : fs) used += contains(dead, f);
            const int cap = 2 - used;
            if (static_cast<int>(list.size()) <= cap) continue;
            const int id = static_cast<int>(capacity.size());
            capacity.push_back(std::max(cap, 0));
            for (int c : list) constraints_of[c].push_back(id);
            members.push_back(list);
        }
    }

    // Visits every admissible set of new alive cells.
    template <class F>
    void for_each_choice(F&& visit) const {
        std::vector<int> load(capacity.size(), 0);
        std::vector<Code> chosen;
        choose(0, load, chosen, visit);
    }

    // Counts admissible choices by size, factoring independent groups.
    std::vector<u128> choice_counts() const {
        const int n = static_cast<int>(candidates.size());
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (const auto& m : members)
            for (std::size_t i = 1; i < m.size(); ++i) parent[find(m[i])] = find(m[0]);
        std::map<int, std::vector<int>> groups;
        for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);

        std::vector<u128> total{1};
        std::vector<int> load(capacity.size(), 0);
        for (const auto& [root, group] : groups) {
            std::vector<u128> counts(group.size() + 1, 0);
            count_group(group, 0, 0, load, counts);
            std::vector<u128> next(total.size() + counts.size() - 1, 0);
            for (std::size_t i = 0; i < total.size(); ++i)
                for (std::size_t j = 0; j < counts.size(); ++j) next[i + j] += total[i] * counts[j];
            total = std::move(next);
        }
        return total;
    }

private:
    bool fits(int c, const std::vector<int>& load) const {
        for (int k : constraints_of[c])
            if (load[k] >= capacity[k]) return false;
        return true;
    }

    template <class F>
    void choose(std::size_t i, std::vector<int>& load, std::vector<Code>& chosen, F& visit) const {
        if (i == candidates.size()) {
            visit(chosen);
            return;
        }
        choose(i + 1, load, chosen, visit);
        const int c = static_cast<int>(i);
        if (!fits(c, load)) return;
        for (int k : constraints_of[c]) ++load[k];
        chosen.push_back(candidates[i]);
        choose(i + 1, load, chosen, visit);
        chosen.pop_back();
        for (int k : constraints_of[c]) --load[k];
    }

    void count_group(const std::vector<int>& group, std::size_t i, int taken, std::vector<int>& load,
                     std::vector<u128>& counts) const {
        if (i == group.size()) {
            ++counts[taken];
            return;
        }
        count_group(group, i + 1, taken, load, counts);
        const int c = group[i];
        if (!fits(c, load)) return;
        for (int k : constraints_of[c]) ++load[k];
        count_group(group, i + 1, taken + 1, load, counts);
        for (int k : constraints_of[c]) --load[k];
    }
};

// Dense accumulator for p(x, y) with 128-bit counters.
struct Accumulator {
    std::vector<std::vector<u128>> c;  // [dy][dx]

    void add(int dx, int dy, u128 v) {
        if (static_cast<int>(c.size()) <= dy) c.resize(dy + 1);
        auto& row = c[dy];
        if (static_cast<int>(row.size()) <= dx) row.resize(dx + 1, 0);
        row[dx] += v;
    }

    void merge(const Accumulator& o) {
        for (std::size_t dy = 0; dy < o.c.size(); ++dy)
            for (std::size_t dx = 0; dx < o.c[dy].size(); ++dx)
                if (o.c[dy][dx]) add(static_cast<int>(dx), static_cast<int>(dy), o.c[dy][dx]);
    }

    BivariatePolynomial polynomial() const {
        BivariatePolynomial p;
        for (std::size_t dy = 0; dy < c.size(); ++dy)
            for (std::size_t dx = 0; dx < c[dy].size(); ++dx) {
                u128 v = c[dy][dx];
                if (!v) continue;
                mpz_class z = static_cast<unsigned long>(v >> 64);
                z <<= 64;
                z += static_cast<unsigned long>(v & ~static_cast<std::uint64_t>(0));
                p.add_term(static_cast<int>(dx), static_cast<int>(dy), z);
            }
        return p;
    }
};

void add_compact(const Geometry& g, const RawTwig& t, Accumulator& acc) {
    if (t.alive.empty()) {
        acc.add(static_cast<int>(t.dead.size()) - 1, static_cast<int>(t.dead.size()), 1);
        return;
    }
    Expansion ex(g, t);
    const auto counts = ex.choice_counts();
    const int nb = static_cast<int>(ex.dead.size());
    for (std::size_t j = 0; j < counts.size(); ++j)
        if (counts[j]) acc.add(nb - 1 + static_cast<int>(j), nb, counts[j]);
}

template <class F>
void for_each_child(const Geometry& g, const RawTwig& t, F&& visit) {
    if (t.alive.empty()) {
        visit(t);
        return;
    }
    Expansion ex(g, t);
    ex.for_each_choice([&](const std::vector<Code>& chosen) {
        RawTwig child{ex.dead, chosen};
        visit(child);
    });
}

RawTwig seed(const Geometry& g) { return RawTwig{{}, {g.first}}; }

RawTwig to_raw(const Twig& t) {
    RawTwig r;
    for (const auto& f : t.dead) r.dead.push_back(pack(f));
    for (const auto& f : t.alive) r.alive.push_back(pack(f));
    sort_unique(r.dead);
    sort_unique(r.alive);
    return r;
}

void stream(const Geometry& g, const RawTwig& t, int levels_left, Accumulator& acc) {
    if (levels_left == 1) {
        add_compact(g, t, acc);
        return;
    }
    for_each_child(g, t, [&](const RawTwig& child) { stream(g, child, levels_left - 1, acc); });
}

}  // namespace

FaceCoord twig_first_cell(int d) {
    if (d == 2) return FaceCoord{{1, 1}};
    if (d == 3) return FaceCoord{{1, 1, 0}};
    throw std::invalid_argument("twigs are implemented for d = 2 and d = 3");
}

FaceCoord twig_entering_face(int d) {
    if (d != 2) throw std::invalid_argument("the entering face is only fixed for d = 2");
    return FaceCoord{{1, -1}};
}

FaceCoord twig_entering_edge(int d) {
    if (d != 3) throw std::invalid_argument("the entering edge is used for d = 3");
    return FaceCoord{{1, 0, 0}};
}

TwigSet level1_twigs(int d) {
    TwigSet seed_set{d, 0, {}};
    Twig s;
    s.alive.push_back(twig_first_cell(d));
    seed_set.twigs.push_back(s);
    return next_level(seed_set);
}

TwigSet next_level(const TwigSet& ts) {
    const Geometry g(ts.d);
    TwigSet out{ts.d, ts.level + 1, {}};
    for (const auto& t : ts.twigs) {
        if (t.alive.empty()) {
            Twig carried = t;
            carried.level = ts.level + 1;
            out.twigs.push_back(std::move(carried));
            continue;
        }
        const RawTwig raw = to_raw(t);
        Expansion ex(g, raw);
        ex.for_each_choice([&](const std::vector<Code>& chosen) {
            Twig child;
            child.level = ts.level + 1;
            for (Code c : ex.dead) child.dead.push_back(unpack(c, ts.d));
            for (Code c : chosen) child.alive.push_back(unpack(c, ts.d));
            child.excluded = t.excluded;
            for (Code c : ex.candidates)
                if (!std::binary_search(chosen.begin(), chosen.end(), c)) child.excluded.push_back(unpack(c, ts.d));
            out.twigs.push_back(std::move(child));
        });
    }
    return out;
}

BivariatePolynomial twig_polynomial(const TwigSet& ts) {
    BivariatePolynomial p;
    for (const auto& t : ts.twigs) {
        if (t.dead.empty()) throw std::invalid_argument("twig without a dead cell");
        p.add_term(t.x_degree(), t.y_degree(), 1);
    }
    return p;
}

BivariatePolynomial compact_next_polynomial(const TwigSet& ts) {
    const Geometry g(ts.d);
    Accumulator acc;
    for (const auto& t : ts.twigs) add_compact(g, to_raw(t), acc);
    return acc.polynomial();
}

BivariatePolynomial twig_level_polynomial(int d, int level) {
    if (level < 1) throw std::invalid_argument("twig level must be >= 1");
    const Geometry g(d);
    const RawTwig s = seed(g);
    if (level == 1) {
        Accumulator acc;
        add_compact(g, s, acc);
        return acc.polynomial();
    }
    // Fan out over the level-1 twigs (and level-2 below them when deep enough).
    std::vector<RawTwig> roots;
    const int fan_depth = level >= 3 ? 2 : 1;
    std::vector<RawTwig> frontier{s};
    for (int i = 0; i < fan_depth; ++i) {
        std::vector<RawTwig> next;
        for (const auto& t : frontier) for_each_child(g, t, [&](const RawTwig& c) { next.push_back(c); });
        frontier = std::move(next);
    }
    std::mutex mu;
    Accumulator total;
    parallel_for(frontier.size(), [&](std::size_t i) {
        Accumulator acc;
        stream(g, frontier[i], level - fan_depth, acc);
        std::lock_guard<std::mutex> lock(mu);
        total.merge(acc);
    });
    return total.polynomial();
}

bool twig_is_self_avoiding(const Twig& t) {
    if (t.dead.empty()) return true;
    const int d = t.dead.front().dim();
    const Geometry g(d);
    std::map<Code, int> count;
    std::vector<Code> es;
    auto visit = [&](const FaceCoord& f) {
        g.edges_of(pack(f), es);
        for (Code e : es) ++count[e];
    };
    for (const auto& f : t.dead) visit(f);
    for (const auto& f : t.alive) visit(f);
    for (const auto& [e, n] : count)
        if (n > 2) return false;
    if (d == 3) {
        // the entering face already sits at the entering edge
        auto it = count.find(g.entering);
        if (it != count.end() && it->second > 1) return false;
    }
    return true;
}

}  // namespace growth
