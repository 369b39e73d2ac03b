#include "growth/manifolds.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "growth/decimal.hpp"
#include "growth/parallel.hpp"

namespace growth {

namespace {

// Doubled coordinates packed 7 bits per axis around an offset of 64.
using Code = std::uint64_t;
constexpr int kBits = 7;
constexpr int kOffset = 64;
constexpr int kMaxDim = 8;

int coord(Code c, int i) { return static_cast<int>((c >> (kBits * i)) & 127) - kOffset; }
Code shifted(Code c, int i, int s) { return c + static_cast<Code>(static_cast<std::int64_t>(s) << (kBits * i)); }

Code pack(const FaceCoord& f) {
    if (f.dim() > kMaxDim) throw std::invalid_argument("dimension above 8");
    Code c = 0;
    for (int i = 0; i < f.dim(); ++i) {
        if (f.c[i] <= -kOffset || f.c[i] >= kOffset) throw std::out_of_range("face coordinate out of range");
        c |= static_cast<Code>(f.c[i] + kOffset) << (kBits * i);
    }
    return c;
}

FaceCoord unpack(Code c, int d) {
    FaceCoord f;
    for (int i = 0; i < d; ++i) f.c.push_back(coord(c, i));
    return f;
}

void edges_of(Code f, int d, std::vector<Code>& out) {
    out.clear();
    for (int i = 0; i < d; ++i)
        if (coord(f, i) & 1) {
            out.push_back(shifted(f, i, -1));
            out.push_back(shifted(f, i, 1));
        }
}

void faces_at(Code e, int d, std::vector<Code>& out) {
    out.clear();
    for (int i = 0; i < d; ++i)
        if (!(coord(e, i) & 1)) {
            out.push_back(shifted(e, i, -1));
            out.push_back(shifted(e, i, 1));
        }
}

// Signed axis label (+-(i+1)) of face g seen from edge e.
int label(Code e, Code g, int d) {
    for (int i = 0; i < d; ++i) {
        const int diff = coord(g, i) - coord(e, i);
        if (diff) return diff > 0 ? i + 1 : -(i + 1);
    }
    throw std::invalid_argument("face not incident to edge");
}

bool pairs_compatible(int a, int b, int c, int e) {
    if (a == c || a == e || b == c || b == e) return false;
    const bool anti1 = a == -b, anti2 = c == -e;
    const bool perp1 = std::abs(a) != std::abs(b), perp2 = std::abs(c) != std::abs(e);
    if (anti1 && !perp2) return false;
    if (anti2 && !perp1) return false;
    return true;
}

bool even_ok(const std::vector<std::pair<int, int>>& pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (!pairs_compatible(pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second)) return false;
    return true;
}

bool lone_ok(std::vector<std::pair<int, int>> pairs, int lone, const std::vector<int>& free_slots) {
    for (int v : free_slots) {
        pairs.emplace_back(lone, v);
        if (even_ok(pairs)) return true;
        pairs.pop_back();
    }
    return false;
}

bool sorted_has(const std::vector<Code>& s, Code c) { return std::binary_search(s.begin(), s.end(), c); }

std::vector<Code> pack_all(const FaceSet& faces, int& d) {
    if (faces.empty()) throw std::invalid_argument("empty face set");
    d = faces.front().dim();
    std::vector<Code> out;
    for (const auto& f : faces) {
        if (f.dim() != d) throw std::invalid_argument("mixed dimensions");
        out.push_back(pack(f));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) {
        while (p[a] != a) a = p[a] = p[p[a]];
        return a;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// A pairing option at a crowded edge, as indices into the face list.
struct Option {
    std::vector<std::pair<int, int>> pairs;
    int lone = -1;
};

struct CrowdedEdge {
    Code edge;
    std::vector<Option> options;
};

void matchings(std::vector<int>& rest, std::vector<std::pair<int, int>>& cur,
               std::vector<std::vector<std::pair<int, int>>>& out) {
    if (rest.empty()) {
        out.push_back(cur);
        return;
    }
    const int a = rest.front();
    for (std::size_t i = 1; i < rest.size(); ++i) {
        const int b = rest[i];
        std::vector<int> next;
        for (std::size_t j = 1; j < rest.size(); ++j)
            if (j != i) next.push_back(rest[j]);
        cur.emplace_back(a, b);
        matchings(next, cur, out);
        cur.pop_back();
    }
}

// Visits every valid connected structure; stops early if visit returns false.
void for_each_structure(const std::vector<Code>& faces, int d,
                        const std::function<bool(const std::vector<CrowdedEdge>&, const std::vector<int>&)>& visit) {
    const int n = static_cast<int>(faces.size());
    std::map<Code, std::vector<int>> at_edge;
    std::vector<Code> es;
    for (int i = 0; i < n; ++i) {
        edges_of(faces[i], d, es);
        for (Code e : es) at_edge[e].push_back(i);
    }
    UnionFind base(n);
    std::vector<CrowdedEdge> crowded;
    std::vector<Code> slots;
    for (const auto& [e, list] : at_edge) {
        if (list.size() == 2) base.unite(list[0], list[1]);
        if (list.size() <= 2) continue;
        faces_at(e, d, slots);
        std::vector<int> free_labels;
        for (Code s : slots)
            if (!sorted_has(faces, s)) free_labels.push_back(label(e, s, d));
        CrowdedEdge ce{e, {}};
        const bool odd = list.size() % 2;
        for (std::size_t l = 0; l < (odd ? list.size() : 1); ++l) {
            std::vector<int> rest;
            for (std::size_t j = 0; j < list.size(); ++j)
                if (!odd || j != l) rest.push_back(list[j]);
            std::vector<std::vector<std::pair<int, int>>> ms;
            std::vector<std::pair<int, int>> cur;
            matchings(rest, cur, ms);
            for (auto& m : ms) {
                std::vector<std::pair<int, int>> lab;
                for (auto [a, b] : m) lab.emplace_back(label(e, faces[a], d), label(e, faces[b], d));
                const bool ok = odd ? lone_ok(lab, label(e, faces[list[l]], d), free_labels) : even_ok(lab);
                if (ok) ce.options.push_back({m, odd ? list[l] : -1});
            }
        }
        if (ce.options.empty()) return;  // no admissible structure at all
        crowded.push_back(std::move(ce));
    }

    std::vector<int> choice(crowded.size(), 0);
    bool more = true;
    while (more) {
        UnionFind uf = base;
        for (std::size_t i = 0; i < crowded.size(); ++i)
            for (auto [a, b] : crowded[i].options[choice[i]].pairs) uf.unite(a, b);
        int roots = 0;
        for (int i = 0; i < n; ++i) roots += uf.find(i) == i;
        if (roots == 1 && !visit(crowded, choice)) return;
        more = false;
        for (std::size_t i = 0; i < crowded.size(); ++i) {
            if (++choice[i] < static_cast<int>(crowded[i].options.size())) {
                more = true;
                break;
            }
            choice[i] = 0;
        }
    }
}

bool connected_codes(const std::vector<Code>& faces, int d) {
    const int n = static_cast<int>(faces.size());
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    std::vector<Code> es, fs;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        edges_of(faces[i], d, es);
        for (Code e : es) {
            faces_at(e, d, fs);
            for (Code g : fs) {
                auto it = std::lower_bound(faces.begin(), faces.end(), g);
                if (it == faces.end() || *it != g) continue;
                const int j = static_cast<int>(it - faces.begin());
                if (!seen[j]) {
                    seen[j] = true;
                    ++count;
                    stack.push_back(j);
                }
            }
        }
    }
    return count == n;
}

int incidences(const std::vector<Code>& faces, Code e, int d, std::vector<Code>& buf) {
    faces_at(e, d, buf);
    int m = 0;
    for (Code g : buf) m += sorted_has(faces, g);
    return m;
}

bool self_avoiding_codes(const std::vector<Code>& faces, int d) {
    std::vector<Code> es, buf;
    for (Code f : faces) {
        edges_of(f, d, es);
        for (Code e : es)
            if (incidences(faces, e, d, buf) > 2) return false;
    }
    return true;
}

bool closed_codes(const std::vector<Code>& faces, int d) {
    std::vector<Code> es, buf;
    for (Code f : faces) {
        edges_of(f, d, es);
        for (Code e : es)
            if (incidences(faces, e, d, buf) != 2) return false;
    }
    return true;
}

std::vector<Code> canonical(std::vector<Code> s, int d) {
    std::sort(s.begin(), s.end());
    const Code m = s.front();
    std::int64_t t = 0;
    for (int i = 0; i < d; ++i) {
        const int v = coord(m, i);
        t += static_cast<std::int64_t>(v - (v & 1)) << (kBits * i);
    }
    for (auto& c : s) c -= static_cast<Code>(t);
    return s;
}

std::vector<Code> orientations(int d, int k) {
    std::vector<Code> out;
    for (int mask = 0; mask < (1 << d); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        FaceCoord f;
        for (int i = 0; i < d; ++i) f.c.push_back((mask >> i) & 1);
        out.push_back(pack(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_class(const ManifoldClass& cls) {
    if (cls.d < 1 || cls.d > kMaxDim) throw std::invalid_argument("d must be in 1..8");
    if (cls.k < 1 || cls.k > cls.d) throw std::invalid_argument("k must be in 1..d");
}

void check_size(const ManifoldClass& cls, int n, int cap) {
    check_class(cls);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const int limit = cap < 0 ? default_size_cap(cls.d, cls.k) : cap;
    if (n > limit)
        throw std::invalid_argument("area " + std::to_string(n) + " exceeds the size cap " + std::to_string(limit) +
                                    " for (d,k) = (" + std::to_string(cls.d) + "," + std::to_string(cls.k) + ")");
    if (2 * n + 2 >= kOffset) throw std::invalid_argument("area too large for the packed coordinates");
}

bool grows_avoiding(const ManifoldClass& cls) {
    return cls.id == ManifoldClassId::SAM || cls.id == ManifoldClassId::SAM_closed;
}

// Faces that can be glued to s (sorted, unique).
std::vector<Code> extensions(const std::vector<Code>& s, int d, bool avoid) {
    std::vector<Code> es, fs, buf, cand, out;
    for (Code f : s) {
        edges_of(f, d, es);
        for (Code e : es) {
            faces_at(e, d, fs);
            for (Code g : fs)
                if (!sorted_has(s, g)) cand.push_back(g);
        }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (Code g : cand) {
        if (avoid) {
            edges_of(g, d, es);
            bool ok = true;
            for (Code e : es)
                if (incidences(s, e, d, buf) >= 2) ok = false;
            if (!ok) continue;
        }
        out.push_back(g);
    }
    return out;
}

// Face sets of every area up to n. SAM and closed SAM grow under the
// two-faces-per-edge rule, XD and SOM grow freely.
std::vector<std::vector<std::vector<Code>>> grow(const ManifoldClass& cls, int n) {
    const int d = cls.d;
    const bool avoid = grows_avoiding(cls);
    std::vector<std::vector<std::vector<Code>>> levels(1);
    for (Code f : orientations(d, cls.k)) levels[0].push_back({f});
    for (int size = 2; size <= n; ++size) {
        const auto& prev = levels.back();
        std::vector<std::vector<std::vector<Code>>> parts(prev.size());
        parallel_for(prev.size(), [&](std::size_t idx) {
            const auto& s = prev[idx];
            for (Code g : extensions(s, d, avoid)) {
                std::vector<Code> t = s;
                t.push_back(g);
                parts[idx].push_back(canonical(std::move(t), d));
            }
        });
        std::vector<std::vector<Code>> next;
        for (auto& p : parts)
            for (auto& t : p) next.push_back(std::move(t));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        levels.push_back(std::move(next));
    }
    return levels;
}

// Count contributed by one face set of the class's growth family.
std::uint64_t class_weight(const ManifoldClass& cls, const std::vector<Code>& s) {
    switch (cls.id) {
        case ManifoldClassId::SAM:
        case ManifoldClassId::XD: return 1;
        case ManifoldClassId::SAM_closed: return closed_codes(s, cls.d) ? 1 : 0;
        case ManifoldClassId::SOM: {
            std::uint64_t c = 0;
            for_each_structure(s, cls.d, [&](const std::vector<CrowdedEdge>&, const std::vector<int>&) {
                ++c;
                return true;
            });
            return c;
        }
    }
    return 0;
}

// t minus its element at index skip is connected.
bool connected_without(const std::vector<Code>& t, std::size_t skip, int d) {
    std::vector<Code> r;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (i != skip) r.push_back(t[i]);
    return connected_codes(r, d);
}

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class ipow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// a^a / (a-1)^(a-1) with 0^0 = 1.
mpq_class entropy_ratio(unsigned long a) {
    mpq_class q(ipow(a, a), ipow(a - 1, a - 1));
    q.canonicalize();
    return q;
}

void check_dk(int d, int k) {
    if (d < 1 || k < 1 || k > d) throw std::invalid_argument("need 1 <= k <= d");
}

}  // namespace

std::string to_string(ManifoldClassId id) {
    switch (id) {
        case ManifoldClassId::SAM: return "sam";
        case ManifoldClassId::SOM: return "som";
        case ManifoldClassId::XD: return "xd";
        case ManifoldClassId::SAM_closed: return "sam_closed";
    }
    return "?";
}

ManifoldClassId parse_manifold_class(const std::string& name) {
    if (name == "sam") return ManifoldClassId::SAM;
    if (name == "som" || name == "sos") return ManifoldClassId::SOM;
    if (name == "xd") return ManifoldClassId::XD;
    if (name == "sam_closed") return ManifoldClassId::SAM_closed;
    throw std::invalid_argument("unknown manifold class '" + name + "'");
}

bool osculating_ok(const FaceCoord& edge, const std::vector<FacePair>& pairs, const std::optional<FaceCoord>& lone) {
    const int d = edge.dim();
    const Code e = pack(edge);
    std::vector<Code> slots;
    faces_at(e, d, slots);
    auto lab = [&](const FaceCoord& f) {
        const Code g = pack(f);
        if (std::find(slots.begin(), slots.end(), g) == slots.end())
            throw std::invalid_argument("face not incident to edge");
        return label(e, g, d);
    };
    std::vector<std::pair<int, int>> lp;
    std::vector<int> used;
    for (const auto& [a, b] : pairs) {
        lp.emplace_back(lab(a), lab(b));
        used.push_back(lp.back().first);
        used.push_back(lp.back().second);
    }
    if (!lone) return even_ok(lp);
    const int l = lab(*lone);
    used.push_back(l);
    std::vector<int> free_labels;
    for (Code s : slots) {
        const int v = label(e, s, d);
        if (std::find(used.begin(), used.end(), v) == used.end()) free_labels.push_back(v);
    }
    return lone_ok(lp, l, free_labels);
}

bool osculating_ok_dirs(const std::vector<std::pair<int, int>>& pairs, std::optional<int> lone, int d) {
    std::vector<int> used;
    for (auto [a, b] : pairs) {
        for (int v : {a, b})
            if (v == 0 || std::abs(v) > d) throw std::invalid_argument("axis label out of range");
        used.push_back(a);
        used.push_back(b);
    }
    if (!lone) return even_ok(pairs);
    used.push_back(*lone);
    std::vector<int> free_labels;
    for (int i = 1; i <= d; ++i)
        for (int v : {i, -i})
            if (std::find(used.begin(), used.end(), v) == used.end()) free_labels.push_back(v);
    return lone_ok(pairs, *lone, free_labels);
}

std::vector<CellComplex> connection_structures(const FaceSet& faces) {
    int d = 0;
    const auto codes = pack_all(faces, d);
    std::vector<CellComplex> out;
    for_each_structure(codes, d, [&](const std::vector<CrowdedEdge>& crowded, const std::vector<int>& choice) {
        CellComplex cx;
        cx.d = d;
        cx.k = faces.front().k();
        for (Code c : codes) cx.faces.push_back(unpack(c, d));
        for (std::size_t i = 0; i < crowded.size(); ++i) {
            const Option& o = crowded[i].options[choice[i]];
            EdgeConnection ec;
            ec.edge = unpack(crowded[i].edge, d);
            for (auto [a, b] : o.pairs) ec.pairs.emplace_back(unpack(codes[a], d), unpack(codes[b], d));
            if (o.lone >= 0) ec.lone = unpack(codes[o.lone], d);
            cx.connections.push_back(std::move(ec));
        }
        out.push_back(std::move(cx));
        return true;
    });
    return out;
}

std::uint64_t count_connection_structures(const FaceSet& faces) {
    int d = 0;
    const auto codes = pack_all(faces, d);
    std::uint64_t n = 0;
    for_each_structure(codes, d, [&](const std::vector<CrowdedEdge>&, const std::vector<int>&) {
        ++n;
        return true;
    });
    return n;
}

bool is_connected(const FaceSet& faces) {
    int d = 0;
    const auto codes = pack_all(faces, d);
    return connected_codes(codes, d);
}

bool is_self_avoiding(const FaceSet& faces) {
    int d = 0;
    const auto codes = pack_all(faces, d);
    return self_avoiding_codes(codes, d);
}

bool is_closed(const FaceSet& faces) {
    int d = 0;
    const auto codes = pack_all(faces, d);
    return closed_codes(codes, d);
}

int default_size_cap(int d, int k) {
    if (d <= 2) return 10;
    if (d == 3 && k == 1) return 10;
    if (d == 3) return 8;
    return 6;
}

std::vector<mpz_class> enumerate_fixed(const ManifoldClass& cls, int n, int cap) {
    check_size(cls, n, cap);
    const auto levels = grow(cls, n - 1);
    std::vector<mpz_class> counts;
    for (const auto& level : levels) {
        std::vector<std::uint64_t> per(level.size(), 0);
        parallel_for(level.size(), [&](std::size_t i) { per[i] = class_weight(cls, level[i]); });
        counts.emplace_back(static_cast<unsigned long>(std::accumulate(per.begin(), per.end(), std::uint64_t{0})));
    }
    if (n == 1) return counts;
    // Top level without storage: a child is counted only from the parent
    // obtained by deleting its largest non-separating face.
    const auto& prev = levels.back();
    const bool avoid = grows_avoiding(cls);
    std::vector<std::uint64_t> per(prev.size(), 0);
    parallel_for(prev.size(), [&](std::size_t idx) {
        const auto& s = prev[idx];
        for (Code g : extensions(s, cls.d, avoid)) {
            std::vector<Code> t = s;
            t.insert(std::upper_bound(t.begin(), t.end(), g), g);
            bool designated = true;
            for (std::size_t h = t.size(); h-- > 0 && t[h] > g;)
                if (connected_without(t, h, cls.d)) {
                    designated = false;
                    break;
                }
            if (designated) per[idx] += class_weight(cls, t);
        }
    });
    counts.emplace_back(static_cast<unsigned long>(std::accumulate(per.begin(), per.end(), std::uint64_t{0})));
    return counts;
}

std::vector<FaceSet> enumerate_face_sets(const ManifoldClass& cls, int n, int cap) {
    check_size(cls, n, cap);
    const auto levels = grow(cls, n);
    std::vector<FaceSet> out;
    for (const auto& s : levels.back()) {
        if (!class_weight(cls, s)) continue;
        FaceSet fs;
        for (Code c : s) fs.push_back(unpack(c, cls.d));
        out.push_back(std::move(fs));
    }
    return out;
}

std::vector<FaceSet> directed_walk_family(int d, int k, int n) {
    check_dk(d, k);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (2 * n + 2 >= kOffset) throw std::invalid_argument("n too large for the packed coordinates");
    std::vector<FaceSet> out;
    std::vector<Code> path;
    std::function<void()> extend = [&]() {
        if (static_cast<int>(path.size()) == n) {
            FaceSet fs;
            for (Code c : canonical(path, d)) fs.push_back(unpack(c, d));
            out.push_back(std::move(fs));
            return;
        }
        const Code f = path.back();
        for (int i = 0; i < d; ++i) {
            if (!(coord(f, i) & 1)) continue;
            const Code e = shifted(f, i, 1);  // upper edge across axis i
            path.push_back(shifted(e, i, 1));  // straight on
            extend();
            path.pop_back();
            for (int j = 0; j < d; ++j) {
                if (coord(f, j) & 1) continue;
                path.push_back(shifted(e, j, 1));  // turn up into axis j
                extend();
                path.pop_back();
            }
        }
    };
    for (Code f : orientations(d, k)) {
        path = {f};
        extend();
    }
    return out;
}

mpz_class directed_walk_count(int d, int k, int n) {
    check_dk(d, k);
    return binom(d, k) * ipow(k * (d - k + 1), n - 1);
}

mpq_class bound_closed_sam_upper(int d, int k) {
    check_dk(d, k);
    if (k >= d) throw std::invalid_argument("closed bound needs k < d");
    return 2 * (d - k) + 1;
}

mpq_class bound_sam_som_upper(int d, int k) {
    check_dk(d, k);
    return entropy_ratio(2 * k - 1) * (2 * (d - k) + 1);
}

mpq_class bound_xd_upper(int d, int k) {
    check_dk(d, k);
    return entropy_ratio((2 * k - 1) * (2 * (d - k) + 1));
}

mpz_class bound_sam_lower(int d, int k) {
    check_dk(d, k);
    return k * (d - k + 1);
}

std::pair<mpz_class, unsigned long> bound_closed_sam_lower(int d, int k) {
    check_dk(d, k);
    if (k >= d) throw std::invalid_argument("closed lower bound needs k < d");
    return {mpz_class((k + 1) * (d - k)), static_cast<unsigned long>(2 * k)};
}

mpq_class som_count_bound(int d, int k, int n) {
    check_dk(d, k);
    mpq_class r = binom(d, k);
    const mpq_class K = entropy_ratio(2 * k - 1);
    for (int i = 0; i < n; ++i) r *= K;
    return r * ipow(2 * (d - k) + 1, n - 1);
}

mpq_class xd_count_bound(int d, int k, int n) {
    check_dk(d, k);
    mpq_class r = binom(d, k);
    const mpq_class K = bound_xd_upper(d, k);
    for (int i = 1; i < n; ++i) r *= K;
    return r;
}

mpz_class closed_sam_count_bound(int d, int k, int n) {
    check_dk(d, k);
    return binom(d, k) * ipow(2 * (d - k) + 1, n - 1);
}

bool closed_open_separated(int d, int k) {
    return bound_closed_sam_upper(d, k) < mpq_class(bound_sam_lower(d, k));
}

FormulaResult formula_bound(int theorem, int d, int k) {
    FormulaResult r{theorem, d, k, {}, {}};
    auto rational = [&](const mpq_class& q) {
        r.exact = fraction_string(q);
        r.decimal = half_even_decimal(q, 5);
    };
    switch (theorem) {
        case 2: rational(bound_closed_sam_upper(d, k)); break;
        case 3: rational(bound_sam_som_upper(d, k)); break;
        case 4: rational(bound_xd_upper(d, k)); break;
        case 5: rational(mpq_class(bound_sam_lower(d, k))); break;
        case 6: {
            const auto [c, m] = bound_closed_sam_lower(d, k);
            r.exact = c.get_str() + "^(1/" + std::to_string(m) + ")";
            r.decimal = half_even_root_decimal(c, m, 5);
            break;
        }
        default: throw std::invalid_argument("theorem must be one of 2..6");
    }
    return r;
}

}  // namespace growth
