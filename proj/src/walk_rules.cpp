#include "growth/walk_rules.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace growth {

std::string to_string(Rule r) {
    switch (r) {
        case Rule::SAW: return "saw";
        case Rule::SOW: return "sow";
        case Rule::ODW: return "odw";
        case Rule::NAW: return "naw";
        case Rule::EAW: return "eaw";
        case Rule::NRW: return "nrw";
        case Rule::LWALK: return "lwalk";
        case Rule::RW: return "rw";
    }
    return "?";
}

Rule parse_rule(const std::string& name) {
    static const std::map<std::string, Rule> names = {
        {"saw", Rule::SAW}, {"sow", Rule::SOW}, {"odw", Rule::ODW}, {"naw", Rule::NAW},
        {"eaw", Rule::EAW}, {"nrw", Rule::NRW}, {"lwalk", Rule::LWALK}, {"rw", Rule::RW}};
    auto it = names.find(name);
    if (it == names.end()) throw std::invalid_argument("unknown rule '" + name + "'");
    return it->second;
}

const Lattice& planar_lattice(LatticeId id) {
    if (id == LatticeId::Square) return square_lattice();
    if (id == LatticeId::Triangular) return triangular_lattice();
    throw std::invalid_argument("walks are implemented on the square and triangular lattices only");
}

bool uses_config_table(Rule r) {
    return r == Rule::SAW || r == Rule::SOW || r == Rule::ODW || r == Rule::LWALK;
}

void VertexChordConfig::normalize() {
    for (auto& ch : chords)
        if (ch.first > ch.second) std::swap(ch.first, ch.second);
    std::sort(chords.begin(), chords.end());
    std::sort(stubs.begin(), stubs.end());
}

bool try_encode_config(const VertexChordConfig& cfg, int coordination, std::uint32_t& code) {
    std::vector<int> label(coordination, 0);
    auto set = [&](int dir, int value) {
        if (dir < 0 || dir >= coordination || label[dir] != 0) return false;
        label[dir] = value;
        return true;
    };
    for (auto [a, b] : cfg.chords)
        if (a == b || !set(a, 2 + b) || !set(b, 2 + a)) return false;
    for (int s : cfg.stubs)
        if (!set(s, 1)) return false;
    code = 0;
    for (int i = coordination - 1; i >= 0; --i) code = code * (coordination + 2) + label[i];
    return true;
}

std::uint32_t encode_config(const VertexChordConfig& cfg, int coordination) {
    std::uint32_t code = 0;
    if (!try_encode_config(cfg, coordination, code))
        throw std::invalid_argument("vertex configuration uses a direction twice");
    return code;
}

VertexChordConfig decode_config(std::uint32_t code, int coordination) {
    VertexChordConfig cfg;
    for (int i = 0; i < coordination; ++i) {
        const int l = static_cast<int>(code % (coordination + 2));
        code /= coordination + 2;
        if (l == 1) cfg.stubs.push_back(i);
        else if (l >= 2 && i < l - 2) cfg.chords.emplace_back(i, l - 2);
    }
    cfg.normalize();
    return cfg;
}

bool VertexConfigTable::contains(const VertexChordConfig& cfg) const {
    std::uint32_t code = 0;
    return try_encode_config(cfg, coordination, code) && contains_code(code);
}

namespace {

using Generator = std::vector<std::pair<int, int>>;

std::vector<Generator> generators(const WalkRule& rule) {
    const bool sq = rule.lattice == LatticeId::Square;
    switch (rule.id) {
        case Rule::SAW:
            if (sq) return {{{0, 2}}, {{0, 1}}};
            return {{{0, 1}}, {{0, 2}}, {{0, 3}}};
        case Rule::SOW:
            if (sq) return {{{0, 2}}, {{1, 2}, {0, 3}}};
            return {{{0, 1}, {2, 3}, {4, 5}}, {{1, 5}, {2, 4}}, {{1, 5}, {2, 3}}, {{0, 3}, {1, 2}, {4, 5}}};
        case Rule::ODW:
            if (sq) return {{{0, 2}}, {{1, 2}, {0, 3}}};
            return {{{0, 1}, {2, 3}, {4, 5}}, {{1, 5}, {2, 4}}, {{1, 5}, {2, 3}}, {{1, 2}, {4, 5}}, {{1, 2}, {0, 3}}};
        case Rule::LWALK:
            if (!sq) throw std::invalid_argument("lwalk is defined on the square lattice only");
            return {{{0, 1}}};
        default:
            throw std::invalid_argument("rule '" + to_string(rule.id) + "' is a direct predicate without a configuration table");
    }
}

}  // namespace

VertexConfigTable build_config_table(const WalkRule& rule) {
    const Lattice& lat = planar_lattice(rule.lattice);
    const int c = lat.coordination();
    VertexConfigTable table;
    table.rule = rule;
    table.coordination = c;
    std::uint32_t codes = 1;
    for (int i = 0; i < c; ++i) codes *= c + 2;
    table.allowed.assign(codes, 0);

    std::set<VertexChordConfig> members;
    for (const auto& gen : generators(rule)) {
        for (const auto& g : lat.group()) {
            Generator img;
            for (auto [a, b] : gen) img.emplace_back(g.perm[a], g.perm[b]);
            const int m = static_cast<int>(img.size());
            int combos = 1;
            for (int i = 0; i < m; ++i) combos *= 4;
            for (int t = 0; t < combos; ++t) {
                VertexChordConfig cfg;
                int rest = t;
                for (int i = 0; i < m; ++i, rest /= 4) {
                    switch (rest % 4) {
                        case 0: break;
                        case 1: cfg.chords.push_back(img[i]); break;
                        case 2: cfg.stubs.push_back(img[i].first); break;
                        case 3: cfg.stubs.push_back(img[i].second); break;
                    }
                }
                cfg.normalize();
                members.insert(cfg);
            }
        }
    }
    for (const auto& cfg : members) {
        table.allowed[encode_config(cfg, c)] = 1;
        table.configs.push_back(cfg);
    }
    return table;
}

const VertexConfigTable& config_table(const WalkRule& rule) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<VertexConfigTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(rule.id), static_cast<int>(rule.lattice));
    auto& slot = cache[key];
    if (!slot) slot = std::make_unique<VertexConfigTable>(build_config_table(rule));
    return *slot;
}

bool noncrossing_check(const VertexChordConfig& cfg, LatticeId lattice) {
    const int c = planar_lattice(lattice).coordination();
    auto between = [c](int a, int b, int x) {  // x strictly inside the arc a -> b (counterclockwise)
        const int span = ((b - a) % c + c) % c;
        const int off = ((x - a) % c + c) % c;
        return off > 0 && off < span;
    };
    for (std::size_t i = 0; i < cfg.chords.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.chords.size(); ++j) {
            auto [a, b] = cfg.chords[i];
            auto [p, q] = cfg.chords[j];
            if (between(a, b, p) != between(a, b, q)) return false;
        }
    return true;
}

namespace {

bool allowed_by_table(const WalkRule& rule, const std::vector<int>& steps) {
    const Lattice& lat = planar_lattice(rule.lattice);
    const auto pts = lat.positions(steps);
    std::map<std::vector<int>, VertexChordConfig> at;
    const std::size_t n = steps.size();
    at[pts[0]].stubs.push_back(steps[0]);
    for (std::size_t i = 1; i < n; ++i)
        at[pts[i]].chords.emplace_back(lat.opposite(steps[i - 1]), steps[i]);
    at[pts[n]].stubs.push_back(lat.opposite(steps[n - 1]));
    const auto& table = config_table(rule);
    for (auto& [p, cfg] : at) {
        cfg.normalize();
        if (!table.contains(cfg)) return false;
    }
    return true;
}

}  // namespace

bool is_allowed(const WalkRule& rule, const std::vector<int>& steps) {
    if (steps.empty()) return true;
    const Lattice& lat = planar_lattice(rule.lattice);
    switch (rule.id) {
        case Rule::RW: return true;
        case Rule::NRW:
            for (std::size_t i = 1; i < steps.size(); ++i)
                if (steps[i] == lat.opposite(steps[i - 1])) return false;
            return true;
        case Rule::EAW: {
            const auto pts = lat.positions(steps);
            std::set<std::pair<std::vector<int>, std::vector<int>>> edges;
            for (std::size_t i = 0; i < steps.size(); ++i) {
                auto e = std::minmax(pts[i], pts[i + 1]);
                if (!edges.emplace(e.first, e.second).second) return false;
            }
            return true;
        }
        case Rule::NAW: {
            const auto pts = lat.positions(steps);
            std::map<std::vector<int>, std::size_t> index;
            for (std::size_t i = 0; i < pts.size(); ++i)
                if (!index.emplace(pts[i], i).second) return false;
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (const auto& [dir, q] : lat.neighbors(pts[i])) {
                    auto it = index.find(q);
                    if (it == index.end()) continue;
                    const std::size_t j = it->second;
                    if (j + 1 != i && i + 1 != j) return false;
                }
            return true;
        }
        default: return allowed_by_table(rule, steps);
    }
}

WalkState::WalkState(const WalkRule& rule, int max_len) : rule_(rule), max_len_(max_len) {
    const Lattice& lat = planar_lattice(rule.lattice);
    if (max_len < 1) throw std::invalid_argument("WalkState needs max_len >= 1");
    coordination_ = lat.coordination();
    if (uses_config_table(rule.id)) table_ = &config_table(rule);
    base_ = static_cast<std::uint32_t>(coordination_ + 2);
    pow_.resize(coordination_);
    std::uint32_t p = 1;
    for (int i = 0; i < coordination_; ++i, p *= base_) pow_[i] = p;
    side_ = 2 * max_len + 5;
    for (int i = 0; i < coordination_; ++i) {
        const auto& d = lat.displacement(i);
        delta_.push_back(d[0] * side_ + d[1]);
        opposite_.push_back(lat.opposite(i));
    }
    grid_.assign(static_cast<std::size_t>(side_) * side_, 0);
    clear();
}

void WalkState::clear() {
    for (auto& u : undo_) {
        grid_[u.v_idx] = 0;
        grid_[u.u_idx] = 0;
    }
    steps_.clear();
    undo_.clear();
    pos_.clear();
    const std::uint32_t origin = static_cast<std::uint32_t>((max_len_ + 2) * side_ + (max_len_ + 2));
    pos_.push_back(origin);
    grid_[origin] = rule_.id == Rule::NAW ? 1u << 31 : 0;
}

namespace {
constexpr std::uint32_t kVisited = 1u << 31;
}

bool WalkState::can_push(int dir) const {
    if (length() >= max_len_) return false;
    const std::uint32_t u = pos_.back();
    const std::uint32_t v = static_cast<std::uint32_t>(static_cast<int>(u) + delta_[dir]);
    const int back = steps_.empty() ? -1 : opposite_[steps_.back()];
    switch (rule_.id) {
        case Rule::RW: return true;
        case Rule::NRW: return dir != back;
        case Rule::EAW: return !(grid_[u] & (1u << dir));
        case Rule::NAW: {
            if (grid_[v] & kVisited) return false;
            for (int d = 0; d < coordination_; ++d) {
                const std::uint32_t w = static_cast<std::uint32_t>(static_cast<int>(v) + delta_[d]);
                if (w != u && (grid_[w] & kVisited)) return false;
            }
            return true;
        }
        default: break;
    }
    std::uint32_t cu = grid_[u];
    if (label(cu, dir) != 0) return false;
    if (back >= 0) cu += (1 + dir) * pow_[back];  // stub (1) becomes chord (2+dir)
    cu += (back >= 0 ? 2 + back : 1) * pow_[dir];
    const int o = opposite_[dir];
    const std::uint32_t cv = grid_[v];
    if (label(cv, o) != 0) return false;
    return table_->contains_code(cu) && table_->contains_code(cv + pow_[o]);
}

void WalkState::push(int dir) {
    const std::uint32_t u = pos_.back();
    const std::uint32_t v = static_cast<std::uint32_t>(static_cast<int>(u) + delta_[dir]);
    const int back = steps_.empty() ? -1 : opposite_[steps_.back()];
    const int o = opposite_[dir];
    undo_.push_back({u, grid_[u], v, grid_[v]});
    switch (rule_.id) {
        case Rule::RW:
        case Rule::NRW: break;
        case Rule::EAW:
            grid_[u] |= 1u << dir;
            grid_[v] |= 1u << o;
            break;
        case Rule::NAW: grid_[v] |= kVisited; break;
        default:
            if (back >= 0) grid_[u] += (1 + dir) * pow_[back];
            grid_[u] += (back >= 0 ? 2 + back : 1) * pow_[dir];
            grid_[v] += pow_[o];
            break;
    }
    steps_.push_back(dir);
    pos_.push_back(v);
}

void WalkState::pop() {
    const Undo& u = undo_.back();
    grid_[u.v_idx] = u.v_old;
    grid_[u.u_idx] = u.u_old;
    undo_.pop_back();
    steps_.pop_back();
    pos_.pop_back();
}

std::pair<bool, WalkState> is_allowed_incremental(const WalkState& state, int next) {
    WalkState out = state;
    if (out.length() >= out.max_len()) {
        out = WalkState(state.rule(), 2 * state.max_len());
        for (int s : state.steps()) out.push(s);
    }
    if (!out.can_push(next)) return {false, std::move(out)};
    out.push(next);
    return {true, std::move(out)};
}

}  // namespace growth
