#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "growth/lattice.hpp"

namespace growth {

enum class Rule { SAW, SOW, ODW, NAW, EAW, NRW, LWALK, RW };

std::string to_string(Rule r);
Rule parse_rule(const std::string& name);

struct WalkRule {
    Rule id;
    LatticeId lattice;
};

const Lattice& planar_lattice(LatticeId id);
bool uses_config_table(Rule r);

// Passages (chords) and walk ends (stubs) realized at one vertex, as direction
// indices. Canonical form: chords as (a<b) sorted, stubs sorted.
struct VertexChordConfig {
    std::vector<std::pair<int, int>> chords;
    std::vector<int> stubs;

    void normalize();
    auto operator<=>(const VertexChordConfig&) const = default;
};

// Per-direction labels: 0 unused, 1 stub, 2+j chord to direction j.
// The code is the base-(c+2) number formed by the labels.
std::uint32_t encode_config(const VertexChordConfig& cfg, int coordination);
// Returns false if some direction is used twice.
bool try_encode_config(const VertexChordConfig& cfg, int coordination, std::uint32_t& code);
VertexChordConfig decode_config(std::uint32_t code, int coordination);

class VertexConfigTable {
public:
    WalkRule rule;
    int coordination = 0;
    std::vector<VertexChordConfig> configs;  // sorted canonical members
    std::vector<std::uint8_t> allowed;       // indexed by code

    bool contains(const VertexChordConfig& cfg) const;
    bool contains_code(std::uint32_t code) const { return allowed[code] != 0; }
};

// Generators closed under the point group and truncation. Throws for rules
// that are direct predicates (NAW, EAW, NRW, RW).
VertexConfigTable build_config_table(const WalkRule& rule);
// Cached, shared instance.
const VertexConfigTable& config_table(const WalkRule& rule);

bool noncrossing_check(const VertexChordConfig& cfg, LatticeId lattice);

// Whole-path check, computed from scratch.
bool is_allowed(const WalkRule& rule, const std::vector<int>& steps);

// Incremental walk state. Only the two vertices touched by a new step are updated.
class WalkState {
public:
    WalkState(const WalkRule& rule, int max_len);

    const WalkRule& rule() const { return rule_; }
    const std::vector<int>& steps() const { return steps_; }
    int length() const { return static_cast<int>(steps_.size()); }
    int max_len() const { return max_len_; }

    bool can_push(int dir) const;
    void push(int dir);  // caller must have checked can_push
    void pop();
    void clear();

private:
    struct Undo {
        std::uint32_t u_idx, u_old, v_idx, v_old;
    };

    std::uint32_t label(std::uint32_t code, int dir) const { return (code / pow_[dir]) % base_; }

    WalkRule rule_;
    const VertexConfigTable* table_ = nullptr;
    int coordination_;
    int max_len_;
    int side_;
    std::uint32_t base_;
    std::vector<std::uint32_t> pow_;
    std::vector<int> delta_;
    std::vector<int> opposite_;
    std::vector<std::uint32_t> grid_;
    std::vector<int> steps_;
    std::vector<std::uint32_t> pos_;
    std::vector<Undo> undo_;
};

std::pair<bool, WalkState> is_allowed_incremental(const WalkState& state, int next);

}  // namespace growth
