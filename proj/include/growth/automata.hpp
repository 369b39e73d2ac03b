#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "growth/spectral.hpp"
#include "growth/walk_rules.hpp"

namespace growth {

using Steps = std::vector<int>;

// Lexicographically smallest image of a step sequence under the point group.
Steps canonical_steps(const Steps& steps, LatticeId lattice);

// Minimal disallowed paths: disallowed, while dropping either end step gives an
// allowed path. One representative per symmetry class (first step east, first
// turn upward).
std::vector<Steps> find_loops(const WalkRule& rule, int k);
// Loops of every size 2..k, keyed by size; a single search.
std::map<int, std::vector<Steps>> find_loops_up_to(const WalkRule& rule, int k);

struct SuffixClassBasis {
    LatticeId lattice;
    std::vector<Steps> classes;  // classes[start] is the single eastward step
    int start = 0;

    int index_of(const Steps& canonical) const;
    void rebuild_index();

private:
    std::unordered_map<std::string, int> index_;
};

SuffixClassBasis build_basis(const std::map<int, std::vector<Steps>>& loops, LatticeId lattice);

struct TransferMatrix {
    SparseMatrix matrix;
    int start_index = 0;
};

// Column a lists the one-step extensions of class a that avoid loops of size
// <= k, each sent to the longest of its suffixes that is itself a class.
TransferMatrix build_matrix(const SuffixClassBasis& basis, const WalkRule& rule);

// Which loop sizes enter the automaton. `Odd` keeps size 2 and the odd sizes,
// the convention behind the published square-lattice SOW values; it excludes
// fewer walks, so its bounds are larger but still valid.
enum class LoopSizes { All, Odd };

std::string to_string(LoopSizes s);
LoopSizes parse_loop_sizes(const std::string& name);

struct AutomataReport {
    WalkRule rule;
    int k = 0;
    LoopSizes sizes = LoopSizes::All;
    int dim = 0;
    std::map<int, int> loops_per_size;
    EigenBracket bracket;
    std::string bound;  // upper endpoint rounded up at the 5th decimal
    TransferMatrix transfer;
};

AutomataReport automata_bound(const WalkRule& rule, int k, long double tol = 1e-9L,
                              LoopSizes sizes = LoopSizes::All);

}  // namespace growth
