#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "growth/lattice.hpp"

namespace growth {

// SOM doubles as the self-osculating surface class when k = 2.
enum class ManifoldClassId { SAM, SOM, XD, SAM_closed };

std::string to_string(ManifoldClassId id);
ManifoldClassId parse_manifold_class(const std::string& name);  // sam, som, sos, xd, sam_closed

struct ManifoldClass {
    ManifoldClassId id = ManifoldClassId::SAM;
    int d = 2;
    int k = 2;
};

using FaceSet = std::vector<FaceCoord>;
using FacePair = std::pair<FaceCoord, FaceCoord>;

// Pairing chosen at one (k-1)-edge carrying more than two faces.
struct EdgeConnection {
    FaceCoord edge;
    std::vector<FacePair> pairs;
    std::optional<FaceCoord> lone;
};

struct CellComplex {
    int d = 0, k = 0;
    FaceSet faces;
    std::vector<EdgeConnection> connections;
};

// Pairs of faces meeting at `edge` (one lone face allowed). Any two pairs need
// four distinct offsets, and an antiparallel pair forces the other pair to be
// perpendicular. A lone face passes if pairing it with some free slot does.
bool osculating_ok(const FaceCoord& edge, const std::vector<FacePair>& pairs,
                   const std::optional<FaceCoord>& lone = std::nullopt);
// Same test on signed axis labels +-1..+-d; free slots for the lone face are
// the unused labels.
bool osculating_ok_dirs(const std::vector<std::pair<int, int>>& pairs, std::optional<int> lone, int d);

// Every admissible choice of pairings on the crowded edges of `faces` that
// leaves the faces in one component. Faces at an edge with exactly two
// incidences are joined; a lone face joins nothing at its edge.
std::vector<CellComplex> connection_structures(const FaceSet& faces);
std::uint64_t count_connection_structures(const FaceSet& faces);

bool is_connected(const FaceSet& faces);  // faces sharing any edge are adjacent
bool is_self_avoiding(const FaceSet& faces);  // at most two faces per edge
bool is_closed(const FaceSet& faces);  // every edge of every face has exactly two faces

// Largest n enumerate_fixed accepts without an explicit cap.
int default_size_cap(int d, int k);

// Counts of translation classes with k-area 1..n; SOM counts connection
// structures separately. Throws when n exceeds cap (default_size_cap if cap < 0).
std::vector<mpz_class> enumerate_fixed(const ManifoldClass& cls, int n, int cap = -1);
// Face sets (canonical, sorted) of area exactly n whose class is non-empty.
std::vector<FaceSet> enumerate_face_sets(const ManifoldClass& cls, int n, int cap = -1);

// Directed-walk configurations: from each of the C(d,k) orientations, every
// step glues a face to one of the k upper edges of the last face, going
// straight on or turning into one of the d-k free upward axes.
std::vector<FaceSet> directed_walk_family(int d, int k, int n);
mpz_class directed_walk_count(int d, int k, int n);

// Closed-form bounds on growth constants.
mpq_class bound_closed_sam_upper(int d, int k);  // 2(d-k)+1, k < d
mpq_class bound_sam_som_upper(int d, int k);     // (2k-1)^(2k-1)/(2k-2)^(2k-2) (2(d-k)+1)
mpq_class bound_xd_upper(int d, int k);          // w^w/(w-1)^(w-1), w = (2k-1)(2(d-k)+1)
mpz_class bound_sam_lower(int d, int k);         // k(d-k+1)
// ((k+1)(d-k))^(1/(2k)) as (radicand, root index), k < d.
std::pair<mpz_class, unsigned long> bound_closed_sam_lower(int d, int k);

// Counting inequalities for area-n complexes.
mpq_class som_count_bound(int d, int k, int n);
mpq_class xd_count_bound(int d, int k, int n);
mpz_class closed_sam_count_bound(int d, int k, int n);

// The closed upper bound lies strictly below the open lower bound.
bool closed_open_separated(int d, int k);

struct FormulaResult {
    int theorem = 0;
    int d = 0, k = 0;
    std::string exact;    // "p/q", or "r^(1/m)" for the irrational lower bound
    std::string decimal;  // half-even at 5 places
};
FormulaResult formula_bound(int theorem, int d, int k);

}  // namespace growth
