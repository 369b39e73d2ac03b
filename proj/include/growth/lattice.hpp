#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace growth {

enum class LatticeId { Square, Triangular, Hypercubic };

std::string to_string(LatticeId id);
LatticeId parse_lattice(const std::string& name);

// A symmetry op of the point group, stored as its action on direction indices.
// For the planar lattices `matrix` is the 2x2 integer matrix in the lattice basis
// (row-major); for the hypercubic lattice it is the signed permutation matrix.
struct SymmetryOp {
    bool reflection = false;
    std::vector<int> perm;
    std::vector<int> matrix;
};

class Lattice {
public:
    // dim is only used by the hypercubic lattice; the planar ones are always 2.
    explicit Lattice(LatticeId id, int dim = 2);

    LatticeId id() const { return id_; }
    int dim() const { return dim_; }
    int coordination() const { return static_cast<int>(disp_.size()); }
    int opposite(int dir) const { return opposite_[dir]; }
    const std::vector<int>& displacement(int dir) const { return disp_[dir]; }
    const std::vector<SymmetryOp>& group() const { return group_; }

    // (direction, neighbour) pairs in the fixed cyclic order of directions.
    std::vector<std::pair<int, std::vector<int>>> neighbors(const std::vector<int>& p) const;

    std::vector<int> apply(const SymmetryOp& g, const std::vector<int>& p) const;
    // Lattice points visited by a step sequence, starting at the origin.
    std::vector<std::vector<int>> positions(const std::vector<int>& steps) const;

    int compose_index(int a, int b) const;  // index of group()[a] after group()[b]

private:
    LatticeId id_;
    int dim_;
    std::vector<std::vector<int>> disp_;
    std::vector<int> opposite_;
    std::vector<SymmetryOp> group_;
    std::vector<int> compose_;
};

const Lattice& square_lattice();
const Lattice& triangular_lattice();

// Center coordinates of a k-face in Z^d, stored doubled: odd entries are the
// half-integer (spanning) directions.
struct FaceCoord {
    std::vector<int> c;

    int dim() const { return static_cast<int>(c.size()); }
    int k() const;
    std::vector<int> half_dirs() const;
    std::vector<int> int_dirs() const;

    auto operator<=>(const FaceCoord&) const = default;
};

struct FaceIncidence {
    std::vector<FaceCoord> edges;
    std::vector<std::vector<FaceCoord>> coface_slots;  // one list per edge, excluding f
};

FaceIncidence face_incidences(const FaceCoord& f);

// Faces containing the (k-1)-face e, i.e. e +- 1/2 i for each integer direction i.
std::vector<FaceCoord> faces_at_edge(const FaceCoord& e);

// Translate so the lexicographically smallest face has all entries in {0,1}.
std::vector<FaceCoord> canonical_translate(std::vector<FaceCoord> cells);

struct FaceCoordHash {
    std::size_t operator()(const FaceCoord& f) const;
};

}  // namespace growth
