#include "growth/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace growth {

std::string to_string(LatticeId id) {
    switch (id) {
        case LatticeId::Square: return "square";
        case LatticeId::Triangular: return "triangular";
        case LatticeId::Hypercubic: return "hypercubic";
    }
    return "?";
}

LatticeId parse_lattice(const std::string& name) {
    if (name == "square") return LatticeId::Square;
    if (name == "triangular") return LatticeId::Triangular;
    if (name == "hypercubic") return LatticeId::Hypercubic;
    throw std::invalid_argument("unknown lattice '" + name + "'");
}

namespace {

// Hyperoctahedral groups get large quickly; beyond this only neighbours are offered.
constexpr int kMaxHypercubicGroupDim = 4;

std::vector<SymmetryOp> dihedral(const std::vector<std::vector<int>>& disp) {
    const int c = static_cast<int>(disp.size());
    std::vector<SymmetryOp> ops;
    for (int refl = 0; refl < 2; ++refl) {
        for (int r = 0; r < c; ++r) {
            SymmetryOp g;
            g.reflection = refl == 1;
            g.perm.resize(c);
            for (int i = 0; i < c; ++i) g.perm[i] = refl ? ((r - i) % c + c) % c : (i + r) % c;
            const auto& a = disp[g.perm[0]];
            const auto& b = disp[g.perm[1]];
            g.matrix = {a[0], b[0], a[1], b[1]};
            ops.push_back(std::move(g));
        }
    }
    return ops;
}

std::vector<SymmetryOp> hyperoctahedral(int d) {
    std::vector<SymmetryOp> ops;
    std::vector<int> axes(d);
    std::iota(axes.begin(), axes.end(), 0);
    do {
        for (int signs = 0; signs < (1 << d); ++signs) {
            SymmetryOp g;
            g.perm.resize(2 * d);
            g.matrix.assign(d * d, 0);
            int negatives = 0;
            for (int i = 0; i < d; ++i) {
                const bool neg = (signs >> i) & 1;
                negatives += neg;
                g.perm[i] = neg ? axes[i] + d : axes[i];
                g.perm[i + d] = neg ? axes[i] : axes[i] + d;
                g.matrix[axes[i] * d + i] = neg ? -1 : 1;
            }
            // determinant sign = sign of the axis permutation times the sign flips
            int inversions = 0;
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) inversions += axes[i] > axes[j];
            g.reflection = ((inversions + negatives) % 2) == 1;
            ops.push_back(std::move(g));
        }
    } while (std::next_permutation(axes.begin(), axes.end()));
    return ops;
}

}  // namespace

Lattice::Lattice(LatticeId id, int dim) : id_(id), dim_(dim) {
    switch (id) {
        case LatticeId::Square:
            dim_ = 2;
            disp_ = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            break;
        case LatticeId::Triangular:
            dim_ = 2;
            disp_ = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
            break;
        case LatticeId::Hypercubic:
            if (dim < 1) throw std::invalid_argument("hypercubic lattice needs d >= 1");
            for (int s = 0; s < 2; ++s)
                for (int i = 0; i < dim; ++i) {
                    std::vector<int> v(dim, 0);
                    v[i] = s ? -1 : 1;
                    disp_.push_back(v);
                }
            break;
    }
    const int c = coordination();
    opposite_.resize(c);
    for (int i = 0; i < c; ++i) opposite_[i] = (i + c / 2) % c;

    if (id == LatticeId::Hypercubic) {
        if (dim_ <= kMaxHypercubicGroupDim) group_ = hyperoctahedral(dim_);
    } else {
        group_ = dihedral(disp_);
    }

    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(group_.size()); ++i) index[group_[i].perm] = i;
    const int n = static_cast<int>(group_.size());
    compose_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> p(c);
            for (int i = 0; i < c; ++i) p[i] = group_[a].perm[group_[b].perm[i]];
            auto it = index.find(p);
            if (it == index.end()) throw std::logic_error("point group not closed");
            compose_[static_cast<std::size_t>(a) * n + b] = it->second;
        }
}

int Lattice::compose_index(int a, int b) const {
    return compose_[static_cast<std::size_t>(a) * group_.size() + b];
}

std::vector<std::pair<int, std::vector<int>>> Lattice::neighbors(const std::vector<int>& p) const {
    if (static_cast<int>(p.size()) != dim_) throw std::invalid_argument("point dimension mismatch");
    std::vector<std::pair<int, std::vector<int>>> out;
    for (int i = 0; i < coordination(); ++i) {
        std::vector<int> q = p;
        for (int j = 0; j < dim_; ++j) q[j] += disp_[i][j];
        out.emplace_back(i, std::move(q));
    }
    return out;
}

std::vector<int> Lattice::apply(const SymmetryOp& g, const std::vector<int>& p) const {
    std::vector<int> q(dim_, 0);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) q[r] += g.matrix[r * dim_ + c] * p[c];
    return q;
}

std::vector<std::vector<int>> Lattice::positions(const std::vector<int>& steps) const {
    std::vector<std::vector<int>> out;
    std::vector<int> p(dim_, 0);
    out.push_back(p);
    for (int s : steps) {
        for (int j = 0; j < dim_; ++j) p[j] += disp_[s][j];
        out.push_back(p);
    }
    return out;
}

const Lattice& square_lattice() {
    static const Lattice l(LatticeId::Square);
    return l;
}

const Lattice& triangular_lattice() {
    static const Lattice l(LatticeId::Triangular);
    return l;
}

int FaceCoord::k() const {
    return static_cast<int>(std::count_if(c.begin(), c.end(), [](int v) { return v & 1; }));
}

std::vector<int> FaceCoord::half_dirs() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (c[i] & 1) out.push_back(i);
    return out;
}

std::vector<int> FaceCoord::int_dirs() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (!(c[i] & 1)) out.push_back(i);
    return out;
}

std::vector<FaceCoord> faces_at_edge(const FaceCoord& e) {
    std::vector<FaceCoord> out;
    for (int i : e.int_dirs())
        for (int s : {1, -1}) {
            FaceCoord f = e;
            f.c[i] += s;
            out.push_back(std::move(f));
        }
    return out;
}

FaceIncidence face_incidences(const FaceCoord& f) {
    const int k = f.k();
    if (k < 1 || k > f.dim()) throw std::invalid_argument("face dimension out of range");
    FaceIncidence inc;
    for (int j : f.half_dirs())
        for (int s : {-1, 1}) {
            FaceCoord e = f;
            e.c[j] += s;
            std::vector<FaceCoord> slots;
            for (auto& g : faces_at_edge(e))
                if (g != f) slots.push_back(std::move(g));
            inc.edges.push_back(std::move(e));
            inc.coface_slots.push_back(std::move(slots));
        }
    return inc;
}

std::vector<FaceCoord> canonical_translate(std::vector<FaceCoord> cells) {
    if (cells.empty()) throw std::invalid_argument("canonical_translate of an empty set");
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    std::vector<int> shift(cells[0].c.size());
    for (std::size_t i = 0; i < shift.size(); ++i) {
        const int v = cells[0].c[i];
        shift[i] = v - (v & 1);  // even, so parity (orientation) is preserved
    }
    for (auto& f : cells)
        for (std::size_t i = 0; i < shift.size(); ++i) f.c[i] -= shift[i];
    return cells;
}

std::size_t FaceCoordHash::operator()(const FaceCoord& f) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : f.c) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace growth
