#include "growth/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace growth {

SparseMatrix::SparseMatrix(int dim, std::vector<Triplet> triplets) : dim_(dim) {
    for (const auto& t : triplets) {
        if (t.row < 0 || t.row >= dim || t.col < 0 || t.col >= dim) throw std::out_of_range("triplet outside matrix");
        if (t.value < 0) throw std::invalid_argument("matrix must be nonnegative");
    }
    std::sort(triplets.begin(), triplets.end(),
              [](const Triplet& a, const Triplet& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
    row_start_.assign(dim + 1, 0);
    int last_row = -1, last_col = -1;
    for (const auto& t : triplets) {
        if (t.value == 0) continue;
        if (t.row == last_row && t.col == last_col) {
            values_.back() += t.value;
            continue;
        }
        cols_.push_back(t.col);
        values_.push_back(t.value);
        ++row_start_[t.row + 1];
        last_row = t.row;
        last_col = t.col;
    }
    for (int r = 1; r <= dim; ++r) row_start_[r] += row_start_[r - 1];
}

std::vector<Triplet> SparseMatrix::triplets() const {
    std::vector<Triplet> out;
    for (int r = 0; r < dim_; ++r)
        for (int p = row_start_[r]; p < row_start_[r + 1]; ++p) out.push_back({r, cols_[p], values_[p]});
    return out;
}

std::int64_t SparseMatrix::at(int row, int col) const {
    for (int p = row_start_[row]; p < row_start_[row + 1]; ++p)
        if (cols_[p] == col) return values_[p];
    return 0;
}

std::vector<long double> SparseMatrix::multiply(const std::vector<long double>& v) const {
    std::vector<long double> out(dim_, 0.0L);
    for (int r = 0; r < dim_; ++r)
        for (int p = row_start_[r]; p < row_start_[r + 1]; ++p) out[r] += values_[p] * v[cols_[p]];
    return out;
}

std::vector<int> strongly_connected_components(const SparseMatrix& m, int& n_components) {
    const int n = m.dim();
    const auto& rs = m.row_start();
    const auto& cs = m.cols();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<char> on_stack(n, 0);
    int counter = 0;
    n_components = 0;
    struct Frame {
        int v;
        int edge;
    };
    std::vector<Frame> call;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        call.push_back({root, rs[root]});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge < rs[f.v + 1]) {
                const int w = cs[f.edge++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, rs[w]});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const int v = f.v;
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = n_components;
                } while (w != v);
                ++n_components;
            }
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
    }
    return comp;
}

namespace {

constexpr long double kUnit = std::numeric_limits<long double>::epsilon() / 2;

struct Block {
    std::vector<int> row_start{0};
    std::vector<int> cols;
    std::vector<long double> values;
};

EigenBracket block_bracket(const Block& b, long double tol, long max_iterations) {
    const int n = static_cast<int>(b.row_start.size()) - 1;
    EigenBracket out;
    if (b.cols.empty()) {
        out.converged = true;  // nilpotent block: spectral radius 0
        return out;
    }
    std::vector<long double> v(n, 1.0L), w(n);
    std::vector<long double> margin(n);
    for (int r = 0; r < n; ++r) margin[r] = 4 * (b.row_start[r + 1] - b.row_start[r] + 4) * kUnit;
    long double lo = 0, hi = std::numeric_limits<long double>::infinity();
    for (long it = 1; it <= max_iterations; ++it) {
        long double wmax = 0;
        long double rlo = std::numeric_limits<long double>::infinity(), rhi = 0;
        for (int r = 0; r < n; ++r) {
            long double s = v[r];
            for (int p = b.row_start[r]; p < b.row_start[r + 1]; ++p) s += b.values[p] * v[b.cols[p]];
            w[r] = s;
            const long double ratio = s / v[r];
            rlo = std::min(rlo, ratio * (1 - margin[r]));
            rhi = std::max(rhi, ratio * (1 + margin[r]));
            wmax = std::max(wmax, s);
        }
        lo = std::max(lo, rlo);
        hi = std::min(hi, rhi);
        out.iterations = it;
        if (hi - lo <= tol) {
            out.converged = true;
            break;
        }
        for (int r = 0; r < n; ++r) v[r] = w[r] / wmax;
    }
    out.lower = std::nextafter(lo - 1, -std::numeric_limits<long double>::infinity());
    out.upper = std::nextafter(hi - 1, std::numeric_limits<long double>::infinity());
    out.lower = std::max(out.lower, 0.0L);
    return out;
}


std::vector<Block> split_blocks(const SparseMatrix& m) {
    const int n = m.dim();
    int n_comp = 0;
    const auto comp = strongly_connected_components(m, n_comp);
    std::vector<std::vector<int>> members(n_comp);
    for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);
    std::vector<int> local(n);
    std::vector<Block> blocks(n_comp);
    for (int c = 0; c < n_comp; ++c) {
        Block& b = blocks[c];
        for (std::size_t i = 0; i < members[c].size(); ++i) local[members[c][i]] = static_cast<int>(i);
        for (int v : members[c]) {
            for (int p = m.row_start()[v]; p < m.row_start()[v + 1]; ++p) {
                const int col = m.cols()[p];
                if (comp[col] != c) continue;
                b.cols.push_back(local[col]);
                b.values.push_back(static_cast<long double>(m.values()[p]));
            }
            b.row_start.push_back(static_cast<int>(b.cols.size()));
        }
    }
    return blocks;
}

mpz_class exact_scaled(long double x, int min_exp) {
    int e = 0;
    const long double frac = std::frexp(x, &e);
    const auto mant = static_cast<unsigned long>(std::ldexp(frac, 64));  // x > 0, exact
    mpz_class z = mant;
    z <<= static_cast<unsigned long>(e - 64 - min_exp);
    return z;
}

bool certify_block(const Block& b, const mpq_class& t, long max_iterations) {
    const int n = static_cast<int>(b.row_start.size()) - 1;
    if (b.cols.empty()) return t >= 0;
    std::vector<long double> v(n, 1.0L), w(n);
    const long double target = t.get_d();
    for (long it = 0; it < max_iterations; ++it) {
        long double wmax = 0, rhi = 0;
        for (int r = 0; r < n; ++r) {
            long double s = 0;
            for (int p = b.row_start[r]; p < b.row_start[r + 1]; ++p) s += b.values[p] * v[b.cols[p]];
            rhi = std::max(rhi, s / v[r]);
            w[r] = s + v[r];
            wmax = std::max(wmax, w[r]);
        }
        if (rhi <= target) break;
        for (int r = 0; r < n; ++r) v[r] = w[r] / wmax;
    }
    int min_exp = 0;
    bool first = true;
    for (long double x : v) {
        if (!(x > 0)) return false;
        int e = 0;
        std::frexp(x, &e);
        if (first || e - 64 < min_exp) min_exp = e - 64;
        first = false;
    }
    std::vector<mpz_class> z(n);
    for (int r = 0; r < n; ++r) z[r] = exact_scaled(v[r], min_exp);
    for (int r = 0; r < n; ++r) {
        mpz_class s = 0;
        for (int p = b.row_start[r]; p < b.row_start[r + 1]; ++p)
            s += static_cast<unsigned long>(b.values[p]) * z[b.cols[p]];
        // s <= t * z[r]  <=>  s * den <= num * z[r]
        if (s * t.get_den() > t.get_num() * z[r]) return false;
    }
    return true;
}

}  // namespace

bool certify_radius_at_most(const SparseMatrix& m, const mpq_class& t, long max_iterations) {
    for (const auto& b : split_blocks(m))
        if (!certify_block(b, t, max_iterations)) return false;
    return true;
}

EigenBracket certified_dominant_eigenvalue(const SparseMatrix& m, long double tol, long max_iterations) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    const int n = m.dim();
    EigenBracket total;
    total.converged = true;
    if (n == 0) return total;
    std::vector<EigenBracket> brackets;
    for (const auto& b : split_blocks(m)) {
        brackets.push_back(block_bracket(b, tol, max_iterations));
        total.iterations = std::max(total.iterations, brackets.back().iterations);
    }
    for (const auto& b : brackets) {
        total.lower = std::max(total.lower, b.lower);
        total.upper = std::max(total.upper, b.upper);
    }
    total.converged = total.upper - total.lower <= tol * 2;
    return total;
}

}  // namespace growth
