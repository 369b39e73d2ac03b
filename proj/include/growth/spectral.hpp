#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace growth {

struct Triplet {
    int row;
    int col;
    std::int64_t value;
};

// Square sparse nonnegative integer matrix in compressed-row form.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int dim, std::vector<Triplet> triplets);  // duplicates are summed

    int dim() const { return dim_; }
    std::vector<Triplet> triplets() const;
    std::int64_t at(int row, int col) const;
    std::vector<long double> multiply(const std::vector<long double>& v) const;

    const std::vector<int>& row_start() const { return row_start_; }
    const std::vector<int>& cols() const { return cols_; }
    const std::vector<std::int64_t>& values() const { return values_; }

private:
    int dim_ = 0;
    std::vector<int> row_start_{0};
    std::vector<int> cols_;
    std::vector<std::int64_t> values_;
};

struct EigenBracket {
    long double lower = 0;
    long double upper = 0;
    bool converged = false;
    long iterations = 0;
};

// Collatz-Wielandt bracket for the spectral radius, from power iteration on
// M + I per strongly connected block. `upper` is a valid bound whether or not
// the iteration converged; rounding errors are absorbed by explicit margins.
EigenBracket certified_dominant_eigenvalue(const SparseMatrix& m, long double tol = 1e-9L,
                                           long max_iterations = 1000000);

// Exact check that the spectral radius is at most t: for every strongly
// connected block a positive vector v with Bv <= t v is found by power iteration
// and verified in integer arithmetic. False means "not certified", not "larger".
bool certify_radius_at_most(const SparseMatrix& m, const mpq_class& t, long max_iterations = 100000);

// Strongly connected components; returns component id per vertex.
std::vector<int> strongly_connected_components(const SparseMatrix& m, int& n_components);

}  // namespace growth
