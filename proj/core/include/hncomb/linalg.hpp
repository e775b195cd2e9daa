#pragma once

#include "hncomb/rational.hpp"

#include <optional>

namespace hncomb {

// Dense rational matrix, row-major. Sizes stay tiny (ranks up to ~10), so
// plain Gaussian elimination over Rat is exact and fast enough.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    static RatMatrix identity(int n);

  private:
    int rows_ = 0;
    int cols_ = 0;
    RatVec data_;
};

RatVec matvec(const RatMatrix& m, const RatVec& x);

/// Exact solve of a square system; nullopt when the matrix is singular.
std::optional<RatVec> solve_linear(RatMatrix a, RatVec b);

std::optional<RatMatrix> invert(const RatMatrix& a);

/// The columns of `generators` span a finite-index sublattice of Q^d (d =
/// generators.rows()). Returns d independent columns obtained by unimodular
/// column reduction, i.e. a basis of the generated lattice, or nullopt if the
/// columns do not have full rank.
std::optional<RatMatrix> lattice_basis_from_generators(const RatMatrix& generators);

}  // namespace hncomb
