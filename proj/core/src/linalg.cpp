#include "hncomb/linalg.hpp"

#include "hncomb/errors.hpp"

#include <cmath>
#include <utility>

namespace hncomb {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RatVec matvec(const RatMatrix& m, const RatVec& x) {
    if (static_cast<int>(x.size()) != m.cols())
        throw DomainError("matvec: dimension mismatch");
    RatVec out(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Rat acc = 0;
        for (int j = 0; j < m.cols(); ++j)
            acc += m.at(i, j) * x[j];
        out[i] = acc;
    }
    return out;
}

std::optional<RatVec> solve_linear(RatMatrix a, RatVec b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw DomainError("solve_linear: square system expected");
    // forward elimination with partial (first nonzero) pivoting
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            return std::nullopt;
        if (pivot != col) {
            for (int j = 0; j < n; ++j)
                std::swap(a.at(pivot, j), a.at(col, j));
            std::swap(b[pivot], b[col]);
        }
        const Rat inv = Rat(1) / a.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (a.at(r, col) == 0)
                continue;
            const Rat factor = a.at(r, col) * inv;
            a.at(r, col) = 0;
            for (int j = col + 1; j < n; ++j)
                a.at(r, j) -= factor * a.at(col, j);
            b[r] -= factor * b[col];
        }
    }
    RatVec x(n);
    for (int row = n - 1; row >= 0; --row) {
        Rat acc = b[row];
        for (int j = row + 1; j < n; ++j)
            acc -= a.at(row, j) * x[j];
        x[row] = acc / a.at(row, row);
    }
    return x;
}

std::optional<RatMatrix> invert(const RatMatrix& a) {
    const int n = a.rows();
    if (a.cols() != n)
        throw DomainError("invert: square matrix expected");
    RatMatrix result(n, n);
    for (int col = 0; col < n; ++col) {
        RatVec e(n);
        e[col] = 1;
        auto x = solve_linear(a, e);
        if (!x)
            return std::nullopt;
        for (int row = 0; row < n; ++row)
            result.at(row, col) = (*x)[row];
    }
    return result;
}

std::optional<RatMatrix> lattice_basis_from_generators(const RatMatrix& generators) {
    const int dim = generators.rows();
    const int count = generators.cols();
    if (dim == 0)
        return RatMatrix(0, 0);
    if (count < dim)
        return std::nullopt;

    // clear denominators: work with integer columns of scale * generators
    Int scale = 1;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < count; ++j) {
            const Int den = denominator(generators.at(i, j));
            scale = scale / gcd(scale, den) * den;
        }
    std::vector<std::vector<Int>> cols(count, std::vector<Int>(dim));
    for (int j = 0; j < count; ++j)
        for (int i = 0; i < dim; ++i) {
            const Rat scaled = generators.at(i, j) * scale;
            cols[j][i] = numerator(scaled);
        }

    // unimodular column reduction; after row i is processed exactly one of
    // the still-active columns is nonzero there and gets frozen as a pivot
    int rank = 0;
    for (int row = 0; row < dim && rank < count; ++row) {
        while (true) {
            int first = -1, second = -1;
            for (int j = rank; j < count; ++j) {
                if (cols[j][row] == 0)
                    continue;
                if (first < 0) {
                    first = j;
                } else {
                    second = j;
                    break;
                }
            }
            if (first < 0 || second < 0) {
                if (first >= 0) {
                    std::swap(cols[first], cols[rank]);
                    ++rank;
                }
                break;
            }
            // reduce the larger entry by the smaller one
            int big = first, small = second;
            if (abs(cols[big][row]) < abs(cols[small][row]))
                std::swap(big, small);
            const Int q = cols[big][row] / cols[small][row];
            for (int i = 0; i < dim; ++i)
                cols[big][i] -= q * cols[small][i];
        }
    }
    if (rank != dim)
        return std::nullopt;

    RatMatrix basis(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i)
            basis.at(i, j) = Rat(cols[j][i], scale);
    return basis;
}

}  // namespace hncomb
