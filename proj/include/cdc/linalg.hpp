#ifndef CDC_LINALG_HPP
#define CDC_LINALG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cdc/gf.hpp"

namespace cdc {

/// Dense matrix over GF(q), row-major byte entries (canonical encodings).
/// GF(2) matrices with at most 64 columns take a packed bit-row fast path in
/// rref/rank internally; observable behavior is identical to the generic path.
class FqMatrix {
  public:
    FqMatrix() : f_(nullptr), rows_(0), cols_(0) {}
    FqMatrix(const Field& f, int rows, int cols)
        : f_(&f), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    /// Rows given as strings of digit characters, e.g. {"101", "011"}.
    FqMatrix(const Field& f, const std::vector<std::string>& rows);

    const Field& field() const { return *f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint8_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
    void set(int r, int c, uint8_t v) { a_[size_t(r) * cols_ + c] = v; }

    const std::vector<uint8_t>& data() const { return a_; }

    /// In-place reduced row echelon form; returns the pivot column list.
    std::vector<int> rref();
    int rank() const;

    FqMatrix multiplied_by(const FqMatrix& rhs) const;
    FqMatrix transposed() const;

    /// This matrix stacked on top of `below` (same field and column count).
    FqMatrix stacked(const FqMatrix& below) const;

    static FqMatrix identity(const Field& f, int n);

    bool is_zero() const;
    bool operator==(const FqMatrix& o) const {
        return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    /// Lexicographic on (rows, cols, entries row-major); total order within a field.
    bool operator<(const FqMatrix& o) const;

  private:
    const Field* f_;
    int rows_, cols_;
    std::vector<uint8_t> a_;
};

/// Binary pivot-column indicator of a subspace's canonical matrix.
struct PivotVector {
    int length = 0;
    uint64_t bits = 0;

    int weight() const { return __builtin_popcountll(bits); }
    bool test(int i) const { return (bits >> i) & 1; }
    bool operator==(const PivotVector& o) const = default;
};

int hamming_distance(const PivotVector& a, const PivotVector& b);

/// A k-dimensional subspace of F_q^v in canonical form: the unique RREF basis
/// matrix with k nonzero rows. Equality and ordering are entry-wise on the
/// canonical basis. The zero subspace (dim 0, zero-row basis) is a valid value.
class Subspace {
  public:
    Subspace() = default;

    /// Row space of `rows` inside F_q^v (rows must have v columns).
    static Subspace from_rows(const FqMatrix& rows);
    static Subspace zero(const Field& f, int v);

    const Field& field() const { return basis_.field(); }
    int ambient_dim() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    const FqMatrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator<(const Subspace& o) const { return basis_ < o.basis_; }

  private:
    FqMatrix basis_;          // RREF, dim() nonzero rows
    std::vector<int> pivots_;  // strictly increasing
};

Subspace sum(const Subspace& u, const Subspace& w);
int sum_dim(const Subspace& u, const Subspace& w);
int intersection_dim(const Subspace& u, const Subspace& w);
int subspace_distance(const Subspace& u, const Subspace& w);

PivotVector pivot_vector(const Subspace& u);

/// The (v-k)-dimensional subspace of vectors whose first k coordinates are
/// zero (the "special flat" of the ambient split).
Subspace special_flat(const Field& f, int v, int k);

/// True iff u and w intersect trivially.
bool intersects_trivially(const Subspace& u, const Subspace& w);

/// Deterministic m-dimensional subspace of u: span of the first m rows of the
/// canonical basis. Throws DimensionTooLarge for m > dim(u).
Subspace select_subspace(const Subspace& u, int m);

/// Deterministic complement: extend u's basis greedily by standard unit
/// vectors in increasing index order; the span of the added vectors.
Subspace complement_through(const Subspace& u);

/// Orthogonal complement w.r.t. the standard dot product.
Subspace orthogonal_complement(const Subspace& u);

/// Every k-subspace of F_q^v exactly once, sorted lexicographically by
/// canonical basis entries (row-major). Intended for counts up to ~1e7.
std::vector<Subspace> enumerate_subspaces(const Field& f, int v, int k);

}  // namespace cdc

#endif
