#ifndef CDC_RANKMETRIC_HPP
#define CDC_RANKMETRIC_HPP

#include <climits>
#include <cstdint>
#include <functional>
#include <vector>

#include "cdc/linalg.hpp"

namespace cdc {

/// Sentinel distance for codes with no codeword pair.
inline constexpr int kInfiniteDistance = INT_MAX;

/// rk(A - B).
int rank_distance(const FqMatrix& a, const FqMatrix& b);

/// A rank-metric code of m x n matrices over GF(q).
///
/// Linear codes are stored as a GF(q)-span basis: codeword(i) decomposes the
/// index i into base-q digits (least significant digit first) and takes the
/// corresponding combination of the basis matrices. This fixed message
/// indexing is what block composition uses to pair codewords. Non-linear /
/// ad-hoc codes are stored as explicit word lists indexed by position.
class RankCode {
  public:
    static constexpr uint64_t kMaterializeCap = uint64_t(1) << 24;

    /// Explicit list of codewords.
    RankCode(const Field& f, int m, int n, std::vector<FqMatrix> words, int claimed_d,
             bool linear = false);

    /// Linear code spanned by `span_basis` (must be GF(q)-independent).
    static RankCode from_span(const Field& f, int m, int n, std::vector<FqMatrix> span_basis,
                              int claimed_d);

    /// The one-element code {0}.
    static RankCode singleton_zero(const Field& f, int m, int n);

    const Field& field() const { return *f_; }
    int m() const { return m_; }
    int n() const { return n_; }
    uint64_t size() const { return size_; }
    int claimed_min_rank_distance() const { return claimed_d_; }
    bool linear() const { return linear_; }
    bool span_backed() const { return !span_basis_.empty() || (linear_ && size_ == 1); }
    const std::vector<FqMatrix>& span_basis() const { return span_basis_; }

    FqMatrix codeword(uint64_t index) const;

    /// Visits every codeword once in index order without materializing the
    /// code. The buffer is row-major m*n canonical byte encodings.
    void for_each(const std::function<void(uint64_t, const uint8_t*)>& fn) const;

    /// All codewords in index order. Throws TooLarge beyond kMaterializeCap.
    std::vector<FqMatrix> materialize() const;

  private:
    RankCode() = default;
    const Field* f_ = nullptr;
    int m_ = 0, n_ = 0;
    int claimed_d_ = kInfiniteDistance;
    bool linear_ = false;
    uint64_t size_ = 0;
    std::vector<FqMatrix> span_basis_;  // linear codes
    std::vector<FqMatrix> words_;       // explicit codes
};

/// The classical MRD construction: evaluations of the linearized polynomials
/// with min(m,n)-delta+1 coefficients over GF(q^max(m,n)) at the first
/// min(m,n) polynomial-basis elements, written in coordinates and transposed
/// to shape m x n. Cardinality q^{max(m,n)(min(m,n)-delta+1)}.
RankCode gabidulin(const Field& f, int m, int n, int delta);

enum class RankVerifyMode { Exhaustive, Linear };

/// Exact minimum rank distance. Linear mode scans nonzero codewords of a
/// linear code; exhaustive mode checks all pairs (TooLarge above 2^12 words).
/// Returns kInfiniteDistance when there is no pair.
int verify_min_rank_distance(const RankCode& code, RankVerifyMode mode);

/// Block-diagonal composition pairing the i-th codewords of a and b:
/// codeword i is [[a_i, 0], [0, b_i]], shape (ma+mb) x (na+nb), min rank
/// distance at least d_a + d_b. Requires equal cardinalities.
RankCode block_compose(const RankCode& a, const RankCode& b);

/// The same code embedded into a larger K x N zero matrix at (row0, col0).
RankCode embed_block(const RankCode& code, int big_m, int big_n, int row0, int col0);

/// Exact minimum rank over the nonzero elements of the GF(q)-span of `basis`
/// (m x n matrices over f). Enumerates the whole span; q^#basis must be
/// modest. Returns kInfiniteDistance for an empty basis. When `argmin` is
/// given it receives a span element attaining the minimum.
int min_rank_of_span(const Field& f, const std::vector<FqMatrix>& basis, int m, int n,
                     FqMatrix* argmin = nullptr);

}  // namespace cdc

#endif
