#ifndef CDC_SUBSPACE_CODE_HPP
#define CDC_SUBSPACE_CODE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdc/rankmetric.hpp"

namespace cdc {

/// A constant dimension code: a deduplicated set of k-dimensional subspaces
/// of F_q^v with a claimed minimum subspace distance. Codewords are kept in
/// sorted canonical order so iteration and serialization are reproducible.
class Cdc {
  public:
    Cdc(const Field& f, int v, int k, int claimed_d)
        : f_(&f), v_(v), k_(k), claimed_d_(claimed_d) {}

    const Field& field() const { return *f_; }
    int ambient_dim() const { return v_; }
    int dim() const { return k_; }
    int claimed_distance() const { return claimed_d_; }

    void add(Subspace s);
    size_t size() const;
    const std::vector<Subspace>& codewords() const;
    bool contains(const Subspace& s) const;

    bool verified() const { return verified_; }
    int verified_distance() const { return verified_distance_; }
    void mark_verified(int exact_distance) {
        verified_ = true;
        verified_distance_ = exact_distance;
    }

    const std::vector<std::string>& provenance() const { return provenance_; }
    void add_provenance(std::string line) { provenance_.push_back(std::move(line)); }

  private:
    void normalize() const;

    const Field* f_;
    int v_, k_, claimed_d_;
    bool verified_ = false;
    int verified_distance_ = 0;
    mutable bool dirty_ = false;
    mutable std::vector<Subspace> words_;
    std::vector<std::string> provenance_;
};

/// Lift of a k x (v-k) rank-metric code: { rowspan(I_k | A) : A in mrd },
/// a CDC with v = k + n, claimed distance twice the claimed rank distance.
Cdc lift(const RankCode& mrd);

struct VerifyResult {
    int min_distance = kInfiniteDistance;  // sentinel when fewer than 2 codewords
    size_t pair_checks = 0;
    bool used_lmrd_reduction = false;
    std::optional<std::pair<size_t, size_t>> witness;  // indices of a minimal pair
};

/// Exact minimum pairwise subspace distance, plain O(#C^2) scan.
VerifyResult verify_cdc(const Cdc& c, int threads = 0);

/// Same result, but when the code contains a full lifted linear MRD (detected
/// structurally: identity-prefix pivot block whose stripped matrices form a
/// linear rank code of the right cardinality) the intra-LMRD pairs are
/// certified through the rank code's minimum rank distance instead of being
/// enumerated. Falls back to the plain scan otherwise.
VerifyResult verify_cdc_structured(const Cdc& c, int threads = 0);

/// Union of RREF cells: pivot vector i contributes the subspaces whose
/// canonical matrix has pivots at the ones of skeleton[i] and free entries
/// filled from subcodes[i] (shape k x (v-k), columns indexed by non-pivot
/// columns in increasing order; entries at positions left of a row's pivot
/// must be zero — checked). Claimed distance: min of the skeleton's pairwise
/// Hamming distance and twice the cells' claimed rank distances.
Cdc echelon_ferrers(const Field& f, int v, const std::vector<PivotVector>& skeleton,
                    const std::vector<RankCode>& subcodes);

/// The (6l, q^{3l(l+1)}+q^{2l}+q^l+1, 4l; 3l)_q family.
Cdc family_6l(int q, int l);

/// The (6+3l, q^{6+4l}+q^{2+l}+1, 4+2l; 3+l)_q family.
Cdc family_6_3l(int q, int l);

/// Histogram of dim(U ∩ Γ) over the codewords outside the identity-prefix
/// cell, where Γ is the special flat of the code's (v, k) split.
struct GammaProfile {
    size_t lmrd_size = 0;                 // codewords with pivot vector (1_k 0_{v-k})
    std::map<int, size_t> layer_sizes;    // t -> #codewords with dim(U ∩ Γ) = t
};

/// Throws ProfileViolation if a codeword outside the prefix cell meets Γ in
/// dimension below claimed_d/2 (the input is then not LMRD-containing).
GammaProfile gamma_intersection_profile(const Cdc& c);

/// True iff every (k - d/2 + 1)-dimensional subspace that intersects Γ
/// trivially is contained in exactly one codeword of the lifted code.
/// Exhaustive; intended for small parameters.
bool verify_exact_coverage(const Cdc& lifted, int d);

/// A CDC over ambient dimension (v-k) re-embedded into the special flat Γ of
/// F_q^v (coordinates shifted past the first k positions).
Cdc embed_in_gamma(const Cdc& small, int v, int k);

}  // namespace cdc

#endif
