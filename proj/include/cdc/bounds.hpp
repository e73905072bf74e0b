#ifndef CDC_BOUNDS_HPP
#define CDC_BOUNDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdc/qcomb.hpp"

namespace cdc {

/// Parameter tuple of a constant dimension code question A_q(v, d; k).
struct Params {
    int q, v, d, k;
};

enum class Rule {
    Trivial,        // definitional conventions (d<=2, 2k<d, empty ranges)
    Singleton,      // distance-truncated Grassmannian count
    PartialSpread,  // exact partial-spread size (d = 2k)
    Seeded,         // cited table entry
    Extension,      // lifted-MRD size plus the cap on the flat subcode (k < d)
    Counting,       // lifted-MRD size plus the double-counting estimate (c, y)
    LmrdPlusOne,    // lifted-MRD size + 1 (k < d, v < 3d/2)
    NoLmrdBound,    // no bound of this family applies (k >= 3d/2)
};

std::string rule_name(Rule r);

struct Resolution {
    Params query;
    BigInt value;
    Rule rule;
    bool exact = false;  // value is the true A_q, not just an upper bound
    std::string note;
};

struct BoundReport {
    std::optional<BigInt> value;  // empty for NoLmrdBound
    Rule rule = Rule::Trivial;
    int c = -1, y = -1;     // counting-bound parameters when rule == Counting
    bool exact = false;
    std::vector<Resolution> subs;   // A_q resolutions feeding the bound
    std::vector<std::string> notes; // normalizations, citations
};

/// Upper bounds on A_q used as sub-resolutions. Ships seeded with the cited
/// table value A_2(7,4;3) <= 381; lower-bound records are kept separately and
/// never feed upper-bound resolution.
class AqResolver {
  public:
    static const AqResolver& with_defaults();
    AqResolver() = default;

    void seed(Params p, BigInt upper, std::string citation);

    /// Best upper bound on A_q(v,d;k): minimum over the applicable rules,
    /// preferring the most exact on ties. Odd d is normalized to d+1.
    Resolution upper(Params p) const;

  private:
    std::map<std::tuple<int, int, int, int>, std::pair<BigInt, std::string>> seeded_;
};

/// [v-d/2+1 choose max(k, v-k)]_q; requires d/2 <= min(k, v-k).
BigInt singleton_bound(Params p);

/// Exact A_q(v, 2k; k) = (q^v - q^{k+r})/(q^k - 1) + 1 when r = v mod k
/// satisfies [r]_q < k; nullopt otherwise.
std::optional<BigInt> partial_spread_size(Params p);

/// Bound for codes containing a lifted MRD, k < d case:
/// q^{(v-k)(k-d/2+1)} + A_q(v-k, 2(d-k); d/2).
BoundReport lmrd_extension_bound(Params p, const AqResolver& resolver);

/// Bound for codes containing a lifted MRD via the covering/counting argument
/// with parameters (c, y); exact rationals, floored once at the end.
BoundReport lmrd_counting_bound(Params p, int c, int y, const AqResolver& resolver);

/// Optimal (c, y) for the counting bound: c = max(1, k-d+1),
/// y = max(1, k-d/2+1-c); defined iff d/2 < k < 3d/2.
std::optional<std::pair<int, int>> optimal_counting_params(Params p);

/// The general dispatcher over the parameter regions; see classify_region.
BoundReport lmrd_bound(Params p, const AqResolver& resolver);

/// Cap on the number of codewords meeting the special flat in dimension
/// exactly t: A_q(v-k, d-2(k-t); t) for max(d/2, k-d/2+1) <= t <= k.
BoundReport gamma_layer_cap(Params p, int t, const AqResolver& resolver);

enum class Region {
    NoLmrdBound,   // k >= 3d/2
    CountingBest,  // d <= k < 3d/2
    ExtensionBest, // k < d, v >= 3d/2
    TrivialBound,  // k < d, v < 3d/2
};

Region classify_region(Params p);
std::string region_name(Region r);

/// A row of the shipped table of best known code sizes for LMRD-containing
/// constructions: LMRD cardinality plus extension sizes, with citations.
/// These are lower-bound records for display; they never feed the resolver.
struct KnownCodeRecord {
    Params p;
    BigInt lmrd_size;
    std::optional<BigInt> lmrd_bound_extension;  // bound minus LMRD size, when closed-form
    std::string lmrd_bound_note;                 // otherwise a reference expression
    BigInt prior_best_extension;                  // previously best known, minus LMRD size
    std::string prior_citation;
    std::string subcode;                          // the extension subcode used
    BigInt best_known_extension;                  // best known, minus LMRD size
    std::string best_citation;
};

const std::vector<KnownCodeRecord>& known_lower_bounds();

}  // namespace cdc

#endif
