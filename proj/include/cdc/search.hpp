#ifndef CDC_SEARCH_HPP
#define CDC_SEARCH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cdc/subspace_code.hpp"

namespace cdc {

struct SearchStats {
    std::vector<size_t> per_restart;  // accepted codewords per restart
    int best_restart = 0;             // first restart attaining the maximum
};

/// Randomized extension of a lifted MRD with parameters (v, d; k): for each
/// subspace U of the subcode E (a (v-k, #E, 2(d-k); d/2)_q code embedded in
/// the special flat), tries up to r_max randomly chosen k-dimensional
/// candidates W containing U, accepting W unless it intersects an accepted
/// codeword in dimension above k - d/2. With k < d each U contributes at most
/// one codeword. Returns the largest accepted set over n_max independent
/// restarts (ties to the earliest restart).
///
/// Fully deterministic for a fixed seed, independent of the thread count:
/// every restart derives its own RNG stream from (seed, restart index).
std::vector<Subspace> extend_lmrd(const Field& f, int v, int d, int k, const Cdc& subcode,
                                  int n_max, uint64_t r_max, uint64_t seed, int threads = 1,
                                  SearchStats* stats = nullptr);

/// { U in [F_q^v choose k] : dim(U ∩ Γ) = t } for the special flat Γ of the
/// (v, k) split, enumerated by extending each t-subspace of Γ.
std::vector<Subspace> subspaces_meeting_gamma(const Field& f, int v, int k, int t);

struct Orbit {
    Subspace representative;       // lexicographically least member
    std::vector<Subspace> members; // in action order from the first-found element
};

/// Orbits of the cyclic group generated by an invertible matrix acting on the
/// given subspaces (row vectors act by right multiplication). The universe
/// must be closed under the action.
std::vector<Orbit> orbit_partition(const FqMatrix& generator, std::vector<Subspace> universe);

/// Splits orbits into (clean, dirty): dirty orbits contain an internal pair
/// with intersection dimension above max_inter. Uses the one-representative
/// reduction valid for group orbits.
std::pair<std::vector<Orbit>, std::vector<Orbit>> filter_conflicting_orbits(
    std::vector<Orbit> orbits, int max_inter);

/// Greedy clique in the orbit compatibility graph (orbits are compatible when
/// every cross pair intersects in dimension at most max_inter). Tries the
/// canonical vertex order, its reverse, and seeded shuffles; returns the
/// first clique reaching target_size (indices into `clean`), or throws
/// NotFound naming the best size reached. target_size 0 returns the best
/// greedy clique found.
std::vector<size_t> greedy_orbit_clique(const std::vector<Orbit>& clean, int max_inter,
                                        size_t target_size, int passes = 16);

/// The reference 10x10 block-diagonal generator over GF(2): two copies of a
/// 5x5 matrix of multiplicative order 31.
FqMatrix reference_generator();

/// Canonical representatives of the five reference orbits extending any
/// (10, 2^15, 6; 5)_2 lifted MRD to the proven maximum.
std::vector<Subspace> reference_orbit_representatives();

/// Builds and fully verifies the (10, 2^15 + 155, 6; 5)_2 code: the lift of
/// the 5x5 MRD with rank distance 3 joined with the five reference orbits.
/// Throws Verification if any check fails.
Cdc record_code_10_6_5(int threads = 0);

}  // namespace cdc

#endif
