#include "cdc/search.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>
#include <unordered_map>

#include "small_linalg.hpp"

namespace cdc {

namespace {

// Portable uniform index in [0, n): rejection sampling on the raw 64-bit
// stream keeps results identical across platforms (uniform_int_distribution
// is implementation-defined).
struct PortableRng {
    std::mt19937_64 eng;

    explicit PortableRng(uint64_t seed, uint64_t stream) {
        std::seed_seq seq{uint32_t(seed), uint32_t(seed >> 32), uint32_t(stream),
                          uint32_t(stream >> 32)};
        eng.seed(seq);
    }

    uint64_t below(uint64_t n) {
        uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = eng();
        } while (x >= lim);
        return x % n;
    }
};

struct PackedSubspace {
    std::vector<uint64_t> rows;
};

PackedSubspace pack(const Subspace& s) {
    PackedSubspace p;
    p.rows.resize(s.dim());
    for (int r = 0; r < s.dim(); ++r) {
        uint64_t row = 0;
        for (int c = 0; c < s.ambient_dim(); ++c)
            if (s.basis().at(r, c)) row |= uint64_t(1) << c;
        p.rows[r] = row;
    }
    return p;
}

// dim(U ∩ W) for same-ambient subspaces, packed GF(2) fast path.
struct InterDim {
    const Field& f;
    int v;
    bool packed;
    std::vector<uint64_t> scratch64;
    std::vector<uint8_t> scratch8;

    InterDim(const Field& field, int ambient, int max_dim)
        : f(field), v(ambient), packed(field.q() == 2 && ambient <= 64),
          scratch64(2 * max_dim), scratch8(size_t(2 * max_dim) * ambient) {}

    int operator()(const Subspace& a, const PackedSubspace& pa, const Subspace& b,
                   const PackedSubspace& pb) {
        if (packed) {
            int s = detail::sum_dim_gf2(scratch64.data(), pa.rows.data(), int(pa.rows.size()),
                                        pb.rows.data(), int(pb.rows.size()));
            return a.dim() + b.dim() - s;
        }
        const auto& ba = a.basis().data();
        const auto& bb = b.basis().data();
        std::copy(ba.begin(), ba.end(), scratch8.begin());
        std::copy(bb.begin(), bb.end(), scratch8.begin() + ba.size());
        int s = detail::rank_bytes(f, scratch8.data(), a.dim() + b.dim(), v);
        return a.dim() + b.dim() - s;
    }
};

int gamma_intersection_dim(const Subspace& u, int k) {
    int prefix = 0;
    for (int p : u.pivots())
        if (p < k) ++prefix;
    return u.dim() - prefix;
}

}  // namespace

std::vector<Subspace> extend_lmrd(const Field& f, int v, int d, int k, const Cdc& subcode,
                                  int n_max, uint64_t r_max, uint64_t seed, int threads,
                                  SearchStats* stats) {
    require(d % 2 == 0 && 2 <= d / 2 && d / 2 <= k && k <= v / 2, Errc::Precondition,
            "2 <= d/2 <= k <= v/2 violated");
    require(n_max >= 1, Errc::Precondition, "n_max >= 1 violated");
    if (r_max == 0) r_max = 1;

    // Validate the subcode: dimension d/2 inside the special flat, minimum
    // distance at least 2(d-k).
    Subspace gamma = special_flat(f, v, k);
    require(subcode.ambient_dim() == v, Errc::InvalidSubcode, "subcode in wrong ambient space");
    require(subcode.dim() == d / 2, Errc::InvalidSubcode, "subcode dimension must be d/2");
    for (const Subspace& u : subcode.codewords())
        require(gamma.contains(u), Errc::InvalidSubcode,
                "subcode codeword not inside the special flat");
    if (subcode.size() >= 2 && d > k) {
        int dist = verify_cdc(subcode, threads).min_distance;
        require(dist >= 2 * (d - k), Errc::InvalidSubcode,
                "subcode minimum distance below 2(d-k)");
    }

    const std::vector<Subspace>& e_words = subcode.codewords();
    std::vector<Subspace> empty;
    if (e_words.empty()) {
        if (stats) {
            stats->per_restart.assign(n_max, 0);
            stats->best_restart = 0;
        }
        return empty;
    }

    // Candidate free parts: all (k-d/2)-subspaces of F_q^{v-d/2}, in canonical
    // enumeration order; per-element complements are deterministic.
    std::vector<Subspace> t_list = enumerate_subspaces(f, v - d / 2, k - d / 2);
    const uint64_t t_count = t_list.size();
    std::vector<FqMatrix> complements;
    complements.reserve(e_words.size());
    for (const Subspace& u : e_words) complements.push_back(complement_through(u).basis());

    const uint64_t tries = std::min<uint64_t>(r_max, t_count);

    auto run_restart = [&](int restart) {
        PortableRng rng(seed, uint64_t(restart));
        std::vector<Subspace> accepted;
        std::vector<PackedSubspace> accepted_packed;
        InterDim inter(f, v, k);
        std::vector<uint32_t> sigma(t_count);
        for (size_t i = 0; i < e_words.size(); ++i) {
            const Subspace& u = e_words[i];
            const FqMatrix& m = complements[i];
            for (uint64_t t = 0; t < t_count; ++t) sigma[t] = uint32_t(t);
            for (uint64_t r = 0; r < tries; ++r) {
                uint64_t j = r + rng.below(t_count - r);
                std::swap(sigma[r], sigma[j]);
                const Subspace& tm = t_list[sigma[r]];
                FqMatrix w_rows = tm.basis().multiplied_by(m).stacked(u.basis());
                Subspace w = Subspace::from_rows(w_rows);
                PackedSubspace pw = pack(w);
                bool conflict = false;
                for (size_t z = 0; z < accepted.size(); ++z) {
                    if (inter(accepted[z], accepted_packed[z], w, pw) > k - d / 2) {
                        conflict = true;
                        break;
                    }
                }
                if (conflict) continue;
                accepted.push_back(std::move(w));
                accepted_packed.push_back(std::move(pw));
                if (k < d) break;  // next U
            }
        }
        return accepted;
    };

    int t = threads > 0 ? threads : 1;
    std::vector<std::vector<Subspace>> results(n_max);
    if (t <= 1) {
        for (int n = 0; n < n_max; ++n) results[n] = run_restart(n);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int p = 0; p < std::min(t, n_max); ++p)
            pool.emplace_back([&] {
                for (int n = next.fetch_add(1); n < n_max; n = next.fetch_add(1))
                    results[n] = run_restart(n);
            });
        for (auto& th : pool) th.join();
    }

    int best = 0;
    for (int n = 1; n < n_max; ++n)
        if (results[n].size() > results[best].size()) best = n;
    if (stats) {
        stats->per_restart.clear();
        for (const auto& r : results) stats->per_restart.push_back(r.size());
        stats->best_restart = best;
    }

    std::vector<Subspace> out = results[best];
    std::sort(out.begin(), out.end());

    // Structural re-verification of the output.
    {
        InterDim inter(f, v, k);
        std::vector<PackedSubspace> packed;
        packed.reserve(out.size());
        for (const Subspace& w : out) {
            require(w.dim() == k, Errc::Verification, "accepted codeword of wrong dimension");
            require(gamma_intersection_dim(w, k) >= d / 2, Errc::Verification,
                    "accepted codeword meets the special flat below d/2");
            packed.push_back(pack(w));
        }
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = i + 1; j < out.size(); ++j)
                require(inter(out[i], packed[i], out[j], packed[j]) <= k - d / 2,
                        Errc::Verification, "accepted pair below the distance threshold");
    }
    return out;
}

std::vector<Subspace> subspaces_meeting_gamma(const Field& f, int v, int k, int t) {
    require(0 <= t && t <= k && t <= v - k, Errc::Precondition,
            "intersection dimension out of range");
    std::vector<Subspace> out;
    std::vector<Subspace> flats = enumerate_subspaces(f, v - k, t);
    std::vector<Subspace> exts = enumerate_subspaces(f, v - t, k - t);
    for (const Subspace& small : flats) {
        // embed into the special flat
        FqMatrix rows(f, t, v);
        for (int r = 0; r < t; ++r)
            for (int c = 0; c < v - k; ++c) rows.set(r, k + c, small.basis().at(r, c));
        Subspace w = Subspace::from_rows(rows);
        FqMatrix comp = complement_through(w).basis();  // (v-t) x v
        for (const Subspace& x : exts) {
            FqMatrix u_rows = x.basis().multiplied_by(comp).stacked(w.basis());
            Subspace u = Subspace::from_rows(u_rows);
            if (gamma_intersection_dim(u, k) == t) out.push_back(std::move(u));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Orbit> orbit_partition(const FqMatrix& generator, std::vector<Subspace> universe) {
    require(generator.rows() == generator.cols(), Errc::NotInvertible, "generator not square");
    require(generator.rank() == generator.rows(), Errc::NotInvertible, "generator not invertible");
    std::sort(universe.begin(), universe.end());

    auto key_of = [](const Subspace& s) {
        return std::string(reinterpret_cast<const char*>(s.basis().data().data()),
                           s.basis().data().size());
    };
    std::unordered_map<std::string, uint32_t> index;
    index.reserve(universe.size() * 2);
    for (uint32_t i = 0; i < universe.size(); ++i) index.emplace(key_of(universe[i]), i);

    std::vector<bool> seen(universe.size(), false);
    std::vector<Orbit> orbits;
    for (uint32_t i = 0; i < universe.size(); ++i) {
        if (seen[i]) continue;
        Orbit orbit;
        Subspace cur = universe[i];
        uint32_t rep_idx = i;
        while (true) {
            orbit.members.push_back(cur);
            Subspace next = Subspace::from_rows(cur.basis().multiplied_by(generator));
            auto it = index.find(key_of(next));
            require(it != index.end(), Errc::Precondition,
                    "universe is not closed under the group action");
            if (it->second == i) break;
            require(!seen[it->second], Errc::Precondition, "orbit walk revisited an element");
            seen[it->second] = true;
            if (universe[it->second] < universe[rep_idx]) rep_idx = it->second;
            cur = universe[it->second];
        }
        seen[i] = true;
        orbit.representative = universe[rep_idx];
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::pair<std::vector<Orbit>, std::vector<Orbit>> filter_conflicting_orbits(
    std::vector<Orbit> orbits, int max_inter) {
    std::vector<Orbit> clean, dirty;
    for (Orbit& o : orbits) {
        bool bad = false;
        if (o.members.size() > 1) {
            const Field& f = o.members[0].field();
            InterDim inter(f, o.members[0].ambient_dim(), o.members[0].dim());
            PackedSubspace p0 = pack(o.members[0]);
            for (size_t j = 1; j < o.members.size() && !bad; ++j) {
                PackedSubspace pj = pack(o.members[j]);
                if (inter(o.members[0], p0, o.members[j], pj) > max_inter) bad = true;
            }
        }
        (bad ? dirty : clean).push_back(std::move(o));
    }
    return {std::move(clean), std::move(dirty)};
}

namespace {

bool orbits_compatible(const Orbit& a, const Orbit& b, int max_inter, InterDim& inter) {
    PackedSubspace pa = pack(a.representative);
    for (const Subspace& w : b.members) {
        PackedSubspace pw = pack(w);
        if (inter(a.representative, pa, w, pw) > max_inter) return false;
    }
    return true;
}

}  // namespace

std::vector<size_t> greedy_orbit_clique(const std::vector<Orbit>& clean, int max_inter,
                                        size_t target_size, int passes) {
    if (clean.empty()) {
        require(target_size == 0, Errc::NotFound, "no clean orbits");
        return {};
    }
    const Field& f = clean[0].representative.field();
    InterDim inter(f, clean[0].representative.ambient_dim(), clean[0].representative.dim());

    std::vector<size_t> order(clean.size());
    std::vector<size_t> best;
    for (int pass = 0; pass < passes; ++pass) {
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        if (pass == 1) {
            std::reverse(order.begin(), order.end());
        } else if (pass >= 2) {
            PortableRng rng(0x9e3779b97f4a7c15ull, uint64_t(pass));
            for (size_t i = 0; i + 1 < order.size(); ++i) {
                size_t j = i + rng.below(order.size() - i);
                std::swap(order[i], order[j]);
            }
        }
        std::vector<size_t> clique;
        for (size_t idx : order) {
            bool ok = true;
            for (size_t member : clique) {
                // one direction suffices: dim(x ∩ y) is invariant under the
                // common group action, so rep-vs-members covers all pairs
                if (!orbits_compatible(clean[member], clean[idx], max_inter, inter)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                clique.push_back(idx);
                if (target_size && clique.size() >= target_size) return clique;
            }
        }
        if (clique.size() > best.size()) best = clique;
        if (target_size == 0) break;  // single deterministic pass when unconstrained
    }
    require(target_size == 0 || best.size() >= target_size, Errc::NotFound,
            "greedy clique reached size " + std::to_string(best.size()) + " only");
    return best;
}

FqMatrix reference_generator() {
    const Field& f2 = Field::of(2);
    const std::vector<std::string> block{"00001", "10000", "01001", "00100", "00010"};
    FqMatrix g(f2, 10, 10);
    for (int copy = 0; copy < 2; ++copy)
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c)
                g.set(copy * 5 + r, copy * 5 + c, uint8_t(block[r][c] - '0'));
    return g;
}

std::vector<Subspace> reference_orbit_representatives() {
    const Field& f2 = Field::of(2);
    static const std::vector<std::vector<std::string>> reps{
        {"1000000000", "0011100010", "0000010000", "0000001100", "0000000001"},
        {"1000000000", "0100000100", "0000010000", "0000000100", "0000000010"},
        {"0100000000", "0010000001", "0000010001", "0000001010", "0000000101"},
        {"1000000000", "0001100010", "0000010001", "0000001011", "0000000101"},
        {"1000000000", "0000100011", "0000010000", "0000001001", "0000000111"},
    };
    std::vector<Subspace> out;
    for (const auto& rows : reps) out.push_back(Subspace::from_rows(FqMatrix(f2, rows)));
    return out;
}

Cdc record_code_10_6_5(int threads) {
    const Field& f2 = Field::of(2);
    Cdc code = lift(gabidulin(f2, 5, 5, 3));
    require(code.size() == 32768, Errc::Verification, "lifted MRD of unexpected size");

    FqMatrix g = reference_generator();
    size_t added = 0;
    for (const Subspace& rep : reference_orbit_representatives()) {
        Subspace cur = rep;
        size_t len = 0;
        do {
            code.add(cur);
            ++added;
            ++len;
            cur = Subspace::from_rows(cur.basis().multiplied_by(g));
        } while (!(cur == rep));
        require(len == 31, Errc::Verification, "reference orbit of unexpected length");
    }
    require(added == 155, Errc::Verification, "reference orbits of unexpected total size");
    require(code.size() == 32923, Errc::Verification, "duplicate codewords in the union");

    VerifyResult vr = verify_cdc_structured(code, threads);
    require(vr.min_distance == 6, Errc::Verification,
            "record code has minimum distance " + std::to_string(vr.min_distance));
    code.mark_verified(vr.min_distance);
    code.add_provenance("lifted 5x5 rank-distance-3 MRD plus five reference orbits");
    return code;
}

}  // namespace cdc
