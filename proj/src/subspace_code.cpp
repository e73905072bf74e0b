#include "cdc/subspace_code.hpp"

#include <algorithm>
#include <thread>

#include "cdc/qcomb.hpp"
#include "small_linalg.hpp"

namespace cdc {

void Cdc::add(Subspace s) {
    require(&s.field() == f_, Errc::FieldMismatch, "codeword over wrong field");
    require(s.ambient_dim() == v_, Errc::AmbientMismatch, "codeword in wrong ambient space");
    require(s.dim() == k_, Errc::DimensionTooLarge, "codeword of wrong dimension");
    words_.push_back(std::move(s));
    dirty_ = true;
}

void Cdc::normalize() const {
    if (!dirty_) return;
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    dirty_ = false;
}

size_t Cdc::size() const {
    normalize();
    return words_.size();
}

const std::vector<Subspace>& Cdc::codewords() const {
    normalize();
    return words_;
}

bool Cdc::contains(const Subspace& s) const {
    normalize();
    return std::binary_search(words_.begin(), words_.end(), s);
}

Cdc lift(const RankCode& mrd) {
    const Field& f = mrd.field();
    const int k = mrd.m(), n = mrd.n();
    const int claimed = mrd.claimed_min_rank_distance() == kInfiniteDistance
                            ? kInfiniteDistance
                            : 2 * mrd.claimed_min_rank_distance();
    Cdc out(f, k + n, k, claimed);
    mrd.for_each([&](uint64_t, const uint8_t* mm) {
        FqMatrix rows(f, k, k + n);
        for (int r = 0; r < k; ++r) {
            rows.set(r, r, 1);
            for (int c = 0; c < n; ++c) rows.set(r, k + c, mm[size_t(r) * n + c]);
        }
        out.add(Subspace::from_rows(rows));
    });
    out.add_provenance("lifted rank code " + std::to_string(k) + "x" + std::to_string(n) +
                       " size " + std::to_string(mrd.size()));
    return out;
}

namespace {

// Per-codeword packed rows for the GF(2) pair loops.
struct PackedWords {
    bool usable = false;
    int k = 0;
    std::vector<uint64_t> rows;  // k per codeword

    PackedWords(const Cdc& c) {
        const std::vector<Subspace>& ws = c.codewords();
        if (c.field().q() != 2 || c.ambient_dim() > 64) return;
        usable = true;
        k = c.dim();
        rows.resize(ws.size() * size_t(k));
        for (size_t i = 0; i < ws.size(); ++i) {
            const FqMatrix& b = ws[i].basis();
            for (int r = 0; r < k; ++r) {
                uint64_t row = 0;
                for (int col = 0; col < b.cols(); ++col)
                    if (b.at(r, col)) row |= uint64_t(1) << col;
                rows[i * k + r] = row;
            }
        }
    }

    const uint64_t* of(size_t i) const { return rows.data() + i * k; }
};

struct PairBest {
    int max_inter = -1;
    size_t a = 0, b = 0;

    void consider(int inter, size_t i, size_t j) {
        if (inter > max_inter) {
            max_inter = inter;
            a = i;
            b = j;
        }
    }
    void merge(const PairBest& o) {
        if (o.max_inter > max_inter || (o.max_inter == max_inter && o.max_inter >= 0 &&
                                        std::make_pair(o.a, o.b) < std::make_pair(a, b)))
            *this = o;
    }
};

// Max intersection dimension over pairs (i, j) with i in [lo, hi), j > i.
PairBest scan_rows(const Cdc& c, const PackedWords& packed, size_t lo, size_t hi,
                   size_t* checks) {
    const std::vector<Subspace>& ws = c.codewords();
    const int k = c.dim();
    PairBest best;
    size_t n = ws.size();
    if (packed.usable) {
        std::vector<uint64_t> scratch(2 * k);
        for (size_t i = lo; i < hi; ++i) {
            const uint64_t* ui = packed.of(i);
            for (size_t j = i + 1; j < n; ++j) {
                int s = detail::sum_dim_gf2(scratch.data(), ui, k, packed.of(j), k);
                best.consider(2 * k - s, i, j);
                ++*checks;
            }
        }
        return best;
    }
    const Field& f = c.field();
    const int v = c.ambient_dim();
    std::vector<uint8_t> scratch(size_t(2 * k) * v);
    for (size_t i = lo; i < hi; ++i) {
        const std::vector<uint8_t>& bi = ws[i].basis().data();
        for (size_t j = i + 1; j < n; ++j) {
            const std::vector<uint8_t>& bj = ws[j].basis().data();
            std::copy(bi.begin(), bi.end(), scratch.begin());
            std::copy(bj.begin(), bj.end(), scratch.begin() + bi.size());
            int s = detail::rank_bytes(f, scratch.data(), 2 * k, v);
            best.consider(2 * k - s, i, j);
            ++*checks;
        }
    }
    return best;
}

int thread_count(int requested, size_t work) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    int t = hw ? int(hw) : 1;
    if (work < 1u << 16) t = 1;
    return t;
}

// Balanced split of the triangular pair loop: choose row chunks with roughly
// equal pair counts.
std::vector<size_t> row_chunks(size_t n, int parts) {
    std::vector<size_t> cuts{0};
    double total = double(n) * (n - 1) / 2;
    size_t row = 0;
    for (int p = 1; p < parts; ++p) {
        double want = total * p / parts;
        while (row < n) {
            double done = (double(n) * n - double(n - row) * (n - row)) / 2;
            if (done >= want) break;
            ++row;
        }
        cuts.push_back(row);
    }
    cuts.push_back(n);
    return cuts;
}

VerifyResult pairwise_scan(const Cdc& c, int threads) {
    VerifyResult out;
    const size_t n = c.size();
    if (n < 2) return out;
    PackedWords packed(c);
    int t = thread_count(threads, n * n / 2);
    PairBest best;
    size_t checks = 0;
    if (t <= 1) {
        best = scan_rows(c, packed, 0, n, &checks);
    } else {
        std::vector<size_t> cuts = row_chunks(n, t);
        std::vector<PairBest> results(t);
        std::vector<size_t> counts(t, 0);
        std::vector<std::thread> pool;
        for (int p = 0; p < t; ++p)
            pool.emplace_back([&, p] {
                results[p] = scan_rows(c, packed, cuts[p], cuts[p + 1], &counts[p]);
            });
        for (auto& th : pool) th.join();
        for (int p = 0; p < t; ++p) {
            best.merge(results[p]);
            checks += counts[p];
        }
    }
    out.pair_checks = checks;
    out.min_distance = 2 * (c.dim() - best.max_inter);
    out.witness = std::make_pair(best.a, best.b);
    return out;
}

}  // namespace

VerifyResult verify_cdc(const Cdc& c, int threads) { return pairwise_scan(c, threads); }

VerifyResult verify_cdc_structured(const Cdc& c, int threads) {
    const Field& f = c.field();
    const int v = c.ambient_dim(), k = c.dim();
    const std::vector<Subspace>& ws = c.codewords();
    if (ws.size() < 2) return VerifyResult{};

    // Partition into the identity-prefix cell and the rest.
    std::vector<size_t> prefix_idx, rest_idx;
    for (size_t i = 0; i < ws.size(); ++i) {
        const std::vector<int>& piv = ws[i].pivots();
        bool prefix = int(piv.size()) == k && (k == 0 || piv.back() == k - 1);
        (prefix ? prefix_idx : rest_idx).push_back(i);
    }

    // Strip the prefix cell to its k x (v-k) free parts and test linearity.
    const size_t m_count = prefix_idx.size();
    bool reducible = m_count >= 2;
    std::vector<FqMatrix> basis;
    if (reducible) {
        const size_t cells = size_t(k) * (v - k);
        std::vector<std::vector<uint8_t>> echelon;  // row-echelon over GF(q), by leading cell
        auto insert = [&](std::vector<uint8_t> vec) -> bool {
            for (const auto& row : echelon) {
                size_t lead = 0;
                while (lead < cells && row[lead] == 0) ++lead;
                if (lead < cells && vec[lead] != 0) {
                    uint8_t factor = f.div(vec[lead], row[lead]);
                    for (size_t j = lead; j < cells; ++j)
                        vec[j] = f.sub(vec[j], f.mul(factor, row[j]));
                }
            }
            if (std::all_of(vec.begin(), vec.end(), [](uint8_t x) { return x == 0; }))
                return false;
            echelon.push_back(std::move(vec));
            return true;
        };
        for (size_t i : prefix_idx) {
            const FqMatrix& b = ws[i].basis();
            std::vector<uint8_t> vec(cells);
            for (int r = 0; r < k; ++r)
                for (int col = 0; col < v - k; ++col)
                    vec[size_t(r) * (v - k) + col] = b.at(r, k + col);
            insert(std::move(vec));
            if (echelon.size() > 62) {
                reducible = false;
                break;
            }
        }
        if (reducible) {
            uint64_t span_size = 1;
            for (size_t i = 0; i < echelon.size() && span_size <= m_count; ++i)
                span_size *= f.q();
            reducible = span_size == m_count;
        }
        if (reducible) {
            for (const auto& row : echelon) {
                FqMatrix w(f, k, v - k);
                for (int r = 0; r < k; ++r)
                    for (int col = 0; col < v - k; ++col)
                        w.set(r, col, row[size_t(r) * (v - k) + col]);
                basis.push_back(std::move(w));
            }
        }
    }

    if (!reducible) return pairwise_scan(c, threads);

    VerifyResult out;
    out.used_lmrd_reduction = true;

    // Intra-cell distances through the rank code.
    FqMatrix argmin;
    int min_rank = min_rank_of_span(f, basis, k, v - k, &argmin);
    int intra = min_rank == kInfiniteDistance ? kInfiniteDistance : 2 * min_rank;
    PairBest best;
    if (intra != kInfiniteDistance) {
        // witness: lift(0) and lift(argmin) both belong to the cell
        FqMatrix rows0(f, k, v), rows1(f, k, v);
        for (int r = 0; r < k; ++r) {
            rows0.set(r, r, 1);
            rows1.set(r, r, 1);
            for (int col = 0; col < v - k; ++col) rows1.set(r, k + col, argmin.at(r, col));
        }
        Subspace s0 = Subspace::from_rows(rows0), s1 = Subspace::from_rows(rows1);
        size_t i0 = std::lower_bound(ws.begin(), ws.end(), s0) - ws.begin();
        size_t i1 = std::lower_bound(ws.begin(), ws.end(), s1) - ws.begin();
        best.consider(k - min_rank, std::min(i0, i1), std::max(i0, i1));
    }

    // Cross and rest-rest pairs, checked explicitly.
    PackedWords packed(c);
    size_t checks = 0;
    std::vector<uint64_t> scratch64(2 * k);
    std::vector<uint8_t> scratch8(size_t(2 * k) * v);
    auto check_pair = [&](size_t a, size_t b) {
        int s;
        if (packed.usable) {
            s = detail::sum_dim_gf2(scratch64.data(), packed.of(a), k, packed.of(b), k);
        } else {
            const std::vector<uint8_t>& ba = ws[a].basis().data();
            const std::vector<uint8_t>& bb = ws[b].basis().data();
            std::copy(ba.begin(), ba.end(), scratch8.begin());
            std::copy(bb.begin(), bb.end(), scratch8.begin() + ba.size());
            s = detail::rank_bytes(f, scratch8.data(), 2 * k, v);
        }
        best.consider(2 * k - s, std::min(a, b), std::max(a, b));
        ++checks;
    };
    for (size_t a : rest_idx)
        for (size_t b : prefix_idx) check_pair(a, b);
    for (size_t i = 0; i < rest_idx.size(); ++i)
        for (size_t j = i + 1; j < rest_idx.size(); ++j) check_pair(rest_idx[i], rest_idx[j]);
    (void)threads;

    out.pair_checks = checks;
    if (best.max_inter < 0) {
        out.min_distance = intra;
        return out;
    }
    out.min_distance = 2 * (k - best.max_inter);
    out.witness = std::make_pair(best.a, best.b);
    return out;
}

Cdc echelon_ferrers(const Field& f, int v, const std::vector<PivotVector>& skeleton,
                    const std::vector<RankCode>& subcodes) {
    require(!skeleton.empty(), Errc::Precondition, "empty skeleton");
    require(skeleton.size() == subcodes.size(), Errc::Precondition,
            "one subcode per pivot vector");
    const int k = skeleton[0].weight();
    int min_hamming = kInfiniteDistance;
    for (size_t i = 0; i < skeleton.size(); ++i) {
        require(skeleton[i].length == v, Errc::ShapeMismatch, "pivot vector of wrong length");
        require(skeleton[i].weight() == k, Errc::WeightMismatch,
                "pivot vectors must share one weight");
        for (size_t j = i + 1; j < skeleton.size(); ++j)
            min_hamming = std::min(min_hamming, hamming_distance(skeleton[i], skeleton[j]));
    }

    int claimed = min_hamming;
    for (size_t i = 0; i < subcodes.size(); ++i) {
        if (subcodes[i].size() <= 1) continue;
        int dd = subcodes[i].claimed_min_rank_distance();
        claimed = std::min(claimed, dd == kInfiniteDistance ? kInfiniteDistance : 2 * dd);
    }

    Cdc out(f, v, k, claimed);
    for (size_t cell = 0; cell < skeleton.size(); ++cell) {
        const PivotVector& pv = skeleton[cell];
        const RankCode& sub = subcodes[cell];
        require(&sub.field() == &f, Errc::FieldMismatch, "subcode over wrong field");
        require(sub.m() == k && sub.n() == v - k, Errc::ShapeMismatch,
                "subcode must have shape k x (v-k)");
        std::vector<int> pivot_cols, free_cols;
        for (int c = 0; c < v; ++c) (pv.test(c) ? pivot_cols : free_cols).push_back(c);

        sub.for_each([&](uint64_t idx, const uint8_t* mm) {
            FqMatrix rows(f, k, v);
            for (int r = 0; r < k; ++r) {
                rows.set(r, pivot_cols[r], 1);
                for (int j = 0; j < v - k; ++j) {
                    uint8_t val = mm[size_t(r) * (v - k) + j];
                    if (free_cols[j] < pivot_cols[r]) {
                        require(val == 0, Errc::ShapeViolation,
                                "subcode " + std::to_string(cell) + " codeword " +
                                    std::to_string(idx) + " writes into a forced-zero position");
                        continue;
                    }
                    rows.set(r, free_cols[j], val);
                }
            }
            out.add(Subspace::from_rows(rows));
        });
    }
    return out;
}

namespace {

PivotVector pivot_from_blocks(int v, std::initializer_list<std::pair<int, int>> ranges) {
    PivotVector p;
    p.length = v;
    for (auto [lo, hi] : ranges)
        for (int i = lo; i < hi; ++i) p.bits |= uint64_t(1) << i;
    return p;
}

}  // namespace

Cdc family_6l(int q, int l) {
    require(l >= 1, Errc::Precondition, "family needs l >= 1");
    const Field& f = Field::of(q);
    const int v = 6 * l, k = 3 * l;

    std::vector<PivotVector> skeleton{
        pivot_from_blocks(v, {{0, 3 * l}}),
        pivot_from_blocks(v, {{0, l}, {3 * l, 5 * l}}),
        pivot_from_blocks(v, {{l, 2 * l}, {3 * l, 4 * l}, {5 * l, 6 * l}}),
        pivot_from_blocks(v, {{2 * l, 3 * l}, {4 * l, 6 * l}}),
    };

    std::vector<RankCode> cells;
    cells.push_back(gabidulin(f, k, k, 2 * l));
    cells.push_back(block_compose(gabidulin(f, l, 2 * l, l), gabidulin(f, 2 * l, l, l)));
    cells.push_back(embed_block(
        block_compose(gabidulin(f, l, l, l), gabidulin(f, l, l, l)), k, k, 0, l));
    cells.push_back(RankCode::singleton_zero(f, k, k));

    Cdc out = echelon_ferrers(f, v, skeleton, cells);
    out.add_provenance("four-cell echelon construction, q=" + std::to_string(q) +
                       " l=" + std::to_string(l));
    return out;
}

Cdc family_6_3l(int q, int l) {
    require(l >= 1, Errc::Precondition, "family needs l >= 1");
    const Field& f = Field::of(q);
    const int v = 6 + 3 * l, k = 3 + l;

    std::vector<PivotVector> skeleton{
        pivot_from_blocks(v, {{0, 3 + l}}),
        pivot_from_blocks(v, {{0, 1}, {3 + l, 5 + 2 * l}}),
        pivot_from_blocks(v, {{2 + l, 3 + l}, {4 + 2 * l, 5 + 2 * l}, {5 + 2 * l, 6 + 3 * l}}),
    };

    std::vector<RankCode> cells;
    cells.push_back(gabidulin(f, k, v - k, 2 + l));
    cells.push_back(block_compose(gabidulin(f, 1, 2 + l, 1), gabidulin(f, 2 + l, 1 + l, 1 + l)));
    cells.push_back(RankCode::singleton_zero(f, k, v - k));

    Cdc out = echelon_ferrers(f, v, skeleton, cells);
    out.add_provenance("three-cell echelon construction, q=" + std::to_string(q) +
                       " l=" + std::to_string(l));
    return out;
}

GammaProfile gamma_intersection_profile(const Cdc& c) {
    const int k = c.dim();
    GammaProfile out;
    for (const Subspace& u : c.codewords()) {
        int pivots_in_prefix = 0;
        for (int p : u.pivots())
            if (p < k) ++pivots_in_prefix;
        int t = u.dim() - pivots_in_prefix;  // dim(U ∩ Γ) for RREF bases
        if (t == 0) {
            ++out.lmrd_size;
            continue;
        }
        require(t >= c.claimed_distance() / 2, Errc::ProfileViolation,
                "codeword outside the prefix cell meets the special flat in dimension " +
                    std::to_string(t) + " < d/2; the code does not contain a full lifted MRD");
        ++out.layer_sizes[t];
    }
    return out;
}

bool verify_exact_coverage(const Cdc& lifted, int d) {
    const Field& f = lifted.field();
    const int v = lifted.ambient_dim(), k = lifted.dim();
    const int c = k - d / 2 + 1;
    Subspace gamma = special_flat(f, v, k);

    size_t avoiding = 0;
    for (const Subspace& w : enumerate_subspaces(f, v, c)) {
        if (!intersects_trivially(w, gamma)) continue;
        ++avoiding;
        size_t containing = 0;
        for (const Subspace& u : lifted.codewords()) {
            if (u.contains(w)) {
                if (++containing > 1) break;
            }
        }
        if (containing != 1) return false;
    }
    return BigInt(avoiding) == count_avoiding(v, v - k, c, f.q());
}

Cdc embed_in_gamma(const Cdc& small, int v, int k) {
    require(small.ambient_dim() == v - k, Errc::AmbientMismatch,
            "embedding needs ambient dimension v-k");
    const Field& f = small.field();
    Cdc out(f, v, small.dim(), small.claimed_distance());
    for (const Subspace& s : small.codewords()) {
        FqMatrix rows(f, s.dim(), v);
        for (int r = 0; r < s.dim(); ++r)
            for (int col = 0; col < v - k; ++col) rows.set(r, k + col, s.basis().at(r, col));
        out.add(Subspace::from_rows(rows));
    }
    return out;
}

}  // namespace cdc
