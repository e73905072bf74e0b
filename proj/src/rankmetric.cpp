#include "cdc/rankmetric.hpp"

#include <algorithm>
#include <array>

#include "small_linalg.hpp"

namespace cdc {

using detail::rank_bytes;
using detail::rank_gf2_32;

int rank_distance(const FqMatrix& a, const FqMatrix& b) {
    require(&a.field() == &b.field(), Errc::FieldMismatch, "rank distance across fields");
    require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::ShapeMismatch,
            "rank distance needs equal shapes");
    const Field& f = a.field();
    FqMatrix diff(f, a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) diff.set(r, c, f.sub(a.at(r, c), b.at(r, c)));
    return diff.rank();
}

namespace {

// ---- polynomials over an arbitrary base field ---------------------------

using FPoly = std::vector<uint8_t>;

FPoly fpoly_rem(FPoly a, const FPoly& b, const Field& f) {
    int db = int(b.size()) - 1;
    while (db > 0 && b[db] == 0) --db;
    uint8_t lead_inv = f.inv(b[db]);
    for (int i = int(a.size()) - 1; i >= db; --i) {
        if (a[i] == 0) continue;
        uint8_t c = f.mul(a[i], lead_inv);
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = f.sub(a[i - db + j], f.mul(c, b[j]));
    }
    a.resize(std::max(db, 1));
    return a;
}

bool fpoly_is_zero(const FPoly& a) {
    return std::all_of(a.begin(), a.end(), [](uint8_t c) { return c == 0; });
}

bool fpoly_irreducible(const FPoly& poly, const Field& f) {
    int e = int(poly.size()) - 1;
    int q = f.q();
    for (int d = 1; 2 * d <= e; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (uint64_t enc = 0; enc < count; ++enc) {
            FPoly g(d + 1, 0);
            uint64_t m = enc;
            for (int i = 0; i < d; ++i) {
                g[i] = uint8_t(m % q);
                m /= q;
            }
            g[d] = 1;
            if (fpoly_is_zero(fpoly_rem(poly, g, f))) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of the given degree.
FPoly find_irreducible(const Field& f, int degree) {
    int q = f.q();
    uint64_t count = 1;
    for (int i = 0; i < degree; ++i) count *= q;
    for (uint64_t enc = 0; enc < count; ++enc) {
        FPoly g(degree + 1, 0);
        uint64_t m = enc;
        for (int i = 0; i < degree; ++i) {
            g[i] = uint8_t(m % q);
            m /= q;
        }
        g[degree] = 1;
        if (fpoly_irreducible(g, f)) return g;
    }
    raise(Errc::Precondition, "no irreducible polynomial found");
}

// ---- GF(q^n) as coefficient vectors over GF(q) --------------------------

class ExtField {
  public:
    static constexpr int kMaxDegree = 16;
    using Elem = std::array<uint8_t, kMaxDegree>;

    ExtField(const Field& base, int degree) : f_(&base), n_(degree) {
        require(degree >= 1 && degree <= kMaxDegree, Errc::TooLarge,
                "extension degree out of range");
        modulus_ = degree == 1 ? FPoly{0, 1} : find_irreducible(base, degree);
    }

    const Field& base() const { return *f_; }
    int degree() const { return n_; }

    Elem zero() const { return Elem{}; }
    Elem basis_element(int d) const {
        Elem e{};
        e[d] = 1;
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem out{};
        for (int i = 0; i < n_; ++i) out[i] = f_->add(a[i], b[i]);
        return out;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        const Field& f = *f_;
        std::array<uint8_t, 2 * kMaxDegree> prod{};
        for (int i = 0; i < n_; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < n_; ++j)
                prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
        }
        // reduce by the monic modulus
        for (int i = 2 * n_ - 2; i >= n_; --i) {
            uint8_t c = prod[i];
            if (!c) continue;
            prod[i] = 0;
            for (int j = 0; j < n_; ++j)
                prod[i - n_ + j] = f.sub(prod[i - n_ + j], f.mul(c, modulus_[j]));
        }
        Elem out{};
        for (int i = 0; i < n_; ++i) out[i] = prod[i];
        return out;
    }

    Elem pow(Elem a, uint64_t e) const {
        Elem r = basis_element(0);  // one
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

  private:
    const Field* f_;
    int n_;
    FPoly modulus_;
};

// ---- incremental span enumeration ---------------------------------------

// Visits every GF(q)-combination of the basis matrices exactly once, in
// base-q digit order (digit 0 fastest), maintaining the current matrix by
// delta additions. fn gets the index and the row-major byte buffer.
void enumerate_span(const Field& f, const std::vector<FqMatrix>& basis, int m, int n,
                    const std::function<void(uint64_t, const uint8_t*)>& fn) {
    const int T = int(basis.size());
    const int q = f.q();
    const size_t cells = size_t(m) * n;
    // scaled copies: scaled[t][x] = x * basis[t]
    std::vector<std::vector<std::vector<uint8_t>>> scaled(T);
    for (int t = 0; t < T; ++t) {
        scaled[t].assign(q, std::vector<uint8_t>(cells, 0));
        for (int x = 0; x < q; ++x)
            for (size_t i = 0; i < cells; ++i)
                scaled[t][x][i] = f.mul(uint8_t(x), basis[t].data()[i]);
    }
    std::vector<uint8_t> cur(cells, 0);
    std::vector<int> digit(T, 0);
    uint64_t index = 0;
    while (true) {
        fn(index, cur.data());
        int t = 0;
        while (t < T && digit[t] == q - 1) {
            // reset digit t: subtract (q-1) * basis[t]
            const auto& hi = scaled[t][q - 1];
            for (size_t i = 0; i < cells; ++i) cur[i] = f.sub(cur[i], hi[i]);
            digit[t] = 0;
            ++t;
        }
        if (t == T) break;
        const auto& lo = scaled[t][digit[t]];
        const auto& hi = scaled[t][digit[t] + 1];
        for (size_t i = 0; i < cells; ++i) cur[i] = f.add(cur[i], f.sub(hi[i], lo[i]));
        ++digit[t];
        ++index;
    }
}

}  // namespace

int min_rank_of_span(const Field& f, const std::vector<FqMatrix>& basis, int m, int n,
                     FqMatrix* argmin) {
    if (basis.empty()) return kInfiniteDistance;
    const int T = int(basis.size());

    if (f.q() == 2 && n <= 32 && m <= 64 && T < 63) {
        // Gray-code walk: one basis XOR per visited element.
        std::vector<std::vector<uint32_t>> packed(T, std::vector<uint32_t>(m, 0));
        for (int t = 0; t < T; ++t)
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < n; ++c)
                    if (basis[t].at(r, c)) packed[t][r] |= uint32_t(1) << c;
        std::vector<uint32_t> cur(m, 0), scratch(m), best_rows(m, 0);
        int best = kInfiniteDistance;
        uint64_t total = uint64_t(1) << T;
        for (uint64_t step = 1; step < total; ++step) {
            int t = __builtin_ctzll(step);
            for (int r = 0; r < m; ++r) cur[r] ^= packed[t][r];
            std::copy(cur.begin(), cur.end(), scratch.begin());
            int rk = rank_gf2_32(scratch.data(), m);
            if (rk < best) {
                best = rk;
                best_rows = cur;
                if (best == 1 && !argmin) break;  // rank cannot drop below 1 for nonzero
            }
        }
        if (argmin) {
            FqMatrix w(f, m, n);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < n; ++c) w.set(r, c, (best_rows[r] >> c) & 1);
            *argmin = std::move(w);
        }
        return best;
    }

    int best = kInfiniteDistance;
    std::vector<uint8_t> scratch(size_t(m) * n), best_cells;
    enumerate_span(f, basis, m, n, [&](uint64_t idx, const uint8_t* mm) {
        if (idx == 0) return;
        std::copy(mm, mm + scratch.size(), scratch.begin());
        int rk = rank_bytes(f, scratch.data(), m, n);
        if (rk < best) {
            best = rk;
            if (argmin) best_cells.assign(mm, mm + scratch.size());
        }
    });
    if (argmin && !best_cells.empty()) {
        FqMatrix w(f, m, n);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < n; ++c) w.set(r, c, best_cells[size_t(r) * n + c]);
        *argmin = std::move(w);
    }
    return best;
}

RankCode::RankCode(const Field& f, int m, int n, std::vector<FqMatrix> words, int claimed_d,
                   bool linear) {
    f_ = &f;
    m_ = m;
    n_ = n;
    claimed_d_ = claimed_d;
    linear_ = linear;
    for (const FqMatrix& w : words) {
        require(&w.field() == &f, Errc::FieldMismatch, "codeword over wrong field");
        require(w.rows() == m && w.cols() == n, Errc::ShapeMismatch, "codeword of wrong shape");
    }
    words_ = std::move(words);
    size_ = words_.size();
}

RankCode RankCode::from_span(const Field& f, int m, int n, std::vector<FqMatrix> span_basis,
                             int claimed_d) {
    RankCode code;
    code.f_ = &f;
    code.m_ = m;
    code.n_ = n;
    code.claimed_d_ = claimed_d;
    code.linear_ = true;
    for (const FqMatrix& w : span_basis)
        require(w.rows() == m && w.cols() == n, Errc::ShapeMismatch, "basis of wrong shape");
    code.span_basis_ = std::move(span_basis);
    uint64_t size = 1;
    for (size_t i = 0; i < code.span_basis_.size(); ++i) {
        require(size <= (uint64_t(1) << 62) / f.q(), Errc::TooLarge, "span too large");
        size *= f.q();
    }
    code.size_ = size;
    return code;
}

RankCode RankCode::singleton_zero(const Field& f, int m, int n) {
    RankCode code(f, m, n, {FqMatrix(f, m, n)}, kInfiniteDistance, true);
    return code;
}

FqMatrix RankCode::codeword(uint64_t index) const {
    require(index < size_, Errc::Precondition, "codeword index out of range");
    if (!words_.empty()) return words_[index];
    const Field& f = *f_;
    FqMatrix out(f, m_, n_);
    uint64_t rest = index;
    for (const FqMatrix& b : span_basis_) {
        uint8_t digit = uint8_t(rest % f.q());
        rest /= f.q();
        if (digit) {
            for (int r = 0; r < m_; ++r)
                for (int c = 0; c < n_; ++c)
                    out.set(r, c, f.add(out.at(r, c), f.mul(digit, b.at(r, c))));
        }
    }
    return out;
}

void RankCode::for_each(const std::function<void(uint64_t, const uint8_t*)>& fn) const {
    if (!words_.empty()) {
        for (uint64_t i = 0; i < size_; ++i) fn(i, words_[i].data().data());
        return;
    }
    enumerate_span(*f_, span_basis_, m_, n_, fn);
}

std::vector<FqMatrix> RankCode::materialize() const {
    require(size_ <= kMaterializeCap, Errc::TooLarge, "code too large to materialize");
    if (!words_.empty()) return words_;
    std::vector<FqMatrix> out;
    out.reserve(size_);
    for_each([&](uint64_t, const uint8_t* mm) {
        FqMatrix w(*f_, m_, n_);
        for (int r = 0; r < m_; ++r)
            for (int c = 0; c < n_; ++c) w.set(r, c, mm[size_t(r) * n_ + c]);
        out.push_back(std::move(w));
    });
    return out;
}

RankCode gabidulin(const Field& f, int m, int n, int delta) {
    const int s = std::min(m, n);
    const int N = std::max(m, n);
    require(1 <= delta && delta <= s, Errc::InvalidDistance,
            "rank distance must satisfy 1 <= delta <= min(m,n)");
    require(N <= ExtField::kMaxDegree, Errc::TooLarge, "extension degree beyond support");
    const int u = s - delta + 1;  // number of polynomial coefficients

    ExtField ext(f, N);
    // Frobenius powers of the evaluation points: fro[i][j] = (alpha^j)^(q^i).
    std::vector<std::vector<ExtField::Elem>> fro(u, std::vector<ExtField::Elem>(s));
    for (int j = 0; j < s; ++j) fro[0][j] = ext.basis_element(j);
    for (int i = 1; i < u; ++i)
        for (int j = 0; j < s; ++j) fro[i][j] = ext.pow(fro[i - 1][j], f.q());

    // Span basis: message basis element (coefficient slot i, power alpha^d)
    // evaluates to column j = alpha^d * fro[i][j]; written as an N x s
    // coordinate matrix, transposed if the requested shape is wide.
    const bool transpose = m < n;
    std::vector<FqMatrix> basis;
    basis.reserve(size_t(u) * N);
    for (int i = 0; i < u; ++i) {
        for (int d = 0; d < N; ++d) {
            ExtField::Elem ad = ext.basis_element(d);
            FqMatrix w(f, m, n);
            for (int j = 0; j < s; ++j) {
                ExtField::Elem val = ext.mul(ad, fro[i][j]);
                for (int r = 0; r < N; ++r) {
                    if (transpose)
                        w.set(j, r, val[r]);
                    else
                        w.set(r, j, val[r]);
                }
            }
            basis.push_back(std::move(w));
        }
    }
    return RankCode::from_span(f, m, n, std::move(basis), delta);
}

int verify_min_rank_distance(const RankCode& code, RankVerifyMode mode) {
    const Field& f = code.field();
    if (code.size() <= 1) return kInfiniteDistance;
    if (mode == RankVerifyMode::Linear) {
        require(code.linear(), Errc::Precondition, "linear verification of a non-linear code");
        if (code.span_backed())
            return min_rank_of_span(f, code.span_basis(), code.m(), code.n());
        // explicit but linear: min rank over nonzero stored words
        int best = kInfiniteDistance;
        std::vector<uint8_t> scratch(size_t(code.m()) * code.n());
        code.for_each([&](uint64_t, const uint8_t* mm) {
            bool zero = std::all_of(mm, mm + scratch.size(), [](uint8_t v) { return v == 0; });
            if (zero) return;
            std::copy(mm, mm + scratch.size(), scratch.begin());
            int rk = rank_bytes(f, scratch.data(), code.m(), code.n());
            if (rk < best) best = rk;
        });
        return best;
    }
    require(code.size() <= 4096, Errc::TooLarge, "exhaustive pair check beyond cap");
    std::vector<FqMatrix> words = code.materialize();
    int best = kInfiniteDistance;
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j)
            best = std::min(best, rank_distance(words[i], words[j]));
    return best;
}

namespace {

FqMatrix compose_pair(const Field& f, const FqMatrix& a, const FqMatrix& b) {
    FqMatrix out(f, a.rows() + b.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) out.set(a.rows() + r, a.cols() + c, b.at(r, c));
    return out;
}

int add_distances(int da, int db) {
    if (da == kInfiniteDistance || db == kInfiniteDistance) return kInfiniteDistance;
    return da + db;
}

}  // namespace

RankCode block_compose(const RankCode& a, const RankCode& b) {
    require(&a.field() == &b.field(), Errc::FieldMismatch, "composing codes over different fields");
    require(a.size() == b.size(), Errc::CardinalityMismatch,
            "block composition pairs codewords by index; cardinalities must match");
    const Field& f = a.field();
    int claimed = add_distances(a.claimed_min_rank_distance(), b.claimed_min_rank_distance());
    if (!a.span_basis().empty() && a.span_basis().size() == b.span_basis().size()) {
        // compose span bases pairwise; the digit spaces coincide
        std::vector<FqMatrix> basis;
        basis.reserve(a.span_basis().size());
        for (size_t t = 0; t < a.span_basis().size(); ++t)
            basis.push_back(compose_pair(f, a.span_basis()[t], b.span_basis()[t]));
        return RankCode::from_span(f, a.m() + b.m(), a.n() + b.n(), std::move(basis), claimed);
    }
    std::vector<FqMatrix> wa = a.materialize(), wb = b.materialize();
    std::vector<FqMatrix> words;
    words.reserve(wa.size());
    for (size_t i = 0; i < wa.size(); ++i) words.push_back(compose_pair(f, wa[i], wb[i]));
    return RankCode(f, a.m() + b.m(), a.n() + b.n(), std::move(words), claimed,
                    a.linear() && b.linear());
}

RankCode embed_block(const RankCode& code, int big_m, int big_n, int row0, int col0) {
    require(row0 >= 0 && col0 >= 0 && row0 + code.m() <= big_m && col0 + code.n() <= big_n,
            Errc::ShapeMismatch, "embedding window out of range");
    const Field& f = code.field();
    auto embed_one = [&](const FqMatrix& w) {
        FqMatrix out(f, big_m, big_n);
        for (int r = 0; r < w.rows(); ++r)
            for (int c = 0; c < w.cols(); ++c) out.set(row0 + r, col0 + c, w.at(r, c));
        return out;
    };
    if (!code.span_basis().empty()) {
        std::vector<FqMatrix> basis;
        for (const FqMatrix& w : code.span_basis()) basis.push_back(embed_one(w));
        return RankCode::from_span(f, big_m, big_n, std::move(basis),
                                   code.claimed_min_rank_distance());
    }
    std::vector<FqMatrix> words;
    for (const FqMatrix& w : code.materialize()) words.push_back(embed_one(w));
    return RankCode(f, big_m, big_n, std::move(words), code.claimed_min_rank_distance(),
                    code.linear());
}

}  // namespace cdc
