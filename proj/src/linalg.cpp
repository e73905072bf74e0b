#include "cdc/linalg.hpp"

#include <algorithm>

namespace cdc {

FqMatrix::FqMatrix(const Field& f, const std::vector<std::string>& rows)
    : FqMatrix(f, int(rows.size()), rows.empty() ? 0 : int(rows[0].size())) {
    for (int r = 0; r < rows_; ++r) {
        require(int(rows[r].size()) == cols_, Errc::ShapeMismatch, "ragged rows");
        for (int c = 0; c < cols_; ++c) {
            int v = rows[r][c] - '0';
            require(v >= 0 && v < f.q(), Errc::Precondition, "digit out of field range");
            set(r, c, uint8_t(v));
        }
    }
}

namespace {

// Packed GF(2) elimination; rows as 64-bit masks, bit c = column c.
std::vector<int> rref_packed(std::vector<uint64_t>& rows, int cols) {
    std::vector<int> pivots;
    size_t next = 0;
    for (int c = 0; c < cols && next < rows.size(); ++c) {
        uint64_t mask = 1ull << c;
        size_t sel = next;
        while (sel < rows.size() && !(rows[sel] & mask)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[next], rows[sel]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != next && (rows[r] & mask)) rows[r] ^= rows[next];
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

}  // namespace

std::vector<int> FqMatrix::rref() {
    const Field& f = *f_;
    if (f.q() == 2 && cols_ <= 64) {
        std::vector<uint64_t> packed(rows_, 0);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (at(r, c)) packed[r] |= 1ull << c;
        std::vector<int> pivots = rref_packed(packed, cols_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) set(r, c, (packed[r] >> c) & 1);
        return pivots;
    }

    std::vector<int> pivots;
    int next = 0;
    for (int c = 0; c < cols_ && next < rows_; ++c) {
        int sel = next;
        while (sel < rows_ && at(sel, c) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != next)
            for (int j = 0; j < cols_; ++j) std::swap(a_[size_t(sel) * cols_ + j], a_[size_t(next) * cols_ + j]);
        uint8_t inv = f.inv(at(next, c));
        for (int j = 0; j < cols_; ++j) set(next, j, f.mul(at(next, j), inv));
        for (int r = 0; r < rows_; ++r) {
            if (r == next) continue;
            uint8_t factor = at(r, c);
            if (factor == 0) continue;
            for (int j = 0; j < cols_; ++j)
                set(r, j, f.sub(at(r, j), f.mul(factor, at(next, j))));
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

int FqMatrix::rank() const {
    FqMatrix copy = *this;
    return int(copy.rref().size());
}

FqMatrix FqMatrix::multiplied_by(const FqMatrix& rhs) const {
    require(f_ == rhs.f_, Errc::FieldMismatch, "matrix product of different fields");
    require(cols_ == rhs.rows_, Errc::ShapeMismatch, "inner dimensions differ");
    const Field& f = *f_;
    FqMatrix out(f, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            uint8_t aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                uint8_t p = f.mul(aik, rhs.at(k, j));
                out.set(i, j, f.add(out.at(i, j), p));
            }
        }
    }
    return out;
}

FqMatrix FqMatrix::transposed() const {
    FqMatrix out(*f_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    return out;
}

FqMatrix FqMatrix::stacked(const FqMatrix& below) const {
    require(f_ == below.f_, Errc::FieldMismatch, "stacking matrices over different fields");
    require(cols_ == below.cols_, Errc::ShapeMismatch, "stacking needs equal column counts");
    FqMatrix out(*f_, rows_ + below.rows_, cols_);
    std::copy(a_.begin(), a_.end(), out.a_.begin());
    std::copy(below.a_.begin(), below.a_.end(), out.a_.begin() + a_.size());
    return out;
}

FqMatrix FqMatrix::identity(const Field& f, int n) {
    FqMatrix out(f, n, n);
    for (int i = 0; i < n; ++i) out.set(i, i, 1);
    return out;
}

bool FqMatrix::is_zero() const {
    for (uint8_t v : a_)
        if (v) return false;
    return true;
}

bool FqMatrix::operator<(const FqMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return a_ < o.a_;
}

int hamming_distance(const PivotVector& a, const PivotVector& b) {
    return __builtin_popcountll(a.bits ^ b.bits);
}

Subspace Subspace::from_rows(const FqMatrix& rows) {
    FqMatrix m = rows;
    std::vector<int> pivots = m.rref();
    Subspace s;
    s.basis_ = FqMatrix(rows.field(), int(pivots.size()), rows.cols());
    for (int r = 0; r < int(pivots.size()); ++r)
        for (int c = 0; c < rows.cols(); ++c) s.basis_.set(r, c, m.at(r, c));
    s.pivots_ = std::move(pivots);
    return s;
}

Subspace Subspace::zero(const Field& f, int v) {
    Subspace s;
    s.basis_ = FqMatrix(f, 0, v);
    return s;
}

bool Subspace::contains(const Subspace& other) const {
    require(&field() == &other.field() && ambient_dim() == other.ambient_dim(),
            Errc::AmbientMismatch, "containment in different ambient spaces");
    return sum_dim(*this, other) == dim();
}

Subspace sum(const Subspace& u, const Subspace& w) {
    require(&u.field() == &w.field() && u.ambient_dim() == w.ambient_dim(),
            Errc::AmbientMismatch, "sum of subspaces of different spaces");
    return Subspace::from_rows(u.basis().stacked(w.basis()));
}

int sum_dim(const Subspace& u, const Subspace& w) {
    require(&u.field() == &w.field() && u.ambient_dim() == w.ambient_dim(),
            Errc::AmbientMismatch, "subspaces of different spaces");
    return u.basis().stacked(w.basis()).rank();
}

int intersection_dim(const Subspace& u, const Subspace& w) {
    return u.dim() + w.dim() - sum_dim(u, w);
}

int subspace_distance(const Subspace& u, const Subspace& w) {
    int s = sum_dim(u, w);
    int i = u.dim() + w.dim() - s;
    return s - i;
}

PivotVector pivot_vector(const Subspace& u) {
    require(u.ambient_dim() <= 64, Errc::Precondition, "pivot vector limited to v <= 64");
    PivotVector p;
    p.length = u.ambient_dim();
    for (int c : u.pivots()) p.bits |= 1ull << c;
    return p;
}

Subspace special_flat(const Field& f, int v, int k) {
    require(0 <= k && k <= v, Errc::Precondition, "special flat needs 0 <= k <= v");
    FqMatrix rows(f, v - k, v);
    for (int r = 0; r < v - k; ++r) rows.set(r, k + r, 1);
    return Subspace::from_rows(rows);
}

bool intersects_trivially(const Subspace& u, const Subspace& w) {
    return intersection_dim(u, w) == 0;
}

Subspace select_subspace(const Subspace& u, int m) {
    require(0 <= m && m <= u.dim(), Errc::DimensionTooLarge,
            "selected dimension exceeds dim of the subspace");
    FqMatrix rows(u.field(), m, u.ambient_dim());
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < u.ambient_dim(); ++c) rows.set(r, c, u.basis().at(r, c));
    return Subspace::from_rows(rows);
}

Subspace complement_through(const Subspace& u) {
    const Field& f = u.field();
    int v = u.ambient_dim();
    FqMatrix work = u.basis();
    int rank = u.dim();
    std::vector<int> added;
    for (int i = 0; i < v && rank < v; ++i) {
        FqMatrix unit(f, 1, v);
        unit.set(0, i, 1);
        FqMatrix trial = work.stacked(unit);
        if (trial.rank() > rank) {
            work = trial;
            ++rank;
            added.push_back(i);
        }
    }
    FqMatrix rows(f, int(added.size()), v);
    for (int r = 0; r < int(added.size()); ++r) rows.set(r, added[r], 1);
    return Subspace::from_rows(rows);
}

Subspace orthogonal_complement(const Subspace& u) {
    const Field& f = u.field();
    int v = u.ambient_dim();
    int k = u.dim();
    if (k == 0) return Subspace::from_rows(FqMatrix::identity(f, v));
    // Kernel of the basis matrix: free columns parameterize the nullspace.
    const FqMatrix& b = u.basis();
    const std::vector<int>& piv = u.pivots();
    std::vector<bool> is_pivot(v, false);
    for (int c : piv) is_pivot[c] = true;
    FqMatrix rows(f, v - k, v);
    int r = 0;
    for (int c = 0; c < v; ++c) {
        if (is_pivot[c]) continue;
        rows.set(r, c, 1);
        for (int i = 0; i < k; ++i) rows.set(r, piv[i], f.neg(b.at(i, c)));
        ++r;
    }
    return Subspace::from_rows(rows);
}

std::vector<Subspace> enumerate_subspaces(const Field& f, int v, int k) {
    require(0 <= k && k <= v, Errc::Precondition, "enumerate needs 0 <= k <= v");
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace::zero(f, v));
        return out;
    }

    // Enumerate pivot-column sets, then all free-entry assignments. Free
    // entries: (r, c) with c a non-pivot column right of pivot r.
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    const int q = f.q();
    while (true) {
        std::vector<std::pair<int, int>> free_pos;
        {
            std::vector<bool> is_pivot(v, false);
            for (int c : piv) is_pivot[c] = true;
            for (int r = 0; r < k; ++r)
                for (int c = piv[r] + 1; c < v; ++c)
                    if (!is_pivot[c]) free_pos.emplace_back(r, c);
        }
        FqMatrix m(f, k, v);
        for (int r = 0; r < k; ++r) m.set(r, piv[r], 1);
        size_t n_free = free_pos.size();
        std::vector<uint8_t> assign(n_free, 0);
        while (true) {
            for (size_t i = 0; i < n_free; ++i) m.set(free_pos[i].first, free_pos[i].second, assign[i]);
            Subspace s;
            s = Subspace::from_rows(m);  // already RREF; normalizes cheaply
            out.push_back(std::move(s));
            size_t i = 0;
            while (i < n_free && assign[i] == q - 1) assign[i++] = 0;
            if (i == n_free) break;
            ++assign[i];
        }
        // next pivot combination
        int i = k - 1;
        while (i >= 0 && piv[i] == v - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cdc
