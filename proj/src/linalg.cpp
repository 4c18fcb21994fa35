#include "trmod/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace trmod {

FpMatrix FpMatrix::identity(int n) {
    FpMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void FpMatrix::append_row(std::span<const Coeff> v) {
    if (int(v.size()) != cols_) throw ValidationError("append_row: length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool FpMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Coeff c) { return c == 0; });
}

FpMatrix multiply(const PrimeField& f, const FpMatrix& a, const FpMatrix& b) {
    if (a.cols() != b.rows()) throw ValidationError("multiply: shape mismatch");
    const int p = f.characteristic();
    FpMatrix out(a.rows(), b.cols());
    std::vector<int> acc(b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int k = 0; k < a.cols(); ++k) {
            int aik = a(i, k);
            if (aik == 0) continue;
            auto brow = b.row(k);
            for (int j = 0; j < b.cols(); ++j) acc[j] += aik * brow[j];
        }
        for (int j = 0; j < b.cols(); ++j) out(i, j) = static_cast<Coeff>(acc[j] % p);
    }
    return out;
}

std::vector<int> rref(const PrimeField& f, FpMatrix& m) {
    const int p = f.characteristic();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r) {
            auto a = m.row(sel), b = m.row(r);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto prow = m.row(r);
        Coeff s = f.inv(prow[c]);
        if (s != 1)
            for (int j = c; j < m.cols(); ++j) prow[j] = f.mul(prow[j], s);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            int factor = p - m(i, c);
            auto irow = m.row(i);
            for (int j = c; j < m.cols(); ++j)
                if (prow[j] != 0) irow[j] = static_cast<Coeff>((irow[j] + factor * prow[j]) % p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const PrimeField& f, FpMatrix m) { return int(rref(f, m).size()); }

FpMatrix nullspace(const PrimeField& f, const FpMatrix& m) {
    FpMatrix e = m;
    auto pivots = rref(f, e);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int c : pivots) is_pivot[c] = 1;
    FpMatrix out(0, m.cols());
    std::vector<Coeff> v(m.cols());
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(e(int(i), free));
        out.append_row(v);
    }
    return out;
}

std::optional<std::vector<Coeff>> solve(const PrimeField& f, const FpMatrix& a, std::span<const Coeff> b) {
    if (int(b.size()) != a.rows()) throw ValidationError("solve: length mismatch");
    FpMatrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = rref(f, aug);
    std::vector<Coeff> x(a.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == a.cols()) return std::nullopt;
        x[pivots[i]] = aug(int(i), a.cols());
    }
    return x;
}

std::optional<FpMatrix> inverse(const PrimeField& f, const FpMatrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    const int n = a.rows();
    FpMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(f, aug);
    if (int(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
    FpMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

bool is_invertible(const PrimeField& f, const FpMatrix& a) {
    return a.rows() == a.cols() && rank(f, a) == a.rows();
}

const std::vector<FpMatrix>& general_linear(const PrimeField& f, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<FpMatrix>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(f.characteristic(), n);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const int p = f.characteristic();
    long long total = 1;
    for (int k = 0; k < n * n; ++k) {
        total *= p;
        if (total > 1'000'000) throw BudgetExceeded("general_linear: group too large to enumerate");
    }
    std::vector<FpMatrix> out;
    FpMatrix m(n, n);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int k = 0; k < n * n; ++k) {
            m(k / n, k % n) = static_cast<Coeff>(c % p);
            c /= p;
        }
        if (is_invertible(f, m)) out.push_back(m);
    }
    return cache.emplace(key, std::move(out)).first->second;
}

void Subspace::reduce(std::span<Coeff> v) const {
    const int p = f_.characteristic();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        int c = pivots_[i];
        if (v[c] == 0) continue;
        int factor = p - v[c];
        auto brow = basis_.row(int(i));
        for (int j = c; j < basis_.cols(); ++j)
            if (brow[j] != 0) v[j] = static_cast<Coeff>((v[j] + factor * brow[j]) % p);
    }
}

bool Subspace::contains(std::span<const Coeff> v) const {
    std::vector<Coeff> w(v.begin(), v.end());
    reduce(w);
    return std::all_of(w.begin(), w.end(), [](Coeff c) { return c == 0; });
}

bool Subspace::insert(std::span<const Coeff> v) {
    if (int(v.size()) != ambient()) throw ValidationError("Subspace::insert: length mismatch");
    std::vector<Coeff> w(v.begin(), v.end());
    reduce(w);
    auto lead = std::find_if(w.begin(), w.end(), [](Coeff c) { return c != 0; });
    if (lead == w.end()) return false;
    const int c = int(lead - w.begin());
    const int p = f_.characteristic();
    Coeff s = f_.inv(*lead);
    for (auto& x : w) x = f_.mul(x, s);
    // keep the basis fully reduced in the new pivot column
    for (int i = 0; i < basis_.rows(); ++i) {
        auto brow = basis_.row(i);
        if (brow[c] == 0) continue;
        int factor = p - brow[c];
        for (int j = c; j < basis_.cols(); ++j)
            if (w[j] != 0) brow[j] = static_cast<Coeff>((brow[j] + factor * w[j]) % p);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c);
    const int at = int(pos - pivots_.begin());
    pivots_.insert(pos, c);
    FpMatrix nb(0, basis_.cols());
    for (int i = 0; i < basis_.rows(); ++i) {
        if (i == at) nb.append_row(w);
        nb.append_row(basis_.row(i));
    }
    if (at == basis_.rows()) nb.append_row(w);
    basis_ = std::move(nb);
    return true;
}

Subspace Subspace::row_space(const PrimeField& f, const FpMatrix& m) {
    Subspace s(f, m.cols());
    FpMatrix e = m;
    auto pivots = rref(f, e);
    s.pivots_ = pivots;
    FpMatrix b(0, m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) b.append_row(e.row(int(i)));
    s.basis_ = std::move(b);
    return s;
}

}  // namespace trmod
