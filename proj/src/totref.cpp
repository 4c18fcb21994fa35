#include "trmod/totref.hpp"

#include <algorithm>

#include "trmod/error.hpp"
#include "trmod/filtration.hpp"

namespace trmod {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::Refuted: return "refuted";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(Obstruction o) {
    switch (o) {
        case Obstruction::KSummand: return "k-summand";
        case Obstruction::NonConstantBetti: return "non-constant-betti";
        case Obstruction::ExtModule: return "ext-module";
        case Obstruction::ExtDual: return "ext-dual";
    }
    return "?";
}

namespace {

int lin_rank(const Algebra& A, const Matrix& M) { return rank(A.field(), linearize(A, M)); }

Matrix anti_conjugate(const Matrix& M) {
    Matrix out = M;
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) out.at(i, j) = M.at(M.rows - 1 - i, M.cols - 1 - j);
    return out;
}

bool ut_with_ezd_diagonal(const Algebra& A, const Matrix& M) {
    if (!M.square() || !is_upper_triangular(A, M)) return false;
    for (int i = 0; i < M.rows; ++i) {
        const auto& t = M.at(i, i);
        if (A.is_zero(t) || A.is_unit(t) || !is_exact_zero_divisor(A, t)) return false;
    }
    return true;
}

Matrix next_syzygy(const Algebra& A, const Matrix& D, bool ut) {
    if (ut)
        if (auto W = ut_syzygy(A, D)) return *W;
    return syzygy(A, D);
}

// d_{s-1} from d_s: dual of the syzygy of the transpose.
Matrix previous_differential(const Algebra& A, const Matrix& D, bool ut) {
    if (ut) {
        Matrix U = anti_conjugate(dual(D));
        if (auto W = ut_syzygy(A, U)) return dual(anti_conjugate(*W));
    }
    return dual(syzygy(A, dual(D)));
}

}  // namespace

SpotCheck forward_spot(const Algebra& A, int spot, const Matrix& in, const Matrix& out) {
    if (in.rows != out.cols) throw ValidationError("forward_spot: differentials do not compose");
    return {spot, false, lin_rank(A, in), out.cols * A.dim() - lin_rank(A, out)};
}

SpotCheck dual_spot(const Algebra& A, int spot, const Matrix& out, const Matrix& in) {
    if (in.rows != out.cols) throw ValidationError("dual_spot: differentials do not compose");
    return {spot, true, lin_rank(A, dual(out)), in.rows * A.dim() - lin_rank(A, dual(in))};
}

std::optional<Matrix> ut_syzygy(const Algebra& A, const Matrix& T) {
    if (!T.square() || !is_upper_triangular(A, T)) return std::nullopt;
    const int n = T.rows;
    if (n == 0) return T;
    const RingElement& u = T.at(n - 1, n - 1);
    if (A.is_zero(u) || A.is_unit(u)) return std::nullopt;
    auto partner = exact_zero_divisor_partner(A, u);
    if (!partner) return std::nullopt;
    Matrix W(A, n, n);
    W.at(n - 1, n - 1) = *partner;
    if (n > 1) {
        Matrix lead(A, n - 1, n - 1), f(A, n - 1, 1);
        for (int i = 0; i < n - 1; ++i) {
            for (int j = 0; j < n - 1; ++j) lead.at(i, j) = T.at(i, j);
            f.at(i, 0) = T.at(i, n - 1);
        }
        auto WA = ut_syzygy(A, lead);
        if (!WA) return std::nullopt;
        // lead * g = -f * partner
        std::vector<RingElement> rhs(n - 1);
        for (int i = 0; i < n - 1; ++i) rhs[i] = A.neg(A.mul(f.at(i, 0), *partner));
        FpMatrix L = linearize(A, lead);
        auto g = solve(A.field(), L, to_coords(A, rhs));
        if (!g) return std::nullopt;
        Subspace ker = Subspace::row_space(A.field(), nullspace(A.field(), L));
        ker.reduce(*g);
        auto gcol = from_coords(A, *g, n - 1);
        for (int i = 0; i < n - 1; ++i) {
            for (int j = 0; j < n - 1; ++j) W.at(i, j) = WA->at(i, j);
            W.at(i, n - 1) = gcol[i];
        }
    }
    Matrix prod = multiply(A, T, W);
    if (std::any_of(prod.entries.begin(), prod.entries.end(), [&](const RingElement& e) { return !A.is_zero(e); }))
        return std::nullopt;
    if (lin_rank(A, W) != n * A.dim() - lin_rank(A, T)) return std::nullopt;
    if (!is_strictly_minimal(A, W)) return std::nullopt;
    return W;
}

namespace {

// Verifies the loop d_1..d_L (successor of d_L is d_{pre+1}) and the backward
// continuation; appends every check to the log. Returns the first failure.
std::optional<Refutation> verify_window(const Algebra& A, TRCertificate& cert) {
    const int L = int(cert.forward.size());
    auto succ = [&](int k) -> const Matrix& {  // d_{k+1} for 1-based k
        return k < L ? cert.forward[k] : cert.forward[cert.preperiod];
    };
    for (int k = 1; k <= L; ++k) {
        const Matrix& dk = cert.forward[k - 1];
        const Matrix& dn = succ(k);
        if (!is_minimal(A, dn)) throw Error("certificate differential is not minimal");
        Matrix prod = multiply(A, dk, dn);
        if (std::any_of(prod.entries.begin(), prod.entries.end(), [&](const RingElement& e) { return !A.is_zero(e); }))
            throw Error("certificate differentials do not compose to zero");
        SpotCheck fw = forward_spot(A, k, dn, dk);
        SpotCheck dl = dual_spot(A, k, dk, dn);
        cert.log.push_back(fw);
        cert.log.push_back(dl);
        if (!fw.ok()) throw Error("forward exactness failed inside a computed resolution");
        if (!dl.ok()) return Refutation{Obstruction::ExtModule, k, dk, {}, "Ext^" + std::to_string(k) + "(M,R) != 0"};
    }
    return std::nullopt;
}

std::optional<Refutation> grow_backward(const Algebra& A, TRCertificate& cert, int steps, bool ut) {
    Matrix cur = cert.forward.front();
    for (int s = 0; s > -steps; --s) {
        Matrix prev = previous_differential(A, cur, ut);
        cert.backward.push_back(prev);
        SpotCheck fw = forward_spot(A, s, cur, prev);
        SpotCheck dl = dual_spot(A, s, prev, cur);
        cert.log.push_back(fw);
        cert.log.push_back(dl);
        if (!dl.ok()) throw Error("dual exactness failed inside a computed resolution");
        if (!fw.ok()) {
            std::string what = s == 0 ? "M is not reflexive" : "Ext^" + std::to_string(-s) + "(M*,R) != 0";
            return Refutation{Obstruction::ExtDual, -s, prev, {}, what};
        }
        cur = prev;
    }
    return std::nullopt;
}

void finish_invariants(const Algebra& A, TRCertificate& cert) {
    const int n = cert.module.rows;
    cert.betti = {n};
    for (const auto& d : cert.forward) cert.betti.push_back(d.cols);
    cert.betti_constant = std::all_of(cert.betti.begin(), cert.betti.end(), [&](int b) { return b == n; });
    cert.length = coker_length(A, cert.module);
    cert.length_is_ne = cert.length == n * A.embedding_dim();
}

}  // namespace

TRCertificate check_totally_reflexive(const Algebra& A, const Matrix& M, int depth) {
    if (depth < 1) throw ValidationError("depth must be at least 1");
    check_matrix(A, M);
    TRCertificate cert;
    cert.depth = depth;
    cert.gorenstein = ring_preconditions(A).gorenstein;
    Matrix T = strip_free_summands(A, M);
    cert.free_rank = minimize(A, M).rows - T.rows;
    cert.module = T;
    if (T.rows == 0) {
        cert.verdict = Verdict::Certified;
        cert.note = "free module";
        cert.betti_constant = true;
        cert.length_is_ne = true;
        return cert;
    }
    const int n = T.rows;
    const bool ut = ut_with_ezd_diagonal(A, T);

    std::vector<Matrix> d{T};
    auto refute = [&](Refutation r) {
        cert.verdict = Verdict::Refuted;
        cert.refutation = std::move(r);
        cert.forward = d;
        return cert;
    };
    for (int step = 1; step <= depth; ++step) {
        const Matrix D = d[step - 1];
        if (!cert.gorenstein) {
            if (auto q = m2_column(A, D))
                return refute({Obstruction::KSummand, step, D, *q, "a minimal generator of the image lies in m^2"});
            if (D.rows != n || D.cols != n)
                return refute({Obstruction::NonConstantBetti, step, D, {},
                               "differential is " + std::to_string(D.rows) + "x" + std::to_string(D.cols)});
        }
        Matrix next = next_syzygy(A, D, ut);
        SpotCheck dl = dual_spot(A, step, D, next);
        if (!dl.ok()) {
            cert.log.push_back(dl);
            return refute({Obstruction::ExtModule, step, D, {}, "Ext^" + std::to_string(step) + "(M,R) != 0"});
        }
        auto hit = std::find(d.begin(), d.end(), next);
        if (hit != d.end()) {
            cert.preperiod = int(hit - d.begin());
            cert.period = step - cert.preperiod;
            cert.forward = d;
            break;
        }
        d.push_back(std::move(next));
    }

    if (cert.period == 0) {
        // no literal repetition: look for one up to equivalence
        Budget budget;
        try {
            for (int j = 1; j < int(d.size()) && cert.period == 0; ++j)
                for (int i = 0; i < j; ++i) {
                    if (d[i].rows != d[j].rows || d[i].cols != d[j].cols) continue;
                    auto w = is_equivalent(A, d[i], d[j], budget);
                    if (!w) continue;
                    cert.forward.assign(d.begin(), d.begin() + j);
                    cert.forward.back() = multiply(A, cert.forward.back(), w->P);
                    cert.preperiod = i;
                    cert.period = j - i;
                    cert.spliced = true;
                    break;
                }
        } catch (const BudgetExceeded& e) {
            cert.note = std::string("equivalence search stopped: ") + e.what();
        }
    }
    if (cert.period == 0) {
        cert.verdict = Verdict::Inconclusive;
        cert.forward = d;
        if (cert.note.empty()) cert.note = "no repetition within depth " + std::to_string(depth);
        finish_invariants(A, cert);
        return cert;
    }

    if (auto r = verify_window(A, cert)) {
        cert.verdict = Verdict::Refuted;
        cert.refutation = r;
        return cert;
    }
    if (auto r = grow_backward(A, cert, int(cert.forward.size()), ut)) {
        cert.verdict = Verdict::Refuted;
        cert.refutation = r;
        return cert;
    }
    cert.verdict = Verdict::Certified;
    finish_invariants(A, cert);
    return cert;
}

bool replay(const Algebra& A, const TRCertificate& cert) {
    try {
        if (cert.verdict == Verdict::Inconclusive) return true;
        if (cert.verdict == Verdict::Certified) {
            if (cert.module.rows == 0) return true;
            if (cert.forward.empty() || cert.forward.front() != cert.module) return false;
            TRCertificate copy = cert;
            copy.log.clear();
            copy.backward.clear();
            if (verify_window(A, copy)) return false;
            const int L = int(cert.forward.size());
            for (int k = 1; k <= L; ++k) {
                const Matrix& dn = k < L ? cert.forward[k] : cert.forward[cert.preperiod];
                if (!forward_spot(A, k, dn, cert.forward[k - 1]).ok()) return false;
            }
            Matrix cur = cert.forward.front();
            for (std::size_t s = 0; s < cert.backward.size(); ++s) {
                const Matrix& prev = cert.backward[s];
                if (!forward_spot(A, -int(s), cur, prev).ok() || !dual_spot(A, -int(s), prev, cur).ok()) return false;
                cur = prev;
            }
            return true;
        }
        if (!cert.refutation) return false;
        const Refutation& r = *cert.refutation;
        const Matrix& D = r.differential;
        if (r.kind != Obstruction::ExtDual) {
            // the offending differential must be the one the resolution produces
            const bool ut = ut_with_ezd_diagonal(A, cert.module);
            if (cert.forward.empty() || cert.forward.front() != cert.module) return false;
            for (std::size_t k = 0; k + 1 < cert.forward.size(); ++k)
                if (next_syzygy(A, cert.forward[k], ut) != cert.forward[k + 1]) return false;
            if (r.step < 1 || r.step > int(cert.forward.size()) || cert.forward[r.step - 1] != D) return false;
        }
        switch (r.kind) {
            case Obstruction::KSummand: {
                if (cert.gorenstein || int(r.combination.size()) != D.cols) return false;
                Matrix q(A, D.cols, 1);
                for (int j = 0; j < D.cols; ++j) q.at(j, 0) = A.scalar(r.combination[j]);
                Matrix c = multiply(A, D, q);
                for (const auto& e : c.entries)
                    if (!A.in_m2(e)) return false;
                Subspace m_im = maximal_ideal_times(A, image(A, D), D.rows);
                return !m_im.contains(column_coords(A, c, 0));
            }
            case Obstruction::NonConstantBetti:
                return !cert.gorenstein && (D.rows != cert.module.rows || D.cols != cert.module.rows);
            case Obstruction::ExtModule:
                return !dual_spot(A, r.step, D, syzygy(A, D)).ok();
            case Obstruction::ExtDual: {
                const Matrix& next = r.step == 0 ? cert.forward.front() : cert.backward.at(r.step - 1);
                return !forward_spot(A, -r.step, next, D).ok();
            }
        }
    } catch (const Error&) {
        return false;
    }
    return false;
}

UTReport check_ut_tr(const Algebra& A, const Matrix& M, bool cross_validate) {
    check_matrix(A, M);
    if (!M.square() || !is_upper_triangular(A, M))
        throw ValidationError("check_ut_tr expects a square upper triangular matrix");
    if (!is_minimal(A, M)) throw ValidationError("check_ut_tr expects a minimal matrix");
    UTReport rep;
    Matrix T = M;
    if (!is_strictly_minimal(A, M) || free_rank(A, M) > 0) {
        T = strip_free_summands(A, minimize(A, M));
        rep.reduced = T;
        if (!T.square()) {
            rep.note = "minimal presentation is not square, so the Betti numbers are not constant";
            if (cross_validate)
                rep.cross_check = check_totally_reflexive(A, M).verdict != Verdict::Certified;
            return rep;
        }
        if (!is_upper_triangular(A, T)) {
            auto search = find_ut_form(A, T);
            if (!search.found) throw ValidationError("the minimal presentation of coker M has no upper triangular form");
            T = *search.form;
            rep.reduced = T;
        }
    }
    rep.totally_reflexive = true;
    for (int i = 0; i < T.rows; ++i) {
        const auto& t = T.at(i, i);
        rep.diagonal.push_back(t);
        std::optional<RingElement> partner;
        if (!A.is_zero(t)) partner = exact_zero_divisor_partner(A, t);
        rep.partners.push_back(partner);
        if (!partner) rep.totally_reflexive = false;
    }
    if (cross_validate)
        rep.cross_check = (check_totally_reflexive(A, M).verdict == Verdict::Certified) == rep.totally_reflexive;
    return rep;
}

CompleteResolution complete_resolution(const Algebra& A, const Matrix& M, int window) {
    if (window < 1) throw ValidationError("window must be at least 1");
    TRCertificate cert = check_totally_reflexive(A, M);
    if (cert.verdict != Verdict::Certified)
        throw Error("complete_resolution: the module is not certified totally reflexive");
    CompleteResolution out;
    out.preperiod = cert.preperiod;
    out.period = cert.period;
    if (cert.module.rows == 0) return out;
    const int L = int(cert.forward.size());
    for (int k = 0; k < window; ++k)
        out.forward.push_back(k < L ? cert.forward[k] : cert.forward[cert.preperiod + (k - L) % cert.period]);
    const bool ut = ut_with_ezd_diagonal(A, cert.module);
    Matrix cur = cert.forward.front();
    for (int k = 0; k < window; ++k) {
        if (k < int(cert.backward.size()))
            cur = cert.backward[k];
        else
            cur = previous_differential(A, cur, ut);
        out.backward.push_back(cur);
    }
    return out;
}

}  // namespace trmod
