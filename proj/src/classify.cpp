#include "trmod/classify.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "trmod/error.hpp"

namespace trmod {

CyclicTR enumerate_cyclic_tr(const Algebra& A) {
    CyclicTR out;
    if (ring_preconditions(A).gorenstein)
        out.warnings.push_back("Gorenstein ring: every module is totally reflexive; the classification is exploratory");
    for (const auto& pair : enumerate_ezd(A)) out.generators.push_back(pair.a());
    return out;
}

std::vector<RingElement> superdiagonal_candidates(const Algebra& A) {
    const int p = A.characteristic();
    const int e = A.embedding_dim();
    std::vector<RingElement> out;
    long long total = 1;
    for (int k = 1; k < e; ++k) total *= p;
    RingElement a = A.zero();
    for (long long code = 1; code < total; ++code) {
        long long c = code;
        for (int k = 1; k < e; ++k) {
            a.c[1 + k] = static_cast<Coeff>(c % p);
            c /= p;
        }
        out.push_back(a);
    }
    return out;
}

Matrix ut2(const Algebra& A, const RingElement& u, const RingElement& a, const RingElement& t) {
    Matrix M(A, 2, 2);
    M.at(0, 0) = u;
    M.at(0, 1) = a;
    M.at(1, 1) = t;
    return M;
}

bool ut2_less(const Algebra& A, const Matrix& X, const Matrix& Y) {
    auto key = [&](const Matrix& M) {
        return std::array<long long, 3>{A.code(M.at(0, 0)), A.code(M.at(1, 1)), A.code(M.at(0, 1))};
    };
    return key(X) < key(Y);
}

std::vector<RingElement> ClassTable::cell(const RingElement& u, const RingElement& t) const {
    std::vector<RingElement> out;
    for (const auto& c : classes)
        if (c.u == u && c.t == t) out.push_back(c.a);
    return out;
}

ClassTable classify_ut2(const Algebra& A, Budget& budget, int jobs, const std::vector<int>& order) {
    ClassTable table;
    table.characteristic = A.characteristic();
    table.diagonal = enumerate_cyclic_tr(A).generators;
    const auto tops = superdiagonal_candidates(A);

    std::vector<Matrix> all;
    for (const auto& u : table.diagonal)
        for (const auto& t : table.diagonal)
            for (const auto& a : tops) all.push_back(ut2(A, u, a, t));
    table.enumerated = int(all.size());
    if (!order.empty()) {
        if (order.size() != all.size()) throw ValidationError("classify_ut2: order has the wrong size");
        std::vector<Matrix> permuted;
        for (int k : order) permuted.push_back(all.at(k));
        all = std::move(permuted);
    }

    std::vector<char> keep(all.size(), 0);
    auto filter = [&](std::size_t lo, std::size_t hi) {
        Budget local{budget.limit, 0};
        for (std::size_t k = lo; k < hi; ++k) keep[k] = is_indecomposable(A, all[k], local).indecomposable;
        return local.used;
    };
    jobs = std::max(1, jobs);
    std::vector<std::future<long long>> parts;
    const std::size_t chunk = (all.size() + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
        std::size_t lo = j * chunk, hi = std::min(all.size(), lo + chunk);
        if (lo >= hi) break;
        parts.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, filter, lo, hi));
    }
    for (auto& f : parts) budget.spend(f.get(), "classify_ut2");

    std::vector<Matrix> indec;
    for (std::size_t k = 0; k < all.size(); ++k)
        if (keep[k]) indec.push_back(all[k]);
    table.indecomposable = int(indec.size());

    std::vector<std::vector<int>> invariants;
    for (const auto& M : indec) {
        auto inv = equivalence_invariant(A, M);
        std::size_t found = table.classes.size();
        for (std::size_t c = 0; c < table.classes.size(); ++c) {
            if (invariants[c] != inv) continue;
            if (is_equivalent(A, table.classes[c].representative, M, budget)) {
                found = c;
                break;
            }
        }
        if (found == table.classes.size()) {
            table.classes.push_back({M, M.at(0, 0), M.at(1, 1), M.at(0, 1), {M}});
            invariants.push_back(inv);
        } else {
            auto& cls = table.classes[found];
            cls.members.push_back(M);
            if (ut2_less(A, M, cls.representative)) {
                cls.representative = M;
                cls.u = M.at(0, 0);
                cls.t = M.at(1, 1);
                cls.a = M.at(0, 1);
            }
        }
    }
    std::sort(table.classes.begin(), table.classes.end(),
              [&](const IsoClass& x, const IsoClass& y) { return ut2_less(A, x.representative, y.representative); });
    table.budget_used = budget.used;
    return table;
}

ClassTable classify_ut2(const Algebra& A) {
    Budget b;
    return classify_ut2(A, b);
}

std::string render_table(const Algebra& A, const ClassTable& table) {
    std::vector<std::string> head{"u \\ t"};
    for (const auto& t : table.diagonal) head.push_back(A.format(t));
    std::vector<std::vector<std::string>> rows{head};
    for (const auto& u : table.diagonal) {
        std::vector<std::string> row{A.format(u)};
        for (const auto& t : table.diagonal) {
            std::string cell;
            for (const auto& a : table.cell(u, t)) cell += (cell.empty() ? "" : ", ") + A.format(a);
            row.push_back(cell.empty() ? "-" : cell);
        }
        rows.push_back(row);
    }
    std::vector<std::size_t> width(head.size(), 0);
    for (const auto& r : rows)
        for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
    std::string out;
    for (const auto& r : rows) {
        for (std::size_t k = 0; k < r.size(); ++k) {
            out += r[k];
            if (k + 1 < r.size()) out += std::string(width[k] - r[k].size() + 3, ' ');
        }
        out += "\n";
    }
    out += std::to_string(table.classes.size()) + " classes\n";
    return out;
}

SwapReport swap_isomorphism_check(const Algebra& A, Budget& budget) {
    SwapReport rep;
    const auto diag = enumerate_cyclic_tr(A).generators;
    const auto tops = superdiagonal_candidates(A);
    for (const auto& u : diag)
        for (const auto& t : diag) {
            if (u == t) continue;
            for (const auto& a : tops) {
                Matrix M = ut2(A, u, a, t);
                if (!is_indecomposable(A, M, budget).indecomposable) continue;
                bool iso = is_equivalent(A, M, ut2(A, t, a, u), budget).has_value();
                rep.cases.push_back({u, a, t, iso});
                rep.isomorphic += iso;
            }
        }
    return rep;
}

SwapReport swap_isomorphism_check(const Algebra& A) {
    Budget b;
    return swap_isomorphism_check(A, b);
}

}  // namespace trmod
