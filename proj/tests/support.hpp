#pragma once

#include <string>

#include "trmod/io.hpp"

namespace trmod::test {

inline const Algebra& S(int p) {
    static const Algebra s2 = Algebra::standard_s(2);
    static const Algebra s3 = Algebra::standard_s(3);
    static const Algebra s5 = Algebra::standard_s(5);
    switch (p) {
        case 2: return s2;
        case 3: return s3;
        case 5: return s5;
    }
    throw ValidationError("no cached S(p) for this p");
}

inline RingElement el(const Algebra& A, const std::string& s) { return A.parse(s); }
inline Matrix mat(const Algebra& A, const std::string& s) { return parse_matrix(A, std::string_view(s)); }
inline std::string str(const Algebra& A, const Matrix& M) { return to_string(A, M); }

// Every element of m (constant term zero) of S(p), in code order.
inline std::vector<RingElement> maximal_ideal(const Algebra& A) {
    const int p = A.characteristic();
    const int n = A.dim() - 1;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    std::vector<RingElement> out;
    for (long long code = 0; code < total; ++code) {
        RingElement r = A.zero();
        long long c = code;
        for (int i = 1; i <= n; ++i) {
            r.c[i] = static_cast<Coeff>(c % p);
            c /= p;
        }
        out.push_back(r);
    }
    return out;
}

// Degree-1 elements, code order, zero included.
inline std::vector<RingElement> linear_forms(const Algebra& A) {
    std::vector<RingElement> out;
    for (auto& r : maximal_ideal(A))
        if (A.is_zero(A.degree_part(r, 2))) out.push_back(r);
    return out;
}

}  // namespace trmod::test
