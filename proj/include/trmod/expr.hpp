#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace trmod {

/// One term `c * v1^e1 * v2^e2 ...` with an integer coefficient; exponents are
/// indexed by variable position.
struct Term {
    long long coeff = 1;
    std::vector<int> exponents;

    int degree() const noexcept {
        int d = 0;
        for (int e : exponents) d += e;
        return d;
    }
};

using Polynomial = std::vector<Term>;

// Grammar: sums of terms `c*m`, c an integer literal, m a product of variables
// with optional `^` powers. Whitespace is ignored. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

bool is_identifier(std::string_view name);

}  // namespace trmod
