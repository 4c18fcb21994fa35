#include "trmod/expr.hpp"

#include <algorithm>
#include <cctype>

#include "trmod/error.hpp"

namespace trmod {

bool is_identifier(std::string_view name) {
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : vars_(vars) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
        original_ = std::string(text);
    }

    Polynomial parse() {
        Polynomial out;
        if (src_.empty()) fail("empty expression");
        bool first = true;
        while (pos_ < src_.size()) {
            long long sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Term t = term();
            t.coeff *= sign;
            out.push_back(std::move(t));
            first = false;
        }
        return out;
    }

private:
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    char get() { return src_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse expression '" + original_ + "': " + what + " at offset " +
                         std::to_string(pos_));
    }

    long long integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > (1LL << 40)) fail("integer literal too large");
        }
        return v;
    }

    Term term() {
        Term t;
        t.exponents.assign(vars_.size(), 0);
        factor(t);
        while (peek() == '*') {
            get();
            factor(t);
        }
        return t;
    }

    void factor(Term& t) {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff *= integer();
            return;
        }
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        std::string name = src_.substr(start, pos_ - start);
        if (name.empty()) fail("expected variable or integer");
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) fail("unknown variable '" + name + "'");
        int power = 1;
        if (peek() == '^') {
            get();
            power = int(integer());
        }
        t.exponents[it - vars_.begin()] += power;
    }

    const std::vector<std::string>& vars_;
    std::string src_;
    std::string original_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
    return Parser(text, variables).parse();
}

}  // namespace trmod
