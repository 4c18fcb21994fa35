#include "trmod/field.hpp"

#include <string>

namespace trmod {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(int p) : p_(p) {
    if (!is_prime(p) || p > 251)
        throw ValidationError("characteristic must be a prime below 256, got " + std::to_string(p));
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b)
            if ((a * b) % p == 1) {
                inverse_[a] = static_cast<Coeff>(b);
                break;
            }
}

Coeff PrimeField::inv(Coeff a) const {
    if (a == 0) throw Error("division by zero in F_p");
    return inverse_[a];
}

int FieldElement::check_same(const FieldElement& a, const FieldElement& b) {
    if (a.p_ != b.p_)
        throw ValidationError("mixed characteristics: F_" + std::to_string(a.p_) + " and F_" +
                              std::to_string(b.p_));
    return a.p_;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    int p = FieldElement::check_same(a, b);
    return FieldElement(p, (a.v_ + b.v_) % p);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    int p = FieldElement::check_same(a, b);
    return FieldElement(p, (a.v_ + p - b.v_) % p);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    int p = FieldElement::check_same(a, b);
    return FieldElement(p, (a.v_ * b.v_) % p);
}

FieldElement FieldElement::inverse() const {
    if (v_ == 0) throw Error("division by zero in F_p");
    for (int b = 1; b < p_; ++b)
        if ((v_ * b) % p_ == 1) return FieldElement(p_, b);
    throw Error("division by zero in F_p");  // unreachable for prime p
}

}  // namespace trmod
