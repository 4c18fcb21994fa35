#pragma once

#include <array>
#include <cstdint>

#include "trmod/error.hpp"

namespace trmod {

using Coeff = std::uint8_t;

/// Prime field F_p for small p (p < 256). Elements are stored as residues in
/// [0, p) and every operation reduces immediately.
class PrimeField {
public:
    explicit PrimeField(int p);

    int characteristic() const noexcept { return p_; }

    Coeff add(Coeff a, Coeff b) const noexcept {
        int s = a + b;
        return static_cast<Coeff>(s >= p_ ? s - p_ : s);
    }
    Coeff sub(Coeff a, Coeff b) const noexcept {
        int s = a - b;
        return static_cast<Coeff>(s < 0 ? s + p_ : s);
    }
    Coeff neg(Coeff a) const noexcept { return static_cast<Coeff>(a == 0 ? 0 : p_ - a); }
    Coeff mul(Coeff a, Coeff b) const noexcept {
        return static_cast<Coeff>((static_cast<unsigned>(a) * b) % static_cast<unsigned>(p_));
    }
    Coeff inv(Coeff a) const;
    Coeff from_int(long long v) const noexcept {
        long long r = v % p_;
        return static_cast<Coeff>(r < 0 ? r + p_ : r);
    }
    // Symmetric representative in (-p/2, p/2], used for printing.
    int to_signed(Coeff a) const noexcept { return a > p_ / 2 ? int(a) - p_ : int(a); }

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

private:
    int p_;
    std::array<Coeff, 256> inverse_{};
};

/// A field element that remembers its characteristic, so mixing F_p and F_q
/// is caught instead of silently producing garbage.
class FieldElement {
public:
    FieldElement(const PrimeField& f, long long v) : p_(f.characteristic()), v_(f.from_int(v)) {}

    int characteristic() const noexcept { return p_; }
    Coeff value() const noexcept { return v_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const { return FieldElement(p_, v_ == 0 ? 0 : p_ - v_); }
    FieldElement inverse() const;

    bool is_zero() const noexcept { return v_ == 0; }
    bool operator==(const FieldElement& o) const noexcept { return p_ == o.p_ && v_ == o.v_; }

private:
    FieldElement(int p, int v) : p_(p), v_(static_cast<Coeff>(v)) {}
    static int check_same(const FieldElement& a, const FieldElement& b);

    int p_;
    Coeff v_;
};

}  // namespace trmod
