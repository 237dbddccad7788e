#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "skeinforge/common.hpp"

namespace skeinforge {

// Element of Z[zeta] where zeta = exp(i*pi/8) is a primitive 16th root of
// unity.  Coefficient vector c0 + c1*zeta + ... + c7*zeta^7, reduced by
// zeta^8 = -1.
class CycInt {
public:
    CycInt() { coeff_.fill(0); }
    explicit CycInt(Int c0) {
        coeff_.fill(0);
        coeff_[0] = std::move(c0);
    }
    explicit CycInt(std::array<Int, 8> c) : coeff_(std::move(c)) {}

    static CycInt zeta_pow(long long k);  // zeta^k for any integer k

    const Int& operator[](int i) const { return coeff_[i]; }
    Int& operator[](int i) { return coeff_[i]; }
    const std::array<Int, 8>& coeffs() const { return coeff_; }

    bool is_zero() const;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator*(const Int& k) const;
    bool operator==(const CycInt& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    // gcd of all coefficients (0 for the zero element)
    Int content() const;

private:
    std::array<Int, 8> coeff_;
};

// Element of Q(zeta): CycInt numerator over a positive integer denominator,
// kept in normal form (gcd(den, content(num)) == 1, den > 0).  Two values
// are equal iff their fields are equal.
class CycNum {
public:
    CycNum() : num_(), den_(1) {}
    CycNum(Int c) : num_(std::move(c)), den_(1) {}            // NOLINT(implicit)
    CycNum(long long c) : num_(Int(c)), den_(1) {}            // NOLINT(implicit)
    explicit CycNum(CycInt n) : num_(std::move(n)), den_(1) {}
    CycNum(CycInt n, Int d);  // normalizes; throws EngineError on d == 0

    static CycNum zeta_pow(long long k) { return CycNum(CycInt::zeta_pow(k)); }
    static CycNum i() { return zeta_pow(4); }
    static CycNum half() { return CycNum(CycInt(Int(1)), Int(2)); }

    const CycInt& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator-() const;
    CycNum operator*(const CycNum& o) const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
    bool operator==(const CycNum& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    // Multiplicative inverse, found by solving the 8x8 linear system for
    // multiplication by *this.  Throws EngineError on zero.
    CycNum inverse() const;
    CycNum pow(long long k) const;

    std::string to_string() const;  // "c0 + c1*z + ..." with "/ den" suffix
    std::string to_json() const;    // {"num":[...8 ints...],"den":d}

private:
    void normalize();

    CycInt num_;
    Int den_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

// Parses {"num":[8 ints],"den":int}; accepts string-encoded big integers.
CycNum parse_cyc_json(const std::string& text);

}  // namespace skeinforge
