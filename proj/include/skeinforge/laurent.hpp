#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "skeinforge/common.hpp"
#include "skeinforge/cyclo.hpp"

namespace skeinforge {

// Sparse bivariate Laurent polynomial over Z.  Terms are keyed by exponent
// pairs ordered lexicographically, which fixes the rendering order.
class Laurent2 {
public:
    using Exp = std::pair<long long, long long>;
    using TermMap = std::map<Exp, Int>;

    Laurent2() = default;
    explicit Laurent2(std::pair<std::string, std::string> vars) : vars_(std::move(vars)) {}

    static Laurent2 constant(std::pair<std::string, std::string> vars, Int c);
    static Laurent2 monomial(std::pair<std::string, std::string> vars, long long ex,
                             long long ey, Int c = Int(1));

    const TermMap& terms() const { return terms_; }
    const std::pair<std::string, std::string>& vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    void set_term(long long ex, long long ey, Int c);
    Int coeff(long long ex, long long ey) const;

    Laurent2 operator+(const Laurent2& o) const;
    Laurent2 operator-(const Laurent2& o) const;
    Laurent2 operator-() const;
    Laurent2 operator*(const Laurent2& o) const;
    Laurent2 scalar_mul(const Int& k) const;
    Laurent2 monomial_mul(long long ex, long long ey, const Int& c = Int(1)) const;
    Laurent2 pow(long long k) const;  // k >= 0, or monomial base for k < 0

    bool operator==(const Laurent2& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Laurent2& o) const { return !(*this == o); }

    bool is_monomial() const { return terms_.size() == 1; }

    // Exact evaluation; both substituted values must be nonzero because
    // negative exponents may occur.
    CycNum evaluate(const CycNum& x_val, const CycNum& y_val) const;

    std::string to_string() const;  // "-1*a^-2*z^0 + 2*a^0*z^1" style
    std::string to_json() const;    // [[ex,ey,coeff],...]

private:
    void check_vars(const Laurent2& o) const;

    std::pair<std::string, std::string> vars_{"x", "y"};
    TermMap terms_;
};

// Exact division in Z[x^{+-1}, y^{+-1}]; returns the quotient when v divides
// u and nullopt otherwise.
std::optional<Laurent2> try_divide(const Laurent2& u, const Laurent2& v);

// Parses the term-list schema [[ex,ey,coeff],...].
Laurent2 parse_laurent_json(std::pair<std::string, std::string> vars, const std::string& text);

// Fraction num/den over Laurent2.  Not kept fully reduced (no multivariate
// gcd); equality is tested by cross-multiplication.  Arithmetic reuses a
// common denominator when one denominator exactly divides the other, which
// keeps the denominators arising from skein computations bounded.
class FracLaurent2 {
public:
    FracLaurent2() : num_(), den_(Laurent2::constant({"x", "y"}, Int(1))) {}
    explicit FracLaurent2(Laurent2 num);
    FracLaurent2(Laurent2 num, Laurent2 den);  // throws EngineError on den == 0

    const Laurent2& num() const { return num_; }
    const Laurent2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    FracLaurent2 operator+(const FracLaurent2& o) const;
    FracLaurent2 operator-(const FracLaurent2& o) const;
    FracLaurent2 operator-() const;
    FracLaurent2 operator*(const FracLaurent2& o) const;
    FracLaurent2 operator/(const FracLaurent2& o) const;  // throws on zero divisor
    FracLaurent2 pow(long long k) const;

    bool operator==(const FracLaurent2& o) const;
    bool operator!=(const FracLaurent2& o) const { return !(*this == o); }

    // Clear-denominator extraction: succeeds iff den divides num.
    // Throws EngineError otherwise.
    Laurent2 to_laurent() const;
    bool clears() const;

    CycNum evaluate(const CycNum& x_val, const CycNum& y_val) const;

    std::string to_string() const;
    std::string to_json() const;  // {"vars":[..],"num":[...],"den":[...]}

private:
    void reduce();

    Laurent2 num_;
    Laurent2 den_;
};

// Parses the fraction schema {"vars":[v1,v2],"num":[[...]],"den":[[...]]}.
FracLaurent2 parse_frac_json(const std::string& text);

}  // namespace skeinforge
