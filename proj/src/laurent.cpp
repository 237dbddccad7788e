#include "skeinforge/laurent.hpp"

#include <sstream>

#include "json.hpp"

namespace skeinforge {

Laurent2 Laurent2::constant(std::pair<std::string, std::string> vars, Int c) {
    Laurent2 p(std::move(vars));
    p.set_term(0, 0, std::move(c));
    return p;
}

Laurent2 Laurent2::monomial(std::pair<std::string, std::string> vars, long long ex,
                            long long ey, Int c) {
    Laurent2 p(std::move(vars));
    p.set_term(ex, ey, std::move(c));
    return p;
}

bool Laurent2::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exp{0, 0} &&
           terms_.begin()->second == 1;
}

void Laurent2::set_term(long long ex, long long ey, Int c) {
    if (c == 0)
        terms_.erase({ex, ey});
    else
        terms_[{ex, ey}] = std::move(c);
}

Int Laurent2::coeff(long long ex, long long ey) const {
    auto it = terms_.find({ex, ey});
    return it == terms_.end() ? Int(0) : it->second;
}

void Laurent2::check_vars(const Laurent2& o) const {
    if (vars_ != o.vars_)
        throw EngineError("variable-name mismatch: (" + vars_.first + "," + vars_.second +
                          ") vs (" + o.vars_.first + "," + o.vars_.second + ")");
}

Laurent2 Laurent2::operator+(const Laurent2& o) const {
    check_vars(o);
    Laurent2 r = *this;
    for (const auto& [e, c] : o.terms_) {
        Int s = r.coeff(e.first, e.second) + c;
        r.set_term(e.first, e.second, std::move(s));
    }
    return r;
}

Laurent2 Laurent2::operator-(const Laurent2& o) const { return *this + (-o); }

Laurent2 Laurent2::operator-() const {
    Laurent2 r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Laurent2 Laurent2::operator*(const Laurent2& o) const {
    check_vars(o);
    Laurent2 r(vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp e{e1.first + e2.first, e1.second + e2.second};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end())
                r.terms_[e] = c1 * c2;
            else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

Laurent2 Laurent2::scalar_mul(const Int& k) const {
    Laurent2 r(vars_);
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * k;
    return r;
}

Laurent2 Laurent2::monomial_mul(long long ex, long long ey, const Int& c) const {
    Laurent2 r(vars_);
    if (c == 0) return r;
    for (const auto& [e, co] : terms_) r.terms_[{e.first + ex, e.second + ey}] = co * c;
    return r;
}

Laurent2 Laurent2::pow(long long k) const {
    if (k < 0) {
        if (!is_monomial())
            throw EngineError("negative power of a non-monomial Laurent polynomial");
        const auto& [e, c] = *terms_.begin();
        if (c != 1 && c != -1)
            throw EngineError("negative power of a non-unit monomial");
        Int cc = (k % 2 == 0) ? Int(1) : c;
        return monomial(vars_, e.first * k, e.second * k, cc);
    }
    Laurent2 r = constant(vars_, Int(1));
    Laurent2 b = *this;
    long long e = k;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

CycNum Laurent2::evaluate(const CycNum& x_val, const CycNum& y_val) const {
    if (x_val.is_zero() || y_val.is_zero())
        throw EngineError("zero substitution into a Laurent polynomial");
    // cache powers per exponent to keep evaluation exact and cheap
    CycNum acc(Int(0));
    for (const auto& [e, c] : terms_) {
        CycNum t = x_val.pow(e.first) * y_val.pow(e.second);
        acc += t * CycNum(c);
    }
    return acc;
}

std::string Laurent2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*" << vars_.first << "^" << e.first << "*" << vars_.second << "^"
           << e.second;
    }
    return os.str();
}

std::string Laurent2::to_json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "[" << e.first << "," << e.second << "," << c.str() << "]";
    }
    os << "]";
    return os.str();
}

std::optional<Laurent2> try_divide(const Laurent2& u, const Laurent2& v) {
    if (v.is_zero()) return std::nullopt;
    if (u.is_zero()) return Laurent2::constant(u.vars(), Int(0));
    if (u.vars() != v.vars()) return std::nullopt;

    // Shift both into the ordinary polynomial ring: strip minimal exponents.
    auto min_exp = [](const Laurent2& p) {
        long long mx = p.terms().begin()->first.first, my = p.terms().begin()->first.second;
        for (const auto& [e, c] : p.terms()) {
            (void)c;
            mx = std::min(mx, e.first);
            my = std::min(my, e.second);
        }
        return std::pair<long long, long long>{mx, my};
    };
    auto [ux, uy] = min_exp(u);
    auto [vx, vy] = min_exp(v);
    Laurent2 uu = u.monomial_mul(-ux, -uy);
    Laurent2 vv = v.monomial_mul(-vx, -vy);

    // Leading-term division with respect to lex order on (ex, ey).
    Laurent2 rem = uu;
    Laurent2 quot(u.vars());
    const auto& vlead = *vv.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        long long dx = rlead.first.first - vlead.first.first;
        long long dy = rlead.first.second - vlead.first.second;
        if (dx < 0 || dy < 0) return std::nullopt;
        if (rlead.second % vlead.second != 0) return std::nullopt;
        Int c = rlead.second / vlead.second;
        quot.set_term(dx, dy, quot.coeff(dx, dy) + c);
        rem = rem - vv.monomial_mul(dx, dy, c);
    }
    return quot.monomial_mul(ux - vx, uy - vy);
}

FracLaurent2::FracLaurent2(Laurent2 num)
    : num_(std::move(num)), den_(Laurent2::constant(num_.vars(), Int(1))) {}

FracLaurent2::FracLaurent2(Laurent2 num, Laurent2 den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw EngineError("zero denominator");
    if (num_.vars() != den_.vars()) throw EngineError("variable-name mismatch in fraction");
    reduce();
}

void FracLaurent2::reduce() {
    if (num_.is_zero()) {
        den_ = Laurent2::constant(num_.vars(), Int(1));
        return;
    }
    // Fold a monomial denominator into the numerator (Laurent ring units).
    if (den_.is_monomial()) {
        const auto& [e, c] = *den_.terms().begin();
        if (c == 1 || c == -1) {
            num_ = num_.monomial_mul(-e.first, -e.second, c);
            den_ = Laurent2::constant(num_.vars(), Int(1));
            return;
        }
    }
    if (auto q = try_divide(num_, den_)) {
        num_ = std::move(*q);
        den_ = Laurent2::constant(num_.vars(), Int(1));
    }
}

FracLaurent2 FracLaurent2::operator+(const FracLaurent2& o) const {
    // Use the coarser denominator when one divides the other.
    if (auto d = try_divide(o.den_, den_))
        return FracLaurent2(num_ * (*d) + o.num_, o.den_);
    if (auto d = try_divide(den_, o.den_))
        return FracLaurent2(num_ + o.num_ * (*d), den_);
    return FracLaurent2(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FracLaurent2 FracLaurent2::operator-(const FracLaurent2& o) const { return *this + (-o); }

FracLaurent2 FracLaurent2::operator-() const {
    FracLaurent2 r = *this;
    r.num_ = -r.num_;
    return r;
}

FracLaurent2 FracLaurent2::operator*(const FracLaurent2& o) const {
    // Cancel across the cross pairs first where possible.
    if (auto q = try_divide(num_, o.den_)) return FracLaurent2(*q * o.num_, den_);
    if (auto q = try_divide(o.num_, den_)) return FracLaurent2(num_ * *q, o.den_);
    return FracLaurent2(num_ * o.num_, den_ * o.den_);
}

FracLaurent2 FracLaurent2::operator/(const FracLaurent2& o) const {
    if (o.is_zero()) throw EngineError("division by zero fraction");
    return *this * FracLaurent2(o.den_, o.num_);
}

FracLaurent2 FracLaurent2::pow(long long k) const {
    if (k < 0) {
        if (is_zero()) throw EngineError("negative power of zero");
        return FracLaurent2(den_, num_).pow(-k);
    }
    FracLaurent2 r{Laurent2::constant(num_.vars(), Int(1))};
    FracLaurent2 b = *this;
    long long e = k;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool FracLaurent2::operator==(const FracLaurent2& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

Laurent2 FracLaurent2::to_laurent() const {
    if (den_.is_one()) return num_;
    if (auto q = try_divide(num_, den_)) return *q;
    throw EngineError("denominator does not divide numerator");
}

bool FracLaurent2::clears() const {
    return den_.is_one() || try_divide(num_, den_).has_value();
}

CycNum FracLaurent2::evaluate(const CycNum& x_val, const CycNum& y_val) const {
    CycNum d = den_.evaluate(x_val, y_val);
    if (d.is_zero()) throw EngineError("denominator vanishes at the evaluation point");
    return num_.evaluate(x_val, y_val) * d.inverse();
}

std::string FracLaurent2::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

std::string FracLaurent2::to_json() const {
    std::ostringstream os;
    os << "{\"vars\":[\"" << num_.vars().first << "\",\"" << num_.vars().second
       << "\"],\"num\":" << num_.to_json() << ",\"den\":" << den_.to_json() << "}";
    return os.str();
}

namespace {

Laurent2 laurent_from_json_value(std::pair<std::string, std::string> vars,
                                 const nlohmann::json& terms) {
    if (!terms.is_array()) throw ParseError("Laurent JSON must be a term array");
    Laurent2 p(std::move(vars));
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 3)
            throw ParseError("each Laurent term must be [ex,ey,coeff]");
        long long ex = t[0].get<long long>();
        long long ey = t[1].get<long long>();
        Int c = t[2].is_string() ? Int(t[2].get<std::string>()) : Int(t[2].get<long long>());
        p.set_term(ex, ey, p.coeff(ex, ey) + c);
    }
    return p;
}

}  // namespace

Laurent2 parse_laurent_json(std::pair<std::string, std::string> vars, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("bad Laurent JSON");
    return laurent_from_json_value(std::move(vars), j);
}

FracLaurent2 parse_frac_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("vars") || !j.contains("num") ||
        !j.contains("den"))
        throw ParseError("fraction JSON needs vars, num, den");
    const auto& v = j["vars"];
    if (!v.is_array() || v.size() != 2) throw ParseError("vars must name two variables");
    std::pair<std::string, std::string> vars{v[0].get<std::string>(), v[1].get<std::string>()};
    return FracLaurent2(laurent_from_json_value(vars, j["num"]),
                        laurent_from_json_value(vars, j["den"]));
}

}  // namespace skeinforge
