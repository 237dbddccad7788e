#include "skeinforge/cyclo.hpp"

#include <ostream>
#include <sstream>

#include "json.hpp"

namespace skeinforge {

CycInt CycInt::zeta_pow(long long k) {
    long long m = ((k % 16) + 16) % 16;
    CycInt r;
    if (m < 8) {
        r.coeff_[static_cast<size_t>(m)] = 1;
    } else {
        r.coeff_[static_cast<size_t>(m - 8)] = -1;
    }
    return r;
}

bool CycInt::is_zero() const {
    for (const auto& c : coeff_)
        if (c != 0) return false;
    return true;
}

CycInt CycInt::operator+(const CycInt& o) const {
    CycInt r;
    for (int i = 0; i < 8; ++i) r.coeff_[i] = coeff_[i] + o.coeff_[i];
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
    CycInt r;
    for (int i = 0; i < 8; ++i) r.coeff_[i] = coeff_[i] - o.coeff_[i];
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r;
    for (int i = 0; i < 8; ++i) r.coeff_[i] = -coeff_[i];
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    // convolution reduced by zeta^8 = -1
    CycInt r;
    for (int i = 0; i < 8; ++i) {
        if (coeff_[i] == 0) continue;
        for (int j = 0; j < 8; ++j) {
            if (o.coeff_[j] == 0) continue;
            int k = i + j;
            if (k < 8)
                r.coeff_[k] += coeff_[i] * o.coeff_[j];
            else
                r.coeff_[k - 8] -= coeff_[i] * o.coeff_[j];
        }
    }
    return r;
}

CycInt CycInt::operator*(const Int& k) const {
    CycInt r;
    for (int i = 0; i < 8; ++i) r.coeff_[i] = coeff_[i] * k;
    return r;
}

Int CycInt::content() const {
    Int g = 0;
    for (const auto& c : coeff_) g = int_gcd(g, c);
    return g;
}

CycNum::CycNum(CycInt n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw EngineError("cyclotomic number with zero denominator");
    normalize();
}

void CycNum::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Int g = int_gcd(num_.content(), den_);
    if (g > 1) {
        for (int i = 0; i < 8; ++i) num_[i] /= g;
        den_ /= g;
    }
}

CycNum CycNum::operator+(const CycNum& o) const {
    Int l = int_lcm(den_, o.den_);
    CycInt n = num_ * (l / den_) + o.num_ * (l / o.den_);
    return CycNum(std::move(n), std::move(l));
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator-() const {
    CycNum r = *this;
    r.num_ = -r.num_;
    return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
    return CycNum(num_ * o.num_, den_ * o.den_);
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw EngineError("division by zero in Q(zeta)");
    // Solve M*y = e0 where M is the matrix of multiplication by num_ in the
    // basis 1, zeta, ..., zeta^7.  Column j holds num_ * zeta^j.
    Rational a[8][9];
    for (int j = 0; j < 8; ++j) {
        CycInt col = num_ * CycInt::zeta_pow(j);
        for (int i = 0; i < 8; ++i) a[i][j] = Rational(col[i]);
    }
    for (int i = 0; i < 8; ++i) a[i][8] = Rational(i == 0 ? 1 : 0);

    for (int k = 0; k < 8; ++k) {
        int piv = -1;
        for (int i = k; i < 8; ++i)
            if (a[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw EngineError("singular multiplication matrix in Q(zeta)");
        if (piv != k)
            for (int j = 0; j < 9; ++j) std::swap(a[piv][j], a[k][j]);
        for (int i = k + 1; i < 8; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (int j = k; j < 9; ++j) a[i][j] -= f * a[k][j];
        }
    }
    Rational x[8];
    for (int i = 7; i >= 0; --i) {
        Rational s = a[i][8];
        for (int j = i + 1; j < 8; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    Int common = 1;
    for (int i = 0; i < 8; ++i) common = int_lcm(common, denominator(x[i]));
    CycInt n;
    for (int i = 0; i < 8; ++i) n[i] = numerator(x[i]) * (common / denominator(x[i]));
    // num_ * (n/common) == 1, so (num_/den_)^-1 == den_ * n / common
    CycNum y(n * den_, common);
    CycNum check = y * (*this);
    if (check != CycNum(Int(1)))
        throw EngineError("inverse verification failed in Q(zeta)");
    return y;
}

CycNum CycNum::pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    CycNum r(Int(1));
    CycNum b = *this;
    unsigned long long e = static_cast<unsigned long long>(k);
    while (e > 0) {
        if (e & 1ULL) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string CycNum::to_string() const {
    if (num_.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 8; ++i) {
        const Int& c = num_[i];
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (den_ != 1) {
        std::string body = os.str();
        return "(" + body + ") / " + den_.str();
    }
    return os.str();
}

std::string CycNum::to_json() const {
    std::ostringstream os;
    os << "{\"num\":[";
    for (int i = 0; i < 8; ++i) {
        if (i) os << ",";
        os << num_[i].str();
    }
    os << "],\"den\":" << den_.str() << "}";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

CycNum parse_cyc_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("cyclotomic JSON needs {\"num\":[8 ints],\"den\":int}");
    const auto& num = j["num"];
    if (!num.is_array() || num.size() != 8)
        throw ParseError("cyclotomic 'num' must have 8 entries");
    auto to_int = [](const nlohmann::json& v) {
        if (v.is_number_integer()) return Int(v.get<long long>());
        if (v.is_string()) return Int(v.get<std::string>());
        throw ParseError("cyclotomic coefficients must be integers");
    };
    CycInt n;
    for (int i = 0; i < 8; ++i) n[i] = to_int(num[static_cast<size_t>(i)]);
    return CycNum(n, to_int(j["den"]));
}

}  // namespace skeinforge
