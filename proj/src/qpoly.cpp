#include "nilcone/qpoly.hpp"

#include "nilcone/error.hpp"

namespace nilcone {

QPoly::QPoly(long long c) {
    if (c != 0) c_.push_back(BigInt(c));
}

QPoly::QPoly(BigInt c) {
    if (c != 0) c_.push_back(std::move(c));
}

QPoly::QPoly(std::vector<BigInt> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    trim();
}

QPoly QPoly::q_power(int e) {
    if (e < 0) throw std::logic_error("q_power: negative exponent");
    std::vector<BigInt> c(e + 1, 0);
    c[e] = 1;
    return QPoly(std::move(c));
}

BigInt QPoly::coeff(int e) const {
    if (e < 0 || e >= static_cast<int>(c_.size())) return 0;
    return c_[e];
}

BigInt QPoly::leading() const {
    return c_.empty() ? BigInt(0) : c_.back();
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<BigInt> out(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    trim();
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QPoly QPoly::divide_exact(const QPoly& divisor, const std::string& what) const {
    if (divisor.is_zero()) throw inexact_division("division by zero polynomial: " + what);
    if (is_zero()) return {};
    std::vector<BigInt> rem = c_;
    int dd = divisor.degree();
    int qd = degree() - dd;
    if (qd < 0) throw inexact_division("degree underflow dividing " + what);
    std::vector<BigInt> quot(qd + 1, 0);
    for (int e = qd; e >= 0; --e) {
        BigInt lead = rem[e + dd];
        if (lead == 0) continue;
        if (lead % divisor.c_[dd] != 0)
            throw inexact_division("non-divisible leading coefficient in " + what);
        BigInt f = lead / divisor.c_[dd];
        quot[e] = f;
        for (int i = 0; i <= dd; ++i) rem[e + i] -= f * divisor.c_[i];
    }
    for (const auto& r : rem)
        if (r != 0) throw inexact_division("nonzero remainder in " + what);
    return QPoly(std::move(quot));
}

QPoly QPoly::substitute_q_squared() const {
    if (is_zero()) return {};
    std::vector<BigInt> out(2 * c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) out[2 * i] = c_[i];
    return QPoly(std::move(out));
}

BigInt QPoly::evaluate(const BigInt& q) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + *it;
    return r;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int e = degree(); e >= 0; --e) {
        const BigInt& c = c_[e];
        if (c == 0) continue;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (s.empty())
            s += (c < 0 ? "-" : "");
        else
            s += (c < 0 ? " - " : " + ");
        if (a != 1 || e == 0) s += a.str();
        if (e > 0) {
            s += "q";
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

} // namespace nilcone
