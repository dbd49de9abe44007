#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace nilcone {

using BigInt = boost::multiprecision::cpp_int;

/// Integer-coefficient polynomial in the formal variable q.  Coefficients are
/// stored densely in ascending exponent order with no trailing zeros; all
/// arithmetic is exact.  degree() of the zero polynomial is -1.
class QPoly {
  public:
    QPoly() = default;
    QPoly(long long c); // constant
    explicit QPoly(BigInt c);
    explicit QPoly(std::vector<BigInt> ascending_coeffs);

    static QPoly q_power(int e); // q^e

    const std::vector<BigInt>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    BigInt coeff(int e) const;
    BigInt leading() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    QPoly operator-() const;
    bool operator==(const QPoly&) const = default;

    /// Exact division; throws inexact_division (with `what` in the message)
    /// if a nonzero remainder appears.
    QPoly divide_exact(const QPoly& divisor, const std::string& what) const;

    /// Substitute q -> q^2.
    QPoly substitute_q_squared() const;

    BigInt evaluate(const BigInt& q) const;

    std::string to_string() const; // human-readable, e.g. "q^3 - q"

  private:
    void trim();
    std::vector<BigInt> c_;
};

} // namespace nilcone
