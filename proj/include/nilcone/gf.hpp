#pragma once

#include <cstdint>
#include <vector>

namespace nilcone {

/// Element of F_q, stored as its index in 0..q-1.  For prime q the index is
/// the residue; for q = p^k it encodes the coefficient vector of the residue
/// polynomial in base p (so 0 is zero and 1 is one in every field).
using FqElem = uint8_t;

/// Arithmetic tables for a small finite field F_q, q = p^k.  Immutable after
/// construction; all operations are table lookups.
class FieldDesc {
  public:
    int q = 0;
    int p = 0;
    int k = 0;
    /// Coefficients a_0..a_{k-1} of the canonical modulus t^k + sum a_i t^i:
    /// the irreducible monic polynomial with the least base-p encoding.
    std::vector<int> modulus;

    FqElem add(FqElem a, FqElem b) const { return add_[idx(a, b)]; }
    FqElem sub(FqElem a, FqElem b) const { return add_[idx(a, neg_[b])]; }
    FqElem mul(FqElem a, FqElem b) const { return mul_[idx(a, b)]; }
    FqElem neg(FqElem a) const { return neg_[a]; }
    /// Multiplicative inverse; a must be nonzero.
    FqElem inv(FqElem a) const;
    FqElem pow(FqElem a, long long e) const;

    bool is_zero(FqElem a) const { return a == 0; }
    static constexpr FqElem zero() { return 0; }
    static constexpr FqElem one() { return 1; }

    /// A fixed generator of the cyclic group F_q^* (q > 1 always has one).
    FqElem primitive_element() const { return gen_; }

    struct Builder; // fills the tables at registration time (gf.cpp)

  private:
    size_t idx(FqElem a, FqElem b) const { return static_cast<size_t>(a) * q + b; }
    std::vector<FqElem> add_, mul_, neg_, inv_;
    FqElem gen_ = 0;
};

/// Field registry: builds (once) and returns the tables for F_q.  Throws
/// input_error if q is not a prime power or exceeds the bound.  The returned
/// reference stays valid for the lifetime of the process.
const FieldDesc& make_field(int q, int bound = 64);

/// All q elements in index order; index 0 is zero and index 1 is one.
std::vector<FqElem> field_elements(const FieldDesc& fd);

} // namespace nilcone
