#pragma once

#include <array>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "nilcone/matf.hpp"

namespace nilcone {

/// Canonical state key: the base-q digits of (v, row-major x) packed into
/// bytes, as many digits per byte as fit.  Fixed-size and zero-padded so
/// hashing and equality are flat byte operations.
struct StateKey {
    std::array<uint8_t, 32> b{}; // b[0] = payload length in bytes
    bool operator==(const StateKey& o) const { return b == o.b; }
};

struct StateKeyHash {
    size_t operator()(const StateKey& k) const {
        uint64_t h = 1469598103934665603ull; // FNV-1a
        for (uint8_t x : k.b) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

using StateSet = std::unordered_set<StateKey, StateKeyHash>;

/// Packs/unpacks digit strings for a fixed (q, vector length, matrix dim).
class StateCodec {
  public:
    StateCodec() = default;
    StateCodec(int q, int vec_len, int mat_dim);

    int q() const { return q_; }
    int vec_len() const { return vec_len_; }
    int mat_dim() const { return mat_dim_; }
    int digit_count() const { return vec_len_ + mat_dim_ * mat_dim_; }

    StateKey encode(const FqElem* v, const FqElem* x) const;
    void decode(const StateKey& k, FqElem* v, FqElem* x) const;

    StateKey encode_state(const std::vector<FqElem>& v, const MatF& x) const;

  private:
    int q_ = 2, vec_len_ = 0, mat_dim_ = 0, per_byte_ = 8, bytes_ = 0;
};

/// Invertible generating matrices with precomputed inverses.
struct GeneratorSet {
    std::vector<MatF> gens;
    std::vector<MatF> invs;

    void add(MatF g);
    size_t size() const { return gens.size(); }
};

/// Exact orbit of a (vector, matrix) pair under the simultaneous action
/// g . (v, x) = (gv, gxg^-1), found by breadth-first search over generator
/// applications.  Deterministic for fixed inputs.
struct OrbitSet {
    StateCodec codec;
    StateSet members;

    uint64_t size() const { return members.size(); }
    bool contains(const std::vector<FqElem>& v, const MatF& x) const {
        return members.count(codec.encode_state(v, x)) > 0;
    }
};

/// BFS from (v0, x0).  Throws budget_exceeded when the orbit would outgrow
/// `budget` states.
OrbitSet orbit_bfs(const std::vector<FqElem>& v0, const MatF& x0, const GeneratorSet& gens,
                   uint64_t budget);

/// Closure of the subgroup generated by `gens` inside GL_dim(F_q), by BFS
/// from the identity under left multiplication.  With collect_elements the
/// full element list is returned in BFS order.
struct ClosureResult {
    uint64_t size = 0;
    std::vector<MatF> elements; // empty unless requested
};
ClosureResult group_closure(int dim, const FieldDesc& fd, const GeneratorSet& gens,
                            uint64_t budget, bool collect_elements = false);

} // namespace nilcone
