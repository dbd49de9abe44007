#include "nilcone/orbit.hpp"

#include <deque>

#include "nilcone/error.hpp"

namespace nilcone {

StateCodec::StateCodec(int q, int vec_len, int mat_dim) : q_(q), vec_len_(vec_len), mat_dim_(mat_dim) {
    per_byte_ = 0;
    long long cap = 1;
    while (cap * q <= 256) {
        cap *= q;
        ++per_byte_;
    }
    bytes_ = (digit_count() + per_byte_ - 1) / per_byte_;
    if (bytes_ > 31) throw budget_exceeded("state too large for the canonical key encoding");
}

StateKey StateCodec::encode(const FqElem* v, const FqElem* x) const {
    StateKey k;
    k.b[0] = static_cast<uint8_t>(bytes_);
    const int total = digit_count();
    int d = 0;
    for (int byte = 0; byte < bytes_; ++byte) {
        unsigned acc = 0, mul = 1;
        for (int t = 0; t < per_byte_ && d < total; ++t, ++d) {
            FqElem dig = d < vec_len_ ? v[d] : x[d - vec_len_];
            acc += mul * dig;
            mul *= q_;
        }
        k.b[1 + byte] = static_cast<uint8_t>(acc);
    }
    return k;
}

void StateCodec::decode(const StateKey& k, FqElem* v, FqElem* x) const {
    const int total = digit_count();
    int d = 0;
    for (int byte = 0; byte < bytes_; ++byte) {
        unsigned acc = k.b[1 + byte];
        for (int t = 0; t < per_byte_ && d < total; ++t, ++d) {
            FqElem dig = static_cast<FqElem>(acc % q_);
            acc /= q_;
            if (d < vec_len_)
                v[d] = dig;
            else
                x[d - vec_len_] = dig;
        }
    }
}

StateKey StateCodec::encode_state(const std::vector<FqElem>& v, const MatF& x) const {
    if (static_cast<int>(v.size()) != vec_len_ || x.rows() != mat_dim_)
        throw input_error("StateCodec: state shape mismatch");
    return encode(v.data(), x.data().data());
}

void GeneratorSet::add(MatF g) {
    auto gi = inverse(g);
    if (!gi) throw input_error("GeneratorSet: generator is not invertible");
    gens.push_back(std::move(g));
    invs.push_back(std::move(*gi));
}

namespace {

// --- generic byte-matrix kernels -------------------------------------------

inline void mat_mul(int n, const FqElem* a, const FqElem* b, FqElem* out, const FieldDesc& f) {
    for (int i = 0; i < n; ++i) {
        FqElem* orow = out + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j) orow[j] = 0;
        const FqElem* arow = a + static_cast<size_t>(i) * n;
        for (int k = 0; k < n; ++k) {
            FqElem aik = arow[k];
            if (aik == 0) continue;
            const FqElem* brow = b + static_cast<size_t>(k) * n;
            for (int j = 0; j < n; ++j) orow[j] = f.add(orow[j], f.mul(aik, brow[j]));
        }
    }
}

inline void mat_vec(int n, const FqElem* a, const FqElem* v, FqElem* out, const FieldDesc& f) {
    for (int i = 0; i < n; ++i) {
        FqElem s = 0;
        const FqElem* arow = a + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j)
            if (v[j] != 0) s = f.add(s, f.mul(arow[j], v[j]));
        out[i] = s;
    }
}

// --- packed F_2 kernels (rows as bit masks, dim <= 64) ----------------------

struct BitMat {
    std::array<uint64_t, 64> row{};
};

inline BitMat to_bits(int n, const FqElem* a) {
    BitMat m;
    for (int i = 0; i < n; ++i) {
        uint64_t r = 0;
        for (int j = 0; j < n; ++j)
            if (a[static_cast<size_t>(i) * n + j]) r |= (1ull << j);
        m.row[i] = r;
    }
    return m;
}

inline void bit_mul(int n, const BitMat& a, const BitMat& b, BitMat& out) {
    for (int i = 0; i < n; ++i) {
        uint64_t acc = 0;
        uint64_t bits = a.row[i];
        while (bits) {
            int k = __builtin_ctzll(bits);
            bits &= bits - 1;
            acc ^= b.row[k];
        }
        out.row[i] = acc;
    }
}

inline uint64_t bit_vec(int n, const BitMat& a, uint64_t v) {
    uint64_t out = 0;
    for (int i = 0; i < n; ++i)
        if (__builtin_parityll(a.row[i] & v)) out |= (1ull << i);
    return out;
}

inline void bits_to_digits(int n, const BitMat& m, FqElem* out) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[static_cast<size_t>(i) * n + j] = (m.row[i] >> j) & 1;
}

} // namespace

OrbitSet orbit_bfs(const std::vector<FqElem>& v0, const MatF& x0, const GeneratorSet& gens,
                   uint64_t budget) {
    const FieldDesc& f = x0.field();
    const int n = x0.rows();
    if (x0.cols() != n) throw input_error("orbit_bfs: matrix must be square");
    if (static_cast<int>(v0.size()) != n) throw input_error("orbit_bfs: vector length mismatch");

    OrbitSet result;
    result.codec = StateCodec(f.q, n, n);
    const StateCodec& codec = result.codec;

    auto insert = [&](const StateKey& k) -> bool {
        if (result.members.size() >= budget && !result.members.count(k))
            throw budget_exceeded("orbit_bfs: orbit exceeds the state budget of "
                                  + std::to_string(budget));
        return result.members.insert(k).second;
    };

    std::deque<StateKey> frontier;
    StateKey start = codec.encode_state(v0, x0);
    insert(start);
    frontier.push_back(start);

    if (f.q == 2 && n <= 64) {
        struct BitGen {
            BitMat g, gi;
        };
        std::vector<BitGen> bg(gens.size());
        for (size_t i = 0; i < gens.size(); ++i) {
            bg[i].g = to_bits(n, gens.gens[i].data().data());
            bg[i].gi = to_bits(n, gens.invs[i].data().data());
        }
        std::vector<FqElem> vd(n), xd(static_cast<size_t>(n) * n);
        std::vector<FqElem> vnd(n), xnd(static_cast<size_t>(n) * n);
        BitMat x, t, xn;
        while (!frontier.empty()) {
            StateKey cur = frontier.front();
            frontier.pop_front();
            codec.decode(cur, vd.data(), xd.data());
            x = to_bits(n, xd.data());
            uint64_t v = 0;
            for (int i = 0; i < n; ++i)
                if (vd[i]) v |= (1ull << i);
            for (const auto& g : bg) {
                bit_mul(n, g.g, x, t);
                bit_mul(n, t, g.gi, xn);
                uint64_t vn = bit_vec(n, g.g, v);
                for (int i = 0; i < n; ++i) vnd[i] = (vn >> i) & 1;
                bits_to_digits(n, xn, xnd.data());
                StateKey k = codec.encode(vnd.data(), xnd.data());
                if (insert(k)) frontier.push_back(k);
            }
        }
        return result;
    }

    std::vector<FqElem> vd(n), xd(static_cast<size_t>(n) * n);
    std::vector<FqElem> vn(n), t(static_cast<size_t>(n) * n), xn(static_cast<size_t>(n) * n);
    while (!frontier.empty()) {
        StateKey cur = frontier.front();
        frontier.pop_front();
        codec.decode(cur, vd.data(), xd.data());
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            const FqElem* g = gens.gens[gi].data().data();
            const FqElem* ginv = gens.invs[gi].data().data();
            mat_mul(n, g, xd.data(), t.data(), f);
            mat_mul(n, t.data(), ginv, xn.data(), f);
            mat_vec(n, g, vd.data(), vn.data(), f);
            StateKey k = codec.encode(vn.data(), xn.data());
            if (insert(k)) frontier.push_back(k);
        }
    }
    return result;
}

ClosureResult group_closure(int dim, const FieldDesc& fd, const GeneratorSet& gens,
                            uint64_t budget, bool collect_elements) {
    ClosureResult res;
    StateCodec codec(fd.q, 0, dim);
    StateSet seen;
    std::deque<StateKey> frontier;

    auto insert = [&](const StateKey& k) -> bool {
        if (seen.size() >= budget && !seen.count(k))
            throw budget_exceeded("group_closure: closure exceeds the state budget of "
                                  + std::to_string(budget));
        return seen.insert(k).second;
    };

    MatF id = MatF::identity(dim, fd);
    StateKey start = codec.encode(nullptr, id.data().data());
    insert(start);
    frontier.push_back(start);
    if (collect_elements) res.elements.push_back(id);

    std::vector<FqElem> xd(static_cast<size_t>(dim) * dim), xn(static_cast<size_t>(dim) * dim);

    auto emit = [&](const FqElem* digits) {
        if (!collect_elements) return;
        MatF m(dim, dim, fd);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m.set(i, j, digits[static_cast<size_t>(i) * dim + j]);
        res.elements.push_back(std::move(m));
    };

    if (fd.q == 2 && dim <= 64) {
        std::vector<BitMat> bg(gens.size());
        for (size_t i = 0; i < gens.size(); ++i) bg[i] = to_bits(dim, gens.gens[i].data().data());
        BitMat x, xb;
        while (!frontier.empty()) {
            StateKey cur = frontier.front();
            frontier.pop_front();
            codec.decode(cur, nullptr, xd.data());
            x = to_bits(dim, xd.data());
            for (const auto& g : bg) {
                bit_mul(dim, g, x, xb);
                bits_to_digits(dim, xb, xn.data());
                StateKey k = codec.encode(nullptr, xn.data());
                if (insert(k)) {
                    frontier.push_back(k);
                    emit(xn.data());
                }
            }
        }
        res.size = seen.size();
        return res;
    }

    while (!frontier.empty()) {
        StateKey cur = frontier.front();
        frontier.pop_front();
        codec.decode(cur, nullptr, xd.data());
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            mat_mul(dim, gens.gens[gi].data().data(), xd.data(), xn.data(), fd);
            StateKey k = codec.encode(nullptr, xn.data());
            if (insert(k)) {
                frontier.push_back(k);
                emit(xn.data());
            }
        }
    }
    res.size = seen.size();
    return res;
}

} // namespace nilcone
