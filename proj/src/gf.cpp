#include "nilcone/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "nilcone/error.hpp"

namespace nilcone {

namespace {

// Dense polynomials over F_p as coefficient vectors (ascending), for building
// extension-field tables only.
using PolyP = std::vector<int>;

void ptrim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP pmul(const PolyP& a, const PolyP& b, int p) {
    if (a.empty() || b.empty()) return {};
    PolyP out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    ptrim(out);
    return out;
}

// a mod m (m monic).
PolyP pmod(PolyP a, const PolyP& m, int p) {
    ptrim(a);
    while (a.size() >= m.size()) {
        int c = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            int& t = a[shift + i];
            t = ((t - c * m[i]) % p + p) % p;
        }
        ptrim(a);
    }
    return a;
}

bool divides(const PolyP& d, const PolyP& a, int p) {
    return pmod(a, d, p).empty();
}

// Exhaustive irreducibility test, fine for the tiny degrees in play: no monic
// divisor of degree 1..deg/2.
bool is_irreducible(const PolyP& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int enc = 0; enc < count; ++enc) {
            PolyP g(d + 1, 0);
            g[d] = 1;
            int e = enc;
            for (int i = 0; i < d; ++i) {
                g[i] = e % p;
                e /= p;
            }
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

int encode(const PolyP& a, int p) {
    int v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

PolyP decode(int v, int p, int k) {
    PolyP a(k, 0);
    for (int i = 0; i < k; ++i) {
        a[i] = v % p;
        v /= p;
    }
    ptrim(a);
    return a;
}

} // namespace

struct FieldDesc::Builder {
    static std::unique_ptr<FieldDesc> build(int q);
};

std::unique_ptr<FieldDesc> FieldDesc::Builder::build(int q) {
    // factor q = p^k
    int p = 0;
    for (int d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int k = 0;
    int t = q;
    while (t > 1) {
        if (t % p != 0) throw input_error("make_field: q = " + std::to_string(q) + " is not a prime power");
        t /= p;
        ++k;
    }

    auto fd = std::make_unique<FieldDesc>();
    fd->q = q;
    fd->p = p;
    fd->k = k;

    PolyP mod;
    if (k > 1) {
        // canonical modulus: least base-p encoding among monic irreducibles
        int count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (int enc = 0; enc < count; ++enc) {
            PolyP f = decode(enc, p, k);
            f.resize(k + 1, 0);
            f[k] = 1;
            if (is_irreducible(f, p)) {
                mod = f;
                break;
            }
        }
        fd->modulus.assign(mod.begin(), mod.end() - 1);
    }

    auto& add = fd->add_;
    auto& mul = fd->mul_;
    auto& neg = fd->neg_;
    auto& inv = fd->inv_;
    add.assign(static_cast<size_t>(q) * q, 0);
    mul.assign(static_cast<size_t>(q) * q, 0);
    neg.assign(q, 0);
    inv.assign(q, 0);

    for (int a = 0; a < q; ++a) {
        PolyP pa = decode(a, p, k);
        for (int b = 0; b < q; ++b) {
            PolyP pb = decode(b, p, k);
            // addition: digitwise mod p
            PolyP s(std::max(pa.size(), pb.size()), 0);
            for (size_t i = 0; i < s.size(); ++i) {
                int x = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
                s[i] = x % p;
            }
            ptrim(s);
            add[static_cast<size_t>(a) * q + b] = static_cast<FqElem>(encode(s, p));
            PolyP m = k > 1 ? pmod(pmul(pa, pb, p), mod, p) : PolyP{};
            if (k == 1) {
                int v = (a * b) % p;
                mul[static_cast<size_t>(a) * q + b] = static_cast<FqElem>(v);
            } else {
                mul[static_cast<size_t>(a) * q + b] = static_cast<FqElem>(encode(m, p));
            }
        }
    }
    for (int a = 0; a < q; ++a) {
        // -a: the additive inverse exists and is unique
        for (int b = 0; b < q; ++b)
            if (add[static_cast<size_t>(a) * q + b] == 0) {
                neg[a] = static_cast<FqElem>(b);
                break;
            }
    }
    int inv_found = 0;
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b)
            if (mul[static_cast<size_t>(a) * q + b] == 1) {
                inv[a] = static_cast<FqElem>(b);
                ++inv_found;
                break;
            }
    }
    if (inv_found != q - 1)
        throw std::logic_error("make_field: some nonzero element has no inverse (not a field)");

    // locate a generator of F_q^* by exhaustive order computation
    for (int g = 1; g < q; ++g) {
        int ord = 1;
        FqElem x = static_cast<FqElem>(g);
        while (x != 1) {
            x = mul[static_cast<size_t>(x) * q + g];
            ++ord;
        }
        if (ord == q - 1) {
            fd->gen_ = static_cast<FqElem>(g);
            break;
        }
    }
    if (q > 1 && fd->gen_ == 0) throw std::logic_error("make_field: no primitive element found");

    // spot-check associativity and distributivity exhaustively at small q
    if (q <= 9) {
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    FqElem ab = mul[static_cast<size_t>(a) * q + b];
                    FqElem bc = mul[static_cast<size_t>(b) * q + c];
                    if (mul[static_cast<size_t>(ab) * q + c] != mul[static_cast<size_t>(a) * q + bc])
                        throw std::logic_error("make_field: multiplication not associative");
                    FqElem bpc = add[static_cast<size_t>(b) * q + c];
                    FqElem l = mul[static_cast<size_t>(a) * q + bpc];
                    FqElem r = add[static_cast<size_t>(mul[static_cast<size_t>(a) * q + b]) * q
                                   + mul[static_cast<size_t>(a) * q + c]];
                    if (l != r) throw std::logic_error("make_field: distributivity fails");
                }
    }
    return fd;
}

FqElem FieldDesc::inv(FqElem a) const {
    if (a == 0) throw input_error("field inverse of zero");
    return inv_[a];
}

FqElem FieldDesc::pow(FqElem a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    FqElem r = 1;
    FqElem base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

const FieldDesc& make_field(int q, int bound) {
    if (q < 2) throw input_error("make_field: q must be at least 2");
    if (q > bound || q > 255)
        throw input_error("make_field: q = " + std::to_string(q) + " exceeds the table bound");
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<FieldDesc>> registry;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = registry.find(q);
    if (it == registry.end()) it = registry.emplace(q, FieldDesc::Builder::build(q)).first;
    return *it->second;
}

std::vector<FqElem> field_elements(const FieldDesc& fd) {
    std::vector<FqElem> out(fd.q);
    for (int i = 0; i < fd.q; ++i) out[i] = static_cast<FqElem>(i);
    return out;
}

} // namespace nilcone
