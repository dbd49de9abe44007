#include "nilcone/partition.hpp"

#include <algorithm>
#include <numeric>

#include "nilcone/error.hpp"

namespace nilcone {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw input_error("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw input_error("partition parts must be non-increasing");
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

long long Partition::n_invariant() const {
    long long s = 0;
    for (int i = 1; i <= length(); ++i) s += static_cast<long long>(i - 1) * parts_[i - 1];
    return s;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

Partition operator+(const Partition& a, const Partition& b) {
    std::vector<int> s(std::max(a.length(), b.length()), 0);
    for (size_t i = 0; i < s.size(); ++i)
        s[i] = a.part(static_cast<int>(i) + 1) + b.part(static_cast<int>(i) + 1);
    return Partition(std::move(s));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition partition_union(const Partition& a, const Partition& b) {
    std::vector<int> m;
    m.reserve(a.length() + b.length());
    m.insert(m.end(), a.parts().begin(), a.parts().end());
    m.insert(m.end(), b.parts().begin(), b.parts().end());
    std::sort(m.begin(), m.end(), std::greater<int>());
    return Partition(std::move(m));
}

namespace {
void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw input_error("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

PartitionStats partition_stats(const Partition& p) {
    return {p.weight(), p.length(), p.n_invariant()};
}

std::vector<std::pair<int, int>> exponent_form(const Partition& p) {
    std::vector<std::pair<int, int>> out;
    for (int v : p.parts()) {
        if (!out.empty() && out.back().first == v)
            ++out.back().second;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

std::string Bipartition::to_string() const {
    return "(" + mu_.to_string() + ";" + nu_.to_string() + ")";
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
    if (n < 0) throw input_error("enumerate_bipartitions: n must be >= 0");
    std::vector<Bipartition> out;
    for (int m = 0; m <= n; ++m) {
        auto mus = enumerate_partitions(m);
        auto nus = enumerate_partitions(n - m);
        for (const auto& mu : mus)
            for (const auto& nu : nus) out.emplace_back(mu, nu);
    }
    return out;
}

long long b_invariant(const Bipartition& bp) {
    long long via_pair = bp.nu().weight() + 2 * bp.mu().n_invariant() + 2 * bp.nu().n_invariant();
    Partition lam = bp.lambda();
    long long via_lambda = lam.weight() + 2 * lam.n_invariant() - bp.mu().weight();
    if (via_pair != via_lambda)
        throw std::logic_error("b_invariant: the two defining formulas disagree for " + bp.to_string());
    return via_pair;
}

std::vector<int> ShapeData::J() const {
    std::vector<int> out;
    for (int h = 1; h <= num_blocks(); ++h)
        if (in_J[h - 1]) out.push_back(h);
    return out;
}

int ShapeData::j_of(int h) const {
    return (h >= 1 && h <= num_blocks()) ? blocks[h - 1].j : 0;
}

int ShapeData::k_of(int h) const {
    if (h < 1 || h > num_blocks()) throw std::logic_error("k_of: block index out of range");
    return blocks[h - 1].k;
}

bool ShapeData::k_less_than_prev(int h) const {
    if (h == 1) return true; // k_0 = +infinity
    return blocks[h - 1].k < blocks[h - 2].k;
}

int ShapeData::block_of_row(int i) const {
    for (int h = 1; h <= num_blocks(); ++h) {
        const auto& b = blocks[h - 1];
        if (i >= b.i0 && i < b.i0 + b.mult) return h;
    }
    throw std::logic_error("block_of_row: row index out of range");
}

ShapeData shape_data(const Bipartition& bp) {
    ShapeData sd;
    sd.mu = bp.mu();
    sd.nu = bp.nu();
    sd.lambda = bp.lambda();

    int i0 = 1;
    for (auto [l, mult] : exponent_form(sd.lambda)) {
        ShapeBlock b;
        b.l = l;
        b.mult = mult;
        b.i0 = i0;
        b.j = sd.mu.part(i0);
        b.k = sd.nu.part(i0);
        // Remark-level consistency: mu and nu are constant on each block.
        for (int i = i0; i < i0 + mult; ++i) {
            if (sd.mu.part(i) != b.j || sd.nu.part(i) != b.k)
                throw std::logic_error("shape_data: mu/nu not constant on a lambda block");
        }
        sd.blocks.push_back(b);
        i0 += mult;
    }

    const int H = sd.num_blocks();
    sd.in_J.assign(H, false);
    sd.block_case.assign(H, BlockCase::ZeroMu);
    sd.run_partner.assign(H, 0);

    for (int h = 1; h <= H; ++h) {
        int jh = sd.j_of(h);
        int jn = sd.j_of(h + 1);
        sd.run_partner[h - 1] = h;
        if (jh == 0) {
            sd.block_case[h - 1] = BlockCase::ZeroMu;
        } else if (jh == jn) {
            // j-run to the right: j_h = ... = j_{h+t} != j_{h+t+1}.
            int t = 1;
            while (sd.j_of(h + t) == sd.j_of(h + t + 1)) ++t;
            sd.block_case[h - 1] = BlockCase::RightRun;
            sd.run_partner[h - 1] = h + t;
        } else if (sd.k_less_than_prev(h)) {
            sd.in_J[h - 1] = true;
            sd.block_case[h - 1] = BlockCase::InJ;
        } else {
            // k-run to the left: k_h = k_{h-1} = ... = k_{h-t} != k_{h-t-1};
            // the k_0 = infinity sentinel stops the run at block 1.
            int t = 1;
            while (h - t > 1 && sd.k_of(h - t) == sd.k_of(h - t - 1)) ++t;
            sd.block_case[h - 1] = BlockCase::LeftRun;
            sd.run_partner[h - 1] = h - t;
        }
    }
    return sd;
}

} // namespace nilcone
