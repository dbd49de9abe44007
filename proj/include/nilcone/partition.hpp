#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace nilcone {

/// A partition: non-increasing sequence of positive integers.  Trailing zeros
/// are stripped on construction; the empty partition is allowed.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;

    /// part(i) with 1-based i; 0 past the end.
    int part(int i) const;

    /// sum_{i>=1} (i-1) * part(i).
    long long n_invariant() const;

    /// Conjugate (transpose) partition.
    Partition conjugate() const;

    /// Componentwise sum (the sum of two partitions is again a partition).
    friend Partition operator+(const Partition& a, const Partition& b);

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const; // e.g. "(2,2,1,1)", "()" for empty

  private:
    std::vector<int> parts_;
};

/// Multiset union of parts, sorted non-increasing.
Partition partition_union(const Partition& a, const Partition& b);

/// All partitions of n in descending lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

struct PartitionStats {
    int weight = 0;
    int length = 0;
    long long n_invariant = 0;
};
PartitionStats partition_stats(const Partition& p);

/// Exponent form lambda = (l_h^{n_h}) with strictly decreasing distinct part
/// values l_h and positive multiplicities.
std::vector<std::pair<int, int>> exponent_form(const Partition& p);

/// A pair of partitions (mu; nu).  lambda = mu + nu is the underlying type;
/// |mu| + |nu| = n makes this a bipartition of n.
class Bipartition {
  public:
    Bipartition() = default;
    Bipartition(Partition mu, Partition nu) : mu_(std::move(mu)), nu_(std::move(nu)) {}

    const Partition& mu() const { return mu_; }
    const Partition& nu() const { return nu_; }
    Partition lambda() const { return mu_ + nu_; }
    int n() const { return mu_.weight() + nu_.weight(); }

    bool operator==(const Bipartition&) const = default;

    std::string to_string() const; // "((1,1);(1))"

  private:
    Partition mu_;
    Partition nu_;
};

/// All bipartitions of n.  Order: |mu| = 0..n, mu and nu each in descending
/// lexicographic order.  The (mu = empty) slice comes first.
std::vector<Bipartition> enumerate_bipartitions(int n);

/// b(mu;nu) = |nu| + 2 n(mu) + 2 n(nu).  Also equals |lambda| + 2 n(lambda) - |mu|;
/// both forms are computed and must agree.
long long b_invariant(const Bipartition& bp);

/// Per-block data derived from a bipartition.  Blocks are indexed h = 1..H by
/// decreasing distinct part value of lambda.  All indices here are 1-based,
/// matching the documentation convention.
struct ShapeBlock {
    int l = 0;    // part value l_h
    int mult = 0; // multiplicity n_{l_h}
    int i0 = 0;   // smallest row index in I_h (1-based); I_h = [i0, i0+mult)
    int j = 0;    // mu-value on I_h
    int k = 0;    // nu-value on I_h  (j + k = l)
};

/// Which of the four construction rules applies to a block.
enum class BlockCase {
    InJ,      // j_h > j_{h+1} and k_h < k_{h-1}
    ZeroMu,   // j_h = 0
    RightRun, // j_h = j_{h+1}, j_h != 0; partner = end of the j-run
    LeftRun,  // j_h > j_{h+1}, k_h = k_{h-1}; partner = start of the k-run
};

struct ShapeData {
    Partition lambda;
    Partition mu;
    Partition nu;
    std::vector<ShapeBlock> blocks;      // blocks[h-1]
    std::vector<bool> in_J;              // in_J[h-1]
    std::vector<BlockCase> block_case;   // block_case[h-1]
    std::vector<int> run_partner;        // run_partner[h-1]: h+t (RightRun) or h-t (LeftRun), else h

    int num_blocks() const { return static_cast<int>(blocks.size()); }
    std::vector<int> J() const; // {h : in_J[h-1]}, ascending

    /// j_h with h possibly past the last block (then 0).
    int j_of(int h) const;
    /// k_h; k_0 is the +infinity sentinel and must never be read as a number.
    bool k_less_than_prev(int h) const; // k_h < k_{h-1} with the sentinel at h=1
    int k_of(int h) const;

    /// Block containing row i (1-based), h = 1..H.
    int block_of_row(int i) const;
};

ShapeData shape_data(const Bipartition& bp);

} // namespace nilcone
