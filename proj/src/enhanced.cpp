#include "nilcone/enhanced.hpp"

#include <algorithm>

#include "nilcone/error.hpp"
#include "nilcone/qcount.hpp"

namespace nilcone {

EnhancedPoint representative(const Bipartition& bp, const FieldDesc& fd) {
    if (bp.n() < 1) throw input_error("representative: need |mu| + |nu| >= 1");
    ShapeData sd = shape_data(bp);
    BasisIndex bi(sd.lambda, BasisIndex::Mode::Enhanced);
    EnhancedPoint pt;
    pt.basis = bi;
    pt.x = jordan_matrix(bi, fd);
    pt.v.assign(bi.dimension(), 0);
    for (const auto& blk : sd.blocks)
        if (blk.j > 0) pt.v[bi.pos(blk.i0, blk.j)] = 1;
    return pt;
}

std::vector<FqElem> representative_vector_full(const Bipartition& bp, const FieldDesc& fd) {
    (void)fd;
    BasisIndex bi(bp.lambda(), BasisIndex::Mode::Enhanced);
    std::vector<FqElem> v(bi.dimension(), 0);
    for (int i = 1; i <= bp.mu().length(); ++i) v[bi.pos(i, bp.mu().part(i))] = 1;
    return v;
}

GeneratorSet gl_generators(int n, const FieldDesc& fd) {
    GeneratorSet gs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int c = 1; c < fd.q; ++c) {
                MatF t = MatF::identity(n, fd);
                t.set(i, j, static_cast<FqElem>(c));
                gs.add(std::move(t));
            }
        }
    if (fd.q > 2 && n >= 1) {
        MatF d = MatF::identity(n, fd);
        d.set(0, 0, fd.primitive_element());
        gs.add(std::move(d));
    }
    return gs;
}

OrbitSet enhanced_orbit(const std::vector<FqElem>& v, const MatF& x, uint64_t budget) {
    return orbit_bfs(v, x, gl_generators(x.rows(), x.field()), budget);
}

BigInt stabiliser_count(const std::vector<FqElem>& v, const MatF& x, uint64_t budget) {
    const int n = x.rows();
    BigInt group = gl_order(n).evaluate(x.field().q);
    BigInt orbit = enhanced_orbit(v, x, budget).size();
    if (group % orbit != 0)
        throw inexact_division("stabiliser_count: group order not divisible by orbit size");
    return group / orbit;
}

Bipartition classify(const std::vector<FqElem>& v, const MatF& x, uint64_t budget) {
    Partition lambda = jordan_type(x);
    const FieldDesc& fd = x.field();
    OrbitSet orbit = orbit_bfs(v, x, gl_generators(x.rows(), fd), budget);
    for (const auto& bp : enumerate_bipartitions(lambda.weight())) {
        if (!(bp.lambda() == lambda)) continue;
        EnhancedPoint rep = representative(bp, fd);
        if (orbit.contains(rep.v, rep.x)) return bp;
    }
    throw std::logic_error("classify: point matched no orbit representative");
}

namespace {

bool stabilises(const MatF& g, const std::vector<FqElem>& v, const MatF& x) {
    return g.apply(v) == v && g * x == x * g;
}

// Linear system rows over the n^2 matrix entries (row-major unknowns):
// commutator = 0, y v = v, and quotient blocks = identity.
struct SystemBuilder {
    int n;
    const FieldDesc& f;
    std::vector<std::vector<FqElem>> rows;
    std::vector<FqElem> rhs;

    SystemBuilder(int n_, const FieldDesc& f_) : n(n_), f(f_) {}

    void add_row(std::vector<FqElem> row, FqElem r) {
        rows.push_back(std::move(row));
        rhs.push_back(r);
    }

    void add_commutator(const MatF& x) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<FqElem> row(static_cast<size_t>(n) * n, 0);
                for (int k = 0; k < n; ++k) {
                    if (x.at(i, k) != 0) {
                        size_t col = static_cast<size_t>(k) * n + j;
                        row[col] = f.add(row[col], x.at(i, k));
                    }
                    if (x.at(k, j) != 0) {
                        size_t col = static_cast<size_t>(i) * n + k;
                        row[col] = f.sub(row[col], x.at(k, j));
                    }
                }
                add_row(std::move(row), 0);
            }
    }

    void add_fix_vector(const std::vector<FqElem>& v) {
        for (int i = 0; i < n; ++i) {
            std::vector<FqElem> row(static_cast<size_t>(n) * n, 0);
            for (int j = 0; j < n; ++j) row[static_cast<size_t>(i) * n + j] = v[j];
            add_row(std::move(row), v[i]);
        }
    }

    // pin entry y[r][c] = val
    void add_entry(int r, int c, FqElem val) {
        std::vector<FqElem> row(static_cast<size_t>(n) * n, 0);
        row[static_cast<size_t>(r) * n + c] = 1;
        add_row(std::move(row), val);
    }

    std::optional<AffineSolution> solve() const {
        MatF m(static_cast<int>(rows.size()), n * n, f);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < n * n; ++j) m.set(static_cast<int>(i), j, rows[i][j]);
        return solve_affine(std::move(m), rhs);
    }
};

MatF matrix_from_flat(const std::vector<FqElem>& flat, int n, const FieldDesc& f) {
    MatF m(n, n, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, flat[static_cast<size_t>(i) * n + j]);
    return m;
}

// Enumerate an affine solution space, calling fn on each matrix.
template <typename Fn>
void sweep_affine(const AffineSolution& sol, int n, const FieldDesc& f, uint64_t budget, Fn&& fn) {
    const size_t dim = sol.kernel.size();
    double states = 1;
    for (size_t i = 0; i < dim; ++i) states *= f.q;
    if (states > static_cast<double>(budget))
        throw budget_exceeded("affine sweep: q^" + std::to_string(dim) + " states exceed the budget");
    std::vector<FqElem> digits(dim, 0);
    std::vector<FqElem> flat(sol.particular.size());
    for (;;) {
        flat = sol.particular;
        for (size_t d = 0; d < dim; ++d) {
            if (digits[d] == 0) continue;
            for (size_t t = 0; t < flat.size(); ++t)
                flat[t] = f.add(flat[t], f.mul(digits[d], sol.kernel[d][t]));
        }
        fn(matrix_from_flat(flat, n, f));
        size_t d = 0;
        while (d < dim) {
            if (++digits[d] < f.q) break;
            digits[d] = 0;
            ++d;
        }
        if (d == dim) break;
    }
}

// Identity conditions for the quotient blocks of a stabiliser element.
void add_block_identity(SystemBuilder& sys, const ShapeData& sd, const BasisIndex& bi) {
    for (int h = 1; h <= sd.num_blocks(); ++h) {
        const auto& blk = sd.blocks[h - 1];
        const int skip = sd.in_J[h - 1] ? blk.i0 : -1; // drop row/col i(h) when h in J
        for (int r = blk.i0; r < blk.i0 + blk.mult; ++r) {
            if (r == skip) continue;
            for (int c = blk.i0; c < blk.i0 + blk.mult; ++c) {
                if (c == skip) continue;
                sys.add_entry(bi.pos(r, bi.row_len(r)), bi.pos(c, bi.row_len(c)),
                              r == c ? FqElem(1) : FqElem(0));
            }
        }
    }
}

} // namespace

std::vector<MatF> psi_image(const MatF& g, const EnhancedPoint& pt, const ShapeData& sd) {
    if (!is_invertible(g) || !stabilises(g, pt.v, pt.x))
        throw input_error("psi_image: matrix does not stabilise the point");
    std::vector<MatF> blocks;
    for (int h = 1; h <= sd.num_blocks(); ++h) {
        const auto& blk = sd.blocks[h - 1];
        MatF full = top_block(g, pt.basis, blk.i0, blk.mult);
        if (!sd.in_J[h - 1]) {
            if (!is_invertible(full)) throw std::logic_error("psi_image: singular quotient block");
            blocks.push_back(std::move(full));
            continue;
        }
        // stabilisers fix the distinguished coset, so column i(h) is the unit
        for (int r = 0; r < blk.mult; ++r)
            if (full.at(r, 0) != (r == 0 ? 1 : 0))
                throw std::logic_error("psi_image: block column at i(h) is not the unit vector");
        MatF red(blk.mult - 1, blk.mult - 1, g.field());
        for (int r = 1; r < blk.mult; ++r)
            for (int c = 1; c < blk.mult; ++c) red.set(r - 1, c - 1, full.at(r, c));
        if (blk.mult > 1 && !is_invertible(red))
            throw std::logic_error("psi_image: singular quotient block");
        blocks.push_back(std::move(red));
    }
    return blocks;
}

long long ker_psi_dim(const Bipartition& bp) {
    return enhanced_unipotent_dim(shape_data(bp));
}

BigInt ker_psi_count(const Bipartition& bp, const FieldDesc& fd, uint64_t budget) {
    EnhancedPoint pt = representative(bp, fd);
    ShapeData sd = shape_data(bp);
    SystemBuilder sys(pt.x.rows(), fd);
    sys.add_commutator(pt.x);
    sys.add_fix_vector(pt.v);
    add_block_identity(sys, sd, pt.basis);
    auto sol = sys.solve();
    if (!sol) throw std::logic_error("ker_psi_count: system inconsistent (identity is a solution)");
    BigInt count = 0;
    sweep_affine(*sol, pt.x.rows(), fd, budget, [&](const MatF& y) {
        if (is_invertible(y)) ++count;
    });
    return count;
}

std::vector<MatF> brute_stabiliser_elements(const EnhancedPoint& pt, uint64_t budget) {
    SystemBuilder sys(pt.x.rows(), pt.x.field());
    sys.add_commutator(pt.x);
    sys.add_fix_vector(pt.v);
    auto sol = sys.solve();
    if (!sol) throw std::logic_error("brute_stabiliser_elements: inconsistent system");
    std::vector<MatF> out;
    sweep_affine(*sol, pt.x.rows(), pt.x.field(), budget, [&](MatF y) {
        if (is_invertible(y)) out.push_back(std::move(y));
    });
    return out;
}

std::vector<MatF> stabiliser_elements_from(const std::vector<MatF>& group_elements,
                                           const std::vector<FqElem>& v, const MatF& x) {
    std::vector<MatF> out;
    for (const auto& g : group_elements)
        if (stabilises(g, v, x)) out.push_back(g);
    return out;
}

MatF build_levi_H(const Bipartition& bp, const FieldDesc& fd, const std::vector<MatF>& assignment) {
    ShapeData sd = shape_data(bp);
    BasisIndex bi(sd.lambda, BasisIndex::Mode::Enhanced);
    const int H = sd.num_blocks();
    if (static_cast<int>(assignment.size()) != H)
        throw input_error("build_levi_H: one block per distinct part value required");
    for (int h = 1; h <= H; ++h) {
        int want = sd.blocks[h - 1].mult - (sd.in_J[h - 1] ? 1 : 0);
        if (assignment[h - 1].rows() != want || assignment[h - 1].cols() != want)
            throw input_error("build_levi_H: block size mismatch at h=" + std::to_string(h));
        if (want > 0 && !is_invertible(assignment[h - 1]))
            throw input_error("build_levi_H: assignment block not invertible at h=" + std::to_string(h));
    }

    MatF g(bi.dimension(), bi.dimension(), fd);
    // One coefficient choice per (column row-index i, target row-index r,
    // target depth s); it propagates down the diagonal of the (i, r) pair.
    auto set_entry = [&](int i, int r, int s, FqElem val) {
        const int li = bi.row_len(i);
        for (int m = 0; s - m >= 1; ++m)
            g.set(bi.pos(r, s - m), bi.pos(i, li - m), val);
    };

    for (int h = 1; h <= H; ++h) {
        const auto& blk = sd.blocks[h - 1];
        const MatF& B = assignment[h - 1];
        if (sd.in_J[h - 1]) {
            set_entry(blk.i0, blk.i0, blk.l, 1);
            for (int r = 0; r < blk.mult - 1; ++r)
                for (int c = 0; c < blk.mult - 1; ++c)
                    set_entry(blk.i0 + 1 + c, blk.i0 + 1 + r, blk.l, B.at(r, c));
        } else {
            for (int r = 0; r < blk.mult; ++r)
                for (int c = 0; c < blk.mult; ++c)
                    set_entry(blk.i0 + c, blk.i0 + r, blk.l, B.at(r, c));
        }
    }

    // Off-block corrections: the distinguished column of the run partner
    // compensates the i(h) column of the block so that v stays fixed.
    for (int h = 1; h <= H; ++h) {
        const auto& blk = sd.blocks[h - 1];
        BlockCase bc = sd.block_case[h - 1];
        if (bc != BlockCase::RightRun && bc != BlockCase::LeftRun) continue;
        const auto& partner = sd.blocks[sd.run_partner[h - 1] - 1];
        const int i_star = partner.i0;
        const int depth = std::min(partner.l, blk.l);
        const MatF& B = assignment[h - 1]; // cases only arise for h not in J
        for (int r = 0; r < blk.mult; ++r) {
            FqElem val = fd.sub(r == 0 ? 1 : 0, B.at(r, 0));
            set_entry(i_star, blk.i0 + r, depth, val);
        }
    }
    return g;
}

std::vector<MatF> enumerate_H(const Bipartition& bp, const FieldDesc& fd, uint64_t budget) {
    ShapeData sd = shape_data(bp);
    const int H = sd.num_blocks();
    std::vector<std::vector<MatF>> lists(H);
    double total = 1;
    for (int h = 1; h <= H; ++h) {
        int m = sd.blocks[h - 1].mult - (sd.in_J[h - 1] ? 1 : 0);
        auto closure = group_closure(m, fd, gl_generators(m, fd), budget, true);
        lists[h - 1] = std::move(closure.elements);
        total *= static_cast<double>(lists[h - 1].size());
    }
    if (total > static_cast<double>(budget))
        throw budget_exceeded("enumerate_H: too many block assignments");
    std::vector<MatF> out;
    std::vector<size_t> idx(H, 0);
    for (;;) {
        std::vector<MatF> assignment;
        for (int h = 0; h < H; ++h) assignment.push_back(lists[h][idx[h]]);
        out.push_back(build_levi_H(bp, fd, assignment));
        int d = 0;
        while (d < H) {
            if (++idx[d] < lists[d].size()) break;
            idx[d] = 0;
            ++d;
        }
        if (d == H) break;
    }
    return out;
}

} // namespace nilcone
