#include "nilcone/exotic.hpp"

#include <algorithm>

#include "nilcone/error.hpp"
#include "nilcone/qcount.hpp"

namespace nilcone {

SymplecticSpace make_space(const Partition& lambda, const FieldDesc& fd) {
    SymplecticSpace sp;
    sp.lambda = lambda;
    sp.basis = BasisIndex(lambda, BasisIndex::Mode::Exotic);
    const int l = lambda.length();
    const int dim = sp.basis.dimension();
    sp.gram = MatF(dim, dim, fd);
    for (int i = 1; i <= sp.basis.num_rows(); ++i) {
        int li = sp.basis.row_len(i);
        for (int j = 1; j <= li; ++j) {
            int r = sp.basis.mirror(i);
            int s = li - j + 1;
            FqElem val = i <= l ? FqElem(1) : fd.neg(1);
            sp.gram.set(sp.basis.pos(i, j), sp.basis.pos(r, s), val);
        }
    }
    return sp;
}

ExoticPoint exotic_representative(const Bipartition& bp, const FieldDesc& fd) {
    if (bp.n() < 1) throw input_error("exotic_representative: need |mu| + |nu| >= 1");
    ShapeData sd = shape_data(bp);
    ExoticPoint pt;
    pt.space = make_space(sd.lambda, fd);
    pt.y = jordan_matrix(pt.space.basis, fd);
    pt.w.assign(pt.space.dim(), 0);
    for (const auto& blk : sd.blocks)
        if (blk.j > 0) pt.w[pt.space.basis.pos(blk.i0, blk.j)] = 1;
    if (!is_in_N0(pt.y, pt.space))
        throw std::logic_error("exotic_representative: constructed point fails the form condition");
    return pt;
}

bool is_in_N0(const MatF& y, const SymplecticSpace& sp) {
    if (!is_nilpotent(y)) return false;
    const FieldDesc& f = sp.field();
    MatF m = y.transpose() * sp.gram; // m[a][b] = <y e_a, e_b>
    for (int a = 0; a < m.rows(); ++a) {
        if (m.at(a, a) != 0) return false;
        for (int b = a + 1; b < m.cols(); ++b)
            if (f.add(m.at(a, b), m.at(b, a)) != 0) return false;
    }
    return true;
}

bool is_symplectic(const MatF& g, const MatF& gram) {
    return g.transpose() * gram * g == gram;
}

bool is_symplectic(const MatF& g, const SymplecticSpace& sp) {
    return is_symplectic(g, sp.gram);
}

GeneratorSet sp_transvection_generators(const MatF& gram) {
    const FieldDesc& f = gram.field();
    const int d = gram.rows();
    GeneratorSet gs;
    if (d == 0) return gs;
    // projective representatives: first nonzero coordinate equal to 1
    std::vector<FqElem> a(d, 0);
    auto advance = [&]() -> bool {
        int i = 0;
        while (i < d) {
            if (++a[i] < f.q) return true;
            a[i] = 0;
            ++i;
        }
        return false;
    };
    while (advance()) {
        int first = 0;
        while (a[first] == 0) ++first;
        if (a[first] != 1) continue;
        std::vector<FqElem> ga(d, 0); // (gram a)_j = <e_j, a>
        for (int j = 0; j < d; ++j) {
            FqElem s = 0;
            for (int k = 0; k < d; ++k) s = f.add(s, f.mul(gram.at(j, k), a[k]));
            ga[j] = s;
        }
        for (int c = 1; c < f.q; ++c) {
            MatF t = MatF::identity(d, f);
            for (int i = 0; i < d; ++i) {
                if (a[i] == 0) continue;
                FqElem cai = f.mul(static_cast<FqElem>(c), a[i]);
                for (int j = 0; j < d; ++j)
                    t.set(i, j, f.add(t.at(i, j), f.mul(cai, ga[j])));
            }
            gs.add(std::move(t));
        }
    }
    return gs;
}

std::vector<MatF> sp_group_elements(const MatF& gram, uint64_t budget) {
    return group_closure(gram.rows(), gram.field(), sp_transvection_generators(gram), budget, true)
        .elements;
}

OrbitSet exotic_orbit(const std::vector<FqElem>& w, const MatF& y, const SymplecticSpace& sp,
                      uint64_t budget) {
    return orbit_bfs(w, y, sp_transvection_generators(sp.gram), budget);
}

BigInt exotic_stabiliser_count(const std::vector<FqElem>& w, const MatF& y,
                               const SymplecticSpace& sp, uint64_t budget) {
    const int n = sp.lambda.weight();
    BigInt group = sp_order(n).evaluate(sp.field().q);
    BigInt orbit = exotic_orbit(w, y, sp, budget).size();
    if (group % orbit != 0)
        throw inexact_division("exotic_stabiliser_count: group order not divisible by orbit size");
    return group / orbit;
}

namespace {

Partition halve_doubled_type(const Partition& doubled) {
    std::vector<int> half;
    const auto& parts = doubled.parts();
    for (size_t i = 0; i < parts.size(); i += 2) {
        if (i + 1 >= parts.size() || parts[i] != parts[i + 1])
            throw input_error("matrix is not of doubled Jordan type");
        half.push_back(parts[i]);
    }
    return Partition(std::move(half));
}

} // namespace

Bipartition exotic_classify(const std::vector<FqElem>& w, const MatF& y, uint64_t budget) {
    Partition lambda = halve_doubled_type(jordan_type(y));
    const FieldDesc& fd = y.field();
    SymplecticSpace sp = make_space(lambda, fd);
    if (!is_in_N0(y, sp)) throw input_error("exotic_classify: point fails the form condition");
    OrbitSet orbit = exotic_orbit(w, y, sp, budget);
    for (const auto& bp : enumerate_bipartitions(lambda.weight())) {
        if (!(bp.lambda() == lambda)) continue;
        ExoticPoint rep = exotic_representative(bp, fd);
        if (orbit.contains(rep.w, rep.y)) return bp;
    }
    throw std::logic_error("exotic_classify: point matched no orbit representative");
}

std::vector<int> exotic_block_rows(const SymplecticSpace& sp, const ShapeData& sd, int h) {
    const auto& blk = sd.blocks[h - 1];
    std::vector<int> rows;
    for (int i = blk.i0; i < blk.i0 + blk.mult; ++i) rows.push_back(i);
    for (int i = sp.basis.mirror(blk.i0 + blk.mult - 1); i <= sp.basis.mirror(blk.i0); ++i)
        rows.push_back(i);
    return rows;
}

MatF induced_block_gram(const SymplecticSpace& sp, const ShapeData& sd, int h) {
    auto rows = exotic_block_rows(sp, sd, h);
    const int m = static_cast<int>(rows.size());
    const int l = sd.blocks[h - 1].l;
    MatF g(m, m, sp.field());
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            g.set(a, b, sp.gram.at(sp.basis.pos(rows[a], 1), sp.basis.pos(rows[b], l)));
    return g;
}

MatF induced_block_gram_reduced(const SymplecticSpace& sp, const ShapeData& sd, int h) {
    MatF full = induced_block_gram(sp, sd, h);
    const int m = full.rows();
    MatF red(m - 2, m - 2, sp.field());
    for (int a = 1; a < m - 1; ++a)
        for (int b = 1; b < m - 1; ++b) red.set(a - 1, b - 1, full.at(a, b));
    return red;
}

namespace {

MatF submatrix_at_rows(const MatF& g, const BasisIndex& bi, const std::vector<int>& rows) {
    const int m = static_cast<int>(rows.size());
    MatF b(m, m, g.field());
    for (int a = 0; a < m; ++a)
        for (int c = 0; c < m; ++c)
            b.set(a, c,
                  g.at(bi.pos(rows[a], bi.row_len(rows[a])), bi.pos(rows[c], bi.row_len(rows[c]))));
    return b;
}

bool stabilises_exotic(const MatF& g, const ExoticPoint& pt) {
    return is_symplectic(g, pt.space) && g.apply(pt.w) == pt.w && g * pt.y == pt.y * g;
}

} // namespace

std::vector<MatF> psi_tilde_image(const MatF& g, const ExoticPoint& pt, const ShapeData& sd) {
    if (!stabilises_exotic(g, pt))
        throw input_error("psi_tilde_image: matrix does not stabilise the point");
    std::vector<MatF> blocks;
    for (int h = 1; h <= sd.num_blocks(); ++h) {
        auto rows = exotic_block_rows(pt.space, sd, h);
        MatF full = submatrix_at_rows(g, pt.space.basis, rows);
        const int m = full.rows();
        if (!sd.in_J[h - 1]) {
            if (!is_symplectic(full, induced_block_gram(pt.space, sd, h)))
                throw std::logic_error("psi_tilde_image: block does not preserve the induced form");
            blocks.push_back(std::move(full));
            continue;
        }
        // i(h) sits first in the row list and j(h) last; a stabiliser fixes
        // the distinguished coset and preserves its perp.
        for (int r = 0; r < m; ++r)
            if (full.at(r, 0) != (r == 0 ? 1 : 0))
                throw std::logic_error("psi_tilde_image: block column at i(h) is not the unit vector");
        for (int c = 0; c < m - 1; ++c)
            if (full.at(m - 1, c) != 0)
                throw std::logic_error("psi_tilde_image: block does not preserve the perp of w_h");
        MatF red(m - 2, m - 2, g.field());
        for (int r = 1; r < m - 1; ++r)
            for (int c = 1; c < m - 1; ++c) red.set(r - 1, c - 1, full.at(r, c));
        if (m > 2 && !is_symplectic(red, induced_block_gram_reduced(pt.space, sd, h)))
            throw std::logic_error("psi_tilde_image: reduced block does not preserve the induced form");
        blocks.push_back(std::move(red));
    }
    return blocks;
}

long long ker_psi_tilde_dim(const Bipartition& bp) {
    return exotic_unipotent_dim(shape_data(bp));
}

namespace {

// Shared affine-system scaffolding with the enhanced module would be overkill;
// the handful of row builders is repeated here for the doubled coordinates.
struct SystemBuilder {
    int n;
    const FieldDesc& f;
    std::vector<std::vector<FqElem>> rows;
    std::vector<FqElem> rhs;

    SystemBuilder(int n_, const FieldDesc& f_) : n(n_), f(f_) {}

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
                rows.push_back(std::move(row));
                rhs.push_back(0);
            }
    }

    void add_fix_vector(const std::vector<FqElem>& v) {
        for (int i = 0; i < n; ++i) {
            std::vector<FqElem> row(static_cast<size_t>(n) * n, 0);
            for (int j = 0; j < n; ++j) row[static_cast<size_t>(i) * n + j] = v[j];
            rows.push_back(std::move(row));
            rhs.push_back(v[i]);
        }
    }

    void add_entry(int r, int c, FqElem val) {
        std::vector<FqElem> row(static_cast<size_t>(n) * n, 0);
        row[static_cast<size_t>(r) * n + c] = 1;
        rows.push_back(std::move(row));
        rhs.push_back(val);
    }

    std::optional<AffineSolution> solve() const {
        MatF m(static_cast<int>(rows.size()), n * n, f);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < n * n; ++j) m.set(static_cast<int>(i), j, rows[i][j]);
        return solve_affine(std::move(m), rhs);
    }
};

template <typename Fn>
void sweep_affine(const AffineSolution& sol, int n, const FieldDesc& f, uint64_t budget, Fn&& fn) {
    const size_t dim = sol.kernel.size();
    double states = 1;
    for (size_t i = 0; i < dim; ++i) states *= f.q;
    if (states > static_cast<double>(budget))
        throw budget_exceeded("affine sweep: q^" + std::to_string(dim) + " states exceed the budget");
    std::vector<FqElem> digits(dim, 0);
    std::vector<FqElem> flat;
    for (;;) {
        flat = sol.particular;
        for (size_t d = 0; d < dim; ++d) {
            if (digits[d] == 0) continue;
            for (size_t t = 0; t < flat.size(); ++t)
                flat[t] = f.add(flat[t], f.mul(digits[d], sol.kernel[d][t]));
        }
        MatF m(n, n, f);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.set(i, j, flat[static_cast<size_t>(i) * n + j]);
        fn(std::move(m));
        size_t d = 0;
        while (d < dim) {
            if (++digits[d] < f.q) break;
            digits[d] = 0;
            ++d;
        }
        if (d == dim) break;
    }
}

} // namespace

BigInt ker_psi_tilde_count(const Bipartition& bp, const FieldDesc& fd, uint64_t budget) {
    ExoticPoint pt = exotic_representative(bp, fd);
    ShapeData sd = shape_data(bp);
    SystemBuilder sys(pt.space.dim(), fd);
    sys.add_commutator(pt.y);
    sys.add_fix_vector(pt.w);
    for (int h = 1; h <= sd.num_blocks(); ++h) {
        auto rows = exotic_block_rows(pt.space, sd, h);
        const int m = static_cast<int>(rows.size());
        for (int a = 0; a < m; ++a) {
            if (sd.in_J[h - 1] && (a == 0 || a == m - 1)) continue;
            for (int b = 0; b < m; ++b) {
                if (sd.in_J[h - 1] && (b == 0 || b == m - 1)) continue;
                sys.add_entry(pt.space.basis.pos(rows[a], pt.space.basis.row_len(rows[a])),
                              pt.space.basis.pos(rows[b], pt.space.basis.row_len(rows[b])),
                              a == b ? FqElem(1) : FqElem(0));
            }
        }
    }
    auto sol = sys.solve();
    if (!sol) throw std::logic_error("ker_psi_tilde_count: system inconsistent");
    BigInt count = 0;
    sweep_affine(*sol, pt.space.dim(), fd, budget, [&](MatF z) {
        if (is_symplectic(z, pt.space)) ++count;
    });
    return count;
}

std::vector<MatF> brute_exotic_stabiliser_elements(const ExoticPoint& pt, uint64_t budget) {
    SystemBuilder sys(pt.space.dim(), pt.space.field());
    sys.add_commutator(pt.y);
    sys.add_fix_vector(pt.w);
    auto sol = sys.solve();
    if (!sol) throw std::logic_error("brute_exotic_stabiliser_elements: inconsistent system");
    std::vector<MatF> out;
    sweep_affine(*sol, pt.space.dim(), pt.space.field(), budget, [&](MatF z) {
        if (is_symplectic(z, pt.space)) out.push_back(std::move(z));
    });
    return out;
}

MatF build_levi_Htilde(const Bipartition& bp, const FieldDesc& fd,
                       const std::vector<MatF>& assignment, std::vector<FqElem>* s_values) {
    ShapeData sd = shape_data(bp);
    SymplecticSpace sp = make_space(sd.lambda, fd);
    const BasisIndex& bi = sp.basis;
    const int H = sd.num_blocks();
    const int dim = sp.dim();
    if (static_cast<int>(assignment.size()) != H)
        throw input_error("build_levi_Htilde: one block per distinct part value required");
    for (int h = 1; h <= H; ++h) {
        int want = 2 * (sd.blocks[h - 1].mult - (sd.in_J[h - 1] ? 1 : 0));
        const MatF& B = assignment[h - 1];
        if (B.rows() != want || B.cols() != want)
            throw input_error("build_levi_Htilde: block size mismatch at h=" + std::to_string(h));
        MatF form = sd.in_J[h - 1] ? induced_block_gram_reduced(sp, sd, h)
                                   : induced_block_gram(sp, sd, h);
        if (want > 0 && !is_symplectic(B, form))
            throw input_error("build_levi_Htilde: assignment block not symplectic at h="
                              + std::to_string(h));
    }

    MatF g0(dim, dim, fd);
    auto set_entry = [&](MatF& g, int i, int r, int s, FqElem val) {
        const int li = bi.row_len(i);
        for (int m = 0; s - m >= 1; ++m) g.set(bi.pos(r, s - m), bi.pos(i, li - m), val);
    };

    for (int h = 1; h <= H; ++h) {
        const auto& blk = sd.blocks[h - 1];
        auto rows = exotic_block_rows(sp, sd, h);
        const int m = static_cast<int>(rows.size());
        const MatF& B = assignment[h - 1];
        if (sd.in_J[h - 1]) {
            set_entry(g0, rows[0], rows[0], blk.l, 1);
            set_entry(g0, rows[m - 1], rows[m - 1], blk.l, 1);
            for (int r = 1; r < m - 1; ++r)
                for (int c = 1; c < m - 1; ++c)
                    set_entry(g0, rows[c], rows[r], blk.l, B.at(r - 1, c - 1));
        } else {
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) set_entry(g0, rows[c], rows[r], blk.l, B.at(r, c));
        }
    }

    for (int h = 1; h <= H; ++h) {
        const auto& blk = sd.blocks[h - 1];
        BlockCase bc = sd.block_case[h - 1];
        if (bc != BlockCase::RightRun && bc != BlockCase::LeftRun) continue;
        const auto& partner = sd.blocks[sd.run_partner[h - 1] - 1];
        const int i_star = partner.i0;
        const int depth = std::min(partner.l, blk.l);
        auto rows = exotic_block_rows(sp, sd, h);
        const MatF& B = assignment[h - 1];
        for (size_t r = 0; r < rows.size(); ++r) {
            FqElem val = fd.sub(r == 0 ? 1 : 0, B.at(static_cast<int>(r), 0));
            set_entry(g0, i_star, rows[r], depth, val);
        }
    }

    // Entries in the row of j(h) (h in J) across foreign columns are left to
    // the form conditions: solve the linear system they impose.
    struct Unknown {
        int col_i, row_j, depth;
    };
    std::vector<Unknown> unknowns;
    for (int h = 1; h <= H; ++h) {
        if (!sd.in_J[h - 1]) continue;
        const auto& blk = sd.blocks[h - 1];
        const int jh = bi.mirror(blk.i0); // largest index of I_h
        auto rows = exotic_block_rows(sp, sd, h);
        for (int i = 1; i <= bi.num_rows(); ++i) {
            if (std::find(rows.begin(), rows.end(), i) != rows.end()) continue;
            unknowns.push_back({i, jh, std::min(bi.row_len(i), blk.l)});
        }
    }

    const size_t t_cnt = unknowns.size();
    std::vector<MatF> basis_mats;
    basis_mats.reserve(t_cnt);
    for (const auto& u : unknowns) {
        MatF um(dim, dim, fd);
        set_entry(um, u.col_i, u.row_j, u.depth, 1);
        basis_mats.push_back(std::move(um));
    }

    // residual(s) = (g0 + sum s_k U_k)^T G (g0 + ...) - G must vanish; the
    // cross terms U_k^T G U_l are structurally zero, which we verify.
    for (size_t k = 0; k < t_cnt; ++k)
        for (size_t l = 0; l < t_cnt; ++l)
            if (!(basis_mats[k].transpose() * sp.gram * basis_mats[l]).is_zero())
                throw std::logic_error("build_levi_Htilde: form conditions are not linear for "
                                       + bp.to_string());

    MatF g = g0;
    std::vector<FqElem> solved;
    if (t_cnt > 0) {
        MatF a0 = g0.transpose() * sp.gram * g0 - sp.gram;
        MatF sys(dim * dim, static_cast<int>(t_cnt), fd);
        std::vector<FqElem> rhs(static_cast<size_t>(dim) * dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) rhs[static_cast<size_t>(i) * dim + j] = fd.neg(a0.at(i, j));
        for (size_t k = 0; k < t_cnt; ++k) {
            MatF lk =
                basis_mats[k].transpose() * sp.gram * g0 + g0.transpose() * sp.gram * basis_mats[k];
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    sys.set(i * dim + j, static_cast<int>(k), lk.at(i, j));
        }
        auto sol = solve_affine(std::move(sys), rhs);
        if (!sol)
            throw std::logic_error("build_levi_Htilde: form conditions unsolvable for "
                                   + bp.to_string());
        if (!sol->kernel.empty())
            throw std::logic_error("build_levi_Htilde: form conditions underdetermined for "
                                   + bp.to_string());
        solved = sol->particular;
        for (size_t k = 0; k < t_cnt; ++k) {
            FqElem sk = solved[k];
            if (sk == 0) continue;
            const auto& u = unknowns[k];
            set_entry(g, u.col_i, u.row_j, u.depth, sk);
        }
    }
    if (s_values) *s_values = solved;

    if (!is_symplectic(g, sp) || !(g * jordan_matrix(bi, fd) == jordan_matrix(bi, fd) * g))
        throw std::logic_error("build_levi_Htilde: constructed element fails its own contract for "
                               + bp.to_string());
    return g;
}

std::vector<MatF> enumerate_Htilde(const Bipartition& bp, const FieldDesc& fd, uint64_t budget) {
    ShapeData sd = shape_data(bp);
    SymplecticSpace sp = make_space(sd.lambda, fd);
    const int H = sd.num_blocks();
    std::vector<std::vector<MatF>> lists(H);
    double total = 1;
    for (int h = 1; h <= H; ++h) {
        MatF form = sd.in_J[h - 1] ? induced_block_gram_reduced(sp, sd, h)
                                   : induced_block_gram(sp, sd, h);
        lists[h - 1] = sp_group_elements(form, budget);
        total *= static_cast<double>(lists[h - 1].size());
    }
    if (total > static_cast<double>(budget))
        throw budget_exceeded("enumerate_Htilde: too many block assignments");
    std::vector<MatF> out;
    std::vector<size_t> idx(H, 0);
    for (;;) {
        std::vector<MatF> assignment;
        for (int h = 0; h < H; ++h) assignment.push_back(lists[h][idx[h]]);
        out.push_back(build_levi_Htilde(bp, fd, assignment));
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

ExoticPoint embed_enhanced(const EnhancedPoint& pt) {
    const FieldDesc& fd = pt.x.field();
    Partition lambda = jordan_type(pt.x);
    BasisIndex enh(lambda, BasisIndex::Mode::Enhanced);
    const int n = enh.dimension();
    ExoticPoint out;
    out.space = make_space(lambda, fd);
    const BasisIndex& bi = out.space.basis;
    const int dim = out.space.dim();
    const int l = lambda.length();

    // doubled coordinate -> index into (V, V*) stacked plainly
    std::vector<int> plain(dim);
    for (int p = 0; p < dim; ++p) {
        auto [i, j] = bi.coord(p);
        if (i <= l)
            plain[p] = enh.pos(i, j);
        else
            plain[p] = n + enh.pos(bi.mirror(i), bi.row_len(i) - j + 1);
    }

    // block-diagonal (x, x^T) pulled back through the coordinate relabeling
    MatF big(dim, dim, fd);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            int pa = plain[a], pb = plain[b];
            FqElem val = 0;
            if (pa < n && pb < n)
                val = pt.x.at(pa, pb);
            else if (pa >= n && pb >= n)
                val = pt.x.at(pb - n, pa - n); // transpose on the dual half
            big.set(a, b, val);
        }
    out.y = std::move(big);
    out.w.assign(dim, 0);
    for (int p = 0; p < dim; ++p)
        if (plain[p] < n) out.w[p] = pt.v[plain[p]];
    if (!is_in_N0(out.y, out.space))
        throw std::logic_error("embed_enhanced: embedded point fails the form condition");
    return out;
}

} // namespace nilcone
