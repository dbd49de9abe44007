#include "nilcone/matf.hpp"

#include <algorithm>

#include "nilcone/error.hpp"

namespace nilcone {

MatF::MatF(int rows, int cols, const FieldDesc& fd)
    : rows_(rows), cols_(cols), fd_(&fd), a_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0 || (rows == 0) != (cols == 0))
        throw input_error("MatF: dimensions must be positive or 0x0");
}

MatF MatF::identity(int n, const FieldDesc& fd) {
    MatF m(n, n, fd);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

MatF MatF::operator*(const MatF& o) const {
    if (cols_ != o.rows_) throw input_error("MatF multiply: dimension mismatch");
    MatF out(rows_, o.cols_, *fd_);
    const FieldDesc& f = *fd_;
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            FqElem aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                FqElem t = f.mul(aik, o.at(k, j));
                out.set(i, j, f.add(out.at(i, j), t));
            }
        }
    }
    return out;
}

MatF MatF::operator+(const MatF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("MatF add: dimension mismatch");
    MatF out(rows_, cols_, *fd_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = fd_->add(a_[i], o.a_[i]);
    return out;
}

MatF MatF::operator-(const MatF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("MatF sub: dimension mismatch");
    MatF out(rows_, cols_, *fd_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = fd_->sub(a_[i], o.a_[i]);
    return out;
}

bool MatF::operator==(const MatF& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_
        && (rows_ == 0 || fd_->q == o.fd_->q);
}

std::vector<FqElem> MatF::apply(const std::vector<FqElem>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw input_error("MatF apply: dimension mismatch");
    std::vector<FqElem> out(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        FqElem s = 0;
        for (int j = 0; j < cols_; ++j) s = fd_->add(s, fd_->mul(at(i, j), v[j]));
        out[i] = s;
    }
    return out;
}

MatF MatF::transpose() const {
    MatF out(cols_, rows_, *fd_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

MatF MatF::pow(int e) const {
    if (rows_ != cols_) throw input_error("MatF pow: square matrix required");
    MatF r = identity(rows_, *fd_);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

bool MatF::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](FqElem v) { return v == 0; });
}

bool MatF::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

namespace {

// In-place row echelon reduction with first-nonzero pivoting.  Returns pivot
// columns; if det_sign is given, tracks row swaps and the pivot product so the
// caller can recover the determinant.
std::vector<int> echelon(MatF& m, bool reduced, FqElem* det_acc = nullptr) {
    const FieldDesc& f = m.field();
    std::vector<int> pivots;
    int r = 0;
    bool swapped_odd = false;
    FqElem prod = 1;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = 0; j < m.cols(); ++j) {
                FqElem t = m.at(r, j);
                m.set(r, j, m.at(pr, j));
                m.set(pr, j, t);
            }
            swapped_odd = !swapped_odd;
        }
        FqElem piv = m.at(r, c);
        prod = f.mul(prod, piv);
        FqElem pi = f.inv(piv);
        for (int j = c; j < m.cols(); ++j) m.set(r, j, f.mul(pi, m.at(r, j)));
        int start = reduced ? 0 : r + 1;
        for (int i = start; i < m.rows(); ++i) {
            if (i == r) continue;
            FqElem factor = m.at(i, c);
            if (factor == 0) continue;
            for (int j = c; j < m.cols(); ++j)
                m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    if (det_acc) {
        if (static_cast<int>(pivots.size()) < std::min(m.rows(), m.cols()))
            *det_acc = 0;
        else
            *det_acc = swapped_odd ? f.neg(prod) : prod;
    }
    return pivots;
}

} // namespace

int rank(MatF m) {
    if (m.rows() == 0) return 0;
    return static_cast<int>(echelon(m, false).size());
}

FqElem det(MatF m) {
    if (m.rows() != m.cols()) throw input_error("det: square matrix required");
    if (m.rows() == 0) return 1;
    FqElem d = 0;
    echelon(m, false, &d);
    return d;
}

bool is_invertible(const MatF& m) {
    return m.rows() == m.cols() && (m.rows() == 0 || det(m) != 0);
}

std::optional<MatF> inverse(const MatF& m) {
    if (m.rows() != m.cols()) throw input_error("inverse: square matrix required");
    const int n = m.rows();
    if (n == 0) return m;
    const FieldDesc& f = m.field();
    MatF aug(n, 2 * n, f);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, n + i, 1);
    }
    auto piv = echelon(aug, true);
    if (static_cast<int>(piv.size()) < n) return std::nullopt;
    MatF out(n, n, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, aug.at(i, n + j));
    return out;
}

std::vector<std::vector<FqElem>> kernel_basis(MatF m) {
    const FieldDesc& f = m.field();
    const int n = m.cols();
    auto piv = echelon(m, true);
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<FqElem>> basis;
    for (int c = 0; c < n; ++c) {
        if (is_piv[c]) continue;
        std::vector<FqElem> v(n, 0);
        v[c] = 1;
        for (size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = f.neg(m.at(static_cast<int>(r), c));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolution> solve_affine(MatF m, std::vector<FqElem> rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw input_error("solve_affine: rhs size mismatch");
    const FieldDesc& f = m.field();
    const int n = m.cols();
    MatF aug(m.rows(), n + 1, f);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, n, rhs[i]);
    }
    auto piv = echelon(aug, true);
    if (!piv.empty() && piv.back() == n) return std::nullopt; // inconsistent
    AffineSolution sol;
    sol.particular.assign(n, 0);
    for (size_t r = 0; r < piv.size(); ++r) sol.particular[piv[r]] = aug.at(static_cast<int>(r), n);
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    for (int c = 0; c < n; ++c) {
        if (is_piv[c]) continue;
        std::vector<FqElem> v(n, 0);
        v[c] = 1;
        for (size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = f.neg(aug.at(static_cast<int>(r), c));
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

std::vector<int> kernel_dims_of_powers(const MatF& x) {
    if (x.rows() != x.cols()) throw input_error("kernel_dims_of_powers: square matrix required");
    const int n = x.rows();
    std::vector<int> dims;
    MatF p = x;
    for (int i = 1; i <= n; ++i) {
        dims.push_back(n - rank(p));
        if (dims.back() == n) break;
        p = p * x;
    }
    return dims;
}

bool is_nilpotent(const MatF& x) {
    if (x.rows() != x.cols()) return false;
    if (x.rows() == 0) return true;
    auto dims = kernel_dims_of_powers(x);
    return dims.back() == x.rows();
}

Partition jordan_type(const MatF& x) {
    if (!is_nilpotent(x)) throw input_error("jordan_type: matrix is not nilpotent");
    if (x.rows() == 0) return {};
    auto dims = kernel_dims_of_powers(x);
    std::vector<int> conj;
    int prev = 0;
    for (int d : dims) {
        conj.push_back(d - prev);
        prev = d;
    }
    return Partition(std::move(conj)).conjugate();
}

BasisIndex::BasisIndex(Partition lambda, Mode mode) : lambda_(std::move(lambda)), mode_(mode) {
    const int l = lambda_.length();
    const int n_rows = mode == Mode::Exotic ? 2 * l : l;
    row_len_.resize(n_rows);
    row_start_.resize(n_rows);
    for (int i = 1; i <= n_rows; ++i)
        row_len_[i - 1] = lambda_.part(i <= l ? i : n_rows - i + 1);
    int acc = 0;
    for (int i = 0; i < n_rows; ++i) {
        row_start_[i] = acc;
        acc += row_len_[i];
    }
    dim_ = acc;
}

std::pair<int, int> BasisIndex::coord(int p) const {
    for (int i = 1; i <= num_rows(); ++i)
        if (p < row_start_[i - 1] + row_len_[i - 1]) return {i, p - row_start_[i - 1] + 1};
    throw input_error("BasisIndex::coord: position out of range");
}

MatF jordan_matrix(const BasisIndex& bi, const FieldDesc& fd) {
    MatF x(bi.dimension(), bi.dimension(), fd);
    for (int i = 1; i <= bi.num_rows(); ++i)
        for (int j = 2; j <= bi.row_len(i); ++j) x.set(bi.pos(i, j - 1), bi.pos(i, j), 1);
    return x;
}

namespace {

// Matrix of y -> xy - yx acting on n x n matrices flattened row-major.
MatF commutator_operator(const MatF& x) {
    const int n = x.rows();
    const FieldDesc& f = x.field();
    MatF m(n * n, n * n, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int row = i * n + j;
            for (int k = 0; k < n; ++k) {
                // (xy)[i][j] takes y[k][j] with weight x[i][k]
                if (x.at(i, k) != 0) {
                    int col = k * n + j;
                    m.set(row, col, f.add(m.at(row, col), x.at(i, k)));
                }
                // (yx)[i][j] takes y[i][k] with weight x[k][j]
                if (x.at(k, j) != 0) {
                    int col = i * n + k;
                    m.set(row, col, f.sub(m.at(row, col), x.at(k, j)));
                }
            }
        }
    return m;
}

void require_jordan_form(const MatF& x, const BasisIndex& bi) {
    if (!(x == jordan_matrix(bi, x.field())))
        throw input_error("matrix is not in Jordan form for its own type");
}

} // namespace

int commutant_dim(const MatF& x) {
    if (x.rows() != x.cols()) throw input_error("commutant_dim: square matrix required");
    if (x.rows() == 0) return 0;
    return static_cast<int>(x.rows()) * x.rows() - rank(commutator_operator(x));
}

std::vector<MatF> commutant_basis(const MatF& x) {
    const int n = x.rows();
    std::vector<MatF> out;
    for (const auto& v : kernel_basis(commutator_operator(x))) {
        MatF y(n, n, x.field());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) y.set(i, j, v[static_cast<size_t>(i) * n + j]);
        out.push_back(std::move(y));
    }
    return out;
}

bool commutant_conditions_check(const MatF& x, const MatF& y) {
    Partition lambda = jordan_type(x);
    BasisIndex bi(lambda, BasisIndex::Mode::Enhanced);
    require_jordan_form(x, bi);
    if (y.rows() != x.rows() || y.cols() != x.cols())
        throw input_error("commutant_conditions_check: dimension mismatch");
    const int l = lambda.length();
    auto c = [&](int i, int j, int r, int s) { return y.at(bi.pos(r, s), bi.pos(i, j)); };
    for (int i = 1; i <= l; ++i)
        for (int r = 1; r <= l; ++r)
            for (int j = 1; j <= lambda.part(i); ++j)
                for (int s = 1; s <= lambda.part(r); ++s) {
                    if (s > j && c(i, j, r, s) != 0) return false;                      // (ii)
                    if (j > 1 && s > 1 && c(i, j, r, s) != c(i, j - 1, r, s - 1))       // (i)
                        return false;
                    if (s == lambda.part(r) && j != lambda.part(i) && c(i, j, r, s) != 0)
                        return false;                                                   // (iii)
                }
    return true;
}

MatF top_block(const MatF& g, const BasisIndex& bi, int i0, int mult) {
    MatF b(mult, mult, g.field());
    for (int a = 0; a < mult; ++a)
        for (int c = 0; c < mult; ++c) {
            int rr = i0 + a, cc = i0 + c;
            b.set(a, c, g.at(bi.pos(rr, bi.row_len(rr)), bi.pos(cc, bi.row_len(cc))));
        }
    return b;
}

bool det_factorization_check(const MatF& x, const MatF& y) {
    Partition lambda = jordan_type(x);
    BasisIndex bi(lambda, BasisIndex::Mode::Enhanced);
    require_jordan_form(x, bi);
    if (!(x * y == y * x)) throw input_error("det_factorization_check: y is not in the commutant");
    const FieldDesc& f = x.field();
    FqElem lhs = det(y);
    FqElem rhs = 1;
    int i0 = 1;
    for (auto [l, mult] : exponent_form(lambda)) {
        FqElem bd = det(top_block(y, bi, i0, mult));
        rhs = f.mul(rhs, f.pow(bd, l));
        i0 += mult;
    }
    return lhs == rhs;
}

} // namespace nilcone
