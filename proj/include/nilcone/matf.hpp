#pragma once

#include <optional>
#include <vector>

#include "nilcone/gf.hpp"
#include "nilcone/partition.hpp"

namespace nilcone {

/// Dense row-major matrix over F_q.  A value type; the 0x0 empty matrix is
/// allowed.  All arithmetic is exact table arithmetic, so elimination uses
/// plain first-nonzero pivoting.
class MatF {
  public:
    MatF() = default;
    MatF(int rows, int cols, const FieldDesc& fd);

    static MatF identity(int n, const FieldDesc& fd);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldDesc& field() const { return *fd_; }

    FqElem at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, FqElem v) { a_[static_cast<size_t>(r) * cols_ + c] = v; }
    const std::vector<FqElem>& data() const { return a_; }

    MatF operator*(const MatF& o) const;
    MatF operator+(const MatF& o) const;
    MatF operator-(const MatF& o) const;
    bool operator==(const MatF& o) const;

    std::vector<FqElem> apply(const std::vector<FqElem>& v) const;
    MatF transpose() const;
    MatF pow(int e) const;

    bool is_zero() const;
    bool is_identity() const;

  private:
    int rows_ = 0, cols_ = 0;
    const FieldDesc* fd_ = nullptr;
    std::vector<FqElem> a_;
};

int rank(MatF m); // by value: elimination works on its own copy
FqElem det(MatF m);
std::optional<MatF> inverse(const MatF& m);
bool is_invertible(const MatF& m);

/// Basis of the solution space of m x = 0 (column vectors).
std::vector<std::vector<FqElem>> kernel_basis(MatF m);

/// One solution of m x = rhs plus a kernel basis; nullopt if inconsistent.
struct AffineSolution {
    std::vector<FqElem> particular;
    std::vector<std::vector<FqElem>> kernel;
};
std::optional<AffineSolution> solve_affine(MatF m, std::vector<FqElem> rhs);

/// dim ker x^i for i = 1..stabilisation (plus the final repeated value at n
/// for nilpotent x); x square.
std::vector<int> kernel_dims_of_powers(const MatF& x);

bool is_nilpotent(const MatF& x);

/// Jordan type of a nilpotent matrix: the partition whose conjugate has parts
/// dim ker x^i - dim ker x^{i-1}.  Throws input_error if x is not nilpotent.
Partition jordan_type(const MatF& x);

/// Coordinate bookkeeping for the standard basis indexed by (i, j), i the
/// Jordan-block row and j = 1..lambda_i the depth, ordered lexicographically.
/// Exotic mode doubles the rows: i = 1..2l with lambda_i = lambda_{2l-i+1}
/// for i > l.
class BasisIndex {
  public:
    enum class Mode { Enhanced, Exotic };

    BasisIndex() = default;
    BasisIndex(Partition lambda, Mode mode);

    const Partition& lambda() const { return lambda_; }
    Mode mode() const { return mode_; }
    int num_rows() const { return static_cast<int>(row_len_.size()); }
    int dimension() const { return dim_; }

    /// Row length lambda_i (extended to mirrored rows in exotic mode), 1-based.
    int row_len(int i) const { return row_len_[i - 1]; }
    /// Mirrored row index 2l - i + 1 (exotic mode).
    int mirror(int i) const { return num_rows() - i + 1; }

    /// 0-based coordinate position of (i, j); both arguments 1-based.
    int pos(int i, int j) const { return row_start_[i - 1] + j - 1; }
    /// Inverse of pos.
    std::pair<int, int> coord(int p) const;

  private:
    Partition lambda_;
    Mode mode_ = Mode::Enhanced;
    int dim_ = 0;
    std::vector<int> row_len_;
    std::vector<int> row_start_;
};

/// The nilpotent matrix in Jordan form for the given index: x v_{i,j} =
/// v_{i,j-1} (and 0 at j = 1).
MatF jordan_matrix(const BasisIndex& bi, const FieldDesc& fd);

/// Nullity of y -> xy - yx (brute force via the n^2 x n^2 linear system).
int commutant_dim(const MatF& x);

/// Basis of {y : xy = yx} as matrices.
std::vector<MatF> commutant_basis(const MatF& x);

/// Check the explicit coefficient conditions that characterise xy = yx when
/// x = jordan_matrix(lambda):
///   (i)  c_{ij}^{rs} = c_{i,j-m}^{r,s-m} along diagonals,
///   (ii) c_{ij}^{rs} = 0 when s > j,
///   (iii) c_{ij}^{r,lambda_r} = 0 when j != lambda_i.
/// Here c_{ij}^{rs}(y) = y[pos(r,s)][pos(i,j)].  Throws input_error when x is
/// not the Jordan matrix of its own type.
bool commutant_conditions_check(const MatF& x, const MatF& y);

/// For y commuting with x = jordan_matrix(lambda): does det(y) factor as
/// prod_h det(top block of I_h)^{l_h}?  Throws input_error if y does not
/// commute with x.
bool det_factorization_check(const MatF& x, const MatF& y);

/// The top-coordinate submatrix of g on block h: rows/cols at positions
/// (i, lambda_i) for i in I_h.  This is the matrix of the induced action on
/// the block quotient.
MatF top_block(const MatF& g, const BasisIndex& bi, int i0, int mult);

} // namespace nilcone
