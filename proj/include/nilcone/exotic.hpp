#pragma once

#include "nilcone/enhanced.hpp"
#include "nilcone/orbit.hpp"
#include "nilcone/partition.hpp"
#include "nilcone/qpoly.hpp"

namespace nilcone {

/// A 2n-dimensional symplectic space in the doubled coordinates for lambda:
/// rows i = 1..l carry the original Jordan blocks and rows i = l+1..2l the
/// dual blocks in reversed order.  Basis vector (i, j) pairs with
/// (2l - i + 1, lambda_i - j + 1), sign +1 when i <= l.
struct SymplecticSpace {
    Partition lambda;
    BasisIndex basis; // exotic mode
    MatF gram;        // invertible, skew, zero diagonal

    const FieldDesc& field() const { return gram.field(); }
    int dim() const { return basis.dimension(); }
};

SymplecticSpace make_space(const Partition& lambda, const FieldDesc& fd);

struct ExoticPoint {
    std::vector<FqElem> w;
    MatF y;
    SymplecticSpace space;
};

/// Standard representative: y is the Jordan matrix of the doubled shape
/// (type lambda U lambda) and w has a 1 at (i(h), j_h) for blocks with
/// j_h > 0.
ExoticPoint exotic_representative(const Bipartition& bp, const FieldDesc& fd);

/// Nilpotent and <yu, u> = 0 for all u, decided by polarization: the matrix
/// M = y^T gram must have zero diagonal and M + M^T = 0.  Valid in every
/// characteristic, including 2.
bool is_in_N0(const MatF& y, const SymplecticSpace& sp);

bool is_symplectic(const MatF& g, const MatF& gram);
bool is_symplectic(const MatF& g, const SymplecticSpace& sp);

/// Symplectic transvections u -> u + c <u, a> a for all projective a and
/// c != 0; generates the symplectic group of the form.
GeneratorSet sp_transvection_generators(const MatF& gram);

/// Full element listing of the symplectic group of the form, from the
/// transvection closure.
std::vector<MatF> sp_group_elements(const MatF& gram, uint64_t budget);

OrbitSet exotic_orbit(const std::vector<FqElem>& w, const MatF& y, const SymplecticSpace& sp,
                      uint64_t budget);

/// |Sp_2n(F_q)| / |orbit|; the division must be exact.
BigInt exotic_stabiliser_count(const std::vector<FqElem>& w, const MatF& y,
                               const SymplecticSpace& sp, uint64_t budget);

/// The bipartition whose orbit contains (w, y).  The coordinate convention is
/// fixed by halving jordan_type(y); a point that is not of doubled type or
/// fails the form condition is rejected.
Bipartition exotic_classify(const std::vector<FqElem>& w, const MatF& y, uint64_t budget);

/// Extended row indices of block h (both halves), ascending.
std::vector<int> exotic_block_rows(const SymplecticSpace& sp, const ShapeData& sd, int h);

/// Gram matrix of the induced form on the block quotient of h, computed as
/// <y^{l_h - 1} w_{a, top}, w_{b, top}> from the ambient form.
MatF induced_block_gram(const SymplecticSpace& sp, const ShapeData& sd, int h);
/// Same with the rows/columns of i(h) and j(h) removed (the form on the
/// reduced quotient used when h is in J).
MatF induced_block_gram_reduced(const SymplecticSpace& sp, const ShapeData& sd, int h);

/// Quotient blocks of a stabiliser element: the top submatrix on the extended
/// rows of each block, with rows/cols i(h) and j(h) dropped when h is in J.
std::vector<MatF> psi_tilde_image(const MatF& g, const ExoticPoint& pt, const ShapeData& sd);

long long ker_psi_tilde_dim(const Bipartition& bp);

/// Brute-force kernel count: sweep the affine space {z : zy = yz, zw = w,
/// quotient blocks = identity} and count the symplectic solutions.
BigInt ker_psi_tilde_count(const Bipartition& bp, const FieldDesc& fd, uint64_t budget = 1u << 22);

/// All symplectic elements of {z : zy = yz, zw = w}: the stabiliser group by
/// direct enumeration (small shapes only).
std::vector<MatF> brute_exotic_stabiliser_elements(const ExoticPoint& pt, uint64_t budget = 1u << 22);

/// Section of the quotient map.  assignment[h-1] must be symplectic for the
/// induced block form (reduced form when h is in J).  The handful of entries
/// that the form conditions determine are solved per assignment; the solved
/// values are returned through *s_values when requested.
MatF build_levi_Htilde(const Bipartition& bp, const FieldDesc& fd,
                       const std::vector<MatF>& assignment,
                       std::vector<FqElem>* s_values = nullptr);

std::vector<MatF> enumerate_Htilde(const Bipartition& bp, const FieldDesc& fd,
                                   uint64_t budget = 1u << 22);

/// ((v, 0), (x, x^T)) rewritten in the doubled coordinates for
/// lambda = jordan_type(x).
ExoticPoint embed_enhanced(const EnhancedPoint& pt);

} // namespace nilcone
