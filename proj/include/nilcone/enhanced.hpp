#pragma once

#include "nilcone/orbit.hpp"
#include "nilcone/partition.hpp"
#include "nilcone/qpoly.hpp"

namespace nilcone {

/// A point (v, x) of the vector-plus-nilpotent cone in the standard Jordan
/// coordinates for lambda = jordan_type(x).
struct EnhancedPoint {
    std::vector<FqElem> v;
    MatF x;
    BasisIndex basis;
};

/// Standard representative of the orbit of bp = (mu; nu):  x is the Jordan
/// matrix of lambda = mu + nu and v has a 1 in coordinate (i(h), j_h) for
/// every block with j_h > 0 (the reduced form of the vector).
EnhancedPoint representative(const Bipartition& bp, const FieldDesc& fd);

/// The unreduced vector sum_{i <= l(mu)} e_{(i, mu_i)}; lies in the same
/// orbit as the reduced form.
std::vector<FqElem> representative_vector_full(const Bipartition& bp, const FieldDesc& fd);

/// Elementary transvections I + c E_{ij} (i != j, c != 0) plus one primitive
/// diagonal when q > 2; generates GL_n(F_q).
GeneratorSet gl_generators(int n, const FieldDesc& fd);

/// Orbit of (v, x) under g.(v, x) = (gv, gxg^-1) with the full GL generator
/// set for the ambient dimension.
OrbitSet enhanced_orbit(const std::vector<FqElem>& v, const MatF& x, uint64_t budget);

/// |GL_n(F_q)| / |orbit|; the division must be exact.
BigInt stabiliser_count(const std::vector<FqElem>& v, const MatF& x, uint64_t budget);

/// The bipartition whose orbit contains (v, x), found by one BFS from the
/// point and representative membership tests over all bp with mu + nu =
/// jordan_type(x).
Bipartition classify(const std::vector<FqElem>& v, const MatF& x, uint64_t budget);

/// Blocks of the stabiliser quotient map: the top-coordinate submatrix of g
/// on each block, with row/column i(h) dropped when h is in J.  Throws
/// input_error if g does not stabilise the representative point.
std::vector<MatF> psi_image(const MatF& g, const EnhancedPoint& pt, const ShapeData& sd);

/// Dimension of the kernel of the quotient map (the unipotent radical).
long long ker_psi_dim(const Bipartition& bp);

/// Brute-force kernel count: enumerate the affine space {y : xy = yx, yv = v,
/// quotient blocks = identity} and count the invertible solutions.  Throws
/// budget_exceeded when the space is too large to sweep.
BigInt ker_psi_count(const Bipartition& bp, const FieldDesc& fd, uint64_t budget = 1u << 22);

/// All invertible elements of the affine space {y : xy = yx, yv = v}; the
/// stabiliser group by direct enumeration.
std::vector<MatF> brute_stabiliser_elements(const EnhancedPoint& pt, uint64_t budget = 1u << 22);

/// Filter a full group listing down to the stabiliser of (v, x).
std::vector<MatF> stabiliser_elements_from(const std::vector<MatF>& group_elements,
                                           const std::vector<FqElem>& v, const MatF& x);

/// The section of the stabiliser quotient: one matrix per block assignment.
/// assignment[h-1] must be an invertible block of size n_h (h not in J) or
/// n_h - 1 (h in J).  The result stabilises (v, x) and its quotient blocks
/// reproduce the assignment.
MatF build_levi_H(const Bipartition& bp, const FieldDesc& fd, const std::vector<MatF>& assignment);

/// Every element of the section, by iterating all invertible block
/// assignments (GL listings come from generator closures).
std::vector<MatF> enumerate_H(const Bipartition& bp, const FieldDesc& fd, uint64_t budget = 1u << 22);

} // namespace nilcone
