#pragma once

#include "nilcone/partition.hpp"
#include "nilcone/qpoly.hpp"

namespace nilcone {

/// |GL_n(F_q)| as a polynomial: prod_{r=1..n} (q^n - q^{n-r}).  Monic of
/// degree n^2.
QPoly gl_order(int n);

/// |Sp_2n(F_q)| as a polynomial: q^{n^2} prod_{r=1..n} (q^{2r} - 1).  Monic of
/// degree n + 2n^2.
QPoly sp_order(int n);

/// Centraliser order of a nilpotent of type lambda in GL_n:
/// q^u * prod_h |GL_{n_h}| with u = |lambda| + 2 n(lambda) - sum_h n_h^2.
/// Degree |lambda| + 2 n(lambda).
QPoly ordinary_stab_order(const Partition& lambda);

/// gl_order(|lambda|) / ordinary_stab_order(lambda); exact and monic.
QPoly ordinary_orbit_size(const Partition& lambda);

/// Dimension of the kernel of the block-quotient map on a point stabiliser in
/// the vector-plus-nilpotent setting: b - sum_{h not in J} n_h^2
/// - sum_{h in J} (n_h - 1)^2.
long long enhanced_unipotent_dim(const ShapeData& sd);

/// Stabiliser order of the (v,x) orbit for bp: q^u times GL factors of ranks
/// n_h (h not in J) and n_h - 1 (h in J).  Degree b(mu;nu).
QPoly enhanced_stab_order(const Bipartition& bp);

/// gl_order(n) / enhanced_stab_order(bp); exact, monic of degree n^2 - b.
QPoly enhanced_orbit_size(const Bipartition& bp);

/// Kernel dimension on the symplectic side: n + 2b
/// - sum_{h in J} [2(n_h-1)^2 + (n_h-1)] - sum_{h not in J} (2 n_h^2 + n_h).
long long exotic_unipotent_dim(const ShapeData& sd);

/// Stabiliser order of the (w,y) orbit: q^u times Sp factors of ranks n_h
/// (h not in J) and n_h - 1 (h in J).  Degree n + 2b.
QPoly exotic_stab_order(const Bipartition& bp);

/// sp_order(n) / exotic_stab_order(bp); exact, monic of degree 2n^2 - 2b.
QPoly exotic_orbit_size(const Bipartition& bp);

/// True iff exotic_orbit_size(bp) equals enhanced_orbit_size(bp) with q
/// replaced by q^2, coefficient by coefficient.
bool fini_check(const Bipartition& bp);

} // namespace nilcone
