#include "nilcone/qcount.hpp"

#include "nilcone/error.hpp"

namespace nilcone {

QPoly gl_order(int n) {
    if (n < 0) throw input_error("gl_order: n must be >= 0");
    QPoly r(1);
    for (int k = 1; k <= n; ++k)
        r *= QPoly::q_power(n) - QPoly::q_power(n - k);
    return r;
}

QPoly sp_order(int n) {
    if (n < 0) throw input_error("sp_order: n must be >= 0");
    QPoly r = QPoly::q_power(n * n);
    for (int k = 1; k <= n; ++k)
        r *= QPoly::q_power(2 * k) - QPoly(1);
    return r;
}

QPoly ordinary_stab_order(const Partition& lambda) {
    long long u = lambda.weight() + 2 * lambda.n_invariant();
    QPoly r(1);
    for (auto [l, mult] : exponent_form(lambda)) {
        u -= static_cast<long long>(mult) * mult;
        r *= gl_order(mult);
    }
    if (u < 0) throw std::logic_error("ordinary_stab_order: negative unipotent dimension");
    return r * QPoly::q_power(static_cast<int>(u));
}

QPoly ordinary_orbit_size(const Partition& lambda) {
    return gl_order(lambda.weight())
        .divide_exact(ordinary_stab_order(lambda), "orbit size for lambda=" + lambda.to_string());
}

long long enhanced_unipotent_dim(const ShapeData& sd) {
    long long u = b_invariant(Bipartition(sd.mu, sd.nu));
    for (int h = 1; h <= sd.num_blocks(); ++h) {
        long long m = sd.blocks[h - 1].mult - (sd.in_J[h - 1] ? 1 : 0);
        u -= m * m;
    }
    return u;
}

QPoly enhanced_stab_order(const Bipartition& bp) {
    ShapeData sd = shape_data(bp);
    long long u = enhanced_unipotent_dim(sd);
    if (u < 0) throw std::logic_error("enhanced_stab_order: negative unipotent dimension for " + bp.to_string());
    QPoly r = QPoly::q_power(static_cast<int>(u));
    for (int h = 1; h <= sd.num_blocks(); ++h)
        r *= gl_order(sd.blocks[h - 1].mult - (sd.in_J[h - 1] ? 1 : 0));
    return r;
}

QPoly enhanced_orbit_size(const Bipartition& bp) {
    return gl_order(bp.n())
        .divide_exact(enhanced_stab_order(bp), "enhanced orbit size for " + bp.to_string());
}

long long exotic_unipotent_dim(const ShapeData& sd) {
    long long n = sd.lambda.weight();
    long long u = n + 2 * b_invariant(Bipartition(sd.mu, sd.nu));
    for (int h = 1; h <= sd.num_blocks(); ++h) {
        long long m = sd.blocks[h - 1].mult - (sd.in_J[h - 1] ? 1 : 0);
        u -= 2 * m * m + m;
    }
    return u;
}

QPoly exotic_stab_order(const Bipartition& bp) {
    ShapeData sd = shape_data(bp);
    long long u = exotic_unipotent_dim(sd);
    if (u < 0) throw std::logic_error("exotic_stab_order: negative unipotent dimension for " + bp.to_string());
    QPoly r = QPoly::q_power(static_cast<int>(u));
    for (int h = 1; h <= sd.num_blocks(); ++h)
        r *= sp_order(sd.blocks[h - 1].mult - (sd.in_J[h - 1] ? 1 : 0));
    return r;
}

QPoly exotic_orbit_size(const Bipartition& bp) {
    return sp_order(bp.n())
        .divide_exact(exotic_stab_order(bp), "exotic orbit size for " + bp.to_string());
}

bool fini_check(const Bipartition& bp) {
    return exotic_orbit_size(bp) == enhanced_orbit_size(bp).substitute_q_squared();
}

} // namespace nilcone
