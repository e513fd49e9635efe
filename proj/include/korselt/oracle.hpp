#pragma once

#include "korselt/core.hpp"

// Brute-force reference implementations. Deliberately slow and literal:
// everything is re-derived from the divisibility definition with a private
// trial-division factor loop, sharing no code path with the closed forms,
// so a bug there cannot hide here.
namespace korselt::oracle {

struct ScanBox {
    Int max_num_abs; // >= 0; 0 scans nothing
    Int max_den;     // >= 1
};

/// Literal check: factor N by trial division, then test a2*p - a1 | a2*N - a1
/// for each prime p, zero dividing only zero.
bool brute_is_korselt(const Int& n, const Rational& alpha);

/// Every reduced a/b with |a| <= max_num_abs, 1 <= b <= max_den that passes
/// the literal check, excluding 0 and N. Sorted.
KorseltSet brute_ks_box(const Int& n, const ScanBox& box);

/// Integer members in [-radius, radius] minus {0, N}.
KorseltSet brute_ks_z(const Int& n, const Int& radius);

} // namespace korselt::oracle
