#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "scrollres/splitting.hpp"

// Line-bundle cohomology on the projective bundle P(E) over P^1 and the
// Euler-characteristic recursion that recovers the syzygy degrees without
// the closed formula. This is the independent oracle for invariants.hpp.

namespace scrollres {

// A divisor class a*H + b*R on P(E), H the hyperplane class, R the ruling.
struct PEClass {
    std::int64_t a = 0;
    std::int64_t b = 0;
};

// h^i of a split bundle on P^1: h^0 = sum max(t+1, 0), h^1 = sum max(-t-1, 0),
// zero in all other degrees.
std::int64_t cohomology_p1(const SplittingType& bundle, std::int64_t i);

// S_a(E) for a split bundle: one summand of twist sum(e_j m_j) per degree-a
// monomial in the d summands; rank C(d-1+a, a). Canonically sorted.
SplittingType sym_power(const SplittingType& e, std::int64_t a);

// h^i(P(E), O(aH + bR)) for the two certified branches:
//   a >= 0       -> h^i(P^1, S_a(E)(b))   (pushforward, valid for every b)
//   -k < a < 0   -> 0                     (k = rank(E) + 1)
// a <= -k raises UnsupportedBranch.
std::int64_t cohomology_pe(PEClass c, const SplittingType& e, std::int64_t i);

// chi(F_i(n+1)) of the twisted resolution term, as a closed form in
// (deg N_i, beta_i):
//   i = 0:           C(k-1+n, k-2) + f C(k-1+n, k-1)
//   1 <= i <= n:     (deg N_i + beta_i) C(k-2+n-i, k-2) + beta_i f C(k-2+n-i, k-1)
//   i >= n+1:        0
std::int64_t chi_resolution_term(std::int64_t i, std::int64_t n, std::int64_t k,
                                 std::int64_t f, std::int64_t deg_i, std::int64_t beta_i);

// chi(O_C(nu)) = (2n+1)(g-1) with nu = n+1 >= 1 (Riemann-Roch).
std::int64_t chi_curve(std::int64_t nu, std::int64_t g);

// Solves chi(O_C(n+1)) = sum_i (-1)^i chi(F_i(n+1)) step by step for
// n = 1..k-3. The coefficient of the unknown degree is 1 at every step, so
// the solve is integral by construction; it is re-checked anyway. Never
// touches the closed degree formula.
std::vector<std::int64_t> recover_degrees(std::int64_t g, std::int64_t k);

// chi(O_C(nu)) - sum_i (-1)^i chi(F_i(nu)) for 2 <= nu <= k-2, evaluated with
// the supplied degrees for N_1..N_{nu-1}. Zero exactly when the degrees are
// the true ones.
std::int64_t euler_identity_defect(std::int64_t g, std::int64_t k, std::int64_t nu,
                                   std::span<const std::int64_t> degrees);

}  // namespace scrollres
