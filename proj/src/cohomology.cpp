#include "scrollres/cohomology.hpp"

#include <stdexcept>
#include <string>

#include "scrollres/arith.hpp"
#include "scrollres/errors.hpp"
#include "scrollres/invariants.hpp"

namespace scrollres {

std::int64_t cohomology_p1(const SplittingType& bundle, std::int64_t i) {
    if (i != 0 && i != 1) return 0;
    Wide h = 0;
    for (const TwistRun& r : bundle.runs()) {
        const std::int64_t t = r.twist;
        std::int64_t per_summand = 0;
        if (i == 0 && t >= 0) per_summand = t + 1;
        if (i == 1 && t <= -2) per_summand = -t - 1;
        h = wadd(h, wmul(per_summand, r.count));
    }
    return narrow(h);
}

SplittingType sym_power(const SplittingType& e, std::int64_t a) {
    if (a < 0) throw std::invalid_argument("sym_power: negative symmetric power");
    if (a == 0) return SplittingType{0};  // S_0 = O

    const std::vector<std::int64_t> summands = e.twists();
    const std::size_t d = summands.size();
    if (d == 0) return {};  // no degree-a monomials in zero variables

    // guard the monomial count before enumerating
    if (binomial_wide(static_cast<std::int64_t>(d) - 1 + a, a) > (Wide(1) << 22))
        throw std::length_error("sym_power: expansion too large");

    std::vector<std::int64_t> twists;
    std::vector<std::int64_t> exponents(d, 0);
    // walk all exponent vectors with sum a (last coordinate implied)
    auto enumerate = [&](auto&& self, std::size_t pos, std::int64_t remaining,
                         Wide twist_so_far) -> void {
        if (pos + 1 == d) {
            twists.push_back(narrow(wadd(twist_so_far, wmul(remaining, summands[pos]))));
            return;
        }
        for (std::int64_t m = 0; m <= remaining; ++m)
            self(self, pos + 1, remaining - m, wadd(twist_so_far, wmul(m, summands[pos])));
    };
    enumerate(enumerate, 0, a, 0);
    return SplittingType::from_twists(twists);
}

std::int64_t cohomology_pe(PEClass c, const SplittingType& e, std::int64_t i) {
    const std::int64_t k = e.rank() + 1;
    if (c.a <= -k) throw UnsupportedBranch(c.a, k);
    if (c.a < 0) return 0;
    return cohomology_p1(sym_power(e, c.a).twisted(c.b), i);
}

std::int64_t chi_resolution_term(std::int64_t i, std::int64_t n, std::int64_t k,
                                 std::int64_t f, std::int64_t deg_i, std::int64_t beta_i) {
    if (n < 0) throw std::invalid_argument("chi_resolution_term: n must be non-negative");
    if (i < 0 || i > k - 2)
        throw std::out_of_range("chi_resolution_term: index " + std::to_string(i) +
                                " outside [0, " + std::to_string(k - 2) + "]");
    if (i == 0)
        return narrow(wadd(binomial_wide(k - 1 + n, k - 2),
                           wmul(f, binomial_wide(k - 1 + n, k - 1))));
    if (i >= n + 1) return 0;
    Wide first = wmul(wadd(deg_i, beta_i), binomial_wide(k - 2 + n - i, k - 2));
    Wide second = wmul(wmul(beta_i, f), binomial_wide(k - 2 + n - i, k - 1));
    return narrow(wadd(first, second));
}

std::int64_t chi_curve(std::int64_t nu, std::int64_t g) {
    if (nu < 1) throw std::invalid_argument("chi_curve: twist must be at least 1");
    const std::int64_t n = nu - 1;
    return narrow(wmul(2 * n + 1, g - 1));
}

std::vector<std::int64_t> recover_degrees(std::int64_t g, std::int64_t k) {
    if (k < 4) throw std::invalid_argument("recover_degrees: k must be at least 4");
    if (g < k + 1) throw std::invalid_argument("recover_degrees: g must be at least k+1");
    const std::int64_t f = g - k + 1;

    std::vector<std::int64_t> degrees;  // degrees[i-1] = deg N_i
    degrees.reserve(static_cast<std::size_t>(k - 3));
    for (std::int64_t n = 1; n <= k - 3; ++n) {
        // chi(O_C(n+1)) = sum_{i=0}^{n-1} (-1)^i chi(F_i(n+1)) + (-1)^n (deg N_n + beta_n)
        Wide partial = chi_resolution_term(0, n, k, f, 0, 0);
        std::int64_t sign = -1;
        for (std::int64_t i = 1; i < n; ++i) {
            Wide term = chi_resolution_term(i, n, k, f, degrees[i - 1], syzygy_rank(i, k));
            partial = wadd(partial, sign > 0 ? term : wsub(0, term));
            sign = -sign;
        }
        const std::int64_t beta_n = syzygy_rank(n, k);
        Wide residue = wsub(chi_curve(n + 1, g), partial);
        if (sign < 0) residue = wsub(0, residue);  // divide by (-1)^n
        const std::int64_t deg_n = narrow(wsub(residue, beta_n));
        degrees.push_back(deg_n);

        // plug back in; any mismatch means the solve itself went wrong
        const Wide top = wadd(deg_n, beta_n);
        Wide check = wadd(partial, sign > 0 ? top : wsub(0, top));
        if (check != Wide(chi_curve(n + 1, g)))
            throw std::logic_error("recover_degrees: inconsistent solve at n = " +
                                   std::to_string(n));
    }
    return degrees;
}

std::int64_t euler_identity_defect(std::int64_t g, std::int64_t k, std::int64_t nu,
                                   std::span<const std::int64_t> degrees) {
    if (nu < 2 || nu > k - 2)
        throw std::out_of_range("euler_identity_defect: nu outside [2, k-2]");
    const std::int64_t n = nu - 1;
    if (static_cast<std::int64_t>(degrees.size()) < n)
        throw std::invalid_argument("euler_identity_defect: need degrees for N_1..N_" +
                                    std::to_string(n));
    const std::int64_t f = g - k + 1;
    // terms with i >= nu vanish, so the alternating sum stops at i = n
    Wide sum = chi_resolution_term(0, n, k, f, 0, 0);
    std::int64_t sign = -1;
    for (std::int64_t i = 1; i <= n; ++i) {
        Wide term = chi_resolution_term(i, n, k, f, degrees[i - 1], syzygy_rank(i, k));
        sum = wadd(sum, sign > 0 ? term : wsub(0, term));
        sign = -sign;
    }
    return narrow(wsub(chi_curve(nu, g), sum));
}

}  // namespace scrollres
