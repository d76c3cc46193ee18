#include "scrollres/invariants.hpp"

#include <stdexcept>
#include <string>

#include "scrollres/arith.hpp"

namespace scrollres {

namespace {

void check_index(std::int64_t i, std::int64_t k, std::int64_t lo) {
    if (k < 3) throw std::invalid_argument("syzygy index: k must be at least 3");
    if (i < lo || i > k - 2)
        throw std::out_of_range("syzygy index " + std::to_string(i) + " outside [" +
                                std::to_string(lo) + ", " + std::to_string(k - 2) + "]");
}

}  // namespace

std::int64_t syzygy_rank(std::int64_t i, std::int64_t k) {
    check_index(i, k, 0);
    if (i == 0 || i == k - 2) return 1;
    // i(k-2-i) C(k,i+1) / (k-1), exact in the integers
    Wide num = wmul(wmul(i, k - 2 - i), binomial_wide(k, i + 1));
    return narrow(exact_div(num, k - 1));
}

std::int64_t syzygy_rank_alt(std::int64_t i, std::int64_t k) {
    check_index(i, k, 0);
    if (i == 0 || i == k - 2) return 1;
    // k(k-2-i) C(k-2,i-1) / (i+1)
    Wide num = wmul(wmul(k, k - 2 - i), binomial_wide(k - 2, i - 1));
    return narrow(exact_div(num, i + 1));
}

std::int64_t syzygy_degree(std::int64_t i, std::int64_t g, std::int64_t k) {
    check_index(i, k, 1);
    if (i == k - 2) return g - k - 1;  // = f - 2, dual to N_0
    Wide d = wmul(wmul(g - k - 1, k - 2 - i), binomial_wide(k - 2, i - 1));
    return narrow(d);
}

std::pair<std::int64_t, std::int64_t> duality_transform(std::int64_t i, std::int64_t g,
                                                        std::int64_t k, std::int64_t beta_i,
                                                        std::int64_t deg_i) {
    check_index(i, k, 0);
    const std::int64_t f = g - k + 1;
    Wide dual_deg = wsub(wmul(f - 2, beta_i), deg_i);
    return {beta_i, narrow(dual_deg)};
}

std::int64_t residual_hilbert_value(std::int64_t n, std::int64_t g, std::int64_t k) {
    return narrow(wadd(wmul(2 * g - k - 2, n), 1 - g));
}

SplittingType scroll_splitting(const Geometry& geometry) {
    return balanced_splitting(geometry.scroll_deg, geometry.scroll_dim);
}

const char* to_string(Provenance p) {
    return p == Provenance::theorem ? "theorem" : "conjecture";
}

}  // namespace scrollres
