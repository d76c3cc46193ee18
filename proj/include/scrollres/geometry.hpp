#pragma once

#include <cstdint>

namespace scrollres {

// A genus together with a candidate pencil degree. Everything below genus 4
// or pencil degree 3 is rejected at construction.
struct GonalityInput {
    std::int64_t g;
    std::int64_t k;

    GonalityInput(std::int64_t genus, std::int64_t pencil_degree);
};

// The numeric profile of a pair (g, k):
//   rho = 2k - g - 2,  d = k - 1,  f = g - k + 1,
//   residual degree = 2g - 2 - k,  residual h^0 = f.
// hypothesis_ok marks the regime rho >= 0 and g > k + 1.
struct Geometry {
    std::int64_t g = 0;
    std::int64_t k = 0;
    std::int64_t rho = 0;
    std::int64_t scroll_dim = 0;       // d
    std::int64_t scroll_deg = 0;       // f
    std::int64_t residual_degree = 0;  // deg(omega_C (x) L^-1)
    std::int64_t residual_h0 = 0;
    bool hypothesis_ok = false;

    bool operator==(const Geometry&) const = default;
};

Geometry derive_geometry(const GonalityInput& input);

}  // namespace scrollres
