#include "scrollres/geometry.hpp"

#include <stdexcept>
#include <string>

namespace scrollres {

GonalityInput::GonalityInput(std::int64_t genus, std::int64_t pencil_degree)
    : g(genus), k(pencil_degree) {
    if (g < 4)
        throw std::invalid_argument("GonalityInput: genus must be at least 4, got " +
                                    std::to_string(g));
    if (k < 3)
        throw std::invalid_argument("GonalityInput: pencil degree must be at least 3, got " +
                                    std::to_string(k));
}

Geometry derive_geometry(const GonalityInput& input) {
    Geometry geo;
    geo.g = input.g;
    geo.k = input.k;
    geo.rho = 2 * input.k - input.g - 2;
    geo.scroll_dim = input.k - 1;
    geo.scroll_deg = input.g - input.k + 1;
    geo.residual_degree = 2 * input.g - 2 - input.k;
    geo.residual_h0 = geo.scroll_deg;
    geo.hypothesis_ok = geo.rho >= 0 && input.g > input.k + 1;
    return geo;
}

}  // namespace scrollres
