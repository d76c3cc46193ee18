#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scrollres {

// A computed quadric decomposition with a negative multiplicity. This never
// happens inside the supported region; if it does, the offending values are
// surfaced instead of being clamped.
class ModelViolation : public std::runtime_error {
public:
    ModelViolation(std::int64_t g, std::int64_t k, std::int64_t l0, std::int64_t l1,
                   std::int64_t l2)
        : std::runtime_error("model violation at (g,k)=(" + std::to_string(g) + "," +
                             std::to_string(k) + "): (l0,l1,l2)=(" + std::to_string(l0) +
                             "," + std::to_string(l1) + "," + std::to_string(l2) + ")"),
          g(g), k(k), l0(l0), l1(l1), l2(l2) {}

    std::int64_t g, k;
    std::int64_t l0, l1, l2;
};

// Cohomology requested for a class outside the two certified branches.
class UnsupportedBranch : public std::domain_error {
public:
    UnsupportedBranch(std::int64_t a, std::int64_t k)
        : std::domain_error("unsupported branch: a = " + std::to_string(a) +
                            " <= -k = " + std::to_string(-k)),
          a(a), k(k) {}

    std::int64_t a, k;
};

}  // namespace scrollres
