#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scrollres/classifier.hpp"

// Lattice sweeps over the (k, rho) plane and their serializations: CSV, JSON
// and an SVG picture of the classified region (conic boundary, the line
// g = k+1, one colored dot per lattice point).

namespace scrollres {

// One classified lattice point. The bundle fields are filled from the
// decomposition inside the theorem regime (k >= 4, 0 <= rho < k-3) and are
// zero otherwise, so l0 + l1 + l2 = beta1 and l1 + 2 l2 = degN1 hold on
// every record.
struct RegionRecord {
    std::int64_t k = 0;
    std::int64_t rho = 0;
    std::int64_t g = 0;  // 2k - rho - 2
    std::int64_t f = 0;  // g - k + 1
    std::int64_t beta1 = 0;
    std::int64_t degN1 = 0;
    std::int64_t l0 = 0;
    std::int64_t l1 = 0;
    std::int64_t l2 = 0;
    std::int64_t conic4 = 0;
    VerdictTag verdict = VerdictTag::out_of_hypothesis;

    bool operator==(const RegionRecord&) const = default;
};

// Every lattice point of [k_min, k_max] x [rho_min, rho_max], ordered by
// (k, rho). Points with rho >= k-3 (infeasible side of the line g = k+1)
// carry the out_of_hypothesis tag. Inverted ranges give an empty sweep.
std::vector<RegionRecord> sweep_region(std::int64_t k_min, std::int64_t k_max,
                                       std::int64_t rho_min, std::int64_t rho_max);

enum class TableFormat { csv, json };

extern const char* const kTableCsvHeader;  // "k,rho,g,f,beta1,degN1,l0,l1,l2,conic4,verdict"

// Byte-deterministic text table, one row/object per record.
std::string emit_table(std::span<const RegionRecord> records, TableFormat format);

// Strict inverse of the CSV emitter; malformed text is an error.
std::vector<RegionRecord> parse_table_csv(std::string_view text);

// SVG 1.1 document: axes k in [4, k_max] (horizontal) and rho (vertical),
// the conic boundary sampled at integer k, the line rho = k-3, the feasible
// wedge shaded, lattice points colored by verdict, plus a legend.
std::string emit_region_svg(std::span<const RegionRecord> records, std::int64_t k_max);

}  // namespace scrollres
