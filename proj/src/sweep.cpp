#include "scrollres/sweep.hpp"

#include <charconv>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "scrollres/arith.hpp"

namespace scrollres {

const char* const kTableCsvHeader = "k,rho,g,f,beta1,degN1,l0,l1,l2,conic4,verdict";

std::vector<RegionRecord> sweep_region(std::int64_t k_min, std::int64_t k_max,
                                       std::int64_t rho_min, std::int64_t rho_max) {
    if (k_min < 4) throw std::invalid_argument("sweep_region: k_min must be at least 4");
    std::vector<RegionRecord> records;
    for (std::int64_t k = k_min; k <= k_max; ++k) {
        for (std::int64_t rho = rho_min; rho <= rho_max; ++rho) {
            RegionRecord rec;
            rec.k = k;
            rec.rho = rho;
            rec.g = 2 * k - rho - 2;
            rec.f = rec.g - k + 1;
            rec.conic4 = conic_discriminant4(k, rho);
            rec.verdict = classify(rec.g, k).tag;
            if (rho >= 0 && rho < k - 3) {
                const QuadricDecomposition q = decompose_quadric_bundle(rec.g, k);
                rec.beta1 = syzygy_rank(1, k);
                rec.degN1 = syzygy_degree(1, rec.g, k);
                rec.l0 = q.l0;
                rec.l1 = q.l1;
                rec.l2 = q.l2;
            }
            records.push_back(rec);
        }
    }
    return records;
}

namespace {

std::string emit_csv(std::span<const RegionRecord> records) {
    std::string out = kTableCsvHeader;
    out += '\n';
    for (const RegionRecord& r : records) {
        out += std::to_string(r.k) + ',' + std::to_string(r.rho) + ',' +
               std::to_string(r.g) + ',' + std::to_string(r.f) + ',' +
               std::to_string(r.beta1) + ',' + std::to_string(r.degN1) + ',' +
               std::to_string(r.l0) + ',' + std::to_string(r.l1) + ',' +
               std::to_string(r.l2) + ',' + std::to_string(r.conic4) + ',' +
               to_string(r.verdict) + '\n';
    }
    return out;
}

std::string emit_json(std::span<const RegionRecord> records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const RegionRecord& r : records) {
        nlohmann::ordered_json obj;
        obj["k"] = r.k;
        obj["rho"] = r.rho;
        obj["g"] = r.g;
        obj["f"] = r.f;
        obj["beta1"] = r.beta1;
        obj["degN1"] = r.degN1;
        obj["l0"] = r.l0;
        obj["l1"] = r.l1;
        obj["l2"] = r.l2;
        obj["conic4"] = r.conic4;
        obj["verdict"] = to_string(r.verdict);
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + '\n';
}

std::int64_t parse_int_field(std::string_view field, std::size_t line_no) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw std::invalid_argument("parse_table_csv: bad integer '" + std::string(field) +
                                    "' on line " + std::to_string(line_no));
    return value;
}

}  // namespace

std::string emit_table(std::span<const RegionRecord> records, TableFormat format) {
    switch (format) {
        case TableFormat::csv: return emit_csv(records);
        case TableFormat::json: return emit_json(records);
    }
    throw std::invalid_argument("emit_table: unknown format");
}

std::vector<RegionRecord> parse_table_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        if (nl == std::string_view::npos)
            throw std::invalid_argument("parse_table_csv: missing final newline");
        lines.push_back(text.substr(0, nl));
        text.remove_prefix(nl + 1);
    }
    if (lines.empty() || lines.front() != kTableCsvHeader)
        throw std::invalid_argument("parse_table_csv: bad or missing header");

    std::vector<RegionRecord> records;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        std::string_view line = lines[li];
        std::vector<std::string_view> fields;
        while (true) {
            const std::size_t comma = line.find(',');
            if (comma == std::string_view::npos) {
                fields.push_back(line);
                break;
            }
            fields.push_back(line.substr(0, comma));
            line.remove_prefix(comma + 1);
        }
        if (fields.size() != 11)
            throw std::invalid_argument("parse_table_csv: expected 11 fields on line " +
                                        std::to_string(li + 1));
        RegionRecord r;
        r.k = parse_int_field(fields[0], li + 1);
        r.rho = parse_int_field(fields[1], li + 1);
        r.g = parse_int_field(fields[2], li + 1);
        r.f = parse_int_field(fields[3], li + 1);
        r.beta1 = parse_int_field(fields[4], li + 1);
        r.degN1 = parse_int_field(fields[5], li + 1);
        r.l0 = parse_int_field(fields[6], li + 1);
        r.l1 = parse_int_field(fields[7], li + 1);
        r.l2 = parse_int_field(fields[8], li + 1);
        r.conic4 = parse_int_field(fields[9], li + 1);
        const auto tag = verdict_tag_from_string(fields[10]);
        if (!tag)
            throw std::invalid_argument("parse_table_csv: unknown verdict '" +
                                        std::string(fields[10]) + "' on line " +
                                        std::to_string(li + 1));
        r.verdict = *tag;
        records.push_back(r);
    }
    return records;
}

}  // namespace scrollres
