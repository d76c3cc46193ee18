#include "scrollres/splitting.hpp"

#include <algorithm>
#include <stdexcept>

#include "scrollres/arith.hpp"

namespace scrollres {

SplittingType::SplittingType(std::initializer_list<std::int64_t> twists) {
    *this = from_twists(std::span<const std::int64_t>(twists.begin(), twists.size()));
}

SplittingType SplittingType::from_twists(std::span<const std::int64_t> twists) {
    std::vector<std::int64_t> sorted(twists.begin(), twists.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    SplittingType out;
    for (std::int64_t t : sorted) {
        if (!out.runs_.empty() && out.runs_.back().twist == t)
            ++out.runs_.back().count;
        else
            out.runs_.push_back({t, 1});
    }
    return out;
}

SplittingType SplittingType::from_runs(std::vector<TwistRun> runs) {
    for (const TwistRun& r : runs)
        if (r.count < 0)
            throw std::invalid_argument("SplittingType: negative multiplicity");
    std::sort(runs.begin(), runs.end(),
              [](const TwistRun& a, const TwistRun& b) { return a.twist > b.twist; });
    SplittingType out;
    for (const TwistRun& r : runs) {
        if (r.count == 0) continue;
        if (!out.runs_.empty() && out.runs_.back().twist == r.twist)
            out.runs_.back().count = narrow(wadd(out.runs_.back().count, r.count));
        else
            out.runs_.push_back(r);
    }
    return out;
}

std::int64_t SplittingType::rank() const {
    Wide n = 0;
    for (const TwistRun& r : runs_) n = wadd(n, r.count);
    return narrow(n);
}

std::int64_t SplittingType::degree() const {
    Wide d = 0;
    for (const TwistRun& r : runs_) d = wadd(d, wmul(r.twist, r.count));
    return narrow(d);
}

std::int64_t SplittingType::spread() const {
    if (runs_.size() <= 1) return 0;
    return runs_.front().twist - runs_.back().twist;
}

std::int64_t SplittingType::max_twist() const {
    if (runs_.empty()) throw std::logic_error("SplittingType: max_twist of rank 0");
    return runs_.front().twist;
}

std::int64_t SplittingType::min_twist() const {
    if (runs_.empty()) throw std::logic_error("SplittingType: min_twist of rank 0");
    return runs_.back().twist;
}

std::int64_t SplittingType::multiplicity(std::int64_t twist) const {
    for (const TwistRun& r : runs_)
        if (r.twist == twist) return r.count;
    return 0;
}

SplittingType SplittingType::twisted(std::int64_t b) const {
    SplittingType out = *this;
    for (TwistRun& r : out.runs_) r.twist = narrow(wadd(r.twist, b));
    return out;
}

std::vector<std::int64_t> SplittingType::twists() const {
    constexpr std::int64_t kExpandLimit = 1 << 22;
    if (rank() > kExpandLimit)
        throw std::length_error("SplittingType: expansion too large");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(rank()));
    for (const TwistRun& r : runs_)
        out.insert(out.end(), static_cast<std::size_t>(r.count), r.twist);
    return out;
}

std::string SplittingType::str() const {
    std::string s = "{";
    bool first = true;
    for (const TwistRun& r : runs_) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(r.twist);
        if (r.count > 1) s += "^" + std::to_string(r.count);
    }
    s += "}";
    return s;
}

SplittingType balanced_splitting(std::int64_t degree, std::int64_t rank) {
    if (degree < 0 || rank < 0)
        throw std::invalid_argument("balanced_splitting: negative degree or rank");
    if (rank == 0) {
        if (degree != 0)
            throw std::invalid_argument("balanced_splitting: rank 0 with nonzero degree");
        return {};
    }
    const std::int64_t q = degree / rank;
    const std::int64_t r = degree % rank;
    return SplittingType::from_runs({{q + 1, r}, {q, rank - r}});
}

}  // namespace scrollres
