#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "trirec/errors.hpp"

namespace trirec {

// One monomial of the canonical solution: a strictly ordered tuple
// (i1, ..., ip) of positive indices with gaps of at least two. The empty
// tuple stands for the constant term 1.
class IndexTuple {
public:
    IndexTuple() = default;

    explicit IndexTuple(std::vector<std::int64_t> indices) : indices_(std::move(indices)) {
        for (std::size_t m = 0; m < indices_.size(); ++m) {
            if (indices_[m] < 1) {
                throw InvalidParams("index tuple entries must be positive");
            }
            if (m > 0 && indices_[m] < indices_[m - 1] + 2) {
                throw InvalidParams("index tuple entries must increase by at least two");
            }
        }
    }

    std::int64_t power() const { return static_cast<std::int64_t>(indices_.size()); }
    bool empty() const { return indices_.empty(); }
    const std::vector<std::int64_t>& indices() const { return indices_; }

    // "d1*d3"; the empty tuple renders as "1".
    std::string str() const {
        if (indices_.empty()) return "1";
        std::string out;
        for (std::size_t m = 0; m < indices_.size(); ++m) {
            if (m > 0) out += '*';
            out += 'd';
            out += std::to_string(indices_[m]);
        }
        return out;
    }

    friend bool operator==(const IndexTuple& a, const IndexTuple& b) = default;

    // Canonical order: by power, then lexicographic.
    friend std::strong_ordering operator<=>(const IndexTuple& a, const IndexTuple& b) {
        if (auto c = a.indices_.size() <=> b.indices_.size(); c != 0) return c;
        return a.indices_ <=> b.indices_;
    }

private:
    std::vector<std::int64_t> indices_;
};

}  // namespace trirec
