#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace dct {

// Maps integer vectors to dense tokens: token = index of the vector in the
// ordered list of unique observations, first-appearance order. Vectors never
// seen during fit map to the sentinel token size() (one past the table).
class TokenTable {
public:
    TokenTable() = default;

    // Builds the table from training rows. All rows must share one width.
    static TokenTable fit(const std::vector<std::vector<int>>& samples);

    // Token for v; sentinel size() when v is unknown.
    int apply(const std::vector<int>& v) const;

    int width() const { return width_; }
    size_t size() const { return observations_.size(); }
    bool empty() const { return observations_.empty(); }
    const std::vector<std::vector<int>>& observations() const { return observations_; }

    nlohmann::json to_json() const;
    static TokenTable from_json(const nlohmann::json& j);

    bool operator==(const TokenTable& other) const {
        return width_ == other.width_ && observations_ == other.observations_;
    }

private:
    std::vector<std::vector<int>> observations_;
    std::map<std::vector<int>, int> index_;
    int width_ = 0;
};

}  // namespace dct
