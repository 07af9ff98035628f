#include "dct/tokenizer.hpp"

#include <nlohmann/json.hpp>

#include "dct/errors.hpp"

namespace dct {

TokenTable TokenTable::fit(const std::vector<std::vector<int>>& samples) {
    if (samples.empty()) throw FitError("tokenizer: empty training set");
    TokenTable t;
    t.width_ = static_cast<int>(samples.front().size());
    for (const auto& row : samples) {
        if (static_cast<int>(row.size()) != t.width_)
            throw ShapeError("tokenizer: ragged input, expected width " +
                             std::to_string(t.width_) + ", got " + std::to_string(row.size()));
        if (t.index_.emplace(row, static_cast<int>(t.observations_.size())).second)
            t.observations_.push_back(row);
    }
    return t;
}

int TokenTable::apply(const std::vector<int>& v) const {
    if (static_cast<int>(v.size()) != width_)
        throw ShapeError("tokenizer: width mismatch, expected " + std::to_string(width_) +
                         ", got " + std::to_string(v.size()));
    auto it = index_.find(v);
    return it == index_.end() ? static_cast<int>(observations_.size()) : it->second;
}

nlohmann::json TokenTable::to_json() const {
    return nlohmann::json{{"kind", "token_table"}, {"width", width_}, {"rows", observations_}};
}

TokenTable TokenTable::from_json(const nlohmann::json& j) {
    TokenTable t;
    t.width_ = j.at("width").get<int>();
    t.observations_ = j.at("rows").get<std::vector<std::vector<int>>>();
    for (size_t i = 0; i < t.observations_.size(); ++i)
        t.index_.emplace(t.observations_[i], static_cast<int>(i));
    return t;
}

}  // namespace dct
