#include "dct/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

#include "dct/errors.hpp"

namespace dct {

namespace {

// Split quality is compared exactly in integers. For a candidate split the
// figure of merit is sum_c(left_c^2)/n_left + sum_c(right_c^2)/n_right, which
// orders splits identically to Gini gain; fractions are compared by
// cross-multiplication so float rounding can never flip a tie.
struct SplitScore {
    __int128 num = 0;
    __int128 den = 1;

    bool better_than(const SplitScore& o) const { return num * o.den > o.num * den; }
    bool equals(const SplitScore& o) const { return num * o.den == o.num * den; }
};

struct Builder {
    const std::vector<std::vector<int>>& rows;
    const std::vector<int>& labels;      // dense class ids
    int n_classes;
    const std::vector<int>& class_values;  // dense id -> original label
    std::vector<TreeNode> nodes;

    int grow(std::vector<int> idx) {
        std::vector<int64_t> counts(n_classes, 0);
        for (int i : idx) counts[labels[i]]++;

        int majority = 0;
        for (int c = 1; c < n_classes; ++c)
            if (counts[c] > counts[majority]) majority = c;
        // smallest label wins ties: class ids are ordered by original label
        bool pure = counts[majority] == static_cast<int64_t>(idx.size());

        if (pure) return make_leaf(majority);

        int64_t n = static_cast<int64_t>(idx.size());
        __int128 parent_sum = 0;
        for (int c = 0; c < n_classes; ++c) parent_sum += __int128(counts[c]) * counts[c];
        SplitScore parent{parent_sum, n};

        int best_feature = -1, best_threshold = 0;
        SplitScore best = parent;
        int n_features = static_cast<int>(rows[idx[0]].size());

        std::vector<std::pair<int, int>> vals;  // (feature value, class id)
        std::vector<int64_t> left(n_classes), right(n_classes);
        for (int f = 0; f < n_features; ++f) {
            vals.clear();
            for (int i : idx) vals.emplace_back(rows[i][f], labels[i]);
            std::sort(vals.begin(), vals.end());
            if (vals.front().first == vals.back().first) continue;  // constant feature

            std::fill(left.begin(), left.end(), 0);
            right.assign(counts.begin(), counts.end());
            __int128 sum_left = 0, sum_right = parent_sum;
            int64_t n_left = 0;

            for (size_t k = 0; k + 1 < vals.size(); ++k) {
                int c = vals[k].second;
                sum_left += 2 * __int128(left[c]) + 1;
                sum_right -= 2 * __int128(right[c]) - 1;
                left[c]++;
                right[c]--;
                n_left++;
                if (vals[k].first == vals[k + 1].first) continue;  // not a boundary
                int threshold = vals[k].first;
                SplitScore s{sum_left * (n - n_left) + sum_right * n_left,
                             n_left * (n - n_left)};
                // gain > 0 required; ties keep the earlier (lower f, lower t)
                if (s.better_than(best)) {
                    best = s;
                    best_feature = f;
                    best_threshold = threshold;
                }
            }
        }

        if (best_feature < 0) return make_leaf(majority);

        std::vector<int> idx_left, idx_right;
        for (int i : idx) {
            (rows[i][best_feature] <= best_threshold ? idx_left : idx_right).push_back(i);
        }
        idx.clear();
        idx.shrink_to_fit();

        int self = static_cast<int>(nodes.size());
        nodes.emplace_back();
        nodes[self].feature = best_feature;
        nodes[self].threshold = best_threshold;
        int l = grow(std::move(idx_left));
        int r = grow(std::move(idx_right));
        nodes[self].left = l;
        nodes[self].right = r;
        return self;
    }

    int make_leaf(int class_id) {
        int self = static_cast<int>(nodes.size());
        nodes.emplace_back();
        nodes[self].label = class_values[class_id];
        return self;
    }
};

}  // namespace

DecisionTree DecisionTree::fit(const std::vector<std::vector<int>>& rows,
                               const std::vector<int>& labels) {
    if (rows.empty()) throw FitError("tree: empty training set");
    if (rows.size() != labels.size())
        throw FitError("tree: rows/labels size mismatch");
    size_t width = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != width)
            throw ShapeError("tree: ragged input, expected width " + std::to_string(width) +
                             ", got " + std::to_string(r.size()));

    // dense class ids ordered by original label value, so the majority
    // tie-break "smallest label" falls out of the id order
    std::map<int, int> class_ids;
    for (int l : labels) class_ids.emplace(l, 0);
    std::vector<int> class_values;
    class_values.reserve(class_ids.size());
    for (auto& [value, id] : class_ids) {
        id = static_cast<int>(class_values.size());
        class_values.push_back(value);
    }
    std::vector<int> dense(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) dense[i] = class_ids[labels[i]];

    Builder b{rows, dense, static_cast<int>(class_values.size()), class_values, {}};
    std::vector<int> idx(rows.size());
    std::iota(idx.begin(), idx.end(), 0);
    b.grow(std::move(idx));

    DecisionTree t;
    t.nodes_ = std::move(b.nodes);
    t.n_features_ = static_cast<int>(width);
    return t;
}

int DecisionTree::predict(const std::vector<int>& row) const {
    if (nodes_.empty()) throw FitError("tree: predict on untrained tree");
    if (static_cast<int>(row.size()) != n_features_)
        throw ShapeError("tree: feature vector length " + std::to_string(row.size()) +
                         ", expected " + std::to_string(n_features_));
    int at = 0;
    while (!nodes_[at].is_leaf())
        at = row[nodes_[at].feature] <= nodes_[at].threshold ? nodes_[at].left : nodes_[at].right;
    return nodes_[at].label;
}

nlohmann::json DecisionTree::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& n : nodes_) {
        if (n.is_leaf())
            list.push_back({{"label", n.label}});
        else
            list.push_back({{"f", n.feature}, {"t", n.threshold}, {"l", n.left}, {"r", n.right}});
    }
    return nlohmann::json{{"kind", "decision_tree"}, {"n_features", n_features_}, {"nodes", list}};
}

DecisionTree DecisionTree::from_json(const nlohmann::json& j) {
    DecisionTree t;
    t.n_features_ = j.at("n_features").get<int>();
    for (const auto& jn : j.at("nodes")) {
        TreeNode n;
        if (jn.contains("label")) {
            n.label = jn.at("label").get<int>();
        } else {
            n.feature = jn.at("f").get<int>();
            n.threshold = jn.at("t").get<int>();
            n.left = jn.at("l").get<int>();
            n.right = jn.at("r").get<int>();
        }
        t.nodes_.push_back(n);
    }
    return t;
}

}  // namespace dct
