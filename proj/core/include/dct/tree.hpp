#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace dct {

// One node of a fitted tree. Internal nodes route row[feature] <= threshold
// to the left child; leaves carry the class label.
struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    int threshold = 0;
    int left = -1;
    int right = -1;
    int label = 0;

    bool is_leaf() const { return feature < 0; }
};

// Classifier over integer feature vectors. Top-down induction on Gini
// impurity with axis-aligned integer-threshold splits. Fully deterministic:
// split ties resolve to the lowest feature index, then the lowest threshold;
// leaf-label ties resolve to the smallest label. Growth stops at purity or
// when no split has positive gain.
class DecisionTree {
public:
    DecisionTree() = default;

    static DecisionTree fit(const std::vector<std::vector<int>>& rows,
                            const std::vector<int>& labels);

    int predict(const std::vector<int>& row) const;

    bool trained() const { return !nodes_.empty(); }
    int n_features() const { return n_features_; }
    size_t n_nodes() const { return nodes_.size(); }
    const std::vector<TreeNode>& nodes() const { return nodes_; }

    // Portable preorder node list (see docs/protocol.md).
    nlohmann::json to_json() const;
    static DecisionTree from_json(const nlohmann::json& j);

private:
    std::vector<TreeNode> nodes_;  // preorder, nodes_[0] is the root
    int n_features_ = 0;
};

}  // namespace dct
