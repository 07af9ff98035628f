#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dct::evo {

// Descriptors for the codelets an agent can be assembled from. Names are
// zero-padded so lexicographic order equals index order.
struct PerceptualDesc {
    std::string name;
    std::vector<int> mask;  // sensor indices, ascending
};

struct BehavioralDesc {
    std::string name;
    std::vector<int> targets;  // motor indices, ascending, non-empty
};

struct MotorDesc {
    std::string name;
    int device;  // actuator index
};

struct PoolConfig {
    int n_sensors = 20;
    int n_perceptuals = 15;
    int n_behaviorals = 13;
    int n_motors = 13;
    // identity: behavioral j feeds motor j (requires n_behaviorals ==
    // n_motors); otherwise random non-empty target subsets with full motor
    // coverage.
    bool identity_assignment = true;
};

struct CodeletPool {
    PoolConfig config;
    std::vector<PerceptualDesc> perceptuals;
    std::vector<BehavioralDesc> behaviorals;
    std::vector<MotorDesc> motors;

    int genome_length() const {
        return static_cast<int>(perceptuals.size() + behaviorals.size());
    }
};

// Masks draw their size uniformly from {ceil(S/2)..S} and their members
// uniformly without replacement; deterministic per seed.
CodeletPool build_pool(uint64_t seed, const PoolConfig& config = {});

std::string codelet_name(char prefix, int index);

}  // namespace dct::evo
