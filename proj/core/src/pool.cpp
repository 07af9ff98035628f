#include "dct/pool.hpp"

#include <algorithm>
#include <set>

#include "dct/errors.hpp"
#include "dct/rng.hpp"

namespace dct::evo {

std::string codelet_name(char prefix, int index) {
    std::string s(1, prefix);
    if (index < 10) s += '0';
    s += std::to_string(index);
    return s;
}

CodeletPool build_pool(uint64_t seed, const PoolConfig& config) {
    if (config.n_perceptuals < 1 || config.n_behaviorals < 1 || config.n_motors < 1)
        throw ConfigError("pool: all pool sizes must be >= 1");
    if (config.identity_assignment && config.n_behaviorals != config.n_motors)
        throw ConfigError("pool: identity assignment needs one behavioral per motor");

    Rng rng(seed);
    CodeletPool pool;
    pool.config = config;

    int min_mask = (config.n_sensors + 1) / 2;
    for (int i = 0; i < config.n_perceptuals; ++i) {
        int size = rng.uniform_int(min_mask, config.n_sensors);
        pool.perceptuals.push_back(
            {codelet_name('p', i), rng.sample_without_replacement(config.n_sensors, size)});
    }

    for (int j = 0; j < config.n_behaviorals; ++j)
        pool.behaviorals.push_back({codelet_name('b', j), {}});

    if (config.identity_assignment) {
        for (int j = 0; j < config.n_behaviorals; ++j) pool.behaviorals[j].targets = {j};
    } else {
        std::vector<std::set<int>> targets(config.n_behaviorals);
        for (int j = 0; j < config.n_behaviorals; ++j) {
            int size = rng.uniform_int(1, config.n_motors);
            for (int m : rng.sample_without_replacement(config.n_motors, size)) targets[j].insert(m);
        }
        // every motor must have at least one feeder
        for (int m = 0; m < config.n_motors; ++m) {
            bool covered = false;
            for (const auto& t : targets) covered = covered || t.count(m);
            if (!covered) targets[rng.uniform_int(0, config.n_behaviorals - 1)].insert(m);
        }
        for (int j = 0; j < config.n_behaviorals; ++j)
            pool.behaviorals[j].targets.assign(targets[j].begin(), targets[j].end());
    }

    for (int m = 0; m < config.n_motors; ++m) pool.motors.push_back({codelet_name('m', m), m});
    return pool;
}

}  // namespace dct::evo
