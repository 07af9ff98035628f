#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dct/env.hpp"
#include "dct/pool.hpp"
#include "dct/rng.hpp"
#include "dct/tokenizer.hpp"
#include "dct/tree.hpp"

namespace dct::evo {

// Binary genome over the perceptual + behavioral pools: gene i in [0,P)
// activates perceptual i, gene P+j activates behavioral j.
struct Individual {
    std::vector<uint8_t> genes;
    std::optional<int> fitness;
    std::string flags;  // evaluator warnings, e.g. "no_active_perceptuals"

    std::string genome_string() const;
    static Individual from_genome_string(const std::string& s);
};

struct Population {
    std::vector<Individual> individuals;
    int generation = 0;
    std::optional<Individual> best_ever;
};

Population init_population(uint64_t seed, int genome_len, int size = 20, double p_one = 0.2);

// Bit-flip mutation: with probability 1-mut_p the copy is returned verbatim;
// otherwise every gene flips independently with probability ind_m. Fitness
// is dropped only when a gene actually changed.
Individual mutate(const Individual& ind, double mut_p, double ind_m, Rng& rng);

struct MutationParams {
    double mut_p = 0.5;
    double ind_m = 0.05;
};

// Elitist succession: the best n_elites survive unchanged (fitness ties
// break on lexicographic genome order), the all-time best is cloned in
// unmutated, and the rest of the population are mutated copies of uniformly
// chosen elites. No crossover.
Population next_generation(const Population& pop, const MutationParams& mp, Rng& rng,
                           int n_elites = 5);

struct FitnessReport {
    int score = -1;
    int generations_used = 0;
    int n_perceptual_active = 0;
    int n_behavioral_active = 0;
    std::string genome;
    std::string flags;

    int n_internal_active() const { return n_perceptual_active + n_behavioral_active; }
};

// Scores one configured+trained individual; implementations exist for the
// in-process pipeline and for a live distributed agent.
class Evaluator {
public:
    virtual ~Evaluator() = default;
    virtual int evaluate(const Individual& ind, std::string* flags) = 0;
};

// ---------------------------------------------------------------------------
// In-process pipeline: the same tokenizer/tree/arbitration primitives the
// codelets run, executed synchronously against the dataset.

// Token tables for every pool perceptual plus the tokenized training matrix,
// shared across individuals of one run (masks are genome-independent).
struct PerceptionCache {
    std::vector<TokenTable> tables;               // one per pool perceptual
    std::vector<std::vector<int>> token_columns;  // [perceptual][train row]
};

PerceptionCache build_perception_cache(const CodeletPool& pool, const env::Dataset& ds);

// Models for one individual: token tables for active perceptuals, one tree
// per active behavioral, identity trees on the motors.
class TrainedTwin {
public:
    static TrainedTwin train(const CodeletPool& pool, const Individual& ind,
                             const env::Dataset& ds, const PerceptionCache* cache = nullptr);

    // Full sensory->perceptual->behavioral->motor response for one sensor
    // vector: returns the 13 actuator commands the motors emit.
    std::array<int, env::kNumActuators> respond(
        const std::array<int, env::kNumSensors>& sensors) const;

    int hamming_score(const env::Dataset& ds) const;

    bool behaviorals_trained() const { return behaviorals_trained_; }
    const std::vector<int>& active_perceptuals() const { return active_perceptuals_; }
    const std::vector<int>& active_behaviorals() const { return active_behaviorals_; }

private:
    const CodeletPool* pool_ = nullptr;
    std::vector<int> active_perceptuals_;  // pool indices, ascending
    std::vector<int> active_behaviorals_;
    std::vector<TokenTable> tables_;        // parallel to active_perceptuals_
    std::vector<DecisionTree> trees_;       // parallel to active_behaviorals_
    std::vector<std::vector<int>> radices_;  // parallel to active_behaviorals_
    DecisionTree motor_tree_;               // identity on {0,1}
    bool behaviorals_trained_ = false;

    friend class InprocEvaluator;
};

class InprocEvaluator : public Evaluator {
public:
    InprocEvaluator(const CodeletPool& pool, const env::Dataset& ds);
    int evaluate(const Individual& ind, std::string* flags) override;

private:
    const CodeletPool& pool_;
    const env::Dataset& ds_;
    PerceptionCache cache_;
};

// ---------------------------------------------------------------------------
// Evolution loop

struct EvolveConfig {
    uint64_t pool_seed = 1;
    uint64_t data_seed = 2;
    std::optional<uint64_t> prefs_seed;  // derived from data_seed when unset
    std::optional<uint64_t> evo_seed;    // derived from pool/data seeds when unset
    int pop_size = 20;
    int max_generations = 20;
    MutationParams mutation;
    double init_p_one = 0.2;
    int n_elites = 5;
    PoolConfig pool;
    env::DatasetOptions dataset;
    env::Adjacency adjacency = env::default_adjacency();

    uint64_t resolved_prefs_seed() const;
    uint64_t resolved_evo_seed() const;
};

struct EvolveResult {
    FitnessReport best;
    std::vector<int> best_trace;  // per-generation population minimum
};

FitnessReport report_for(const Individual& ind, const CodeletPool& pool, int generations_used);

// Core loop: evaluate -> select -> mutate until a zero score or the
// generation cap. Works against any Evaluator.
EvolveResult evolve_loop(const EvolveConfig& cfg, const CodeletPool& pool, Evaluator& evaluator);

// Convenience entry: builds house/preferences/dataset/pool from the seeds
// and runs the in-process pipeline.
EvolveResult run_evolution(const EvolveConfig& cfg);

}  // namespace dct::evo
