#include "dct/evo.hpp"

#include <algorithm>

#include "dct/errors.hpp"
#include "dct/packing.hpp"

namespace dct::evo {

std::string Individual::genome_string() const {
    std::string s;
    s.reserve(genes.size());
    for (uint8_t g : genes) s += g ? '1' : '0';
    return s;
}

Individual Individual::from_genome_string(const std::string& s) {
    Individual ind;
    ind.genes.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw ConfigError("genome string must be 0/1");
        ind.genes.push_back(c == '1');
    }
    return ind;
}

Population init_population(uint64_t seed, int genome_len, int size, double p_one) {
    Rng rng(seed);
    Population pop;
    pop.individuals.resize(size);
    for (auto& ind : pop.individuals) {
        ind.genes.resize(genome_len);
        for (auto& g : ind.genes) g = rng.bernoulli(p_one) ? 1 : 0;
    }
    return pop;
}

Individual mutate(const Individual& ind, double mut_p, double ind_m, Rng& rng) {
    Individual out = ind;
    if (!rng.bernoulli(mut_p)) return out;
    bool changed = false;
    for (auto& g : out.genes) {
        if (rng.bernoulli(ind_m)) {
            g = g ? 0 : 1;
            changed = true;
        }
    }
    if (changed) {
        out.fitness.reset();
        out.flags.clear();
    }
    return out;
}

Population next_generation(const Population& pop, const MutationParams& mp, Rng& rng,
                           int n_elites) {
    const int size = static_cast<int>(pop.individuals.size());
    if (n_elites < 1 || n_elites + 1 > size)
        throw ConfigError("next_generation: elite count out of range");
    for (const auto& ind : pop.individuals)
        if (!ind.fitness) throw TrainError("next_generation: unevaluated individual");
    if (!pop.best_ever) throw TrainError("next_generation: missing best_ever");

    std::vector<int> order(size);
    for (int i = 0; i < size; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ia = pop.individuals[a];
        const auto& ib = pop.individuals[b];
        if (*ia.fitness != *ib.fitness) return *ia.fitness < *ib.fitness;
        return ia.genes < ib.genes;
    });

    Population next;
    next.generation = pop.generation + 1;
    next.best_ever = pop.best_ever;
    next.individuals.reserve(size);
    for (int e = 0; e < n_elites; ++e) next.individuals.push_back(pop.individuals[order[e]]);
    next.individuals.push_back(*pop.best_ever);
    while (static_cast<int>(next.individuals.size()) < size) {
        const Individual& parent = next.individuals[rng.uniform_int(0, n_elites - 1)];
        next.individuals.push_back(mutate(parent, mp.mut_p, mp.ind_m, rng));
    }
    return next;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> masked_row(const std::array<int, env::kNumSensors>& sensors,
                            const std::vector<int>& mask) {
    std::vector<int> row;
    row.reserve(mask.size());
    for (int s : mask) row.push_back(sensors[s]);
    return row;
}

DecisionTree identity_motor_tree() {
    return DecisionTree::fit({{0}, {1}}, {0, 1});
}

}  // namespace

PerceptionCache build_perception_cache(const CodeletPool& pool, const env::Dataset& ds) {
    PerceptionCache cache;
    cache.tables.reserve(pool.perceptuals.size());
    cache.token_columns.resize(pool.perceptuals.size());
    for (size_t p = 0; p < pool.perceptuals.size(); ++p) {
        const auto& mask = pool.perceptuals[p].mask;
        std::vector<std::vector<int>> rows;
        rows.reserve(ds.train_indices.size());
        for (int i : ds.train_indices) rows.push_back(masked_row(ds.samples[i].sensors, mask));
        cache.tables.push_back(TokenTable::fit(rows));
        auto& col = cache.token_columns[p];
        col.reserve(rows.size());
        for (const auto& r : rows) col.push_back(cache.tables[p].apply(r));
    }
    return cache;
}

TrainedTwin TrainedTwin::train(const CodeletPool& pool, const Individual& ind,
                               const env::Dataset& ds, const PerceptionCache* cache) {
    const int P = static_cast<int>(pool.perceptuals.size());
    const int B = static_cast<int>(pool.behaviorals.size());
    if (static_cast<int>(ind.genes.size()) != P + B)
        throw ShapeError("twin: genome length does not match pool");

    TrainedTwin twin;
    twin.pool_ = &pool;
    for (int p = 0; p < P; ++p)
        if (ind.genes[p]) twin.active_perceptuals_.push_back(p);
    for (int b = 0; b < B; ++b)
        if (ind.genes[P + b]) twin.active_behaviorals_.push_back(b);

    const size_t n_train = ds.train_indices.size();

    // perceptual stage: one token table per active perceptual
    std::vector<std::vector<int>> perception_rows(n_train);
    for (int p : twin.active_perceptuals_) {
        TokenTable table;
        std::vector<int> column;
        if (cache) {
            table = cache->tables[p];
            column = cache->token_columns[p];
        } else {
            std::vector<std::vector<int>> rows;
            rows.reserve(n_train);
            for (int i : ds.train_indices)
                rows.push_back(masked_row(ds.samples[i].sensors, pool.perceptuals[p].mask));
            table = TokenTable::fit(rows);
            column.reserve(rows.size());
            for (const auto& r : rows) column.push_back(table.apply(r));
        }
        twin.tables_.push_back(std::move(table));
        for (size_t i = 0; i < n_train; ++i) perception_rows[i].push_back(column[i]);
    }

    twin.motor_tree_ = identity_motor_tree();
    twin.behaviorals_trained_ = !twin.active_perceptuals_.empty();

    // behavioral stage: desired motor outputs, inverted through the motor
    // io map (identity), packed per target set
    for (int b : twin.active_behaviorals_) {
        const auto& targets = pool.behaviorals[b].targets;
        std::vector<int> radices(targets.size(), 2);
        twin.radices_.push_back(radices);
        if (!twin.behaviorals_trained_) {
            twin.trees_.emplace_back();  // untrained
            continue;
        }
        std::vector<int> labels;
        labels.reserve(n_train);
        for (size_t i = 0; i < n_train; ++i) {
            std::vector<int> desired;
            desired.reserve(targets.size());
            for (int m : targets)
                desired.push_back(ds.samples[ds.train_indices[i]].actuators[pool.motors[m].device]);
            labels.push_back(static_cast<int>(mixed_radix_pack(desired, radices)));
        }
        twin.trees_.push_back(DecisionTree::fit(perception_rows, labels));
    }
    return twin;
}

std::array<int, env::kNumActuators> TrainedTwin::respond(
    const std::array<int, env::kNumSensors>& sensors) const {
    std::vector<int> perception;
    perception.reserve(active_perceptuals_.size());
    for (size_t k = 0; k < active_perceptuals_.size(); ++k)
        perception.push_back(
            tables_[k].apply(masked_row(sensors, pool_->perceptuals[active_perceptuals_[k]].mask)));

    // behavioral outputs: (command, activation) per (behavioral, target)
    struct Offer {
        int behavioral;
        int command;
        double activation;
    };
    std::vector<std::vector<Offer>> offers(pool_->motors.size());
    for (size_t k = 0; k < active_behaviorals_.size(); ++k) {
        int b = active_behaviorals_[k];
        const auto& targets = pool_->behaviorals[b].targets;
        std::vector<int> commands(targets.size(), 0);
        double activation = 0.0;
        if (behaviorals_trained_ && !perception.empty()) {
            int composite = trees_[k].predict(perception);
            commands = mixed_radix_unpack(composite, radices_[k]);
            activation = 1.0;
        }
        for (size_t ti = 0; ti < targets.size(); ++ti)
            offers[targets[ti]].push_back({b, commands[ti], activation});
    }

    std::array<int, env::kNumActuators> out{};
    for (size_t m = 0; m < pool_->motors.size(); ++m) {
        int device = pool_->motors[m].device;
        if (offers[m].empty()) {
            out[device] = 0;
            continue;
        }
        // argmax on activation; ties keep the lexicographically smallest
        // behavioral name, which is the lowest pool index
        const Offer* winner = &offers[m][0];
        for (const auto& o : offers[m])
            if (o.activation > winner->activation) winner = &o;
        out[device] = motor_tree_.predict({winner->command});
    }
    return out;
}

int TrainedTwin::hamming_score(const env::Dataset& ds) const {
    int score = 0;
    for (int i : ds.test_indices) {
        auto actual = respond(ds.samples[i].sensors);
        for (int a = 0; a < env::kNumActuators; ++a)
            score += std::abs(actual[a] - ds.samples[i].actuators[a]);
    }
    return score;
}

InprocEvaluator::InprocEvaluator(const CodeletPool& pool, const env::Dataset& ds)
    : pool_(pool), ds_(ds), cache_(build_perception_cache(pool, ds)) {}

int InprocEvaluator::evaluate(const Individual& ind, std::string* flags) {
    TrainedTwin twin = TrainedTwin::train(pool_, ind, ds_, &cache_);
    if (flags && !twin.behaviorals_trained_ && !twin.active_behaviorals().empty())
        *flags = "no_active_perceptuals";
    return twin.hamming_score(ds_);
}

// ---------------------------------------------------------------------------

uint64_t EvolveConfig::resolved_prefs_seed() const {
    return prefs_seed ? *prefs_seed : derive_seed(data_seed, 0, 101);
}

uint64_t EvolveConfig::resolved_evo_seed() const {
    return evo_seed ? *evo_seed : derive_seed(pool_seed ^ (data_seed << 1), 0, 102);
}

FitnessReport report_for(const Individual& ind, const CodeletPool& pool, int generations_used) {
    FitnessReport r;
    r.score = ind.fitness.value_or(-1);
    r.generations_used = generations_used;
    const int P = static_cast<int>(pool.perceptuals.size());
    for (int i = 0; i < P; ++i) r.n_perceptual_active += ind.genes[i] ? 1 : 0;
    for (size_t i = P; i < ind.genes.size(); ++i) r.n_behavioral_active += ind.genes[i] ? 1 : 0;
    r.genome = ind.genome_string();
    r.flags = ind.flags;
    return r;
}

EvolveResult evolve_loop(const EvolveConfig& cfg, const CodeletPool& pool, Evaluator& evaluator) {
    Rng rng(cfg.resolved_evo_seed());
    Population pop =
        init_population(derive_seed(cfg.resolved_evo_seed(), 0, 1), pool.genome_length(),
                        cfg.pop_size, cfg.init_p_one);

    EvolveResult result;
    int generations_used = 0;
    for (int gen = 0;; ++gen) {
        int gen_best = -1;
        for (auto& ind : pop.individuals) {
            if (!ind.fitness) {
                std::string flags;
                ind.fitness = evaluator.evaluate(ind, &flags);
                ind.flags = flags;
            }
            if (gen_best < 0 || *ind.fitness < gen_best) gen_best = *ind.fitness;
            if (!pop.best_ever || *ind.fitness < *pop.best_ever->fitness) pop.best_ever = ind;
        }
        result.best_trace.push_back(gen_best);
        generations_used = gen;
        if (*pop.best_ever->fitness == 0 || gen == cfg.max_generations) break;
        pop = next_generation(pop, cfg.mutation, rng, cfg.n_elites);
    }

    result.best = report_for(*pop.best_ever, pool, generations_used);
    return result;
}

EvolveResult run_evolution(const EvolveConfig& cfg) {
    CodeletPool pool = build_pool(cfg.pool_seed, cfg.pool);
    auto house = env::HouseModel::with_adjacency(cfg.adjacency);
    auto prefs = env::sample_preferences(cfg.resolved_prefs_seed());
    auto t = env::build_transition_matrix(house.adjacency);
    auto ds = env::generate_dataset(house, prefs, t, cfg.data_seed, cfg.dataset);
    InprocEvaluator evaluator(pool, ds);
    return evolve_loop(cfg, pool, evaluator);
}

}  // namespace dct::evo
