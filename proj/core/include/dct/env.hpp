#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dct/rng.hpp"

namespace dct::env {

inline constexpr int kNumRooms = 5;
inline constexpr int kNumSensors = 20;
inline constexpr int kNumActuators = 13;

enum class Room { living_room = 0, bedroom, kitchen, bathroom, outside };
const char* room_name(int room);
int room_from_name(const std::string& name);  // -1 unknown

enum class SensorKind {
    presence,
    temperature,
    luminosity,
    voice,
    smoke_detector,
    shower_temperature,
    humidity,
};

enum class ActuatorKind {
    air_conditioner,
    lights,
    sound_box,
    coffee_machine,
    anti_fire,
    shower_control,
    plant_watering,
};

struct SensorDef {
    int room;
    SensorKind kind;
    std::string id;  // "kitchen.smoke_detector"
};

struct ActuatorDef {
    int room;
    ActuatorKind kind;
    std::string id;
};

using Adjacency = std::array<std::array<int, kNumRooms>, kNumRooms>;

// Five rooms, four sensors each, thirteen actuators. The device table is
// fixed; only the room adjacency is configurable.
struct HouseModel {
    Adjacency adjacency{};
    std::vector<SensorDef> sensors;      // size 20, room-major order
    std::vector<ActuatorDef> actuators;  // size 13, room-major order

    static HouseModel standard();
    static HouseModel with_adjacency(const Adjacency& adj);

    int sensor_index(const std::string& id) const;    // -1 unknown
    int actuator_index(const std::string& id) const;  // -1 unknown
};

Adjacency default_adjacency();
// Symmetric 0/1 matrix, zero diagonal, connected graph.
void validate_adjacency(const Adjacency& adj);
Adjacency load_adjacency_file(const std::string& path);

// The base agent's sampled habits; each field uniform over its interval.
struct AgentPreferences {
    int thermal_comfort = 25;      // {20..30}
    double light_comfort = 0.7;    // [0.4,1]
    double voice_prob = 0.5;       // [0,1]
    double coffee_prob = 0.5;      // [0,1]
    int plant_water_th = 70;       // {40..100}
};

AgentPreferences sample_preferences(uint64_t seed);

struct TransitionMatrix {
    std::array<std::array<double, kNumRooms>, kNumRooms> p{};
};

// Row i spreads probability 1/deg(i) over i's neighbours.
TransitionMatrix build_transition_matrix(const Adjacency& adj);

struct EnvState {
    int occupied_room = 0;
    std::array<int, kNumSensors> sensors{};
    std::array<int, kNumActuators> actuators{};
    int64_t sample_id = 0;
};

EnvState initial_state(const HouseModel& house);

enum class UpdateScope { occupied, all };
enum class ComfortRule { lower_than, greater_than };

struct StepOptions {
    UpdateScope scope = UpdateScope::occupied;
    ComfortRule comfort = ComfortRule::lower_than;
};

// Sensor values of one room, by kind; -1 where the room lacks the sensor.
struct RoomSensors {
    int temperature = -1;
    int luminosity = -1;
    int voice = -1;
    int smoke = -1;
    int shower_temperature = -1;
    int humidity = -1;
};

// The deterministic rule table mapping a room's sensor readings to one
// actuator command. Luminosity is scaled to [0,1] and humidity to [0,100]
// before comparing against the matching preference. The coffee machine is
// the one stochastic actuator, so its draw comes in as an argument.
int actuator_rule(ActuatorKind kind, const RoomSensors& s, const AgentPreferences& prefs,
                  int coffee_draw, ComfortRule comfort);

// One random-walk move: resample the occupied room from the transition
// matrix, refresh the new room's devices per the rule table, leave the rest
// frozen (UpdateScope::all refreshes every room instead). Presence stays
// one-hot on the occupied room. Increments sample_id.
EnvState step(const EnvState& state, const HouseModel& house, const AgentPreferences& prefs,
              const TransitionMatrix& t, Rng& rng, const StepOptions& opts = {});

struct Sample {
    std::array<int, kNumSensors> sensors{};
    std::array<int, kNumActuators> actuators{};
};

// trailing_overlap trains on every sample and scores the trailing window;
// trailing_holdout keeps the trailing window out of training.
enum class SplitMode { trailing_overlap, trailing_holdout };

struct Dataset {
    std::vector<Sample> samples;
    std::vector<int> rooms;  // occupied room per sample
    std::vector<int> train_indices;
    std::vector<int> test_indices;
};

struct DatasetOptions {
    int n = 400;
    int test_size = 20;
    SplitMode split = SplitMode::trailing_overlap;
    StepOptions step;
};

Dataset generate_dataset(const HouseModel& house, const AgentPreferences& prefs,
                         const TransitionMatrix& t, uint64_t seed,
                         const DatasetOptions& opts = {});

// Header: sample_id, room, s_0..s_19, a_0..a_12 (column order per docs/devices.md).
void write_dataset_csv(const Dataset& ds, std::ostream& out);

}  // namespace dct::env
