#include "dct/env.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "dct/errors.hpp"

namespace dct::env {

namespace {

constexpr std::array<const char*, kNumRooms> kRoomNames = {
    "living_room", "bedroom", "kitchen", "bathroom", "outside"};

const char* sensor_kind_name(SensorKind k) {
    switch (k) {
        case SensorKind::presence: return "presence";
        case SensorKind::temperature: return "temperature";
        case SensorKind::luminosity: return "luminosity";
        case SensorKind::voice: return "voice";
        case SensorKind::smoke_detector: return "smoke_detector";
        case SensorKind::shower_temperature: return "shower_temperature";
        case SensorKind::humidity: return "humidity";
    }
    return "?";
}

const char* actuator_kind_name(ActuatorKind k) {
    switch (k) {
        case ActuatorKind::air_conditioner: return "air_conditioner";
        case ActuatorKind::lights: return "lights";
        case ActuatorKind::sound_box: return "sound_box";
        case ActuatorKind::coffee_machine: return "coffee_machine";
        case ActuatorKind::anti_fire: return "anti_fire";
        case ActuatorKind::shower_control: return "shower_control";
        case ActuatorKind::plant_watering: return "plant_watering";
    }
    return "?";
}

// Per-room device lists; the table order defines the global sensor and
// actuator indices used everywhere (CSV columns, codelet wiring).
const std::array<std::vector<SensorKind>, kNumRooms> kRoomSensors = {{
    {SensorKind::presence, SensorKind::temperature, SensorKind::luminosity, SensorKind::voice},
    {SensorKind::presence, SensorKind::temperature, SensorKind::luminosity, SensorKind::voice},
    {SensorKind::presence, SensorKind::temperature, SensorKind::luminosity,
     SensorKind::smoke_detector},
    {SensorKind::presence, SensorKind::temperature, SensorKind::luminosity,
     SensorKind::shower_temperature},
    {SensorKind::presence, SensorKind::luminosity, SensorKind::voice, SensorKind::humidity},
}};

const std::array<std::vector<ActuatorKind>, kNumRooms> kRoomActuators = {{
    {ActuatorKind::air_conditioner, ActuatorKind::lights, ActuatorKind::sound_box},
    {ActuatorKind::lights, ActuatorKind::sound_box},
    {ActuatorKind::lights, ActuatorKind::coffee_machine, ActuatorKind::anti_fire},
    {ActuatorKind::lights, ActuatorKind::shower_control},
    {ActuatorKind::lights, ActuatorKind::sound_box, ActuatorKind::plant_watering},
}};

}  // namespace

const char* room_name(int room) { return kRoomNames.at(room); }

int room_from_name(const std::string& name) {
    for (int i = 0; i < kNumRooms; ++i)
        if (name == kRoomNames[i]) return i;
    return -1;
}

Adjacency default_adjacency() {
    // outside-living, living-kitchen, living-bathroom, living-bedroom,
    // kitchen-bathroom
    Adjacency a{};
    auto link = [&](Room x, Room y) {
        a[int(x)][int(y)] = 1;
        a[int(y)][int(x)] = 1;
    };
    link(Room::outside, Room::living_room);
    link(Room::living_room, Room::kitchen);
    link(Room::living_room, Room::bathroom);
    link(Room::living_room, Room::bedroom);
    link(Room::kitchen, Room::bathroom);
    return a;
}

void validate_adjacency(const Adjacency& adj) {
    for (int i = 0; i < kNumRooms; ++i) {
        if (adj[i][i] != 0) throw EnvError("adjacency: non-zero diagonal");
        for (int j = 0; j < kNumRooms; ++j) {
            if (adj[i][j] != 0 && adj[i][j] != 1) throw EnvError("adjacency: entries must be 0/1");
            if (adj[i][j] != adj[j][i]) throw EnvError("adjacency: not symmetric");
        }
    }
    // connectivity by flood fill
    std::array<bool, kNumRooms> seen{};
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int at = stack.back();
        stack.pop_back();
        for (int j = 0; j < kNumRooms; ++j)
            if (adj[at][j] && !seen[j]) {
                seen[j] = true;
                stack.push_back(j);
            }
    }
    for (bool s : seen)
        if (!s) throw EnvError("adjacency: graph is not connected");
}

Adjacency load_adjacency_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EnvError("adjacency: cannot open " + path);
    Adjacency a{};
    for (int i = 0; i < kNumRooms; ++i)
        for (int j = 0; j < kNumRooms; ++j)
            if (!(in >> a[i][j])) throw EnvError("adjacency: expected 25 numbers in " + path);
    validate_adjacency(a);
    return a;
}

HouseModel HouseModel::standard() { return with_adjacency(default_adjacency()); }

HouseModel HouseModel::with_adjacency(const Adjacency& adj) {
    validate_adjacency(adj);
    HouseModel h;
    h.adjacency = adj;
    for (int r = 0; r < kNumRooms; ++r) {
        for (SensorKind k : kRoomSensors[r])
            h.sensors.push_back({r, k, std::string(kRoomNames[r]) + "." + sensor_kind_name(k)});
        for (ActuatorKind k : kRoomActuators[r])
            h.actuators.push_back({r, k, std::string(kRoomNames[r]) + "." + actuator_kind_name(k)});
    }
    return h;
}

int HouseModel::sensor_index(const std::string& id) const {
    for (size_t i = 0; i < sensors.size(); ++i)
        if (sensors[i].id == id) return static_cast<int>(i);
    return -1;
}

int HouseModel::actuator_index(const std::string& id) const {
    for (size_t i = 0; i < actuators.size(); ++i)
        if (actuators[i].id == id) return static_cast<int>(i);
    return -1;
}

AgentPreferences sample_preferences(uint64_t seed) {
    Rng rng(seed);
    AgentPreferences p;
    p.thermal_comfort = rng.uniform_int(20, 30);
    p.light_comfort = rng.uniform_real(0.4, 1.0);
    p.voice_prob = rng.uniform01();
    p.coffee_prob = rng.uniform01();
    p.plant_water_th = rng.uniform_int(40, 100);
    return p;
}

TransitionMatrix build_transition_matrix(const Adjacency& adj) {
    validate_adjacency(adj);
    TransitionMatrix t;
    for (int i = 0; i < kNumRooms; ++i) {
        int deg = 0;
        for (int j = 0; j < kNumRooms; ++j) deg += adj[i][j];
        if (deg == 0) throw EnvError(std::string("transition: isolated room ") + kRoomNames[i]);
        for (int j = 0; j < kNumRooms; ++j) t.p[i][j] = adj[i][j] ? 1.0 / deg : 0.0;
    }
    return t;
}

EnvState initial_state(const HouseModel& house) {
    EnvState s;
    s.occupied_room = int(Room::living_room);
    for (size_t i = 0; i < house.sensors.size(); ++i)
        if (house.sensors[i].kind == SensorKind::presence &&
            house.sensors[i].room == s.occupied_room)
            s.sensors[i] = 1;
    return s;
}

int actuator_rule(ActuatorKind kind, const RoomSensors& s, const AgentPreferences& prefs,
                  int coffee_draw, ComfortRule comfort) {
    bool flipped = comfort == ComfortRule::greater_than;
    switch (kind) {
        case ActuatorKind::air_conditioner:
            return (flipped ? s.temperature > prefs.thermal_comfort
                            : s.temperature < prefs.thermal_comfort)
                       ? 1
                       : 0;
        case ActuatorKind::lights:
            return s.luminosity / 10.0 < prefs.light_comfort ? 1 : 0;
        case ActuatorKind::sound_box:
            return s.voice;
        case ActuatorKind::coffee_machine:
            return coffee_draw;
        case ActuatorKind::anti_fire:
            return s.smoke;
        case ActuatorKind::shower_control:
            return (flipped ? s.shower_temperature > prefs.thermal_comfort
                            : s.shower_temperature < prefs.thermal_comfort)
                       ? 1
                       : 0;
        case ActuatorKind::plant_watering:
            return s.humidity * 10 < prefs.plant_water_th ? 1 : 0;
    }
    return 0;
}

namespace {

// Refresh one room in place: sensors first (device-table order), then
// actuators. Presence is maintained by the caller.
void refresh_room(EnvState& s, const HouseModel& house, int room, const AgentPreferences& prefs,
                  Rng& rng, const StepOptions& opts) {
    RoomSensors view;
    for (size_t i = 0; i < house.sensors.size(); ++i) {
        const auto& def = house.sensors[i];
        if (def.room != room) continue;
        switch (def.kind) {
            case SensorKind::presence:
                break;  // one-hot, handled by the caller
            case SensorKind::temperature:
                s.sensors[i] = rng.uniform_int(20, 30);
                view.temperature = s.sensors[i];
                break;
            case SensorKind::luminosity:
                s.sensors[i] = rng.uniform_int(0, 10);
                view.luminosity = s.sensors[i];
                break;
            case SensorKind::voice:
                s.sensors[i] = rng.bernoulli(prefs.voice_prob) ? 1 : 0;
                view.voice = s.sensors[i];
                break;
            case SensorKind::smoke_detector:
                s.sensors[i] = rng.bernoulli(0.001) ? 1 : 0;
                view.smoke = s.sensors[i];
                break;
            case SensorKind::shower_temperature:
                s.sensors[i] = rng.uniform_int(20, 30);
                view.shower_temperature = s.sensors[i];
                break;
            case SensorKind::humidity:
                s.sensors[i] = rng.uniform_int(0, 10);
                view.humidity = s.sensors[i];
                break;
        }
    }
    for (size_t i = 0; i < house.actuators.size(); ++i) {
        const auto& def = house.actuators[i];
        if (def.room != room) continue;
        int coffee = 0;
        if (def.kind == ActuatorKind::coffee_machine) coffee = rng.bernoulli(prefs.coffee_prob);
        s.actuators[i] = actuator_rule(def.kind, view, prefs, coffee, opts.comfort);
    }
}

}  // namespace

EnvState step(const EnvState& state, const HouseModel& house, const AgentPreferences& prefs,
              const TransitionMatrix& t, Rng& rng, const StepOptions& opts) {
    EnvState next = state;

    const auto& row = t.p[state.occupied_room];
    double u = rng.uniform01();
    double acc = 0.0;
    int room = state.occupied_room;
    for (int j = 0; j < kNumRooms; ++j) {
        acc += row[j];
        if (u < acc) {
            room = j;
            break;
        }
    }
    next.occupied_room = room;

    for (size_t i = 0; i < house.sensors.size(); ++i)
        if (house.sensors[i].kind == SensorKind::presence)
            next.sensors[i] = house.sensors[i].room == room ? 1 : 0;

    if (opts.scope == UpdateScope::all) {
        for (int r = 0; r < kNumRooms; ++r) refresh_room(next, house, r, prefs, rng, opts);
    } else {
        refresh_room(next, house, room, prefs, rng, opts);
    }

    next.sample_id = state.sample_id + 1;
    return next;
}

Dataset generate_dataset(const HouseModel& house, const AgentPreferences& prefs,
                         const TransitionMatrix& t, uint64_t seed, const DatasetOptions& opts) {
    if (opts.n < 1) throw EnvError("dataset: n must be >= 1");
    if (opts.test_size < 0 || opts.test_size > opts.n)
        throw EnvError("dataset: invalid test window");
    Rng rng(seed);
    Dataset ds;
    EnvState state = initial_state(house);
    for (int i = 0; i < opts.n; ++i) {
        state = step(state, house, prefs, t, rng, opts.step);
        Sample sample;
        sample.sensors = state.sensors;
        sample.actuators = state.actuators;
        ds.samples.push_back(sample);
        ds.rooms.push_back(state.occupied_room);
    }
    int first_test = opts.n - opts.test_size;
    int train_end = opts.split == SplitMode::trailing_holdout ? first_test : opts.n;
    for (int i = 0; i < train_end; ++i) ds.train_indices.push_back(i);
    for (int i = first_test; i < opts.n; ++i) ds.test_indices.push_back(i);
    return ds;
}

void write_dataset_csv(const Dataset& ds, std::ostream& out) {
    out << "sample_id,room";
    for (int i = 0; i < kNumSensors; ++i) out << ",s_" << i;
    for (int i = 0; i < kNumActuators; ++i) out << ",a_" << i;
    out << "\n";
    for (size_t i = 0; i < ds.samples.size(); ++i) {
        out << (i + 1) << "," << room_name(ds.rooms[i]);
        for (int v : ds.samples[i].sensors) out << "," << v;
        for (int v : ds.samples[i].actuators) out << "," << v;
        out << "\n";
    }
}

}  // namespace dct::env
