#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dct {

inline constexpr int kProtocolVersion = 1;

// Operation vocabulary shared by nodes, codelets, trainer and environment.
enum class Op {
    read,
    write,
    train,
    get_model,
    get_io_set,
    reconfigure,
    health,
    shutdown,
    set_state,
    set_device,
    read_device,
    reset,
};

const char* op_name(Op op);
std::optional<Op> op_from_name(const std::string& name);

// Shared data cell. `payload` holds the information the codelets exchange
// (the interesting part), `eval` grades it in [0,1] and doubles as the
// behavioral signal strength, `sample_id` stamps freshness.
struct MemoryRecord {
    std::string name;
    std::string address;   // "host:port" of the owning node
    std::string mem_type;  // "sensory" | "perceptual" | "behavioral" | "motor" | "control"
    nlohmann::json payload;
    double eval = 0.0;
    int64_t sample_id = 0;

    nlohmann::json to_json() const;
    static MemoryRecord from_json(const nlohmann::json& j);

    bool operator==(const MemoryRecord& o) const {
        return name == o.name && address == o.address && mem_type == o.mem_type &&
               payload == o.payload && eval == o.eval && sample_id == o.sample_id;
    }
};

// One request or response document. Every request gets exactly one response
// with the same request_id; responses use ok/body or ok=false/error.
struct Message {
    Op op = Op::read;
    std::string target;
    nlohmann::json body;  // object or null
    int64_t request_id = 0;

    bool operator==(const Message& o) const {
        return op == o.op && target == o.target && body == o.body && request_id == o.request_id;
    }
};

struct Response {
    int64_t request_id = 0;
    bool ok = false;
    nlohmann::json body;        // when ok
    std::string error_code;     // when !ok
    std::string error_message;  // when !ok

    static Response success(int64_t request_id, nlohmann::json body = nullptr);
    static Response failure(int64_t request_id, const std::string& code, const std::string& message);
};

struct DecodeError {
    size_t offset = 0;
    std::string reason;
};

// Length-prefixed JSON framing: 4-byte big-endian payload size, then the
// UTF-8 document. encode() is deterministic (sorted keys, shortest
// round-trip float form).
std::vector<uint8_t> encode(const Message& msg);
std::vector<uint8_t> encode(const Response& rsp);

// Frame-level split: extracts one document payload from buf, or reports how
// many bytes are still missing (ok + needed>0), or a malformed prefix.
struct FrameView {
    bool complete = false;
    size_t frame_end = 0;  // bytes consumed when complete
    std::string_view payload;
};
bool split_frame(std::string_view buf, FrameView& out, DecodeError& err);

bool decode(const std::vector<uint8_t>& bytes, Message& out, DecodeError& err);
bool decode_response(const std::vector<uint8_t>& bytes, Response& out, DecodeError& err);

// Document-level parsing, used by servers after deframing.
bool parse_message(std::string_view doc, Message& out, DecodeError& err);
bool parse_response(std::string_view doc, Response& out, DecodeError& err);

inline constexpr size_t kMaxFrameBytes = 64ull << 20;

}  // namespace dct
