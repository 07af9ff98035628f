#include "dct/wire.hpp"

#include <array>

#include "dct/errors.hpp"

namespace dct {

namespace {

constexpr std::array<const char*, 12> kOpNames = {
    "read",      "write",  "train",    "get_model",  "get_io_set",  "reconfigure",
    "health",    "shutdown", "set_state", "set_device", "read_device", "reset",
};

std::vector<uint8_t> frame(const std::string& doc) {
    if (doc.size() > kMaxFrameBytes) throw WireError("encode: document exceeds frame limit");
    std::vector<uint8_t> out;
    out.reserve(4 + doc.size());
    uint32_t n = static_cast<uint32_t>(doc.size());
    out.push_back(static_cast<uint8_t>(n >> 24));
    out.push_back(static_cast<uint8_t>(n >> 16));
    out.push_back(static_cast<uint8_t>(n >> 8));
    out.push_back(static_cast<uint8_t>(n));
    out.insert(out.end(), doc.begin(), doc.end());
    return out;
}

bool parse_json(std::string_view doc, nlohmann::json& out, DecodeError& err) {
    try {
        out = nlohmann::json::parse(doc);
        return true;
    } catch (const nlohmann::json::parse_error& e) {
        err.offset = e.byte;
        err.reason = e.what();
        return false;
    }
}

}  // namespace

const char* op_name(Op op) { return kOpNames[static_cast<size_t>(op)]; }

std::optional<Op> op_from_name(const std::string& name) {
    for (size_t i = 0; i < kOpNames.size(); ++i)
        if (name == kOpNames[i]) return static_cast<Op>(i);
    return std::nullopt;
}

nlohmann::json MemoryRecord::to_json() const {
    return nlohmann::json{{"name", name},       {"address", address}, {"mem_type", mem_type},
                          {"payload", payload}, {"eval", eval},       {"sample_id", sample_id}};
}

MemoryRecord MemoryRecord::from_json(const nlohmann::json& j) {
    MemoryRecord r;
    r.name = j.at("name").get<std::string>();
    r.address = j.value("address", std::string{});
    r.mem_type = j.value("mem_type", std::string{});
    r.payload = j.value("payload", nlohmann::json{});
    r.eval = j.value("eval", 0.0);
    r.sample_id = j.value("sample_id", int64_t{0});
    return r;
}

Response Response::success(int64_t request_id, nlohmann::json body) {
    Response r;
    r.request_id = request_id;
    r.ok = true;
    r.body = std::move(body);
    return r;
}

Response Response::failure(int64_t request_id, const std::string& code, const std::string& message) {
    Response r;
    r.request_id = request_id;
    r.ok = false;
    r.error_code = code;
    r.error_message = message;
    return r;
}

std::vector<uint8_t> encode(const Message& msg) {
    nlohmann::json j{{"version", kProtocolVersion},
                     {"op", op_name(msg.op)},
                     {"target", msg.target},
                     {"body", msg.body},
                     {"request_id", msg.request_id}};
    return frame(j.dump());
}

std::vector<uint8_t> encode(const Response& rsp) {
    nlohmann::json j{{"version", kProtocolVersion}, {"request_id", rsp.request_id}, {"ok", rsp.ok}};
    if (rsp.ok)
        j["body"] = rsp.body;
    else
        j["error"] = nlohmann::json{{"code", rsp.error_code}, {"message", rsp.error_message}};
    return frame(j.dump());
}

bool split_frame(std::string_view buf, FrameView& out, DecodeError& err) {
    out = FrameView{};
    if (buf.size() < 4) return true;  // incomplete, not an error
    uint32_t n = (uint32_t(uint8_t(buf[0])) << 24) | (uint32_t(uint8_t(buf[1])) << 16) |
                 (uint32_t(uint8_t(buf[2])) << 8) | uint32_t(uint8_t(buf[3]));
    if (n > kMaxFrameBytes) {
        err.offset = 0;
        err.reason = "frame length " + std::to_string(n) + " exceeds limit";
        return false;
    }
    if (buf.size() < 4 + size_t(n)) return true;  // incomplete
    out.complete = true;
    out.frame_end = 4 + size_t(n);
    out.payload = buf.substr(4, n);
    return true;
}

bool parse_message(std::string_view doc, Message& out, DecodeError& err) {
    nlohmann::json j;
    if (!parse_json(doc, j, err)) return false;
    if (!j.is_object()) {
        err.reason = "document is not an object";
        return false;
    }
    if (!j.contains("op") || !j["op"].is_string()) {
        err.reason = "missing op";
        return false;
    }
    auto op = op_from_name(j["op"].get<std::string>());
    if (!op) {
        err.reason = "unknown op '" + j["op"].get<std::string>() + "'";
        return false;
    }
    out.op = *op;
    out.target = j.value("target", std::string{});
    out.body = j.value("body", nlohmann::json{});
    if (j.contains("request_id") && !j["request_id"].is_number_integer()) {
        err.reason = "request_id is not an integer";
        return false;
    }
    out.request_id = j.value("request_id", int64_t{0});
    return true;
}

bool parse_response(std::string_view doc, Response& out, DecodeError& err) {
    nlohmann::json j;
    if (!parse_json(doc, j, err)) return false;
    if (!j.is_object() || !j.contains("ok")) {
        err.reason = "document is not a response";
        return false;
    }
    out.request_id = j.value("request_id", int64_t{0});
    out.ok = j["ok"].get<bool>();
    if (out.ok) {
        out.body = j.value("body", nlohmann::json{});
    } else {
        const auto& e = j.at("error");
        out.error_code = e.value("code", std::string{"unknown"});
        out.error_message = e.value("message", std::string{});
    }
    return true;
}

namespace {

template <typename T>
bool decode_framed(const std::vector<uint8_t>& bytes, T& out, DecodeError& err,
                   bool (*parse)(std::string_view, T&, DecodeError&)) {
    if (bytes.empty()) {
        err.offset = 0;
        err.reason = "empty input";
        return false;
    }
    std::string_view buf(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    FrameView frame;
    if (!split_frame(buf, frame, err)) return false;
    if (!frame.complete) {
        err.offset = bytes.size();
        err.reason = "truncated frame";
        return false;
    }
    if (frame.frame_end != bytes.size()) {
        err.offset = frame.frame_end;
        err.reason = "trailing bytes after frame";
        return false;
    }
    if (!parse(frame.payload, out, err)) {
        err.offset += 4;  // report offsets relative to the byte stream
        return false;
    }
    return true;
}

}  // namespace

bool decode(const std::vector<uint8_t>& bytes, Message& out, DecodeError& err) {
    return decode_framed(bytes, out, err, parse_message);
}

bool decode_response(const std::vector<uint8_t>& bytes, Response& out, DecodeError& err) {
    return decode_framed(bytes, out, err, parse_response);
}

}  // namespace dct
