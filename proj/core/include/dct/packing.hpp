#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dct/errors.hpp"

namespace dct {

// Mixed-radix packing of per-target command tuples into one integer label,
// least significant digit first (see docs/encoding.md). A behavioral codelet
// that feeds k motors trains on pack(commands, radices) and decodes its
// prediction back into k commands.
inline int64_t mixed_radix_pack(const std::vector<int>& values, const std::vector<int>& radices) {
    if (values.size() != radices.size())
        throw ShapeError("pack: " + std::to_string(values.size()) + " values vs " +
                         std::to_string(radices.size()) + " radices");
    int64_t packed = 0;
    int64_t base = 1;
    for (size_t i = 0; i < values.size(); ++i) {
        if (radices[i] < 1) throw ShapeError("pack: radix < 1");
        if (values[i] < 0 || values[i] >= radices[i])
            throw ShapeError("pack: value " + std::to_string(values[i]) + " out of radix " +
                             std::to_string(radices[i]));
        packed += base * values[i];
        base *= radices[i];
    }
    return packed;
}

inline std::vector<int> mixed_radix_unpack(int64_t packed, const std::vector<int>& radices) {
    std::vector<int> values(radices.size());
    for (size_t i = 0; i < radices.size(); ++i) {
        if (radices[i] < 1) throw ShapeError("unpack: radix < 1");
        values[i] = static_cast<int>(packed % radices[i]);
        packed /= radices[i];
    }
    return values;
}

}  // namespace dct
