#pragma once

#include <stdexcept>
#include <string>

namespace dct {

// Base for all library errors. Subsystems throw the specific subclass so
// callers can react per layer; the servers translate these into error
// responses on the wire.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error(what) {}
};

class FitError : public Error {
public:
    explicit FitError(const std::string& what) : Error(what) {}
};

class WireError : public Error {
public:
    explicit WireError(const std::string& what) : Error(what) {}
};

class NetError : public Error {
public:
    explicit NetError(const std::string& what) : Error(what) {}
};

class NodeError : public Error {
public:
    explicit NodeError(const std::string& what) : Error(what) {}
};

class EnvError : public Error {
public:
    explicit EnvError(const std::string& what) : Error(what) {}
};

class TrainError : public Error {
public:
    explicit TrainError(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace dct
