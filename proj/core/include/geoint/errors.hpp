#pragma once

#include <stdexcept>
#include <string>

namespace geoint {

// Invalid algebra, order, embedding or configuration input.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OrderError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// A certified sign could not be obtained within the precision cap.
class PrecisionExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical routine could not reach the requested tolerance.
class ToleranceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two geodesics share an endpoint, so a crossing sign is undefined.
class NonTransversal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace geoint
