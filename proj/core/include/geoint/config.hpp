#pragma once

#include "geoint/fform.hpp"
#include "geoint/order.hpp"
#include "geoint/quaternion.hpp"

#include <array>
#include <filesystem>
#include <string>

namespace geoint {

struct ConfigOptions {
    std::int64_t n_max = 50;
    int sign_convention = 1;
    double box_slack = 0.01;
    unsigned precision_bits = 128;
};

// A configuration (B, O, alpha_1, alpha_2) as read from JSON. Rationals are
// strings "p" or "p/q"; quaternions are [t, x, y, z].
struct Config {
    Rational a = 0;
    Rational b = 0;
    std::array<Quaternion, 4> order_basis;
    EmbeddingData emb1;
    EmbeddingData emb2;
    ConfigOptions options;
};

// Throws ConfigError on malformed JSON or missing/ill-typed fields.
Config parse_config(const std::string& json_text);
Config load_config(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);

// The PRECISION_BITS environment variable, when set, overrides options.precision_bits.
PrecisionPolicy precision_policy(const ConfigOptions& options);

// Verifies every construction-time invariant; throws ConfigError (or OrderError) naming the first failure.
FFormContext build_context(const Config& config);

}  // namespace geoint
