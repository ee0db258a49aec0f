#include "geoint/config.hpp"

#include "geoint/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace geoint {

namespace {

using nlohmann::json;

Rational rational_field(const json& v, const std::string& what) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(what + ": " + e.what());
    }
    throw ConfigError(what + ": expected a rational string \"p/q\" or an integer");
}

std::int64_t integer_field(const json& v, const std::string& what) {
    Rational r = rational_field(v, what);
    if (!is_integer(r)) throw ConfigError(what + ": expected an integer");
    return to_int64(r.get_num());
}

Quaternion quaternion_field(const json& v, const std::string& what) {
    if (!v.is_array() || v.size() != 4) throw ConfigError(what + ": expected [t, x, y, z]");
    return {rational_field(v[0], what + "[0]"), rational_field(v[1], what + "[1]"), rational_field(v[2], what + "[2]"),
            rational_field(v[3], what + "[3]")};
}

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError(std::string("missing field \"") + key + "\"");
    return *it;
}

EmbeddingData embedding_field(const json& obj, const char* D, const char* w, const char* f) {
    EmbeddingData e;
    e.D = integer_field(require(obj, D), D);
    if (e.D <= 1 || !is_squarefree(e.D)) throw ConfigError(std::string(D) + " must be a squarefree integer > 1");
    e.w = quaternion_field(require(obj, w), w);
    if (auto it = obj.find(f); it != obj.end() && !it->is_null()) e.conductor = integer_field(*it, f);
    return e;
}

}  // namespace

Config parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    Config c;
    c.a = rational_field(require(doc, "a"), "a");
    c.b = rational_field(require(doc, "b"), "b");
    if (c.a == 0 || c.b == 0) throw ConfigError("structure constants must be nonzero");
    const json& basis = require(doc, "order_basis");
    if (!basis.is_array() || basis.size() != 4) throw ConfigError("order_basis: expected 4 quaternions");
    for (std::size_t i = 0; i < 4; ++i)
        c.order_basis[i] = quaternion_field(basis[i], "order_basis[" + std::to_string(i) + "]");
    c.emb1 = embedding_field(doc, "D1", "w1", "f1");
    c.emb2 = embedding_field(doc, "D2", "w2", "f2");
    if (auto it = doc.find("options"); it != doc.end()) {
        const json& o = *it;
        if (!o.is_object()) throw ConfigError("options must be an object");
        try {
            if (o.contains("n_max")) c.options.n_max = o.at("n_max").get<std::int64_t>();
            if (o.contains("sign_convention")) c.options.sign_convention = o.at("sign_convention").get<int>();
            if (o.contains("box_slack")) c.options.box_slack = o.at("box_slack").get<double>();
            if (o.contains("precision_bits")) c.options.precision_bits = o.at("precision_bits").get<unsigned>();
        } catch (const json::exception& e) {
            throw ConfigError(std::string("options: ") + e.what());
        }
        if (c.options.n_max < 0) throw ConfigError("options.n_max must be >= 0");
        if (c.options.sign_convention != 1 && c.options.sign_convention != -1)
            throw ConfigError("options.sign_convention must be +1 or -1");
        if (!(c.options.box_slack >= 0 && c.options.box_slack < 1)) throw ConfigError("options.box_slack must lie in [0, 1)");
        if (c.options.precision_bits < 32 || c.options.precision_bits > (1u << 16))
            throw ConfigError("options.precision_bits must lie in [32, 65536]");
    }
    return c;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Config load_config(const std::filesystem::path& path) { return parse_config(read_file(path)); }

PrecisionPolicy precision_policy(const ConfigOptions& options) {
    const char* env = std::getenv("PRECISION_BITS");
    if (env && *env) return PrecisionPolicy::from_environment();
    PrecisionPolicy p;
    p.start_bits = options.precision_bits;
    return p;
}

FFormContext build_context(const Config& config) {
    QuatAlgebra B(config.a, config.b);
    EichlerOrderLattice order = EichlerOrderLattice::verify(B, config.order_basis);
    return FFormContext(order, config.emb1, config.emb2, config.options.sign_convention,
                        precision_policy(config.options));
}

}  // namespace geoint
