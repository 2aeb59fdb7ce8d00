#include "projkernel/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace projkernel {

std::optional<Rule> parse_rule(std::string_view name) noexcept
{
    if (name == "trapezoid") {
        return Rule::trapezoid;
    }
    if (name == "simpson") {
        return Rule::simpson;
    }
    return std::nullopt;
}

std::string_view to_string(Rule rule) noexcept
{
    return rule == Rule::simpson ? "simpson" : "trapezoid";
}

std::string_view to_string(Domain domain) noexcept
{
    switch (domain) {
    case Domain::coordinate: return "coordinate";
    case Domain::momentum: return "momentum";
    case Domain::time: return "time";
    case Domain::frequency: return "frequency";
    }
    return "coordinate";
}

QuadratureConfig load_config_file(const std::filesystem::path& path, const QuadratureConfig& base)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed config file " + path.string() + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw std::runtime_error("config file must hold a JSON object");
    }

    QuadratureConfig cfg = base;
    auto read_number = [&](const char* key, double& target) {
        if (!doc.contains(key)) {
            return;
        }
        if (!doc[key].is_number()) {
            throw std::runtime_error(std::string("config key '") + key + "' must be a number");
        }
        target = doc[key].get<double>();
    };
    read_number("L", cfg.half_width);
    read_number("step", cfg.step);
    read_number("eps", cfg.pv_exclusion);
    if (doc.contains("rule")) {
        const auto rule = doc["rule"].is_string() ? parse_rule(doc["rule"].get<std::string>())
                                                  : std::nullopt;
        if (!rule) {
            throw std::runtime_error("config key 'rule' must be \"trapezoid\" or \"simpson\"");
        }
        cfg.rule = *rule;
    }
    cfg.validate();
    return cfg;
}

QuadratureConfig default_config()
{
    const char* path = std::getenv(kConfigEnvVar.data());
    if (path == nullptr || *path == '\0') {
        return {};
    }
    return load_config_file(path);
}

} // namespace projkernel
