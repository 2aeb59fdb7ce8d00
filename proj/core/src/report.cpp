#include "projkernel/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace projkernel {

bool IdentityReport::all_passed() const noexcept
{
    return failure_count() == 0;
}

std::size_t IdentityReport::failure_count() const noexcept
{
    return static_cast<std::size_t>(std::count_if(
        entries.begin(), entries.end(), [](const IdentityEntry& e) { return !e.passed(); }));
}

std::string IdentityReport::to_json(int indent) const
{
    using nlohmann::ordered_json;

    ordered_json config_obj = ordered_json::object();
    for (const auto& [key, value] : config) {
        config_obj[key] = value;
    }

    ordered_json list = ordered_json::array();
    for (const IdentityEntry& e : entries) {
        ordered_json params = ordered_json::object();
        for (const auto& [key, value] : e.parameters) {
            params[key] = value;
        }
        ordered_json item;
        item["identity"] = e.name;
        item["equation"] = e.equation;
        item["parameters"] = std::move(params);
        item["lhs"] = e.lhs_summary;
        item["rhs"] = e.rhs_summary;
        item["residual"] = e.residual;
        item["tolerance"] = e.tolerance;
        item["verdict"] = e.passed() ? "pass" : "fail";
        if (!e.flags.empty()) {
            item["flags"] = e.flags;
        }
        list.push_back(std::move(item));
    }

    ordered_json root;
    root["tool"] = "projkernel";
    root["version"] = tool_version;
    root["config"] = std::move(config_obj);
    root["summary"] = {{"entries", entries.size()},
                       {"failures", failure_count()},
                       {"passed", all_passed()}};
    root["entries"] = std::move(list);
    return root.dump(indent > 0 ? indent : -1);
}

} // namespace projkernel
