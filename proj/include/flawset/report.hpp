#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

namespace flawset {

using Params = std::vector<std::pair<std::string, long>>;

inline nlohmann::ordered_json params_json(const Params& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [name, value] : p)
        j[name] = value;
    return j;
}

inline std::string params_string(const Params& p) {
    std::string s;
    for (const auto& [name, value] : p) {
        if (!s.empty())
            s += ',';
        s += name + '=' + std::to_string(value);
    }
    return s;
}

struct CheckEntry {
    std::string check;
    Params params;
    std::string expected;
    std::string actual;
    bool pass = false;
};

/// A printed formula that disagrees with ground truth. Recorded, not counted
/// as a failure; `authoritative` is the value the library actually uses.
struct Discrepancy {
    std::string formula;
    Params params;
    std::string printed;
    std::string authoritative;
    std::string note;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckEntry> entries;
    std::vector<Discrepancy> discrepancies;
    double wall_seconds = 0.0;

    bool pass() const {
        return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
    }

    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; }));
    }

    void add(std::string check, Params params, std::string expected, std::string actual) {
        const bool ok = expected == actual;
        entries.push_back({std::move(check), std::move(params), std::move(expected),
                           std::move(actual), ok});
    }

    void absorb(VerificationReport other) {
        entries.insert(entries.end(), std::make_move_iterator(other.entries.begin()),
                       std::make_move_iterator(other.entries.end()));
        discrepancies.insert(discrepancies.end(),
                             std::make_move_iterator(other.discrepancies.begin()),
                             std::make_move_iterator(other.discrepancies.end()));
        wall_seconds += other.wall_seconds;
    }

    /// Deterministic order: check id, then parameters.
    void sort() {
        std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
            return std::tie(a.check, a.params) < std::tie(b.check, b.params);
        });
        std::stable_sort(discrepancies.begin(), discrepancies.end(),
                         [](const auto& a, const auto& b) {
                             return std::tie(a.formula, a.params) < std::tie(b.formula, b.params);
                         });
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["suite"] = suite;
        j["pass"] = pass();
        j["checks"] = entries.size();
        j["failures"] = failures();
        auto& list = j["entries"] = nlohmann::ordered_json::array();
        for (const auto& e : entries)
            list.push_back({{"check", e.check},
                            {"parameters", params_json(e.params)},
                            {"expected", e.expected},
                            {"actual", e.actual},
                            {"pass", e.pass}});
        auto& disc = j["discrepancies"] = nlohmann::ordered_json::array();
        for (const auto& d : discrepancies)
            disc.push_back({{"formula", d.formula},
                            {"parameters", params_json(d.params)},
                            {"printed", d.printed},
                            {"authoritative", d.authoritative},
                            {"note", d.note}});
        j["metadata"] = {{"wall_seconds", wall_seconds}};
        return j;
    }
};

} // namespace flawset
