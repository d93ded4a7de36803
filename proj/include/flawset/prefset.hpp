#pragma once

// Preference sets, the parking process, and specification vectors.
//
// The external data model is 1-based: entries take values in [1, n] and
// parking spaces are numbered 1..n. Storage is a plain std::vector<int>
// holding those 1-based values.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace flawset {

class PreferenceSet {
public:
    explicit PreferenceSet(std::vector<int> entries) : entries_(std::move(entries)) {
        if (entries_.empty())
            throw InvalidInput("preference set must have length n >= 1");
        const int n = size();
        for (int a : entries_)
            if (a < 1 || a > n)
                throw InvalidInput("preference " + std::to_string(a) + " outside [1, " +
                                   std::to_string(n) + "]");
    }

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    /// 0-based position, 1-based value.
    int operator[](std::size_t i) const noexcept { return entries_[i]; }
    std::span<const int> entries() const noexcept { return entries_; }

    bool is_ordered() const noexcept {
        return std::is_sorted(entries_.begin(), entries_.end());
    }
    int leading_term() const noexcept { return entries_.front(); }
    int max_term() const noexcept { return *std::max_element(entries_.begin(), entries_.end()); }

    friend bool operator==(const PreferenceSet&, const PreferenceSet&) = default;
    friend auto operator<=>(const PreferenceSet&, const PreferenceSet&) = default;

private:
    friend class OrderedSetIterator;
    PreferenceSet() = default;
    std::vector<int> entries_;
};

inline bool is_ordered(const PreferenceSet& a) { return a.is_ordered(); }
inline int leading_term(const PreferenceSet& a) { return a.leading_term(); }
inline int max_term(const PreferenceSet& a) { return a.max_term(); }

/// Occupancy counts r_1..r_n, r_i = #{j : a_j = i}.
class Specification {
public:
    explicit Specification(std::vector<int> counts) : counts_(std::move(counts)) {
        if (counts_.empty())
            throw InvalidInput("specification must have length n >= 1");
        long total = 0;
        for (int r : counts_) {
            if (r < 0)
                throw InvalidInput("specification entries must be nonnegative");
            total += r;
        }
        if (total != static_cast<long>(counts_.size()))
            throw InvalidInput("specification sums to " + std::to_string(total) +
                               ", expected " + std::to_string(counts_.size()));
    }

    int size() const noexcept { return static_cast<int>(counts_.size()); }
    /// r_i for 1-based space index i.
    int at(int i) const { return counts_.at(static_cast<std::size_t>(i - 1)); }
    std::span<const int> counts() const noexcept { return counts_; }

    friend bool operator==(const Specification&, const Specification&) = default;

private:
    std::vector<int> counts_;
};

struct ParkingOutcome {
    /// Per car, in input order: the 1-based space taken, or nullopt if the car failed.
    std::vector<std::optional<int>> assignment;
    /// Unoccupied spaces, ascending.
    std::vector<int> empty_spaces;
    int flaw_count = 0;
};

/// Cars arrive in index order; car i takes the first free space >= a_i, or
/// fails if none exists. Accepts unordered input.
inline ParkingOutcome simulate_parking(const PreferenceSet& a) {
    const int n = a.size();
    std::vector<char> occupied(static_cast<std::size_t>(n) + 1, 0);
    ParkingOutcome out;
    out.assignment.reserve(static_cast<std::size_t>(n));
    for (int pref : a.entries()) {
        int s = pref;
        while (s <= n && occupied[static_cast<std::size_t>(s)])
            ++s;
        if (s > n) {
            out.assignment.emplace_back(std::nullopt);
            ++out.flaw_count;
        } else {
            occupied[static_cast<std::size_t>(s)] = 1;
            out.assignment.emplace_back(s);
        }
    }
    for (int s = 1; s <= n; ++s)
        if (!occupied[static_cast<std::size_t>(s)])
            out.empty_spaces.push_back(s);
    return out;
}

inline int flaw_count(const PreferenceSet& a) { return simulate_parking(a).flaw_count; }

inline Specification specification(const PreferenceSet& a) {
    std::vector<int> r(static_cast<std::size_t>(a.size()), 0);
    for (int v : a.entries())
        ++r[static_cast<std::size_t>(v - 1)];
    return Specification(std::move(r));
}

/// The unique ordered preference set with the given specification.
inline PreferenceSet from_specification(const Specification& r) {
    std::vector<int> a;
    a.reserve(static_cast<std::size_t>(r.size()));
    for (int i = 1; i <= r.size(); ++i)
        a.insert(a.end(), static_cast<std::size_t>(r.at(i)), i);
    return PreferenceSet(std::move(a));
}

/// max(0, max_i (i - (r_1 + ... + r_i))). Equals the flaw count of the
/// ordered set with specification r.
inline int deficiency(const Specification& r) {
    int worst = 0, prefix = 0;
    for (int i = 1; i <= r.size(); ++i) {
        prefix += r.at(i);
        worst = std::max(worst, i - prefix);
    }
    return worst;
}

// Comma-separated 1-based integers, e.g. "1,1,3,3,5,9,9,9,9".

inline std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    if (text.empty())
        throw InvalidInput("empty integer list");
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos
                                                                                : comma - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw InvalidInput("not an integer: '" + std::string(tok) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

inline std::string format_int_list(std::span<const int> values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(values[i]);
    }
    return s;
}

inline PreferenceSet parse_preference_set(std::string_view text) {
    return PreferenceSet(parse_int_list(text));
}

inline std::string to_string(const PreferenceSet& a) { return format_int_list(a.entries()); }
inline std::string to_string(const Specification& r) { return format_int_list(r.counts()); }

} // namespace flawset
