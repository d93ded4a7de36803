#pragma once

// Brute-force ground truth. Every ordered preference set of length n is
// generated and run through the parking simulator; nothing here uses a
// closed form.

#include <cstdint>
#include <future>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"
#include "prefset.hpp"
#include "query.hpp"

namespace flawset {

inline constexpr int kOracleMaxN = 12;
inline constexpr int kUnorderedMaxN = 7;

/// Walks nondecreasing sequences over [1, n] in lexicographic order.
class OrderedSetIterator {
public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PreferenceSet;
    using difference_type = std::ptrdiff_t;
    using pointer = const PreferenceSet*;
    using reference = const PreferenceSet&;

    OrderedSetIterator() = default;
    explicit OrderedSetIterator(int n) : done_(false) {
        current_.entries_.assign(static_cast<std::size_t>(n), 1);
    }

    reference operator*() const noexcept { return current_; }
    pointer operator->() const noexcept { return &current_; }

    OrderedSetIterator& operator++() {
        auto& a = current_.entries_;
        const int n = static_cast<int>(a.size());
        int i = n - 1;
        while (i >= 0 && a[static_cast<std::size_t>(i)] == n)
            --i;
        if (i < 0) {
            done_ = true;
            return *this;
        }
        const int v = a[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < n; ++j)
            a[static_cast<std::size_t>(j)] = v;
        return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const OrderedSetIterator& it, std::default_sentinel_t) noexcept {
        return it.done_;
    }

private:
    PreferenceSet current_;
    bool done_ = true;
};

/// Single-pass range over all C(2n-1, n-1) ordered preference sets of length n.
class OrderedSets {
public:
    explicit OrderedSets(int n) : n_(n) {
        if (n < 1)
            throw InvalidInput("n must be >= 1");
    }
    OrderedSetIterator begin() const { return OrderedSetIterator(n_); }
    std::default_sentinel_t end() const noexcept { return {}; }

private:
    int n_;
};

inline OrderedSets ordered_preference_sets(int n) { return OrderedSets(n); }

/// Selects a family of ordered sets for flaw histograms and moments.
struct Family {
    enum class Kind {
        all,            ///< every ordered set
        diagonal,       ///< leading term = flaws + 1
        leading,        ///< leading term = m
        leading_excess, ///< leading term = m and flaws >= m
    };
    Kind kind = Kind::all;
    int m = 0;

    static Family all() { return {Kind::all, 0}; }
    static Family diagonal() { return {Kind::diagonal, 0}; }
    static Family leading(int m) { return {Kind::leading, m}; }
    static Family leading_excess(int m) { return {Kind::leading_excess, m}; }

    bool admits(int flaws, int lead) const noexcept {
        switch (kind) {
        case Kind::all: return true;
        case Kind::diagonal: return lead == flaws + 1;
        case Kind::leading: return lead == m;
        case Kind::leading_excess: return lead == m && flaws >= m;
        }
        return false;
    }
};

inline std::string to_string(const Family& f) {
    switch (f.kind) {
    case Family::Kind::all: return "all";
    case Family::Kind::diagonal: return "diagonal";
    case Family::Kind::leading: return "leading=" + std::to_string(f.m);
    case Family::Kind::leading_excess: return "leading=" + std::to_string(f.m) + ",flaws>=m";
    }
    return "?";
}

/// Histogram k -> count; absent keys are zero.
using FlawDistribution = std::map<int, BigInt>;

/// Counts of ordered sets of length n by (flaws k, leading term m, max term l).
class CountTable {
public:
    explicit CountTable(int n)
        : n_(n), cells_(static_cast<std::size_t>(n) * n * n, BigInt(0)) {}

    int n() const noexcept { return n_; }

    /// Zero outside 0 <= k < n, 1 <= m, l <= n.
    const BigInt& at(int k, int m, int l) const {
        static const BigInt zero = 0;
        if (k < 0 || k >= n_ || m < 1 || m > n_ || l < 1 || l > n_)
            return zero;
        return cells_[index(k, m, l)];
    }
    BigInt& cell(int k, int m, int l) { return cells_[index(k, m, l)]; }

    BigInt total() const {
        BigInt s = 0;
        for (const auto& c : cells_)
            s += c;
        return s;
    }

    BigInt count(const CountQuery& q) const {
        BigInt s = 0;
        if (q.n != n_)
            throw InvalidInput("query n differs from table n");
        for (int k = 0; k < n_; ++k) {
            if (!q.flaws.admits(k))
                continue;
            for (int m = 1; m <= n_; ++m) {
                if (q.leading && *q.leading != m)
                    continue;
                for (int l = m; l <= n_; ++l)
                    if (!q.max_term || q.max_term->admits(l))
                        s += at(k, m, l);
            }
        }
        return s;
    }

    FlawDistribution flaw_distribution(const Family& family) const {
        FlawDistribution d;
        for (int k = 0; k < n_; ++k) {
            BigInt s = 0;
            for (int m = 1; m <= n_; ++m)
                if (family.admits(k, m))
                    for (int l = 1; l <= n_; ++l)
                        s += at(k, m, l);
            if (s != 0)
                d[k] = s;
        }
        return d;
    }

    /// Nonzero cells, columns n k m l count, sorted by (k, m, l).
    std::string to_tsv() const {
        std::ostringstream os;
        os << "n\tk\tm\tl\tcount\n";
        for_each_nonzero([&](int k, int m, int l, const BigInt& c) {
            os << n_ << '\t' << k << '\t' << m << '\t' << l << '\t' << c.str() << '\n';
        });
        return os.str();
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for_each_nonzero([&](int k, int m, int l, const BigInt& c) {
            cells.push_back({{"k", k}, {"m", m}, {"l", l}, {"count", c.str()}});
        });
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["n"] = n_;
        j["total"] = total().str();
        j["cells"] = std::move(cells);
        return j;
    }

private:
    std::size_t index(int k, int m, int l) const noexcept {
        return (static_cast<std::size_t>(k) * n_ + (m - 1)) * n_ + (l - 1);
    }

    template <class F>
    void for_each_nonzero(F&& f) const {
        for (int k = 0; k < n_; ++k)
            for (int m = 1; m <= n_; ++m)
                for (int l = 1; l <= n_; ++l)
                    if (at(k, m, l) != 0)
                        f(k, m, l, at(k, m, l));
    }

    int n_;
    std::vector<BigInt> cells_;
};

namespace detail {

/// Counts ordered sets of length n whose first entry is `lead`, indexed
/// (k * n + m - 1) * n + l - 1 like CountTable.
inline std::vector<std::uint64_t> count_partition(int n, int lead) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) * n * n, 0);
    std::vector<int> a(static_cast<std::size_t>(n), lead);
    while (true) {
        PreferenceSet set(a);
        const int k = flaw_count(set);
        const int l = a.back();
        ++counts[(static_cast<std::size_t>(k) * n + (lead - 1)) * n + (l - 1)];
        int i = n - 1;
        while (i >= 1 && a[static_cast<std::size_t>(i)] == n)
            --i;
        if (i < 1)
            break;
        const int v = a[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < n; ++j)
            a[static_cast<std::size_t>(j)] = v;
    }
    return counts;
}

} // namespace detail

/// Exhaustive table for 1 <= n <= kOracleMaxN. Partitions by first entry
/// run concurrently and are merged by addition.
inline CountTable build_count_table(int n) {
    if (n < 1 || n > kOracleMaxN)
        throw InvalidInput("oracle enumeration supports 1 <= n <= " +
                           std::to_string(kOracleMaxN));
    std::vector<std::future<std::vector<std::uint64_t>>> parts;
    for (int lead = 1; lead <= n; ++lead)
        parts.push_back(std::async(std::launch::async, detail::count_partition, n, lead));
    std::vector<std::uint64_t> merged(static_cast<std::size_t>(n) * n * n, 0);
    for (auto& p : parts) {
        const auto part = p.get();
        for (std::size_t i = 0; i < merged.size(); ++i)
            merged[i] += part[i];
    }
    CountTable table(n);
    for (int k = 0; k < n; ++k)
        for (int m = 1; m <= n; ++m)
            for (int l = 1; l <= n; ++l)
                table.cell(k, m, l) =
                    merged[(static_cast<std::size_t>(k) * n + (m - 1)) * n + (l - 1)];
    return table;
}

inline BigInt count(const CountQuery& q) { return build_count_table(q.n).count(q); }

inline FlawDistribution flaw_distribution(int n, const Family& family) {
    return build_count_table(n).flaw_distribution(family);
}

/// Sanity mode over all n^n (unordered) preference sets, n <= kUnorderedMaxN.
inline FlawDistribution unordered_flaw_distribution(int n) {
    if (n < 1 || n > kUnorderedMaxN)
        throw InvalidInput("unordered enumeration supports 1 <= n <= " +
                           std::to_string(kUnorderedMaxN));
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(n), 0);
    std::vector<int> a(static_cast<std::size_t>(n), 1);
    while (true) {
        ++hist[static_cast<std::size_t>(flaw_count(PreferenceSet(a)))];
        int i = n - 1;
        while (i >= 0 && a[static_cast<std::size_t>(i)] == n)
            a[static_cast<std::size_t>(i--)] = 1;
        if (i < 0)
            break;
        ++a[static_cast<std::size_t>(i)];
    }
    FlawDistribution d;
    for (int k = 0; k < n; ++k)
        if (hist[static_cast<std::size_t>(k)])
            d[k] = hist[static_cast<std::size_t>(k)];
    return d;
}

} // namespace flawset
