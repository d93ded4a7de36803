#pragma once

#include <optional>
#include <string>

namespace flawset {

/// Which flaw counts a count query admits.
struct FlawFilter {
    enum class Kind { exactly, at_least, at_most };
    Kind kind = Kind::exactly;
    int k = 0;

    static FlawFilter exactly(int k) { return {Kind::exactly, k}; }
    static FlawFilter at_least(int k) { return {Kind::at_least, k}; }
    static FlawFilter at_most(int k) { return {Kind::at_most, k}; }

    bool admits(int flaws) const noexcept {
        switch (kind) {
        case Kind::exactly: return flaws == k;
        case Kind::at_least: return flaws >= k;
        case Kind::at_most: return flaws <= k;
        }
        return false;
    }
};

struct MaxTermFilter {
    enum class Kind { at_most, exactly };
    Kind kind = Kind::at_most;
    int l = 0;

    static MaxTermFilter at_most(int l) { return {Kind::at_most, l}; }
    static MaxTermFilter exactly(int l) { return {Kind::exactly, l}; }

    bool admits(int max_term) const noexcept {
        return kind == Kind::at_most ? max_term <= l : max_term == l;
    }
};

/// A filtered family of ordered preference sets of length n.
struct CountQuery {
    int n = 1;
    FlawFilter flaws = FlawFilter::at_least(0);
    std::optional<int> leading;
    std::optional<MaxTermFilter> max_term;
};

inline std::string describe(const CountQuery& q) {
    std::string s = "n=" + std::to_string(q.n);
    switch (q.flaws.kind) {
    case FlawFilter::Kind::exactly: s += " flaws=" + std::to_string(q.flaws.k); break;
    case FlawFilter::Kind::at_least: s += " flaws>=" + std::to_string(q.flaws.k); break;
    case FlawFilter::Kind::at_most: s += " flaws<=" + std::to_string(q.flaws.k); break;
    }
    if (q.leading)
        s += " leading=" + std::to_string(*q.leading);
    if (q.max_term)
        s += std::string(q.max_term->kind == MaxTermFilter::Kind::at_most ? " max<=" : " max=") +
             std::to_string(q.max_term->l);
    return s;
}

} // namespace flawset
