#pragma once

// zeta: OP_{n,>=k} -> S_{n,k} and omega: OP_{n,k} -> D_{n,k}, with inverses.
//
// Both maps are easiest to see on the word P = U^{r_1} D U^{r_2} D ... U^{r_n} D
// of an ordered set with specification r. Its prefix heights after each D are
// r_1 + ... + r_i - i, so the flaw count is the depth of P's minimum and the
// empty spaces are the D steps that reach a new minimum. zeta deletes the last
// k of those D steps and credits each deleted run to the next part; read on
// words, that turns the first-passage D steps to the k deepest levels into U
// steps.

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "prefset.hpp"

namespace flawset {

/// An element of S_{n,k}: n - k nonnegative parts summing to n + k.
class Composition {
public:
    Composition(std::vector<int> parts, int n, int k) : parts_(std::move(parts)), n_(n), k_(k) {
        if (n < 1 || k < 0 || k > n - 1)
            throw InvalidInput("composition needs n >= 1 and 0 <= k <= n-1");
        if (static_cast<int>(parts_.size()) != n - k)
            throw InvalidInput("composition of S_{" + std::to_string(n) + "," +
                               std::to_string(k) + "} needs " + std::to_string(n - k) +
                               " parts, got " + std::to_string(parts_.size()));
        long sum = 0;
        for (int x : parts_) {
            if (x < 0)
                throw InvalidInput("composition parts must be nonnegative");
            sum += x;
        }
        if (sum != n + k)
            throw InvalidInput("composition parts sum to " + std::to_string(sum) +
                               ", expected " + std::to_string(n + k));
    }

    /// Recovers (n, k) from length n - k and sum n + k.
    static Composition from_parts(std::vector<int> parts) {
        long sum = 0;
        for (int x : parts)
            sum += x;
        const long len = static_cast<long>(parts.size());
        if (len == 0 || sum < len || (sum - len) % 2 != 0)
            throw InvalidInput("parts do not form a composition in any S_{n,k}");
        const int n = static_cast<int>((sum + len) / 2);
        const int k = static_cast<int>((sum - len) / 2);
        return Composition(std::move(parts), n, k);
    }

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    std::span<const int> parts() const noexcept { return parts_; }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int n_;
    int k_;
};

inline std::string to_string(const Composition& x) { return format_int_list(x.parts()); }

/// U/D word of length 2n with n of each letter. Membership in D_{n,k} also
/// needs a final D (see omega_inv); rendering and flaw_level accept any word.
class FlawPath {
public:
    explicit FlawPath(std::string steps) : steps_(std::move(steps)) {
        if (steps_.empty() || steps_.size() % 2 != 0)
            throw InvalidInput("path word must have positive even length");
        long height = 0;
        for (char c : steps_) {
            if (c == 'U')
                ++height;
            else if (c == 'D')
                --height;
            else
                throw InvalidInput(std::string("path word contains '") + c + "', expected U or D");
        }
        if (height != 0)
            throw InvalidInput("path word does not return to height 0");
    }

    int semilength() const noexcept { return static_cast<int>(steps_.size() / 2); }
    const std::string& steps() const noexcept { return steps_; }

    /// Height after each step, index 0 .. 2n (index 0 is the start).
    std::vector<int> heights() const {
        std::vector<int> h{0};
        h.reserve(steps_.size() + 1);
        for (char c : steps_)
            h.push_back(h.back() + (c == 'U' ? 1 : -1));
        return h;
    }

    friend bool operator==(const FlawPath&, const FlawPath&) = default;
    friend auto operator<=>(const FlawPath&, const FlawPath&) = default;

private:
    std::string steps_;
};

inline std::string to_string(const FlawPath& p) { return p.steps(); }

/// -(minimum prefix height); the path is in D_{n,k} for k = flaw_level.
inline int flaw_level(const FlawPath& p) {
    const auto h = p.heights();
    return -*std::min_element(h.begin(), h.end());
}

inline Composition zeta(const PreferenceSet& alpha, int k) {
    const int n = alpha.size();
    if (!alpha.is_ordered())
        throw PreconditionError("zeta requires an ordered preference set");
    if (k < 0 || k > n - 1)
        throw PreconditionError("zeta requires 0 <= k <= n-1");
    const ParkingOutcome outcome = simulate_parking(alpha);
    if (outcome.flaw_count < k)
        throw PreconditionError("zeta: preference set has " + std::to_string(outcome.flaw_count) +
                                " flaws, fewer than k = " + std::to_string(k));
    const Specification r = specification(alpha);

    // H: the last k empty spaces.
    const auto& empty = outcome.empty_spaces;
    std::vector<char> in_h(static_cast<std::size_t>(n) + 2, 0);
    for (auto it = empty.end() - k; it != empty.end(); ++it)
        in_h[static_cast<std::size_t>(*it)] = 1;

    std::vector<int> x;
    x.reserve(static_cast<std::size_t>(n - k));
    int previous = 0; // i_{j-1}; the window for j = 1 starts at 1
    for (int i = 1; i <= n; ++i) {
        if (in_h[static_cast<std::size_t>(i)])
            continue;
        int w = 0;
        if (in_h[static_cast<std::size_t>(i - 1)]) {
            for (int s = std::max(previous, 1); s <= i; ++s)
                w += in_h[static_cast<std::size_t>(s)];
        }
        x.push_back(r.at(i) + w);
        previous = i;
    }
    return Composition(std::move(x), n, k);
}

inline PreferenceSet zeta_inv(const Composition& x) {
    const int k = x.k();
    std::string word;
    for (int part : x.parts()) {
        word.append(static_cast<std::size_t>(part), 'U');
        word.push_back('D');
    }
    std::vector<int> h{0};
    for (char c : word)
        h.push_back(h.back() + (c == 'U' ? 1 : -1));
    const int floor = *std::min_element(h.begin(), h.end());

    // Undo the flips: the last up-step into each of the levels floor+1 .. floor+k.
    const int len = static_cast<int>(word.size());
    for (int level = floor + 1; level <= floor + k; ++level) {
        int t = len - 1;
        while (t >= 0 && !(word[static_cast<std::size_t>(t)] == 'U' &&
                           h[static_cast<std::size_t>(t)] == level - 1))
            --t;
        if (t < 0)
            throw ConsistencyError("zeta_inv: no up-step into level " + std::to_string(level));
        word[static_cast<std::size_t>(t)] = 'D';
    }

    std::vector<int> r;
    r.reserve(static_cast<std::size_t>(x.n()));
    int ups = 0;
    for (char c : word) {
        if (c == 'U') {
            ++ups;
        } else {
            r.push_back(ups);
            ups = 0;
        }
    }
    return from_specification(Specification(std::move(r)));
}

inline FlawPath omega(const PreferenceSet& alpha) {
    if (!alpha.is_ordered())
        throw PreconditionError("omega requires an ordered preference set");
    const Specification spec = specification(alpha);
    std::string word;
    for (int r : spec.counts()) {
        word.append(static_cast<std::size_t>(r), 'U');
        word.push_back('D');
    }
    return FlawPath(std::move(word));
}

/// Marks every peak UD as U*, then reads r_j off the j-th D-or-* symbol:
/// 0 for D, the number of U's since the previous such symbol for *.
/// The path must end with a fall step; those are exactly the images of omega.
inline PreferenceSet omega_inv(const FlawPath& p) {
    if (p.steps().back() != 'D')
        throw PreconditionError("omega_inv requires a path ending with D");
    std::string marked = p.steps();
    for (std::size_t t = 1; t < marked.size(); ++t)
        if (marked[t] == 'D' && marked[t - 1] == 'U')
            marked[t] = '*';
    std::vector<int> r;
    r.reserve(static_cast<std::size_t>(p.semilength()));
    int ups = 0;
    for (char c : marked) {
        if (c == 'U') {
            ++ups;
            continue;
        }
        r.push_back(c == '*' ? ups : 0);
        ups = 0;
    }
    return from_specification(Specification(std::move(r)));
}

inline FlawPath parse_flaw_path(std::string_view text) { return FlawPath(std::string(text)); }

inline Composition parse_composition(std::string_view text) {
    return Composition::from_parts(parse_int_list(text));
}

/// All of S_{n,k} in lexicographic order.
inline std::vector<Composition> compositions(int n, int k) {
    std::vector<Composition> out;
    if (n < 1 || k < 0 || k > n - 1)
        return out;
    const int parts = n - k, total = n + k;
    std::vector<int> x(static_cast<std::size_t>(parts), 0);
    // Recursive fill: position i receives v, remainder goes to later parts.
    auto fill = [&](auto&& self, int i, int remaining) -> void {
        if (i == parts - 1) {
            x[static_cast<std::size_t>(i)] = remaining;
            out.emplace_back(x, n, k);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            x[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, remaining - v);
        }
    };
    fill(fill, 0, total);
    return out;
}

/// The union of D_{n,k} over k: every balanced U/D word of semilength n that
/// ends with D, lexicographic with D < U. There are C(2n-1, n-1) of them.
inline std::vector<FlawPath> flaw_paths(int n) {
    std::vector<FlawPath> out;
    if (n < 1)
        return out;
    std::string w(static_cast<std::size_t>(n) - 1, 'D');
    w.append(static_cast<std::size_t>(n), 'U');
    do {
        out.emplace_back(w + 'D');
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace flawset
