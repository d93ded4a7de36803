// Walks the ordered preference sets of length 4, prints each with its flaw
// count and path, then compares the histogram with the closed form.

#include <iostream>

#include "flawset/flawset.hpp"

int main() {
    using namespace flawset;
    const int n = 4;
    FlawDistribution seen;
    for (const auto& alpha : ordered_preference_sets(n)) {
        const int k = flaw_count(alpha);
        seen[k] += 1;
        std::cout << to_string(alpha) << "  flaws " << k << "  " << to_string(omega(alpha)) << '\n';
    }
    for (int k = 0; k < n; ++k)
        std::cout << "k=" << k << ": enumerated " << seen[k] << ", op_exact " << op_exact(n, k)
                  << '\n';
    const auto mo = mean_var_all(n);
    std::cout << "mean " << to_string(mo.mean) << ", variance " << to_string(mo.variance) << '\n';
}
