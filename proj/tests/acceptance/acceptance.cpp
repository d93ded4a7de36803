// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "flawset/flawset.hpp"

using namespace flawset;

namespace {

// Time limits in seconds.
constexpr double kTable1Limit = 1.0;
constexpr double kFormulasLimit = 30.0;
constexpr double kBijectionsLimit = 60.0;
constexpr double kVerifyAllLimit = 180.0;

int failures = 0;

void report(int id, const std::string& what, bool ok, double secs, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  C" << id << "  " << what << "  (" << secs << " s"
              << (detail.empty() ? "" : ", " + detail) << ")\n";
    if (!ok)
        ++failures;
}

template <class F>
void criterion(int id, const std::string& what, double limit, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs >= limit) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    report(id, what, ok, secs, detail);
}

std::string summary(const VerificationReport& r) {
    return std::to_string(r.entries.size()) + " checks, " + std::to_string(r.failures()) +
           " failures, " + std::to_string(r.discrepancies.size()) + " discrepancies";
}

bool has(const VerificationReport& r, const std::string& check, const Params& p,
         const std::string& value) {
    for (const auto& e : r.entries)
        if (e.check == check && e.params == p)
            return e.pass && e.actual == value;
    return false;
}

} // namespace

int main() {
    criterion(1, "table1 n<=6 equals published cells by formula and oracle", kTable1Limit,
              [](std::string& d) {
                  const auto t = build_table1(6);
                  const auto& ref = reference_table();
                  if (t.rows.size() != ref.size())
                      return false;
                  std::size_t cells = 0;
                  for (std::size_t i = 0; i < ref.size(); ++i) {
                      const auto& r = t.rows[i];
                      if (!r.agrees() || r.formula.size() != ref[i].by_leading.size() ||
                          r.formula_total != ref[i].total)
                          return false;
                      for (std::size_t m = 0; m < r.formula.size(); ++m, ++cells)
                          if (r.formula[m] != ref[i].by_leading[m])
                              return false;
                      ++cells;
                  }
                  d = std::to_string(cells) + " cells";
                  return t.agrees() && op_exact_lead(6, 2, 3) == 48 &&
                         op_exact_lead(5, 1, 2) == 28 && op_exact(6, 3) == 44;
              });

    criterion(2, "closed forms equal exhaustive counts for n<=9", kFormulasLimit,
              [](std::string& d) {
                  VerifyOptions o;
                  o.nmax = 9;
                  const auto r = verify_formulas(o);
                  d = summary(r);
                  return r.pass() && r.entries.size() > 10000;
              });

    criterion(3, "zeta and omega certified on all ordered sets for n<=8", kBijectionsLimit,
              [](std::string& d) {
                  VerifyOptions o;
                  o.nmax = 8;
                  const auto r = verify_bijections(o);
                  d = summary(r);
                  bool sizes = op_ge(6, 2) == 165;
                  for (long n = 1; n <= 8; ++n)
                      for (long k = 0; k < n; ++k) {
                          sizes = sizes && op_ge(n, k) == binomial(2 * n - 1, n - 1 - k);
                          // |D_{n,k}| = (k+1)/n C(2n, n-k-1)
                          sizes = sizes && BigInt(n) * flaw_path_count(n, k) ==
                                               BigInt(k + 1) * binomial(2 * n, n - k - 1);
                      }
                  return r.pass() && sizes;
              });

    criterion(4, "recurrences hold for n<=20 with the worked instances", 0, [](std::string& d) {
        VerifyOptions o;
        o.recurrence_nmax = 20;
        const auto r = verify_recurrences(o);
        d = summary(r);
        const auto e1 = recurrence::leading_diagonal(5, 1);
        const bool worked = e1.pass() && e1.lhs == 48 && op_exact_lead(5, 1, 2) == 28 &&
                            op_exact_lead(5, 2, 2) == 6 && op_exact_lead(5, 2, 3) == 14 &&
                            recurrence::flaw_convolution(6, 2).pass() &&
                            recurrence::leading_convolution(6, 2, 1).pass() &&
                            recurrence::leading_convolution(6, 2, 2).pass();
        return r.pass() && worked;
    });

    criterion(5, "series sections n<=24, psi n<=30, Catalan residual order 24", 0,
              [](std::string& d) {
                  VerifyOptions o;
                  o.series_order = 24;
                  o.section_kmax = 6;
                  o.identity_nmax = 30;
                  const auto r = verify_series(o);
                  d = summary(r);
                  return r.pass() && catalan_residual(24).is_zero();
              });

    criterion(6, "moments match oracle for n<=8, variances nonnegative to n=50", 0,
              [](std::string& d) {
                  VerifyOptions o;
                  o.nmax = 8;
                  o.stats_closed_nmax = 50;
                  o.stats_lead_mmax = 4;
                  o.stats_series_nmax = 12;
                  const auto r = verify_stats(o);
                  d = summary(r);
                  const auto two = mean_var_all(2);
                  return r.pass() && two.mean == Rational(1, 3) &&
                         two.variance == Rational(2, 9) &&
                         mean_var_diagonal(6).mean == Rational(25, 27) &&
                         has(r, "mean_var_all.mean", {{"n", 2}}, "1/3") &&
                         has(r, "mean_var_diagonal.mean", {{"n", 6}}, "25/27");
              });

    criterion(7, "flawset verify --suite all exits 0", kVerifyAllLimit, [](std::string& d) {
        const std::string cmd = std::string(FLAWSET_CLI) + " verify --suite all > /dev/null";
        const int status = std::system(cmd.c_str());
        const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        d = "exit " + std::to_string(code);
        return code == 0;
    });

    return failures == 0 ? 0 : 1;
}
