#pragma once

// Star/book ratio certificates, commonality checks and the W_eps scan.

#include <iosfwd>
#include <optional>
#include <vector>

#include <json.hpp>

#include "ramsey/density.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/scalar.hpp"
#include "ramsey/stepgraphon.hpp"

namespace ramsey {

enum class Verdict { Holds, Violated };

const char* verdict_name(Verdict verdict);

/// m(T_k, W) / m(S_k, W) against 2^-(k+1).
template <class S>
struct RatioCertificate {
  unsigned k = 0;
  S m_book = 0;  // m(T_k, W)
  S m_star = 0;  // m(S_k, W)
  S ratio = 0;
  S threshold = 0;
  Verdict verdict = Verdict::Holds;
  Backend backend = ScalarTraits<S>::backend;
};

/// Exact comparison for Rational; double allows the ratio to sit 1e-12 below the
/// threshold so rounding never produces a violation.
template <class S>
RatioCertificate<S> ratio(const StepGraphon<S>& w, unsigned k);

/// Ratio certificate for 1 <= k <= 5, throwing InconsistentWithLemma if violated.
template <class S>
RatioCertificate<S> lemma_check(const StepGraphon<S>& w, unsigned k);

template <class S>
nlohmann::json certificate_to_json(const RatioCertificate<S>& cert);

template <class S>
struct CommonalityCheck {
  S mono = 0;
  S threshold = 0;  // 2^(1 - e(g))
  Verdict verdict = Verdict::Holds;
};

template <class S>
CommonalityCheck<S> commonality_check(const Graph& g, const StepGraphon<S>& w, const DensityOptions& opts = {});

/// log((1 + 2 eps) / (3 (1 - eps))), the growth rate of the ratio on W_eps as
/// k grows. Throws EpsOutOfDomain unless 0 < eps < 2/5.
double asymptotic_rate(double eps);

struct ScanRow {
  Rational eps;
  RatioCertificate<Rational> certificate;
};

struct ScanSummary {
  Rational eps;
  std::optional<unsigned> first_violation;  // smallest violating k, if any
};

struct ScanResult {
  std::vector<ScanRow> rows;  // ordered by (grid position, k)
  std::vector<ScanSummary> summary;
};

/// Exact certificates on W_eps for every eps in the grid (0 <= eps < 1) and
/// 1 <= k <= k_max.
ScanResult eps_scan(const std::vector<Rational>& eps_grid, unsigned k_max);

// CSV with header eps,k,m_Tk,m_Sk,ratio,threshold,verdict; rationals as p/q.
void write_scan_csv(std::ostream& out, const ScanResult& scan);
std::vector<ScanRow> read_scan_csv(std::istream& in);

}  // namespace ramsey
