#include "ramsey/commonness.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ramsey/error.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

const char* verdict_name(Verdict verdict) { return verdict == Verdict::Holds ? "holds" : "violated"; }

namespace {

template <class S>
S power_of_two(int exponent) {
  const S two = 2;
  if (exponent >= 0) return ipow(two, static_cast<unsigned>(exponent));
  return S(S(1) / ipow(two, static_cast<unsigned>(-exponent)));
}

template <class S>
bool at_least(const S& value, const S& threshold) {
  if constexpr (ScalarTraits<S>::exact)
    return value >= threshold;
  else
    return value >= threshold - 1e-12;
}

}  // namespace

template <class S>
RatioCertificate<S> ratio(const StepGraphon<S>& w, unsigned k) {
  if (k == 0) throw std::invalid_argument("ratio: k must be >= 1");
  RatioCertificate<S> cert;
  cert.k = k;
  cert.m_book = book_mono_closed(w, k);
  cert.m_star = star_mono_closed(w, k);
  cert.ratio = cert.m_book / cert.m_star;
  cert.threshold = power_of_two<S>(-static_cast<int>(k) - 1);
  cert.verdict = at_least(cert.ratio, cert.threshold) ? Verdict::Holds : Verdict::Violated;
  return cert;
}

template <class S>
RatioCertificate<S> lemma_check(const StepGraphon<S>& w, unsigned k) {
  if (k < 1 || k > 5) throw std::invalid_argument("lemma_check: k must be in 1..5");
  RatioCertificate<S> cert = ratio(w, k);
  if (cert.verdict == Verdict::Violated) throw InconsistentWithLemma(certificate_to_json(cert).dump());
  return cert;
}

template <class S>
nlohmann::json certificate_to_json(const RatioCertificate<S>& cert) {
  auto scalar = [](const S& x) -> nlohmann::json {
    if constexpr (ScalarTraits<S>::exact)
      return render(x);
    else
      return x;
  };
  nlohmann::json j;
  j["k"] = cert.k;
  j["m_Tk"] = scalar(cert.m_book);
  j["m_Sk"] = scalar(cert.m_star);
  j["ratio"] = scalar(cert.ratio);
  j["threshold"] = scalar(cert.threshold);
  j["verdict"] = verdict_name(cert.verdict);
  j["backend"] = backend_name(cert.backend);
  if constexpr (ScalarTraits<S>::exact) {
    j["ratio_approx"] = to_double(cert.ratio);
    j["threshold_approx"] = to_double(cert.threshold);
  }
  return j;
}

template <class S>
CommonalityCheck<S> commonality_check(const Graph& g, const StepGraphon<S>& w, const DensityOptions& opts) {
  CommonalityCheck<S> out;
  out.mono = mono_density(g, w, opts).mono;
  out.threshold = power_of_two<S>(1 - static_cast<int>(g.edge_count()));
  out.verdict = at_least(out.mono, out.threshold) ? Verdict::Holds : Verdict::Violated;
  return out;
}

double asymptotic_rate(double eps) {
  if (!(eps > 0.0 && eps < 0.4)) throw EpsOutOfDomain("asymptotic rate needs 0 < eps < 2/5, got " + shortest_decimal(eps));
  return std::log((1.0 + 2.0 * eps) / (3.0 * (1.0 - eps)));
}

ScanResult eps_scan(const std::vector<Rational>& eps_grid, unsigned k_max) {
  if (k_max == 0) throw std::invalid_argument("eps_scan: k_max must be >= 1");
  for (const auto& eps : eps_grid)
    if (!(eps >= 0 && eps < 1)) throw EpsOutOfRange("eps = " + render(eps) + " outside [0,1)");
  std::vector<std::vector<ScanRow>> cells(eps_grid.size());
  parallel_for(eps_grid.size(), [&](std::size_t i) {
    const StepGraphon<Rational> w = w_epsilon(eps_grid[i]);
    for (unsigned k = 1; k <= k_max; ++k) cells[i].push_back({eps_grid[i], ratio(w, k)});
  });
  ScanResult result;
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    ScanSummary summary{eps_grid[i], std::nullopt};
    for (auto& row : cells[i]) {
      if (!summary.first_violation && row.certificate.verdict == Verdict::Violated)
        summary.first_violation = row.certificate.k;
      result.rows.push_back(std::move(row));
    }
    result.summary.push_back(summary);
  }
  return result;
}

void write_scan_csv(std::ostream& out, const ScanResult& scan) {
  out << "eps,k,m_Tk,m_Sk,ratio,threshold,verdict\n";
  for (const auto& row : scan.rows) {
    const auto& c = row.certificate;
    out << render(row.eps) << ',' << c.k << ',' << render(c.m_book) << ',' << render(c.m_star) << ','
        << render(c.ratio) << ',' << render(c.threshold) << ',' << verdict_name(c.verdict) << '\n';
  }
}

std::vector<ScanRow> read_scan_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line != "eps,k,m_Tk,m_Sk,ratio,threshold,verdict")
    throw ParseError(line_no, "unexpected scan CSV header");
  std::vector<ScanRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream split(line);
    std::string field;
    while (std::getline(split, field, ',')) fields.push_back(field);
    if (fields.size() != 7) throw ParseError(line_no, "expected 7 fields");
    try {
      ScanRow row;
      row.eps = parse_rational(fields[0]);
      row.certificate.k = static_cast<unsigned>(std::stoul(fields[1]));
      row.certificate.m_book = parse_rational(fields[2]);
      row.certificate.m_star = parse_rational(fields[3]);
      row.certificate.ratio = parse_rational(fields[4]);
      row.certificate.threshold = parse_rational(fields[5]);
      if (fields[6] == "holds")
        row.certificate.verdict = Verdict::Holds;
      else if (fields[6] == "violated")
        row.certificate.verdict = Verdict::Violated;
      else
        throw std::invalid_argument("bad verdict '" + fields[6] + "'");
      rows.push_back(std::move(row));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return rows;
}

#define RAMSEY_INSTANTIATE(S)                                                                   \
  template RatioCertificate<S> ratio(const StepGraphon<S>&, unsigned);                          \
  template RatioCertificate<S> lemma_check(const StepGraphon<S>&, unsigned);                    \
  template nlohmann::json certificate_to_json(const RatioCertificate<S>&);                      \
  template CommonalityCheck<S> commonality_check(const Graph&, const StepGraphon<S>&, const DensityOptions&);

RAMSEY_INSTANTIATE(double)
RAMSEY_INSTANTIATE(Rational)

#undef RAMSEY_INSTANTIATE

}  // namespace ramsey
