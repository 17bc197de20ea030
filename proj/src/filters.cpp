#include <algorithm>

#include "oseq/combinatorics.hpp"
#include "oseq/complex.hpp"

namespace oseq {

namespace {

FilterLine hibi_monotone(const HVector& h) {
  FilterLine line{"hibi-monotone", true, "h_0 <= ... <= h_{s/2}"};
  const std::size_t s = h.empty() ? 0 : h.size() - 1;
  for (std::size_t i = 0; i + 1 <= s / 2; ++i) {
    if (h[i] > h[i + 1]) {
      line.pass = false;
      line.detail = "h_" + std::to_string(i) + "=" + std::to_string(h[i]) + " > h_" +
                    std::to_string(i + 1) + "=" + std::to_string(h[i + 1]);
      break;
    }
  }
  return line;
}

FilterLine hibi_symmetry(const HVector& h) {
  FilterLine line{"hibi-symmetry", true, "h_i <= h_{s-i}"};
  const std::size_t s = h.empty() ? 0 : h.size() - 1;
  for (std::size_t i = 0; i <= s / 2 && !h.empty(); ++i) {
    if (h[i] > h[s - i]) {
      line.pass = false;
      line.detail = "h_" + std::to_string(i) + "=" + std::to_string(h[i]) + " > h_" +
                    std::to_string(s - i) + "=" + std::to_string(h[s - i]);
      break;
    }
  }
  return line;
}

FilterLine brown_colbourn(const HVector& h, std::uint32_t b) {
  FilterLine line{"brown-colbourn b=" + std::to_string(b), true, ""};
  BigInt partial = 0;
  BigInt power = 1;  // (-b)^i
  std::string sums;
  for (std::size_t j = 0; j < h.size(); ++j) {
    partial += power * h[j];
    power *= -static_cast<std::int64_t>(b);
    const BigInt value = (j % 2) ? BigInt(-partial) : partial;
    if (!sums.empty()) sums += ',';
    sums += value.str();
    if (value < 0) line.pass = false;
  }
  line.detail = "partial sums " + sums;
  return line;
}

}  // namespace

bool FilterReport::all_pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const FilterLine& l) { return l.pass; });
}

bool satisfies_hibi(const HVector& h) { return hibi_monotone(h).pass && hibi_symmetry(h).pass; }

FilterReport filter_checks(const HVector& h, std::uint32_t b_max, std::optional<TypeHint> hint) {
  FilterReport report;
  report.lines.push_back(hibi_monotone(h));
  report.lines.push_back(hibi_symmetry(h));
  for (std::uint32_t b = 1; b <= b_max; ++b) report.lines.push_back(brown_colbourn(h, b));
  if (hint) {
    const std::int64_t bound =
        static_cast<std::int64_t>(hint->classes) - static_cast<std::int64_t>(hint->rank) + 1;
    const std::int64_t last = h.empty() ? 0 : h.back();
    report.lines.push_back({"type-bound", last >= bound,
                            "h_s=" + std::to_string(last) + " >= p-d+1=" + std::to_string(bound)});
  }
  return report;
}

}  // namespace oseq
