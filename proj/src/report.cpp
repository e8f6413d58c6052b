// Copyright 2026 The linguse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "linguse/report.hpp"

#include <cmath>
#include <cstdio>

namespace linguse {

AdjectiveUsabilityReport retranslate_vectors(const std::vector<ScopedUcd>& vectors) {
  AdjectiveUsabilityReport report;
  for (const auto& v : vectors) {
    for (int i = 0; i < static_cast<int>(v.ucd.size()); ++i) {
      report.entries.push_back({v.scope, i, v.ucd[i], retranslate_from_s9(v.ucd[i])});
      if (v.scope == "global") report.usability.push_back(report.entries.back().value.label());
    }
  }
  return report;
}

std::optional<NpsSummary> nps_summary(const std::vector<NpsResponse>& responses) {
  if (responses.empty()) return std::nullopt;
  NpsSummary s;
  for (const auto& r : responses) {
    switch (nps_segment(r.ltr)) {
      case NpsSegment::Promoter: ++s.promoters; break;
      case NpsSegment::Passive: ++s.passives; break;
      case NpsSegment::Detractor: ++s.detractors; break;
    }
  }
  s.nps = 100.0 * (s.promoters - s.detractors) / s.total();
  return s;
}

std::string format_fixed(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // Round half away from zero on the decimal representation, then kill -0.
  double r = std::round(value * scale) / scale;
  if (r == 0.0) r = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, r);
  return buf;
}

std::string format_adjective(const UnbalancedSusValue& value, int decimals) {
  std::string out(to_string(value.label()));
  const std::string mag = format_fixed(std::abs(value.alpha()), decimals);
  if (format_fixed(0.0, decimals) == mag) return out;
  return out + (value.alpha() < 0 ? " - " : " + ") + mag;
}

std::string format_tuple(const TwoTuple& value, int decimals) {
  return "(s" + std::to_string(value.index()) + ", " + format_fixed(value.alpha(), decimals) + ")";
}

}  // namespace linguse
