/*
   Copyright 2026 The polycount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "polycount/pattern.hpp"

#include <algorithm>
#include <sstream>

#include "polycount/errors.hpp"

namespace polycount {

const char* to_string(PatternMode mode) {
  return mode == PatternMode::distinct ? "distinct" : "multiplicity";
}

PatternMode parse_mode(const std::string& text) {
  if (text == "distinct") return PatternMode::distinct;
  if (text == "multiplicity") return PatternMode::multiplicity;
  throw InputError("unknown pattern mode '" + text + "' (expected distinct or multiplicity)");
}

std::vector<int> PatternSpec::degrees() const {
  std::vector<int> out;
  out.reserve(targets.size());
  for (const auto& [i, c] : targets) out.push_back(i);
  return out;
}

int PatternSpec::max_degree() const { return targets.empty() ? 0 : targets.rbegin()->first; }

long PatternSpec::weighted_size() const {
  long s = 0;
  for (const auto& [i, c] : targets) s += static_cast<long>(i) * c;
  return s;
}

PatternKey to_key(const PatternSpec& spec) { return {spec.targets.begin(), spec.targets.end()}; }

PatternSpec from_key(const PatternKey& key, PatternMode mode) {
  PatternSpec spec;
  spec.mode = mode;
  for (const auto& [i, c] : key) spec.targets.emplace(i, c);
  return spec;
}

namespace {
int parse_int(const std::string& s, const std::string& context) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw InputError("malformed integer '" + s + "' in " + context);
  }
  if (pos != s.size()) throw InputError("malformed integer '" + s + "' in " + context);
  return v;
}
}  // namespace

PatternSpec parse_pattern(const std::string& text, PatternMode mode) {
  PatternSpec spec;
  spec.mode = mode;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("pattern entry '" + item + "' is not of the form i:count");
    int degree = parse_int(item.substr(0, colon), "pattern");
    int count = parse_int(item.substr(colon + 1), "pattern");
    if (degree < 1) throw InputError("pattern degree must be positive: " + item);
    if (count < 0) throw InputError("pattern count must be nonnegative: " + item);
    if (!spec.targets.emplace(degree, count).second) {
      throw InputError("degree " + std::to_string(degree) + " listed twice in pattern");
    }
  }
  if (spec.targets.empty()) throw InputError("empty pattern");
  return spec;
}

std::string format_pattern(const PatternKey& key) {
  std::string out;
  for (const auto& [i, c] : key) {
    if (!out.empty()) out += ',';
    out += std::to_string(i) + ':' + std::to_string(c);
  }
  return out;
}

void check_pattern_degrees(const PatternSpec& spec, int m) {
  if (spec.targets.empty()) throw InputError("pattern constrains no degrees");
  for (const auto& [i, c] : spec.targets) {
    if (i < 1 || i > m) {
      throw InputError("pattern degree " + std::to_string(i) + " outside [1, " + std::to_string(m) + "]");
    }
    if (c < 0) throw InputError("negative pattern count");
  }
}

std::vector<PatternKey> patterns_within(const std::vector<int>& degrees, int m) {
  std::vector<PatternKey> out;
  PatternKey cur;
  auto rec = [&](auto&& self, std::size_t idx, int budget) -> void {
    if (idx == degrees.size()) {
      out.push_back(cur);
      return;
    }
    int i = degrees[idx];
    for (int c = 0; c * i <= budget; ++c) {
      cur.emplace_back(i, c);
      self(self, idx + 1, budget - c * i);
      cur.pop_back();
    }
  };
  rec(rec, 0, m);
  return out;
}

}  // namespace polycount
