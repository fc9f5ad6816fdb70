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

#include "polycount/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "polycount/closed_form.hpp"
#include "polycount/errors.hpp"
#include "polycount/exact.hpp"
#include "polycount/field.hpp"
#include "polycount/group_ring.hpp"
#include "polycount/oracle.hpp"
#include "polycount/pattern.hpp"

namespace polycount {

namespace {

using nlohmann::ordered_json;

// Raised when two methods that must agree do not.
struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  int w = 0;
  int m = 1;
  std::string coeffs;
  std::string pattern;
  std::string mode = "distinct";
  int n = 1;
  std::string method;
  std::string degrees;
  int w_max = 1;
  int m_max = 4;
  std::string v;
  int k = 1;
  int r = 0;
  std::string format = "text";
};

// What a subcommand hands back: the headline count (text output) and the JSON result body.
struct Outcome {
  std::string text;
  ordered_json result;
  std::string method;
  int exit_code = kExitOk;
};

FieldCtx field_of(const Options& o) {
  PrimePower::make(o.p, o.e);
  return FieldCtx::build(o.p, o.e);
}

std::vector<FqElem> prefix_of(const FieldCtx& ctx, const Options& o) {
  if (o.w < 0) throw InputError("w must be nonnegative");
  auto coeffs = parse_elem_list(ctx, o.coeffs);
  if (coeffs.size() != static_cast<std::size_t>(o.w)) {
    throw InputError("--coeffs must list exactly w = " + std::to_string(o.w) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  }
  return coeffs;
}

void check_method(const std::string& method, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (method == a) return;
  }
  throw InputError("unknown method '" + method + "'");
}

// Runs formula and/or oracle according to `method` and reports the agreed count.
Outcome formula_or_oracle(const std::string& method, const std::function<BigInt()>& formula,
                          const std::function<BigInt()>& oracle) {
  check_method(method, {"formula", "oracle", "both"});
  Outcome res;
  res.method = method;
  std::optional<BigInt> f, g;
  if (method != "oracle") f = formula();
  if (method != "formula") g = oracle();
  if (f) res.result["formula"] = to_decimal(*f);
  if (g) res.result["oracle"] = to_decimal(*g);
  const BigInt& count = f ? *f : *g;
  res.result["count"] = to_decimal(count);
  if (f && g) {
    res.result["agree"] = *f == *g;
    if (*f != *g) {
      res.exit_code = kExitMismatch;
      res.text = "MISMATCH formula=" + to_decimal(*f) + " oracle=" + to_decimal(*g);
      return res;
    }
  }
  res.text = to_decimal(count);
  return res;
}

Outcome cmd_irreducible(const Options& o) {
  const FieldCtx ctx = field_of(o);
  const auto coeffs = prefix_of(ctx, o);
  if (o.m < 1) throw InputError("m must be at least 1");
  auto formula = [&] {
    if (o.w == 0) return count_irreducible_total(ctx.prime_power(), o.m);
    if (o.w == 1) return count_irreducible_trace(ctx.prime_power(), o.m, coeffs[0].is_zero());
    return count_irreducible_general(ctx, static_cast<std::size_t>(o.w), o.m, coeffs);
  };
  auto oracle = [&] {
    return oracle_count(OracleQuery{ctx, static_cast<std::size_t>(o.w), o.m, coeffs, IrreducibleConstraint{}});
  };
  return formula_or_oracle(o.method.empty() ? "formula" : o.method, formula, oracle);
}

Outcome cmd_count(const Options& o) {
  const FieldCtx ctx = field_of(o);
  const auto coeffs = prefix_of(ctx, o);
  const PatternSpec spec = parse_pattern(o.pattern, parse_mode(o.mode));
  check_pattern_degrees(spec, o.m);
  auto formula = [&] {
    if (o.w == 0) return count_pattern_w0(ctx.prime_power(), o.m, spec);
    if (o.w == 1) return count_pattern_w1(ctx.prime_power(), o.m, coeffs[0].is_zero(), spec);
    return count_pattern_general(ctx, static_cast<std::size_t>(o.w), o.m, coeffs, spec);
  };
  auto oracle = [&] { return oracle_count(OracleQuery{ctx, static_cast<std::size_t>(o.w), o.m, coeffs, spec}); };
  return formula_or_oracle(o.method.empty() ? "formula" : o.method, formula, oracle);
}

Outcome cmd_smooth(const Options& o) {
  const FieldCtx ctx = field_of(o);
  const auto coeffs = prefix_of(ctx, o);
  if (o.w > 1) throw InputError("smooth supports w <= 1");
  if (o.n < 1 || o.n > o.m) throw InputError("smoothness bound must satisfy 1 <= n <= m");
  const std::string method = o.method.empty() ? "both" : o.method;
  check_method(method, {"complement", "partition", "both", "oracle"});
  const bool alpha_zero = o.w == 1 && coeffs[0].is_zero();
  auto run = [&](SmoothMethod sm) {
    return o.w == 0 ? smooth_w0(ctx.prime_power(), o.m, o.n, sm) : smooth_w1(ctx.prime_power(), o.m, o.n, alpha_zero, sm);
  };
  Outcome res;
  res.method = method;
  if (method == "oracle") {
    BigInt c = oracle_count(OracleQuery{ctx, static_cast<std::size_t>(o.w), o.m, coeffs, SmoothConstraint{o.n}});
    res.result["oracle"] = to_decimal(c);
    res.result["count"] = to_decimal(c);
    res.text = to_decimal(c);
    return res;
  }
  std::optional<BigInt> comp, part;
  if (method != "partition") comp = run(SmoothMethod::complement);
  if (method != "complement") part = run(SmoothMethod::partition);
  if (comp) res.result["complement"] = to_decimal(*comp);
  if (part) res.result["partition"] = to_decimal(*part);
  const BigInt& count = comp ? *comp : *part;
  res.result["count"] = to_decimal(count);
  if (comp && part) {
    res.result["agree"] = *comp == *part;
    if (*comp != *part) {
      res.exit_code = kExitMismatch;
      res.text = "MISMATCH complement=" + to_decimal(*comp) + " partition=" + to_decimal(*part);
      return res;
    }
  }
  res.text = to_decimal(count);
  return res;
}

Outcome cmd_rs_distance(const Options& o) {
  const FieldCtx ctx = field_of(o);
  const FqPoly v = parse_poly(ctx, o.v);
  if (o.k < 1) throw InputError("k must be at least 1");
  if (v.degree() < static_cast<std::size_t>(o.k)) throw InputError("received polynomial has degree below k");
  const int w = static_cast<int>(v.degree()) - o.k;
  auto formula = [&] { return rs_distance_count(ctx, o.k, w, v, o.r); };
  auto oracle = [&] {
    if (o.r < 0 || static_cast<std::uint32_t>(o.r) > ctx.q()) throw InputError("root count r must lie in [0, q]");
    PatternSpec spec;
    spec.targets.emplace(1, o.r);
    const GroupElem cls = reduce(v, static_cast<std::size_t>(w));
    return oracle_count(OracleQuery{ctx, static_cast<std::size_t>(w), o.k + w, cls.coeffs, spec});
  };
  Outcome res = formula_or_oracle(o.method.empty() ? "formula" : o.method, formula, oracle);
  res.result["w"] = w;
  return res;
}

std::vector<int> parse_degree_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int d = std::stoi(item, &used);
      if (used != item.size() || d < 1) throw InputError("");
      out.push_back(d);
    } catch (const std::exception&) {
      throw InputError("bad degree '" + item + "' in --T");
    }
  }
  std::sort(out.begin(), out.end());
  if (out.empty() || std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw InputError("--T must list distinct positive degrees");
  }
  return out;
}

Outcome cmd_verify(const Options& o) {
  const FieldCtx ctx = field_of(o);
  const auto degrees = parse_degree_list(o.degrees);
  const PatternMode mode = parse_mode(o.mode);
  if (o.w_max < 0 || o.m_max < 1) throw InputError("need w-max >= 0 and m-max >= 1");

  Outcome res;
  res.method = "formula-vs-oracle";
  ordered_json cells = ordered_json::array();
  std::uint64_t count = 0;
  ordered_json first_mismatch;
  for (int w = 0; w <= o.w_max; ++w) {
    const GroupPtr group = make_group(ctx, static_cast<std::size_t>(w));
    for (int m = 1; m <= o.m_max; ++m) {
      std::vector<int> t;
      for (int d : degrees) {
        if (d <= m) t.push_back(d);
      }
      if (t.empty()) continue;
      const TallyTable table = oracle_table(ctx, static_cast<std::size_t>(w), m, t, mode);
      std::optional<PatternCountTable> general;
      if (w >= 2) general = pattern_counts_general(ctx, static_cast<std::size_t>(w), m, t, mode);
      for (std::size_t c = 0; c < group->order(); ++c) {
        const GroupElem cls = group->element(c);
        for (const auto& key : patterns_within(t, m)) {
          const PatternSpec spec = from_key(key, mode);
          BigInt formula;
          if (w == 0) {
            formula = count_pattern_w0(ctx.prime_power(), m, spec);
          } else if (w == 1) {
            formula = count_pattern_w1(ctx.prime_power(), m, cls.coeffs[0].is_zero(), spec);
          } else {
            formula = general->at({cls, key});
          }
          const BigInt oracle = lookup(table, cls, key);
          ++count;
          ordered_json cell = {{"w", w},
                               {"m", m},
                               {"coeffs", format_elem_list(ctx, cls.coeffs)},
                               {"pattern", format_pattern(key)},
                               {"formula", to_decimal(formula)},
                               {"oracle", to_decimal(oracle)}};
          if (formula != oracle && first_mismatch.is_null()) first_mismatch = cell;
          cells.push_back(std::move(cell));
        }
      }
    }
  }
  const bool pass = first_mismatch.is_null();
  res.result["verdict"] = pass ? "PASS" : "FAIL";
  res.result["cells"] = count;
  if (!pass) res.result["first_mismatch"] = first_mismatch;
  res.result["cell_results"] = std::move(cells);
  if (pass) {
    res.text = "PASS (" + std::to_string(count) + " cells)";
  } else {
    res.exit_code = kExitMismatch;
    res.text = "FAIL at w=" + first_mismatch["w"].dump() + " m=" + first_mismatch["m"].dump() + " coeffs=" +
               first_mismatch["coeffs"].get<std::string>() + " pattern=" +
               first_mismatch["pattern"].get<std::string>() + ": formula " +
               first_mismatch["formula"].get<std::string>() + " != oracle " +
               first_mismatch["oracle"].get<std::string>();
  }
  return res;
}

ordered_json request_echo(const std::string& command, const Options& o) {
  ordered_json r = {{"p", o.p}, {"e", o.e}};
  if (command == "irreducible" || command == "count" || command == "smooth") {
    r["m"] = o.m;
    r["w"] = o.w;
    r["coeffs"] = o.coeffs;
  }
  if (command == "count") {
    r["pattern"] = o.pattern;
    r["mode"] = o.mode;
  }
  if (command == "smooth") r["n"] = o.n;
  if (command == "rs-distance") {
    r["k"] = o.k;
    r["v"] = o.v;
    r["r"] = o.r;
  }
  if (command == "verify") {
    r["w_max"] = o.w_max;
    r["m_max"] = o.m_max;
    r["T"] = o.degrees;
    r["mode"] = o.mode;
  }
  if (!o.method.empty()) r["method"] = o.method;
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact counts of monic polynomials over finite fields with prescribed leading coefficients "
               "and factorization patterns."};
  app.require_subcommand(1);

  auto field_opts = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "field characteristic")->required();
    sub->add_option("--e", o.e, "extension degree (q = p^e)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto prefix_opts = [&](CLI::App* sub) {
    sub->add_option("--w", o.w, "number of prescribed leading coefficients");
    sub->add_option("--coeffs", o.coeffs, "f_1,...,f_w; an element of F_{p^e} is c_0:c_1:...");
  };

  CLI::App* irr = app.add_subcommand("irreducible", "count monic irreducibles of degree m");
  field_opts(irr);
  prefix_opts(irr);
  irr->add_option("--m", o.m, "degree")->required();
  irr->add_option("--method", o.method, "formula, oracle or both");

  CLI::App* cnt = app.add_subcommand("count", "count degree-m polynomials with a factorization pattern");
  field_opts(cnt);
  prefix_opts(cnt);
  cnt->add_option("--m", o.m, "degree")->required();
  cnt->add_option("--pattern", o.pattern, "i:count,i:count")->required();
  cnt->add_option("--mode", o.mode, "distinct or multiplicity");
  cnt->add_option("--method", o.method, "formula, oracle or both");

  CLI::App* smo = app.add_subcommand("smooth", "count n-smooth polynomials of degree m");
  field_opts(smo);
  prefix_opts(smo);
  smo->add_option("--m", o.m, "degree")->required();
  smo->add_option("--n", o.n, "smoothness bound")->required();
  smo->add_option("--method", o.method, "complement, partition, both or oracle");

  CLI::App* rsd = app.add_subcommand("rs-distance", "N(k+w, I_1^r, <v>_w) for a received word polynomial v");
  field_opts(rsd);
  rsd->add_option("--k", o.k, "code dimension")->required();
  rsd->add_option("--v", o.v, "monic polynomial, coefficients from the top")->required();
  rsd->add_option("--r", o.r, "number of distinct roots")->required();
  rsd->add_option("--method", o.method, "formula, oracle or both");

  CLI::App* ver = app.add_subcommand("verify", "compare formulas against exhaustive enumeration");
  field_opts(ver);
  ver->add_option("--w-max", o.w_max, "largest w")->required();
  ver->add_option("--m-max", o.m_max, "largest degree")->required();
  ver->add_option("--T", o.degrees, "constrained degrees, comma-separated")->required();
  ver->add_option("--mode", o.mode, "distinct or multiplicity");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  Outcome res;
  try {
    if (sub == irr) res = cmd_irreducible(o);
    else if (sub == cnt) res = cmd_count(o);
    else if (sub == smo) res = cmd_smooth(o);
    else if (sub == rsd) res = cmd_rs_distance(o);
    else res = cmd_verify(o);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.format == "json") {
    ordered_json doc;
    doc["command"] = command;
    doc["request"] = request_echo(command, o);
    ordered_json argv = ordered_json::array();
    for (const auto& a : args) argv.push_back(a);
    doc["argv"] = std::move(argv);
    doc["method"] = res.method;
    doc["result"] = std::move(res.result);
    doc["elapsed_ms"] = elapsed_ms;
    out << doc.dump(2) << '\n';
  } else if (res.exit_code == kExitOk) {
    out << res.text << '\n';
  }
  if (res.exit_code != kExitOk) err << res.text << '\n';
  return res.exit_code;
}

}  // namespace polycount
