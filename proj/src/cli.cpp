#include "burniat/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "burniat/checked.hpp"
#include "burniat/cohomology.hpp"
#include "burniat/effectivity.hpp"
#include "burniat/errors.hpp"
#include "burniat/parallel.hpp"
#include "burniat/parse.hpp"
#include "burniat/picard.hpp"
#include "burniat/ulrich.hpp"
#include "criteria.hpp"
#include "tables.hpp"

namespace burniat::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Options {
  bool json = false;
  bool trace = false;
  std::string batch;
};

enum class ExprCommand { Show, H, Effective, Reduce };

// Raised for outcomes that map to an exit code without a library exception.
struct Outcome {
  int code;
  std::string message;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(14) << key << value << '\n';
}

// ---------------------------------------------------------------------------
// Single divisors

struct Analysis {
  std::string input;
  DivisorClass x;
  CohResult h;
  std::optional<EffWitness> witness;
  std::optional<ReduceResult> reduced;
};

Analysis analyze(ExprCommand cmd, const std::string& input) {
  Analysis a;
  a.input = input;
  a.x = parse_divisor(input);
  a.h = h_all(a.x);
  a.witness = is_effective(a.x);
  if (cmd == ExprCommand::Reduce) a.reduced = reduce(a.x);
  return a;
}

Json coords_json(const DivisorClass& x) {
  Json slots = Json::array();
  for (const Slot& s : x.slots()) slots.push_back(Json::array({s.deg, s.tor.str()}));
  return Json{{"d", x.d()}, {"ell", x.ell()}, {"slots", slots}};
}

Json witness_json(const std::optional<EffWitness>& w) {
  if (!w) return nullptr;
  Json terms = Json::array();
  for (const auto& [label, k] : w->terms) terms.push_back(Json::array({label.name(), k}));
  return Json{{"combo", w->str()}, {"terms", terms}, {"candidate", w->candidate}};
}

Json to_json(ExprCommand cmd, const Analysis& a, bool with_trace) {
  const NumClass n = a.x.num_class();
  Json trace = Json::array();
  if (with_trace) {
    for (const BranchStep& s : a.h.trace) {
      trace.push_back(Json{{"tag", to_string(s.tag)}, {"value", s.value}, {"text", s.str()}});
    }
  }
  Json out{{"input", a.input},
           {"coords", coords_json(a.x)},
           {"num_class", Json::array({n.d, n.a, n.b, n.c})},
           {"chi", chi(a.x)},
           {"h", Json::array({a.h.h0, a.h.h1, a.h.h2})},
           {"effective", a.witness.has_value()},
           {"witness", witness_json(a.witness)},
           {"trace", trace}};
  if (cmd == ExprCommand::Show) {
    out["table"] = format_table(a.x);
    out["self_intersection"] = intersect(a.x, a.x);
    out["nef"] = is_nef(a.x);
    out["ample"] = is_ample(a.x);
  }
  if (a.reduced) {
    Json trims = Json::array();
    for (const TrimStep& t : a.reduced->steps) {
      trims.push_back(Json{{"label", t.label.name()}, {"reason", to_string(t.reason)}});
    }
    out["trims"] = trims;
    out["not_effective"] = a.reduced->not_effective;
    out["reduced"] = a.reduced->not_effective ? Json(nullptr) : Json(format(a.reduced->reduced));
  }
  return out;
}

void print_text(ExprCommand cmd, const Analysis& a, bool with_trace, std::ostream& out) {
  const NumClass n = a.x.num_class();
  const std::string h = std::to_string(a.h.h0) + " " + std::to_string(a.h.h1) + " " + std::to_string(a.h.h2);
  const std::string witness = a.witness ? a.witness->str() : "-";
  row(out, "input", a.input);
  row(out, "class", n.str() + "  l=" + std::to_string(a.x.ell()) + "  chi=" + std::to_string(chi(a.x)));
  switch (cmd) {
    case ExprCommand::Show:
      row(out, "coords", format(a.x));
      row(out, "table", format_table(a.x));
      row(out, "D^2", std::to_string(intersect(a.x, a.x)));
      row(out, "nef", yes_no(is_nef(a.x)));
      row(out, "ample", yes_no(is_ample(a.x)));
      row(out, "effective", yes_no(a.witness.has_value()));
      row(out, "witness", witness);
      row(out, "h", h);
      break;
    case ExprCommand::H:
      row(out, "h", h);
      break;
    case ExprCommand::Effective:
      row(out, "effective", yes_no(a.witness.has_value()));
      row(out, "witness", witness);
      break;
    case ExprCommand::Reduce:
      for (const TrimStep& t : a.reduced->steps) {
        row(out, "trim", t.label.name() + " (" + to_string(t.reason) + ")");
      }
      row(out, "reduced", a.reduced->not_effective ? "not effective" : format(a.reduced->reduced));
      break;
  }
  if (with_trace) {
    for (const BranchStep& s : a.h.trace) row(out, "trace", s.str());
  }
}

// ---------------------------------------------------------------------------
// e-numbers

Json enumber_json(const NumClass& n) {
  n.ell();
  const int brute = e_number(n);
  const CriterionAnswer pos = e_positive(n), full = e_full(n);
  const std::string summary = full.value ? "64" : pos.value ? ">=1" : "0";
  if ((brute == 64) != full.value || (brute >= 1) != pos.value) {
    throw InternalInconsistency("e-number of " + n.str() + " is " + std::to_string(brute) +
                                " but the criteria give " + summary);
  }
  return Json{{"num_class", Json::array({n.d, n.a, n.b, n.c})},
              {"brute", brute},
              {"criterion",
               Json{{"e_positive", pos.value},
                    {"e_full", full.value},
                    {"closed_form", pos.by_criterion && full.by_criterion},
                    {"summary", summary}}}};
}

void print_enumber(const Json& j, std::ostream& out) {
  const auto& c = j["num_class"];
  row(out, "class", NumClass{c[0], c[1], c[2], c[3]}.str());
  row(out, "brute", std::to_string(j["brute"].get<int>()));
  const auto& crit = j["criterion"];
  row(out, "criterion",
      crit["summary"].get<std::string>() + (crit["closed_form"].get<bool>() ? "" : "  (outside closed form)"));
}

NumClass parse_num_line(const std::string& line) {
  std::istringstream in(line);
  NumClass n;
  if (!(in >> n.d >> n.a >> n.b >> n.c)) throw DomainError("expected four integers \"d a b c\"");
  std::string extra;
  if (in >> extra) throw DomainError("unexpected '" + extra + "' after \"d a b c\"");
  return n;
}

// ---------------------------------------------------------------------------
// Batch mode

Json error_json(const std::string& input, const char* kind, const std::string& message) {
  return Json{{"input", input}, {"error", Json{{"kind", kind}, {"message", message}}}};
}

int run_batch(const std::string& path, const std::function<Json(const std::string&)>& handle,
              std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read batch file " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  std::vector<std::string> results(lines.size());
  std::vector<int> codes(lines.size(), kExitOk);
  parallel_for(lines.size(), [&](std::size_t i) {
    Json j;
    try {
      j = handle(lines[i]);
    } catch (const DomainError& e) {
      j = error_json(lines[i], "domain", e.what());
      codes[i] = kExitDomain;
    } catch (const std::exception& e) {
      j = error_json(lines[i], "internal", e.what());
      codes[i] = kExitInternal;
    }
    results[i] = j.dump();
  });
  for (const std::string& r : results) out << r << '\n';
  return codes.empty() ? kExitOk : *std::max_element(codes.begin(), codes.end());
}

// ---------------------------------------------------------------------------
// Tables, searches, self-test, benchmark

int cmd_table(const std::string& name, const Options& opt, std::ostream& out) {
  const tables::Diff diff = *tables::by_name(name);
  if (opt.json) {
    Json rows = Json::array();
    for (const tables::Line& l : diff.lines) {
      rows.push_back(Json{{"label", l.label}, {"expected", l.expected}, {"actual", l.actual}, {"match", l.match}});
    }
    out << Json{{"table", diff.name}, {"rows", rows}, {"summary", diff.summary}, {"match", diff.ok()}}.dump() << '\n';
  } else {
    std::size_t width = 0;
    for (const tables::Line& l : diff.lines) width = std::max(width, l.label.size());
    for (const tables::Line& l : diff.lines) {
      out << (l.match ? "ok    " : "DIFF  ") << std::left << std::setw(static_cast<int>(width) + 2) << l.label
          << l.actual;
      if (!l.match) out << "   expected " << l.expected;
      out << '\n';
    }
    out << diff.name << ": " << diff.summary << ", " << (diff.ok() ? "matches" : "DIFFERS") << '\n';
  }
  return diff.ok() ? kExitOk : kExitInternal;
}

int cmd_ulrich(const std::string& polarization, std::optional<std::int64_t> lo, std::optional<std::int64_t> hi,
               const Options& opt, std::ostream& out) {
  const DivisorClass h = parse_divisor(polarization);
  const auto window = default_search_window(h);
  const SearchReport r = ulrich_line_search(h, lo.value_or(window.first), hi.value_or(window.second));
  if (opt.json) {
    Json hits = Json::array();
    for (const DivisorClass& x : r.hits) hits.push_back(format(x));
    out << Json{{"polarization", polarization},
                {"coords", coords_json(h)},
                {"window", Json::array({r.d_lo, r.d_hi})},
                {"classes_scanned", r.classes_scanned},
                {"divisors_scanned", r.divisors_scanned},
                {"hits", hits},
                {"elapsed_seconds", r.elapsed_seconds},
                {"window_note", r.window_note}}
               .dump()
        << '\n';
    return kExitOk;
  }
  row(out, "polarization", polarization + "  " + format_truncated(h));
  row(out, "window", "[" + std::to_string(r.d_lo) + ", " + std::to_string(r.d_hi) + "]");
  row(out, "scanned", std::to_string(r.classes_scanned) + " classes, " + std::to_string(r.divisors_scanned) +
                          " divisors");
  row(out, "hits", std::to_string(r.hits.size()));
  for (const DivisorClass& x : r.hits) row(out, "", format(x));
  std::ostringstream t;
  t << std::fixed << std::setprecision(2) << r.elapsed_seconds << " s";
  row(out, "elapsed", t.str());
  if (!r.window_note.empty()) row(out, "note", r.window_note);
  return kExitOk;
}

int cmd_rank2(const std::string& d1_text, const Options& opt, std::ostream& out) {
  const bool reference = d1_text.empty();
  const DivisorClass d1 = reference ? reference_d1() : parse_divisor(d1_text);
  const Rank2Report r = verify_rank2(d1);
  if (opt.json) {
    Json checks = Json::array();
    for (const Check& c : r.checks) {
      checks.push_back(Json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    }
    out << Json{{"d1", format(r.d1)}, {"d2", format(r.d2)}, {"checks", checks}, {"pass", r.pass()}}.dump() << '\n';
  } else {
    row(out, "D1", format(r.d1));
    row(out, "D2", format(r.d2));
    for (const Check& c : r.checks) {
      out << (c.pass ? "PASS  " : "FAIL  ") << c.name << ": " << c.actual;
      if (!c.pass) out << " (expected " << c.expected << ")";
      out << '\n';
    }
  }
  if (r.pass()) return kExitOk;
  if (reference) throw InternalInconsistency("the reference rank-2 data fails its checks");
  throw Outcome{kExitDomain, "D1 = " + format(d1) + " does not satisfy the rank-2 conditions"};
}

int cmd_selftest(const std::vector<int>& only, const Options& opt, std::ostream& out) {
  std::vector<acceptance::CriterionResult> results;
  const auto report = [&](const acceptance::CriterionResult& r) {
    if (!opt.json) out << r.line() << std::endl;
  };
  if (only.empty()) {
    results = acceptance::run_all(report);
  } else {
    for (const int id : only) {
      results.push_back(acceptance::run_criterion(id));
      report(results.back());
    }
  }
  const bool pass = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  if (opt.json) {
    Json list = Json::array();
    for (const auto& r : results) {
      list.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    }
    out << Json{{"criteria", list}, {"pass", pass}}.dump() << '\n';
  } else {
    out << (pass ? "PASS" : "FAIL") << " selftest (" << results.size() << " criteria)\n";
  }
  return pass ? kExitOk : kExitInternal;
}

int cmd_bench(int max_exp, int random_count, const Options& opt, std::ostream& out) {
  Json chain = Json::array();
  std::int64_t d = 10;
  for (int k = 2; k <= max_exp; ++k) {
    d *= 10;
    const DivisorClass x = DivisorClass::from_truncated(d, {checked_sub(12, d), Bit2()}, {0, Bit2()}, {0, Bit2()});
    const auto t0 = Clock::now();
    const CohResult r = h_all(x);
    const double s = seconds_since(t0);
    chain.push_back(Json{{"d", d}, {"steps", r.trace.size()}, {"h0", r.h0}, {"seconds", s}});
  }
  std::mt19937_64 rng(0x5eed2024);
  std::uniform_int_distribution<std::int64_t> deg(-20, 20), coord(-12, 12);
  std::uniform_int_distribution<unsigned> tor(0, 63);
  std::vector<DivisorClass> inputs;
  while (static_cast<int>(inputs.size()) < random_count) {
    const std::int64_t dd = deg(rng), a = coord(rng), b = coord(rng), c = coord(rng);
    if (mod_pos(dd + a + b + c, 3) != 0) continue;
    inputs.push_back(DivisorClass::from_truncated(dd, {a, Bit2()}, {b, Bit2()}, {c, Bit2()}) +
                     torsion_class(Torsion::from_index(tor(rng))));
  }
  const auto t0 = Clock::now();
  parallel_for(inputs.size(), [&](std::size_t i) { (void)h_all(inputs[i]); });
  const double s = seconds_since(t0);
  const Json random{{"count", inputs.size()}, {"seconds", s}, {"workers", worker_count()}};
  if (opt.json) {
    out << Json{{"chain", chain}, {"random", random}}.dump() << '\n';
    return kExitOk;
  }
  out << "h_all on [d; -(d-12), 0, 0]\n";
  for (const Json& c : chain) {
    out << "  d=" << std::left << std::setw(10) << c["d"].get<std::int64_t>() << " steps=" << std::setw(10)
        << c["steps"].get<std::size_t>() << " " << std::fixed << std::setprecision(4) << c["seconds"].get<double>()
        << " s\n";
  }
  out << "h_all on " << inputs.size() << " random divisors: " << std::fixed << std::setprecision(3) << s << " s on "
      << worker_count() << " worker(s)\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Outcome& o) {
    err << "error: " << o.message << '\n';
    return o.code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Picard group and line bundle cohomology of the primary Burniat surface.", "burniat"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "Print one JSON object instead of a table");
  app.add_flag("--trace", opt.trace, "Include the branch trace of the h computation");
  app.add_option("--batch", opt.batch, "Read one input per line and print JSON lines")->check(CLI::ExistingFile);

  struct ExprSub {
    ExprCommand cmd;
    CLI::App* app;
  };
  std::string expr;
  std::vector<ExprSub> expr_subs;
  const auto add_expr = [&](ExprCommand cmd, const char* name, const char* help) {
    CLI::App* sc = app.add_subcommand(name, help);
    sc->add_option("divisor", expr, "Divisor expression or coordinate literal");
    expr_subs.push_back({cmd, sc});
  };
  add_expr(ExprCommand::Show, "show", "Coordinates, numerical data, effectiveness and h");
  add_expr(ExprCommand::H, "h", "h0, h1, h2");
  add_expr(ExprCommand::Effective, "effective", "Effectiveness with a witness");
  add_expr(ExprCommand::Reduce, "reduce", "Trim fixed components down to the reduced form");

  std::vector<std::int64_t> num;
  CLI::App* enumber = app.add_subcommand("enumber", "e-number of [d; a, b, c], brute force and closed form");
  enumber->add_option("class", num, "d a b c")->expected(4);

  std::string table_name;
  CLI::App* table = app.add_subcommand("table", "Regenerate a reference table and compare it");
  table->add_option("name", table_name, "generators, flexible-torsions or reduced-621")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(tables::kNames.begin(), tables::kNames.end())));

  std::string polarization = "3K";
  std::optional<std::int64_t> lo, hi;
  CLI::App* ulrich = app.add_subcommand("ulrich-search", "Search for Ulrich line bundles");
  ulrich->add_option("--polarization,-H", polarization, "Polarization")->capture_default_str();
  ulrich->add_option("--lo", lo, "Lowest degree d = D.K to scan");
  ulrich->add_option("--hi", hi, "Highest degree d = D.K to scan");

  std::string d1;
  CLI::App* rank2 = app.add_subcommand("verify-rank2", "Check the rank-2 Ulrich construction data");
  rank2->add_option("--d1", d1, "D1 (default: the reference class [10; 0, 1, 4])");

  std::vector<int> only;
  CLI::App* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_option("--only", only, "Criterion numbers")->check(CLI::Range(1, acceptance::kCriterionCount));

  int max_exp = 5, random_count = 2000;
  CLI::App* bench = app.add_subcommand("bench", "Time h on long reduction chains and random divisors");
  bench->add_option("--max-exp", max_exp, "Largest d is 10^max-exp")->capture_default_str()->check(CLI::Range(2, 8));
  bench->add_option("--random", random_count, "Number of random divisors")->capture_default_str()->check(CLI::Range(0, 10000000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const auto usage = [&](const std::string& message) {
    err << message << "\nRun with --help for more information.\n";
    return kExitUsage;
  };
  const bool batch = !opt.batch.empty();

  for (const ExprSub& s : expr_subs) {
    if (!s.app->parsed()) continue;
    if (batch == !expr.empty()) return usage(s.app->get_name() + ": give a divisor or --batch FILE, not both");
    if (batch) {
      return guarded(err, [&] {
        return run_batch(opt.batch, [&](const std::string& line) {
          return to_json(s.cmd, analyze(s.cmd, line), opt.trace);
        }, out);
      });
    }
    return guarded(err, [&] {
      const Analysis a = analyze(s.cmd, expr);
      if (opt.json) {
        out << to_json(s.cmd, a, opt.trace).dump() << '\n';
      } else {
        print_text(s.cmd, a, opt.trace, out);
      }
      return kExitOk;
    });
  }

  if (enumber->parsed()) {
    if (batch == !num.empty()) return usage("enumber: give d a b c or --batch FILE, not both");
    if (batch) {
      return guarded(err, [&] {
        return run_batch(opt.batch, [](const std::string& line) {
          Json j{{"input", line}};
          j.update(enumber_json(parse_num_line(line)));
          return j;
        }, out);
      });
    }
    return guarded(err, [&] {
      const Json j = enumber_json(NumClass{num[0], num[1], num[2], num[3]});
      if (opt.json) {
        out << j.dump() << '\n';
      } else {
        print_enumber(j, out);
      }
      return kExitOk;
    });
  }

  if (batch) return usage("--batch applies to show, h, effective, reduce and enumber");
  if (table->parsed()) return guarded(err, [&] { return cmd_table(table_name, opt, out); });
  if (ulrich->parsed()) return guarded(err, [&] { return cmd_ulrich(polarization, lo, hi, opt, out); });
  if (rank2->parsed()) return guarded(err, [&] { return cmd_rank2(d1, opt, out); });
  if (selftest->parsed()) return guarded(err, [&] { return cmd_selftest(only, opt, out); });
  if (bench->parsed()) return guarded(err, [&] { return cmd_bench(max_exp, random_count, opt, out); });
  return usage("no command given");
}

}  // namespace burniat::cli
