#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "permob/permob.hpp"

using namespace permob;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, failure = 1, parse = 2, guard = 3, overflow = 4 };

json work_json(const WorkCounters& w) {
  return {{"elements_visited", w.elements_visited},
          {"memo_hits", w.memo_hits},
          {"memo_stores", w.memo_stores},
          {"chains", w.chains}};
}

std::size_t to_size(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-') throw ParseError("expected a nonnegative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

// ---- cache ----------------------------------------------------------------------------

std::optional<ResultCache> open_cache(bool disabled) {
  if (disabled) return std::nullopt;
  const char* path = std::getenv("PERMOB_CACHE");
  if (!path || !*path) return std::nullopt;
  ResultCache c(path);
  c.load(&std::cerr);
  return c;
}

void close_cache(std::optional<ResultCache>& c) {
  if (c && c->dirty()) c->save();
}

// ---- mobius ------------------------------------------------------------------------------

struct MobiusArgs {
  std::string lower, upper, method = "auto", format = "text", dot;
};

int cmd_mobius(const MobiusArgs& a, bool no_cache) {
  const auto lo = parse_permutation(a.lower), hi = parse_permutation(a.upper);
  auto cache = open_cache(no_cache || a.method != "auto");
  MobiusResult r;
  bool cached = false;
  if (cache) {
    if (auto e = cache->find(lo, hi)) {
      r.value = e->value;
      r.method = e->method;
      cached = true;
    }
  }
  if (!cached) {
    if (a.method == "auto") {
      r = compute(lo, hi);
    } else {
      const Engine e = a.method == "hall" ? Engine::hall : a.method == "zeta" ? Engine::zeta : Engine::recursive;
      r = mobius(e, lo, hi);
    }
    if (cache) cache->put(lo, hi, r.value, r.method);
  }
  if (!a.dot.empty()) {
    std::ofstream out(a.dot);
    if (!out) throw std::runtime_error("cannot write " + a.dot);
    write_dot(out, interval(lo, hi));
  }
  close_cache(cache);
  if (a.format == "json") {
    json j{{"lower", to_string(lo)}, {"upper", to_string(hi)}, {"value", r.value},
           {"method", r.method},     {"cached", cached},        {"work", work_json(r.work)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << r.value << "\nmethod: " << r.method << (cached ? " (cached)" : "") << "\nwork: elements_visited="
              << r.work.elements_visited << " memo_hits=" << r.work.memo_hits << " memo_stores=" << r.work.memo_stores
              << " chains=" << r.work.chains << "\n";
  }
  return ok;
}

// ---- zero --------------------------------------------------------------------------------

int cmd_zero(const std::string& text, const std::string& lower, const std::string& format) {
  const auto p = parse_permutation(text);
  const Permutation sigma = lower.empty() ? Permutation{1} : parse_permutation(lower);
  std::optional<ZeroCertificate> c = sigma == Permutation{1} ? zero_test(p) : std::nullopt;
  if (!c) c = sigma_zero_test(sigma, p);
  if (format == "json") {
    json j{{"lower", to_string(sigma)}, {"permutation", to_string(p)}, {"certificate", nullptr}};
    if (c) {
      json windows = json::array(), patterns = json::array();
      for (const auto& w : c->windows) windows.push_back({{"start", w.start}, {"len", w.len}});
      for (const auto& q : c->patterns) patterns.push_back(to_string(q));
      j["certificate"] = {{"rule", c->name()},
                          {"windows", windows},
                          {"patterns", patterns},
                          {"positions", c->positions},
                          {"kind", c->kind == SumKind::direct ? "direct" : "skew"}};
    }
    std::cout << j.dump() << "\n";
  } else if (c) {
    std::cout << c->name();
    for (const auto& w : c->windows) std::cout << " window=" << w.start << "+" << w.len;
    for (const auto& q : c->patterns) std::cout << " pattern=" << to_string(q);
    std::cout << "\n";
  } else {
    std::cout << "no certificate\n";
  }
  return ok;
}

// ---- family ------------------------------------------------------------------------------

struct FamilyArgs {
  std::string name;
  std::vector<std::string> params;
  std::string emit = "values", format = "text";
};

int cmd_family(const FamilyArgs& a) {
  const auto& ps = a.params;
  auto need = [&](std::size_t k, const char* usage) {
    if (ps.size() != k) throw ParseError("family " + a.name + " takes " + usage);
  };
  auto num = [&](std::size_t i) { return to_size(ps[i]); };
  std::optional<OscillationDescriptor> osc;
  Permutation p;
  const std::string& f = a.name;
  if (f == "wosc" || f == "mosc") {
    need(1, "<n>");
    osc = OscillationDescriptor{f == "wosc" ? OscShape::W : OscShape::M, num(0)};
    if (osc->n == 0) throw DomainError("oscillation needs n >= 1");
  } else if (f == "pi") {
    need(1, "<n>"), p = pi_sequence(num(0));
  } else if (f == "kappa") {
    need(1, "<n>"), p = kappa(num(0));
  } else if (f == "w1" || f == "w2") {
    need(1, "<n>"), p = wedge_simple(f == "w1" ? 1 : 2, num(0));
  } else if (f == "e1") {
    need(2, "<length> <k>"), p = nearly_exceptional(NearlyExceptional::E1, num(0), num(1));
  } else if (f == "e2") {
    need(1, "<length>"), p = nearly_exceptional(NearlyExceptional::E2, num(0));
  } else if (f == "o") {
    need(2, "<length> <k>"), p = nearly_exceptional(NearlyExceptional::O, num(0), num(1));
  } else if (f == "paralt") {
    need(1, "<length>"), p = parallel_alternation(num(0));
  } else if (f == "balloon2413") {
    need(1, "<beta>"), p = balloon_2413(parse_permutation(ps[0]));
  } else if (f == "balloon") {
    need(4, "<alpha> <beta> <i> <j>");
    p = balloon(BalloonSpec{parse_permutation(ps[0]), parse_permutation(ps[1]), num(2), num(3)});
  } else if (f == "wedge") {
    need(3, "<alpha> <beta> <k>");
    p = wedge(WedgeSpec{parse_permutation(ps[0]), parse_permutation(ps[1]), num(2)});
  } else {
    throw ParseError("unknown family '" + f + "'");
  }
  json j{{"family", f}, {"params", ps}};
  if (a.emit == "perm") {
    const std::string text = to_string(osc ? increasing_oscillation(*osc) : p);
    if (a.format == "json") {
      j["perm"] = text;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << text << "\n";
    }
    return ok;
  }
  const auto r = osc ? compute(Permutation{1}, *osc) : compute(Permutation{1}, p);
  if (a.format == "json") {
    j["value"] = r.value;
    j["method"] = r.method;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << r.value << "\n";
  }
  return ok;
}

// ---- census ------------------------------------------------------------------------------

struct CensusArgs {
  std::string table;
  std::size_t min_n = 1, max_n = 8;
  std::string out, format = "csv", mode = "fast";
  std::size_t cap = default_density_cap;
};

void emit(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json o = json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (t.numeric[i] && !r[i].empty()) o[t.columns[i]] = json::parse(r[i]);
        else o[t.columns[i]] = r[i];
      }
      rows.push_back(o);
    }
    os << json{{"columns", t.columns}, {"rows", rows}}.dump(2) << "\n";
  } else {
    write_csv(os, t);
  }
}

Table census_table(const CensusArgs& a, unsigned threads) {
  const auto lo = std::max<std::size_t>(a.min_n, 1), hi = a.max_n;
  if (lo > hi) throw ParseError("--min-n exceeds --max-n");
  auto principal = [&]() { return PrincipalTable(hi, threads); };
  const std::string& t = a.table;
  if (t == "density") {
    if (hi > a.cap) throw GuardError("density cap is " + std::to_string(a.cap));
    const auto tab = principal();
    std::vector<DensityRow> rows;
    const auto mode = a.mode == "oracle" ? DensityMode::oracle_only : DensityMode::fast_paths_plus_oracle;
    for (auto n = lo; n <= hi; ++n) rows.push_back(density(tab, n, mode, true, a.cap));
    return density_table(rows);
  }
  if (t == "adjacency") {
    std::vector<AdjacencyCounts> rows;
    for (auto n = lo; n <= hi; ++n) rows.push_back(adjacency_census(n));
    return adjacency_table(rows);
  }
  if (t == "non-opposing") {
    if (hi > non_opposing_cap) throw GuardError("non-opposing census cap is " + std::to_string(non_opposing_cap));
    const auto tab = principal();
    std::vector<NonOpposingCounts> rows;
    for (auto n = lo; n <= hi; ++n) rows.push_back(non_opposing_census(tab, n));
    return non_opposing_table(rows);
  }
  if (t == "extremal") {
    const auto tab = principal();
    std::vector<ExtremalRow> rows;
    for (auto n = lo; n <= hi; ++n) rows.push_back(extremal_table(tab, n));
    return extremal_rows_table(rows);
  }
  if (t == "growth") {
    auto rows = growth_table(hi);
    rows.erase(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(lo - 1));
    return growth_rows_table(rows);
  }
  if (t == "sweep" || t == "bands" || t == "primes" || t == "signs") {
    if (hi > 2000000) throw GuardError("oscillation sweeps stop at 2000000");
    const auto sweep = oscillation_sweep(hi);
    if (t == "sweep") {
      auto tab = sweep_table(sweep);
      tab.rows.erase(tab.rows.begin(), tab.rows.begin() + static_cast<std::ptrdiff_t>(lo - 1));
      return tab;
    }
    if (t == "bands") return band_rows_table(band_report(sweep, std::max<std::size_t>(lo, 12)));
    if (t == "primes") return prime_rows_table(prime_conjecture_report(sweep));
    const auto s = sign_report(sweep);
    std::string ex;
    for (auto n : s.exceptions) ex += (ex.empty() ? "" : " ") + std::to_string(n);
    return Table{{"max_n", "even_checked", "even_negative", "odd_checked", "odd_positive", "exceptions"},
                 {true, true, true, true, true, false},
                 {{std::to_string(s.max_n), std::to_string(s.even_checked), std::to_string(s.even_negative),
                   std::to_string(s.odd_checked), std::to_string(s.odd_positive), ex}}};
  }
  static const std::map<std::string, FamilyKind> kinds = {
      {"w1", FamilyKind::W1}, {"w2", FamilyKind::W2},       {"e1", FamilyKind::E1},
      {"e2", FamilyKind::E2}, {"o", FamilyKind::O},         {"kappa", FamilyKind::kappa},
      {"paralt", FamilyKind::parallel_alternation}};
  if (auto it = kinds.find(t); it != kinds.end()) return family_table(family_value_table(it->second, lo, hi));
  throw ParseError("unknown census table '" + t + "'");
}

int cmd_census(const CensusArgs& a, unsigned threads) {
  const auto tab = census_table(a, threads);
  if (a.out.empty()) {
    emit(tab, a.format, std::cout);
    return ok;
  }
  const bool as_json = a.out.size() >= 5 && a.out.compare(a.out.size() - 5, 5, ".json") == 0;
  std::ofstream out(a.out);
  if (!out) throw std::runtime_error("cannot write " + a.out);
  emit(tab, as_json ? "json" : "csv", out);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mobius function of the permutation pattern poset"};
  app.require_subcommand(1);
  unsigned threads = 1;
  bool no_cache = false;
  app.add_option("--threads", threads, "worker threads for census tables")->check(CLI::Range(1u, 256u));
  app.add_flag("--no-cache", no_cache, "ignore PERMOB_CACHE");
  app.set_version_flag("--version", std::string("permob ") + engine_version);

  MobiusArgs ma;
  auto* mob = app.add_subcommand("mobius", "mu[lower, upper]");
  mob->add_option("--lower", ma.lower, "lower permutation")->required();
  mob->add_option("--upper", ma.upper, "upper permutation")->required();
  mob->add_option("--method", ma.method)->check(CLI::IsMember({"auto", "recursive", "hall", "zeta"}));
  mob->add_option("--format", ma.format)->check(CLI::IsMember({"text", "json"}));
  mob->add_option("--emit-dot", ma.dot, "write the interval's Hasse diagram as DOT");

  std::string zp, zlower, zformat = "text";
  auto* zero = app.add_subcommand("zero", "zero certificate for mu[1, P] (or mu[lower, P])");
  zero->add_option("permutation", zp)->required();
  zero->add_option("--lower", zlower);
  zero->add_option("--format", zformat)->check(CLI::IsMember({"text", "json"}));

  FamilyArgs fa;
  auto* fam = app.add_subcommand("family", "construct a family member and evaluate it");
  fam->add_option("name", fa.name)->required();
  fam->add_option("params", fa.params);
  fam->add_option("--emit", fa.emit)->check(CLI::IsMember({"values", "perm"}));
  fam->add_option("--format", fa.format)->check(CLI::IsMember({"text", "json"}));

  CensusArgs ca;
  auto* cen = app.add_subcommand("census", "tables: density adjacency non-opposing extremal growth sweep signs "
                                           "bands primes w1 w2 e1 e2 o kappa paralt");
  cen->add_option("table", ca.table)->required();
  cen->add_option("--min-n", ca.min_n);
  cen->add_option("--max-n", ca.max_n);
  cen->add_option("--cap", ca.cap, "density length cap");
  cen->add_option("--mode", ca.mode)->check(CLI::IsMember({"fast", "oracle"}));
  cen->add_option("--out", ca.out, "output file; .json selects JSON, anything else CSV");
  cen->add_option("--format", ca.format, "stdout format")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : parse;
  }

  try {
    if (*mob) return cmd_mobius(ma, no_cache);
    if (*zero) return cmd_zero(zp, zlower, zformat);
    if (*fam) return cmd_family(fa);
    if (*cen) return cmd_census(ca, threads);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return parse;
  } catch (const GuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return guard;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return overflow;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failure;
  }
  return failure;
}
