// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

// pgreduce: solve, minimize and compare parity games.
// Exit codes: 0 success, 1 usage or semantic error, 2 I/O error.

#include "pgr/equivalences.hpp"
#include "pgr/lattice.hpp"
#include "pgr/quotient.hpp"
#include "pgr/sim_games.hpp"
#include "pgr/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace pgr;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0, exit_usage = 1, exit_io = 2;

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw io_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad())
    throw io_error("cannot read " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush())
    throw io_error("cannot write " + path);
}

std::string sha256(const std::string& bytes)
{
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string ids(const VertexSet& s)
{
  std::string out;
  s.for_each([&](vertex v) { out += " " + std::to_string(v); });
  return out;
}

json id_array(const VertexSet& s)
{
  json a = json::array();
  s.for_each([&](vertex v) { a.push_back(v); });
  return a;
}

// Collects one command's report; printed as text or JSON at the end.
class Report {
public:
  Report(bool as_json, bool with_timings) : json_(as_json), timings_(with_timings) {}

  void command(const std::string& c) { doc_["command"] = c; }
  void digest(const std::string& bytes) { doc_["input_sha256"] = sha256(bytes); }
  void size(const std::string& key, std::size_t n) { doc_["sizes"][key] = n; }
  void classes(const std::string& key, std::size_t n) { doc_["classes"][key] = n; }
  void verdict(const std::string& key, bool pass)
  {
    doc_["verdicts"][key] = pass ? "pass" : "fail";
    all_pass_ = all_pass_ && pass;
  }
  void extra(const std::string& key, json v) { doc_[key] = std::move(v); }
  void line(const std::string& s) { text_ += s + "\n"; }

  // Time f and record it in milliseconds under key.
  template <class F>
  auto timed(const std::string& key, F&& f)
  {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = f();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    times_[key] = ms;
    return r;
  }

  bool all_pass() const { return all_pass_; }

  void print() const
  {
    if (json_) {
      json out = doc_;
      for (const char* k : {"sizes", "classes", "verdicts"})
        if (!out.contains(k))
          out[k] = json::object();
      if (timings_) {
        out["timings"] = json::object();
        for (const auto& [k, ms] : times_)
          out["timings"][k] = ms;
      }
      std::cout << out.dump(2) << "\n";
      return;
    }
    std::cout << text_;
    if (timings_)
      for (const auto& [k, ms] : times_) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", ms);
        std::cout << "time " << k << ": " << buf << " ms\n";
      }
  }

private:
  bool json_, timings_;
  json doc_ = json::object();
  std::map<std::string, double> times_;
  std::string text_;
  bool all_pass_ = true;
};

ParityGame load(const std::string& path, Report& r)
{
  const std::string text = read_file(path);
  r.digest(text);
  return parse_pgsolver(text);
}

Equivalence equivalence_or_throw(const std::string& name)
{
  auto e = parse_equivalence(name);
  if (!e)
    throw usage_error("unknown equivalence '" + name + "'; supported: " + supported_equivalences());
  return *e;
}

std::vector<Equivalence> all_equivalences()
{
  return {Equivalence::strong_bisim, Equivalence::governed_bisim, Equivalence::stut_bisim, Equivalence::gstut_bisim,
          Equivalence::direct_sim};
}

std::optional<Rel> parse_rel(const std::string& name)
{
  for (std::size_t i = 0; i < rel_count; ++i)
    if (name == to_string(static_cast<Rel>(i)))
      return static_cast<Rel>(i);
  return std::nullopt;
}

vertex vertex_or_throw(const ParityGame& g, long long v)
{
  if (v < 0 || static_cast<std::size_t>(v) >= g.size())
    throw usage_error("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(g.size() - 1));
  return static_cast<vertex>(v);
}

// Commands -------------------------------------------------------------------

int cmd_solve(Report& r, const std::string& input)
{
  r.command("solve");
  const auto g = load(input, r);
  const auto w = r.timed("solve", [&] { return solve_zielonka(g); });
  r.size("vertices", g.size());
  r.extra("even", id_array(w.even));
  r.extra("odd", id_array(w.odd));
  r.line("even:" + ids(w.even));
  r.line("odd:" + ids(w.odd));
  return exit_ok;
}

int cmd_minimize(Report& r, const std::string& input, const std::string& equiv, const std::string& out,
                 const std::string& map, const std::string& dot)
{
  r.command("minimize");
  const Equivalence e = equivalence_or_throw(equiv);
  const auto g = load(input, r);
  const auto q = r.timed("quotient", [&] { return quotient(g, e); });
  r.size("original", g.size());
  r.size("quotient", q.quotient.size());
  r.classes(to_string(e), q.partition.class_count());
  r.line("original: " + std::to_string(g.size()) + " vertices");
  r.line("quotient: " + std::to_string(q.quotient.size()) + " vertices (" + to_string(e) + ")");
  if (!out.empty())
    write_file(out, serialize_pgsolver(q.quotient));
  if (!map.empty()) {
    std::string text;
    for (vertex v = 0; v < g.size(); ++v)
      text += std::to_string(v) + " " + std::to_string(q.class_map[v]) + "\n";
    write_file(map, text);
  }
  if (!dot.empty())
    write_file(dot, to_dot(q.quotient));
  return exit_ok;
}

int cmd_compare(Report& r, const std::string& input, long long v_in, long long w_in)
{
  r.command("compare");
  const auto g = load(input, r);
  const vertex v = vertex_or_throw(g, v_in), w = vertex_or_throw(g, w_in);
  const auto t = r.timed("relations", [&] { return compute_relations(g); });
  r.size("vertices", g.size());
  json related = json::object();
  for (std::size_t i = 0; i < rel_count; ++i) {
    const Rel rel = static_cast<Rel>(i);
    const auto& m = t[rel];
    const char* name = to_string(rel);
    if (!m) {
      r.line(std::string(name) + ": skipped");
      related[name] = nullptr;
      continue;
    }
    r.classes(name, Partition::from_relation(*m).class_count());
    const bool yes = m->contains(v, w);
    related[name] = yes;
    r.line(std::string(name) + ": " + (yes ? "yes" : "no"));
  }
  r.extra("pair", json::array({v, w}));
  r.extra("related", related);
  return exit_ok;
}

struct LatticeTally {
  std::size_t games = 0;
  std::map<std::string, std::pair<std::size_t, std::string>> failures; // check -> (count, first example)
  std::vector<std::string> order;

  void note(const std::string& check, bool ok, const std::string& where)
  {
    if (!failures.count(check)) {
      failures[check] = {0, ""};
      order.push_back(check);
    }
    if (!ok && failures[check].first++ == 0)
      failures[check].second = where;
  }
};

void lattice_game(const ParityGame& g, const std::string& name, std::optional<Rel> corrupt, LatticeTally& tally)
{
  ++tally.games;
  auto t = compute_relations(g);
  if (corrupt && t[*corrupt]) {
    // Test hook: relate every pair, as a broken implementation might.
    auto& m = *t[*corrupt];
    for (vertex v = 0; v < g.size(); ++v)
      for (vertex w = 0; w < g.size(); ++w)
        m.insert(v, w);
  }
  for (const auto& v : check_lattice(t)) {
    std::string where = name;
    if (v.counterexample)
      where += " at (" + std::to_string(v.counterexample->first) + "," + std::to_string(v.counterexample->second) + ")";
    tally.note("edge " + edge_name(v.edge), v.holds, where);
  }
  for (Notion n : {Notion::direct, Notion::governed_bisim, Notion::gstut, Notion::delayed, Notion::delayed_even,
                   Notion::delayed_odd})
    tally.note(std::string("coincidence ") + to_string(n), coincidence_check(g, n), name);
}

int cmd_lattice_check(Report& r, const std::vector<std::string>& inputs, std::size_t random_n, std::size_t seeds,
                      std::uint64_t first_seed, const std::string& corrupt_name)
{
  r.command("lattice-check");
  std::optional<Rel> corrupt;
  if (!corrupt_name.empty()) {
    corrupt = parse_rel(corrupt_name);
    if (!corrupt)
      throw usage_error("unknown relation '" + corrupt_name + "'");
  }
  if (inputs.empty() && random_n == 0)
    throw usage_error("lattice-check needs an input file or --random N");
  std::vector<std::pair<std::string, ParityGame>> games;
  std::string digests;
  for (const auto& path : inputs) {
    const std::string text = read_file(path);
    digests += text;
    games.emplace_back(path, parse_pgsolver(text));
  }
  if (!inputs.empty())
    r.digest(digests);
  for (std::size_t s = 0; s < (random_n ? seeds : 0); ++s) {
    const std::uint64_t seed = first_seed + s;
    games.emplace_back("seed " + std::to_string(seed),
                       random_game(random_n, random_n, 1, std::min<std::size_t>(3, random_n), seed));
  }
  LatticeTally tally;
  r.timed("check", [&] {
    for (const auto& [name, g] : games)
      lattice_game(g, name, corrupt, tally);
    return 0;
  });
  r.size("games", tally.games);
  for (const auto& check : tally.order) {
    const auto& [count, where] = tally.failures[check];
    r.verdict(check, count == 0);
    if (count == 0)
      r.line("pass " + check);
    else
      r.line("FAIL " + check + " (" + std::to_string(count) + " games, first: " + where + ")");
  }
  r.line(std::string(r.all_pass() ? "all checks pass" : "some checks fail") + " on " + std::to_string(tally.games) +
         " games");
  return r.all_pass() ? exit_ok : exit_usage;
}

int cmd_verify(Report& r, const std::string& input, const std::string& equiv)
{
  r.command("verify");
  std::vector<Equivalence> es;
  if (equiv == "all")
    es = all_equivalences();
  else
    es.push_back(equivalence_or_throw(equiv));
  const auto g = load(input, r);
  r.size("original", g.size());
  for (Equivalence e : es) {
    const std::string name = to_string(e);
    const auto q = r.timed(name, [&] { return quotient(g, e); });
    const bool winners = verify_preservation(g, q);
    const bool equivalent = quotient_equivalent(g, q);
    r.size(name, q.quotient.size());
    r.classes(name, q.partition.class_count());
    r.verdict(name + " winners", winners);
    r.verdict(name + " equivalent", equivalent);
    r.line(name + ": quotient " + std::to_string(q.quotient.size()) + " vertices, winners " +
           (winners ? "pass" : "FAIL") + ", equivalent " + (equivalent ? "pass" : "FAIL"));
  }
  return r.all_pass() ? exit_ok : exit_usage;
}

int cmd_random(Report& r, std::uint64_t seed, std::size_t n, priority_t max_prio, const std::string& degree,
               const std::string& out, const std::string& dot)
{
  r.command("random");
  std::size_t lo = 1, hi = 3;
  if (!degree.empty()) {
    char colon = 0;
    std::istringstream in(degree);
    if (!(in >> lo >> colon >> hi) || colon != ':' || !in.eof())
      throw usage_error("--degree expects lo:hi, got '" + degree + "'");
  }
  const auto g = random_game(n, max_prio, lo, hi, seed);
  const std::string text = serialize_pgsolver(g);
  r.size("vertices", g.size());
  r.size("edges", g.edge_count());
  if (out.empty())
    r.line(text.substr(0, text.size() - 1));
  else
    write_file(out, text);
  if (!dot.empty())
    write_file(dot, to_dot(g));
  return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Parity game reductions: solve, minimize, compare, check."};
  app.require_subcommand(1);
  bool as_json = false, timings = false;
  app.add_flag("--json", as_json, "Print the report as JSON");
  app.add_flag("--timings", timings, "Include timings (milliseconds)");

  std::string input, equiv, out, map, dot, degree, corrupt;
  std::vector<std::string> inputs;
  long long v = 0, w = 0;
  std::size_t random_n = 0, seeds = 10, vertices = 8;
  std::uint64_t seed = 0, first_seed = 0;
  priority_t max_prio = 3;

  auto* solve = app.add_subcommand("solve", "Winning regions (Zielonka)");
  solve->add_option("input", input, "PGSolver file")->required();

  auto* minimize = app.add_subcommand("minimize", "Quotient under an equivalence");
  minimize->add_option("input", input, "PGSolver file")->required();
  minimize->add_option("--equiv", equiv, std::string("One of ") + supported_equivalences())->required();
  minimize->add_option("--out", out, "Write the quotient here");
  minimize->add_option("--map", map, "Write '<original-id> <class-id>' lines here");
  minimize->add_option("--dot", dot, "Write the quotient as DOT here");

  auto* compare = app.add_subcommand("compare", "Relate two vertices under every relation");
  compare->add_option("input", input, "PGSolver file")->required();
  compare->add_option("v", v, "First vertex")->required();
  compare->add_option("w", w, "Second vertex")->required();

  auto* lattice = app.add_subcommand("lattice-check", "Check inclusions and coincidences");
  lattice->add_option("inputs", inputs, "PGSolver files");
  lattice->add_option("--random", random_n, "Also check random games with this many vertices");
  lattice->add_option("--seeds", seeds, "Number of random games");
  lattice->add_option("--first-seed", first_seed, "First random seed");
  lattice->add_option("--corrupt", corrupt)->group("");

  auto* verify = app.add_subcommand("verify", "Check a quotient preserves winners and equivalence");
  verify->add_option("input", input, "PGSolver file")->required();
  verify->add_option("--equiv", equiv, std::string("One of ") + supported_equivalences() + ", or all")->required();

  auto* random = app.add_subcommand("random", "Generate a random total game");
  random->add_option("--seed", seed, "Seed");
  random->add_option("--vertices", vertices, "Vertex count");
  random->add_option("--max-priority", max_prio, "Largest priority");
  random->add_option("--degree", degree, "Out-degree range lo:hi (default 1:3)");
  random->add_option("--out", out, "Write the game here instead of stdout");
  random->add_option("--dot", dot, "Write the game as DOT here");

  for (auto* sub : {solve, minimize, compare, lattice, verify, random})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  Report r(as_json, timings);
  int code = exit_ok;
  try {
    if (*solve)
      code = cmd_solve(r, input);
    else if (*minimize)
      code = cmd_minimize(r, input, equiv, out, map, dot);
    else if (*compare)
      code = cmd_compare(r, input, v, w);
    else if (*lattice)
      code = cmd_lattice_check(r, inputs, random_n, seeds, first_seed, corrupt);
    else if (*verify)
      code = cmd_verify(r, input, equiv);
    else if (*random)
      code = cmd_random(r, seed, vertices, max_prio, degree, out, dot);
  } catch (const io_error& e) {
    std::cerr << "pgreduce: " << e.what() << "\n";
    return exit_io;
  } catch (const std::exception& e) {
    std::cerr << "pgreduce: " << e.what() << "\n";
    return exit_usage;
  }
  r.print();
  return code;
}
