// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#include "pgr/game.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

namespace pgr {

parse_error::parse_error(std::size_t line, const std::string& what)
    : game_error("line " + std::to_string(line) + ": " + what), line(line)
{
}

ParityGame::ParityGame(std::vector<priority_t> prio, std::vector<Player> owner,
                       std::vector<std::vector<vertex>> succ, std::vector<std::string> labels)
    : prio_(std::move(prio)), owner_(std::move(owner)), labels_(std::move(labels))
{
  const std::size_t n = prio_.size();
  if (owner_.size() != n || succ.size() != n)
    throw game_error("priority, owner and successor tables differ in size");
  if (!labels_.empty() && labels_.size() != n)
    throw game_error("label table differs in size");
  if (std::all_of(labels_.begin(), labels_.end(), [](auto& s) { return s.empty(); }))
    labels_.clear();
  succ_off_.assign(n + 1, 0);
  pred_off_.assign(n + 2, 0);
  for (vertex v = 0; v < n; ++v) {
    auto& s = succ[v];
    if (s.empty())
      throw game_error("vertex " + std::to_string(v) + " has no successors");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.back() >= n)
      throw game_error("vertex " + std::to_string(v) + " has dangling successor " +
                       std::to_string(s.back()));
    succ_off_[v + 1] = succ_off_[v] + s.size();
    for (vertex u : s)
      ++pred_off_[u + 2];
  }
  // Counting sort: after the prefix sum pred_off_[u + 1] is where u's
  // predecessors start; placing them advances it to where they end.
  for (std::size_t i = 2; i < n + 2; ++i)
    pred_off_[i] += pred_off_[i - 1];
  succ_.reserve(succ_off_[n]);
  pred_.resize(succ_off_[n]);
  for (vertex v = 0; v < n; ++v)
    for (vertex u : succ[v]) {
      succ_.push_back(u);
      pred_[pred_off_[u + 1]++] = v;
    }
  pred_off_.pop_back();
}

std::vector<std::vector<vertex>> ParityGame::successor_lists() const
{
  std::vector<std::vector<vertex>> out(size());
  for (vertex v = 0; v < size(); ++v)
    out[v].assign(successors(v).begin(), successors(v).end());
  return out;
}

const std::string& ParityGame::label(vertex v) const
{
  static const std::string none;
  return labels_.empty() ? none : labels_[v];
}

priority_t ParityGame::max_priority() const
{
  return prio_.empty() ? 0 : *std::max_element(prio_.begin(), prio_.end());
}

std::size_t ParityGame::edge_count() const { return succ_.size(); }

VertexSet ParityGame::owned_by(Player p) const
{
  VertexSet s(size());
  for (vertex v = 0; v < size(); ++v)
    if (owner_[v] == p)
      s.insert(v);
  return s;
}

VertexSet ParityGame::successor_set(vertex v) const
{
  VertexSet s(size());
  for (vertex u : successors(v))
    s.insert(u);
  return s;
}

bool ParityGame::operator==(const ParityGame& o) const
{
  return prio_ == o.prio_ && owner_ == o.owner_ && succ_off_ == o.succ_off_ && succ_ == o.succ_;
}

// PGSolver reader ----------------------------------------------------------

namespace {

struct Token {
  enum Kind { number, word, string, comma, semicolon, end } kind;
  std::string text;
  std::size_t line;
};

class Lexer {
public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      if (s_[pos_] == '\n')
        ++line_;
      ++pos_;
    }
    if (pos_ == s_.size())
      return {Token::end, "", line_};
    char c = s_[pos_];
    if (c == ',') {
      ++pos_;
      return {Token::comma, ",", line_};
    }
    if (c == ';') {
      ++pos_;
      return {Token::semicolon, ";", line_};
    }
    if (c == '"') {
      std::size_t close = s_.find('"', pos_ + 1);
      if (close == std::string_view::npos)
        throw parse_error(line_, "unterminated vertex name");
      Token t{Token::string, std::string(s_.substr(pos_ + 1, close - pos_ - 1)), line_};
      for (std::size_t i = pos_; i < close; ++i)
        if (s_[i] == '\n')
          ++line_;
      pos_ = close + 1;
      return t;
    }
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return {Token::number, std::string(s_.substr(start, pos_ - start)), line_};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return {Token::word, std::string(s_.substr(start, pos_ - start)), line_};
    }
    throw parse_error(line_, std::string("unexpected character '") + c + "'");
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

constexpr std::uint64_t max_value = std::numeric_limits<std::int32_t>::max();

std::uint64_t to_number(const Token& t, const char* what)
{
  if (t.kind != Token::number)
    throw parse_error(t.line, std::string("expected ") + what + ", got '" + t.text + "'");
  std::uint64_t x = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), x);
  if (ec != std::errc() || x > max_value)
    throw parse_error(t.line, std::string(what) + " " + t.text + " exceeds 2^31-1");
  return x;
}

void expect(const Token& t, Token::Kind k, const char* what)
{
  if (t.kind != k)
    throw parse_error(t.line, std::string("expected ") + what + ", got '" +
                                  (t.kind == Token::end ? "end of input" : t.text) + "'");
}

struct RawVertex {
  priority_t prio;
  Player owner;
  std::vector<vertex> succ;
  std::string name;
  std::size_t line;
};

} // namespace

ParityGame parse_pgsolver(std::string_view text)
{
  Lexer lex(text);
  Token t = lex.next();
  std::optional<std::uint64_t> declared;
  std::size_t header_line = 1;
  if (t.kind == Token::word) {
    if (t.text != "parity")
      throw parse_error(t.line, "expected 'parity' header or vertex id, got '" + t.text + "'");
    header_line = t.line;
    Token dt = lex.next();
    declared = to_number(dt, "maximum vertex id");
    // Every vertex line takes at least eight bytes.
    if (*declared >= text.size())
      throw parse_error(dt.line, "declared maximum vertex id " + dt.text + " exceeds input size");
    expect(lex.next(), Token::semicolon, "';' after header");
    t = lex.next();
  }

  std::vector<std::optional<RawVertex>> raw;
  while (t.kind != Token::end) {
    std::size_t line = t.line;
    std::uint64_t id = to_number(t, "vertex id");
    if (declared && id > *declared)
      throw parse_error(line, "vertex id " + std::to_string(id) + " exceeds declared maximum " +
                                  std::to_string(*declared));
    if (id >= text.size())
      throw parse_error(line, "vertex id " + std::to_string(id) + " exceeds input size");
    RawVertex rv;
    rv.line = line;
    rv.prio = to_number(lex.next(), "priority");
    Token ot = lex.next();
    std::uint64_t owner = to_number(ot, "owner");
    if (owner > 1)
      throw parse_error(ot.line, "owner must be 0 or 1, got " + ot.text);
    rv.owner = owner == 0 ? Player::even : Player::odd;
    t = lex.next();
    if (t.kind == Token::semicolon || t.kind == Token::string)
      throw parse_error(t.line, "vertex " + std::to_string(id) + " has no successors");
    rv.succ.push_back(static_cast<vertex>(to_number(t, "successor")));
    t = lex.next();
    while (t.kind == Token::comma) {
      rv.succ.push_back(static_cast<vertex>(to_number(lex.next(), "successor")));
      t = lex.next();
    }
    if (t.kind == Token::string) {
      rv.name = t.text;
      t = lex.next();
    }
    expect(t, Token::semicolon, "';' after vertex");
    if (raw.size() <= id)
      raw.resize(id + 1);
    if (raw[id])
      throw parse_error(line, "duplicate vertex id " + std::to_string(id) + " (first defined on line " +
                                  std::to_string(raw[id]->line) + ")");
    raw[id] = std::move(rv);
    t = lex.next();
  }

  std::size_t n = declared ? *declared + 1 : raw.size();
  raw.resize(n);
  if (n == 0)
    throw parse_error(header_line, "game has no vertices");
  std::vector<priority_t> prio(n);
  std::vector<Player> owner(n);
  std::vector<std::vector<vertex>> succ(n);
  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!raw[v])
      throw parse_error(header_line, "vertex " + std::to_string(v) + " is not defined");
    for (vertex u : raw[v]->succ)
      if (u >= n)
        throw parse_error(raw[v]->line, "vertex " + std::to_string(v) + " has dangling successor " +
                                            std::to_string(u));
    prio[v] = raw[v]->prio;
    owner[v] = raw[v]->owner;
    succ[v] = std::move(raw[v]->succ);
    labels[v] = std::move(raw[v]->name);
  }
  return ParityGame(std::move(prio), std::move(owner), std::move(succ), std::move(labels));
}

std::string serialize_pgsolver(const ParityGame& g)
{
  std::ostringstream os;
  os << "parity " << (g.size() - 1) << ";\n";
  for (vertex v = 0; v < g.size(); ++v) {
    os << v << ' ' << g.priority(v) << ' ' << static_cast<int>(g.owner(v)) << ' ';
    bool first = true;
    for (vertex u : g.successors(v)) {
      if (!first)
        os << ',';
      os << u;
      first = false;
    }
    if (!g.label(v).empty())
      os << " \"" << g.label(v) << '"';
    os << ";\n";
  }
  return os.str();
}

std::string to_dot(const ParityGame& g)
{
  std::ostringstream os;
  os << "digraph game {\n";
  for (vertex v = 0; v < g.size(); ++v)
    os << "  " << v << " [shape=" << (g.owner(v) == Player::even ? "diamond" : "box")
       << ", label=\"" << v << ':' << g.priority(v) << "\"];\n";
  for (vertex v = 0; v < g.size(); ++v)
    for (vertex u : g.successors(v))
      os << "  " << v << " -> " << u << ";\n";
  os << "}\n";
  return os.str();
}

ParityGame random_game(std::size_t n, priority_t max_priority, std::size_t degree_lo,
                       std::size_t degree_hi, std::uint64_t seed)
{
  if (n == 0)
    throw game_error("a game needs at least one vertex");
  degree_hi = std::min(degree_hi, n);
  if (degree_lo < 1 || degree_lo > degree_hi)
    throw game_error("empty degree range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<priority_t> pick_prio(0, max_priority);
  std::uniform_int_distribution<int> pick_owner(0, 1);
  std::uniform_int_distribution<std::size_t> pick_degree(degree_lo, degree_hi);
  std::vector<vertex> all(n);
  std::iota(all.begin(), all.end(), 0);

  std::vector<priority_t> prio(n);
  std::vector<Player> owner(n);
  std::vector<std::vector<vertex>> succ(n);
  for (std::size_t v = 0; v < n; ++v) {
    prio[v] = pick_prio(rng);
    owner[v] = pick_owner(rng) == 0 ? Player::even : Player::odd;
    std::sample(all.begin(), all.end(), std::back_inserter(succ[v]), pick_degree(rng), rng);
  }
  return ParityGame(std::move(prio), std::move(owner), std::move(succ));
}

ParityGame disjoint_union(const ParityGame& a, const ParityGame& b)
{
  auto prio = a.priorities();
  auto owner = a.owners();
  auto succ = a.successor_lists();
  prio.insert(prio.end(), b.priorities().begin(), b.priorities().end());
  owner.insert(owner.end(), b.owners().begin(), b.owners().end());
  const auto shift = static_cast<vertex>(a.size());
  for (auto s : b.successor_lists()) {
    for (auto& u : s)
      u += shift;
    succ.push_back(std::move(s));
  }
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    for (vertex v = 0; v < a.size(); ++v)
      labels.push_back(a.label(v));
    for (vertex v = 0; v < b.size(); ++v)
      labels.push_back(b.label(v));
  }
  return ParityGame(std::move(prio), std::move(owner), std::move(succ), std::move(labels));
}

} // namespace pgr
