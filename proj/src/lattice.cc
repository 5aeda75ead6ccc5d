/* Copyright 2026 The holc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "holc/lattice.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "holc/error.h"

namespace holc {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // The smaller index (earlier declaration) becomes the representative.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

struct JoinEntry {
  std::string a, b, result;
  int line;
};

struct OrderEntry {
  std::string lo, hi;
  int line;
};

[[noreturn]] void syntax_error(int line, const std::string& msg) {
  fail(ErrorKind::SyntaxError, "lattice line " + std::to_string(line) + ": " + msg);
}

}  // namespace

TaintLattice TaintLattice::load(std::string_view text) {
  std::vector<std::string> declared;
  std::optional<std::string> bottom_name;
  std::vector<JoinEntry> joins;
  std::vector<OrderEntry> orders;
  std::vector<std::pair<std::string, std::string>> equivs;
  std::vector<std::pair<std::vector<std::string>, std::string>> axioms;

  std::istringstream in{std::string(text)};
  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = raw;
    if (auto p = line.find("--"); p != std::string::npos) line.resize(p);
    if (auto p = line.find('#'); p != std::string::npos) line.resize(p);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) syntax_error(lineno, "expected `key: value`");
    std::string key = trim(std::string_view(line).substr(0, colon));
    std::string value = trim(std::string_view(line).substr(colon + 1));
    auto ws = words(value);
    if (key == "labels") {
      for (auto& w : ws) {
        if (std::find(declared.begin(), declared.end(), w) != declared.end())
          fail(ErrorKind::NotALattice, "label `" + w + "` declared twice");
        declared.push_back(w);
      }
    } else if (key == "bottom") {
      if (ws.size() != 1) syntax_error(lineno, "bottom takes one label");
      bottom_name = ws[0];
    } else if (key == "join") {
      if (ws.size() != 4 || ws[2] != "=")
        syntax_error(lineno, "expected `join: a b = c`");
      joins.push_back({ws[0], ws[1], ws[3], lineno});
    } else if (key == "order") {
      if (ws.size() != 3 || ws[1] != "<=")
        syntax_error(lineno, "expected `order: a <= b`");
      orders.push_back({ws[0], ws[2], lineno});
    } else if (key == "equiv") {
      if (ws.size() != 2) syntax_error(lineno, "expected `equiv: a b`");
      equivs.emplace_back(ws[0], ws[1]);
    } else if (key == "axiom") {
      auto at = std::find(ws.begin(), ws.end(), "@");
      if (at == ws.end() || at == ws.begin() || std::next(at) == ws.end() ||
          std::next(at, 2) != ws.end())
        syntax_error(lineno, "expected `axiom: Scheme... @ label`");
      axioms.emplace_back(std::vector<std::string>(ws.begin(), at), *std::next(at));
    } else {
      syntax_error(lineno, "unknown directive `" + key + "`");
    }
  }

  if (declared.empty()) fail(ErrorKind::NotALattice, "no labels declared");
  if (!bottom_name) fail(ErrorKind::NoBottom, "no bottom label declared");
  if (!joins.empty() && !orders.empty())
    fail(ErrorKind::NotALattice, "mixes `join:` and `order:` entries");

  const std::size_t n = declared.size();
  auto index_of = [&](const std::string& name) -> std::size_t {
    auto it = std::find(declared.begin(), declared.end(), name);
    if (it == declared.end()) fail(ErrorKind::UnknownLabel, "`" + name + "`");
    return static_cast<std::size_t>(it - declared.begin());
  };
  if (std::find(declared.begin(), declared.end(), *bottom_name) == declared.end())
    fail(ErrorKind::NoBottom, "bottom `" + *bottom_name + "` is not a label");

  UnionFind classes(n);
  for (auto& [a, b] : equivs) classes.unite(index_of(a), index_of(b));

  // Order closure for the generator form; mutual pairs collapse.
  std::vector<std::vector<bool>> raw_leq;
  if (!orders.empty()) {
    raw_leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) raw_leq[i][i] = true;
    for (std::size_t i = 0; i < n; ++i) raw_leq[index_of(*bottom_name)][i] = true;
    for (auto& [a, b] : equivs) {
      raw_leq[index_of(a)][index_of(b)] = true;
      raw_leq[index_of(b)][index_of(a)] = true;
    }
    for (auto& o : orders) raw_leq[index_of(o.lo)][index_of(o.hi)] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (raw_leq[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (raw_leq[k][j]) raw_leq[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (raw_leq[i][j] && raw_leq[j][i]) classes.unite(i, j);
  }

  TaintLattice lat;
  std::vector<std::size_t> canon(n);  // declared index -> member index
  for (std::size_t i = 0; i < n; ++i) {
    if (classes.find(i) == i) {
      canon[i] = lat.names_.size();
      lat.names_.push_back(declared[i]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    canon[i] = canon[classes.find(i)];
    lat.lookup_.emplace(declared[i], Label{static_cast<std::uint16_t>(canon[i])});
  }
  const std::size_t m = lat.names_.size();
  lat.bottom_ = Label{static_cast<std::uint16_t>(canon[index_of(*bottom_name)])};
  const std::size_t bot = lat.bottom_.id;
  auto member = [&](const std::string& name) { return canon[index_of(name)]; };

  constexpr int kMissing = -1;
  std::vector<int> table(m * m, kMissing);
  auto set_entry = [&](std::size_t a, std::size_t b, std::size_t r, int line) {
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      int& cell = table[x * m + y];
      if (cell != kMissing && cell != static_cast<int>(r))
        fail(ErrorKind::NotALattice,
             "conflicting join entries for (" + lat.names_[x] + ", " +
                 lat.names_[y] + ")" +
                 (line > 0 ? " at line " + std::to_string(line) : ""));
      cell = static_cast<int>(r);
    }
  };

  if (orders.empty()) {
    for (std::size_t i = 0; i < m; ++i) {
      set_entry(i, i, i, 0);
      set_entry(bot, i, i, 0);
    }
    for (auto& j : joins) set_entry(member(j.a), member(j.b), member(j.result), j.line);
  } else {
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (raw_leq[i][j]) leq[canon[i]][canon[j]] = true;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        std::vector<std::size_t> upper;
        for (std::size_t u = 0; u < m; ++u)
          if (leq[a][u] && leq[b][u]) upper.push_back(u);
        std::optional<std::size_t> least;
        for (auto u : upper) {
          if (std::all_of(upper.begin(), upper.end(),
                          [&](std::size_t v) { return leq[u][v]; })) {
            least = u;
            break;
          }
        }
        if (!least)
          fail(ErrorKind::NotALattice, "no least upper bound for (" +
                                           lat.names_[a] + ", " + lat.names_[b] +
                                           ")");
        table[a * m + b] = static_cast<int>(*least);
      }
    }
  }

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (table[a * m + b] == kMissing)
        fail(ErrorKind::NotALattice, "join (" + lat.names_[a] + ", " +
                                         lat.names_[b] + ") is not defined");

  lat.table_.resize(m * m);
  for (std::size_t i = 0; i < m * m; ++i)
    lat.table_[i] = Label{static_cast<std::uint16_t>(table[i])};

  // Lattice laws, each reported with a counterexample.
  auto J = [&](std::size_t a, std::size_t b) {
    return static_cast<std::size_t>(table[a * m + b]);
  };
  auto L = [&](std::size_t a, std::size_t b) { return J(a, b) == b; };
  auto nm = [&](std::size_t a) { return lat.names_[a]; };
  for (std::size_t a = 0; a < m; ++a) {
    if (J(a, a) != a) fail(ErrorKind::NotALattice, "idempotence fails at " + nm(a));
    if (J(bot, a) != a)
      fail(ErrorKind::NotALattice, "bottom law fails at " + nm(a));
    for (std::size_t b = 0; b < m; ++b) {
      if (J(a, b) != J(b, a))
        fail(ErrorKind::NotALattice,
             "commutativity fails at (" + nm(a) + ", " + nm(b) + ")");
      if (L(a, b) && L(b, a) && a != b)
        fail(ErrorKind::NotALattice,
             "antisymmetry fails at (" + nm(a) + ", " + nm(b) + ")");
      for (std::size_t c = 0; c < m; ++c) {
        std::string triple = "(" + nm(a) + ", " + nm(b) + ", " + nm(c) + ")";
        if (J(a, J(b, c)) != J(J(a, b), c))
          fail(ErrorKind::NotALattice, "associativity fails at " + triple);
        if (L(a, b) && L(b, c) && !L(a, c))
          fail(ErrorKind::NotALattice, "transitivity fails at " + triple);
        if (L(a, c) && L(b, c) && !L(J(a, b), c))
          fail(ErrorKind::NotALattice, "join is not least at " + triple);
      }
    }
  }

  std::set<std::string> bound;
  for (auto& [schemes, label_name] : axioms) {
    Label l = lat.label(label_name);
    AxiomBinding* binding = nullptr;
    for (auto& b : lat.bindings_)
      if (b.label == l) binding = &b;
    if (!binding) {
      lat.bindings_.push_back({l, {}});
      binding = &lat.bindings_.back();
    }
    for (auto& s : schemes) {
      if (!bound.insert(s).second)
        fail(ErrorKind::NotALattice, "axiom scheme `" + s + "` bound twice");
      binding->schemes.push_back(s);
    }
  }
  return lat;
}

const std::string& TaintLattice::four_chain_text() {
  static const std::string text =
      "-- I <= W <= C <= Ch\n"
      "labels: I W C Ch\n"
      "bottom: I\n"
      "join: W I = W\n"
      "join: C I = C\n"
      "join: C W = C\n"
      "join: Ch I = Ch\n"
      "join: Ch W = Ch\n"
      "join: Ch C = Ch\n"
      "axiom: WEM @ W\n"
      "axiom: Nlem @ C\n"
      "axiom: Choice @ Ch\n";
  return text;
}

std::shared_ptr<const TaintLattice> TaintLattice::four_chain() {
  static const auto lattice =
      std::make_shared<const TaintLattice>(load(four_chain_text()));
  return lattice;
}

std::vector<Label> TaintLattice::members() const {
  std::vector<Label> out;
  for (std::size_t i = 0; i < names_.size(); ++i)
    out.push_back(Label{static_cast<std::uint16_t>(i)});
  return out;
}

void TaintLattice::check(Label l) const {
  if (!contains(l))
    fail(ErrorKind::UnknownLabel, "label #" + std::to_string(l.id) +
                                      " is not a member of the lattice");
}

const std::string& TaintLattice::name(Label l) const {
  check(l);
  return names_[l.id];
}

std::optional<Label> TaintLattice::find(std::string_view name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Label TaintLattice::label(std::string_view name) const {
  auto l = find(name);
  if (!l) fail(ErrorKind::UnknownLabel, "`" + std::string(name) + "`");
  return *l;
}

Label TaintLattice::join(Label a, Label b) const {
  check(a);
  check(b);
  return table_[a.id * names_.size() + b.id];
}

bool TaintLattice::leq(Label a, Label b) const { return join(a, b) == b; }

bool TaintLattice::equiv(Label a, Label b) const { return leq(a, b) && leq(b, a); }

std::optional<Label> TaintLattice::scheme_label(std::string_view scheme) const {
  for (const auto& b : bindings_)
    for (const auto& s : b.schemes)
      if (s == scheme) return b.label;
  return std::nullopt;
}

std::vector<std::pair<Label, Label>> TaintLattice::order_pairs() const {
  std::vector<std::pair<Label, Label>> out;
  for (Label a : members())
    for (Label b : members())
      if (a != b && leq(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<Label, Label>> TaintLattice::hasse_edges() const {
  std::vector<std::pair<Label, Label>> out;
  for (auto [a, b] : order_pairs()) {
    bool covered = true;
    for (Label c : members())
      if (c != a && c != b && leq(a, c) && leq(c, b)) covered = false;
    if (covered) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace holc
