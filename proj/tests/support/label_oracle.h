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

// Brute-force closure of the label equational theory. Join expressions with
// at most three leaves are identified by union-find under reflexivity,
// symmetry, transitivity, idempotence, associativity, congruence, the bottom
// law, commutativity, and caller-supplied generator equations a ⊔ b ≡ c.

#ifndef HOLC_TESTS_SUPPORT_LABEL_ORACLE_H_
#define HOLC_TESTS_SUPPORT_LABEL_ORACLE_H_

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace holc::testing {

class LabelClosure {
 public:
  struct Equation {
    std::string a, b, c;  // a ⊔ b ≡ c
  };

  LabelClosure(std::vector<std::string> labels, std::string bottom,
               std::vector<Equation> generators, bool commutative = true)
      : labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());
    for (int i = 0; i < n; ++i) leaf_[labels_[i]] = add({-1, -1, i});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) add({leaf(i), leaf(j), -1});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          add({leaf(i), join(leaf(j), leaf(k)), -1});
          add({join(leaf(i), leaf(j)), leaf(k), -1});
        }
    parent_.resize(exprs_.size());
    std::iota(parent_.begin(), parent_.end(), 0);

    int bot = leaf_.at(bottom);
    for (int e = 0; e < static_cast<int>(exprs_.size()); ++e) {
      if (auto j = find_join(e, e)) unite(*j, e);                  // idempotence
      if (auto j = find_join(bot, e)) unite(*j, e);                // bottom
      if (commutative)
        for (int f = 0; f < static_cast<int>(exprs_.size()); ++f)
          if (auto a = find_join(e, f))
            if (auto b = find_join(f, e)) unite(*a, *b);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)                                // associativity
          unite(join(leaf(i), join(leaf(j), leaf(k))),
                join(join(leaf(i), leaf(j)), leaf(k)));
    for (const auto& g : generators) {
      auto lhs = find_join(leaf_.at(g.a), leaf_.at(g.b));
      unite(*lhs, leaf_.at(g.c));
    }
    // Congruence to a fixpoint.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int e = 0; e < static_cast<int>(exprs_.size()); ++e) {
        if (exprs_[e].leaf >= 0) continue;
        for (int f = e + 1; f < static_cast<int>(exprs_.size()); ++f) {
          if (exprs_[f].leaf >= 0 || find(e) == find(f)) continue;
          if (find(exprs_[e].l) == find(exprs_[f].l) &&
              find(exprs_[e].r) == find(exprs_[f].r)) {
            unite(e, f);
            changed = true;
          }
        }
      }
    }
  }

  bool equiv(const std::string& a, const std::string& b) {
    return find(leaf_.at(a)) == find(leaf_.at(b));
  }

  // a <= b iff a ⊔ b ≡ b.
  bool leq(const std::string& a, const std::string& b) {
    return find(*find_join(leaf_.at(a), leaf_.at(b))) == find(leaf_.at(b));
  }

 private:
  struct Expr {
    int l, r, leaf;
    bool operator<(const Expr& o) const {
      return std::tie(l, r, leaf) < std::tie(o.l, o.r, o.leaf);
    }
  };

  int leaf(int i) { return leaf_.at(labels_[i]); }
  int add(Expr e) {
    auto it = index_.find(e);
    if (it != index_.end()) return it->second;
    exprs_.push_back(e);
    int id = static_cast<int>(exprs_.size()) - 1;
    index_[e] = id;
    return id;
  }
  int join(int a, int b) { return index_.at({a, b, -1}); }
  std::optional<int> find_join(int a, int b) {
    auto it = index_.find({a, b, -1});
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

  std::vector<std::string> labels_;
  std::map<std::string, int> leaf_;
  std::vector<Expr> exprs_;
  std::map<Expr, int> index_;
  std::vector<int> parent_;
};

// The generator equations for the four-label chain.
inline LabelClosure four_chain_closure(bool commutative = true) {
  std::vector<LabelClosure::Equation> gens = {
      {"C", "I", "C"}, {"W", "I", "W"}, {"C", "W", "C"}};
  for (const char* l : {"I", "W", "C", "Ch"}) gens.push_back({"Ch", l, "Ch"});
  return LabelClosure({"I", "W", "C", "Ch"}, "I", gens, commutative);
}

}  // namespace holc::testing

#endif  // HOLC_TESTS_SUPPORT_LABEL_ORACLE_H_
