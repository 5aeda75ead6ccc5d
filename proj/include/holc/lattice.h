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

// Taint-labels: a finite join-semilattice bounded below, loaded from a
// plain-text description and validated once at load time.
//
// Description format, one directive per line (`--` or `#` start a comment):
//
//   labels: I W C Ch        members, in declaration order
//   bottom: I               the least label
//   join: C I = C           a join table entry; the mirrored entry, the
//                           diagonal and the bottom row are implied
//   order: W <= C           generator form: the join is the least upper
//                           bound of the reflexive-transitive closure
//   equiv: Zorn Ch          identify two labels
//   axiom: Nlem @ C         bind axiom schemes to a label
//
// A description uses either `join:` or `order:` entries, not both. Labels
// that end up mutually below each other are collapsed onto the first one
// declared.

#ifndef HOLC_LATTICE_H_
#define HOLC_LATTICE_H_

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace holc {

struct Label {
  std::uint16_t id = 0;
  friend auto operator<=>(const Label&, const Label&) = default;
};

// Axiom schemes known to the kernel.
inline constexpr const char* kSchemeLem = "Nlem";
inline constexpr const char* kSchemeWem = "WEM";
inline constexpr const char* kSchemeChoice = "Choice";

struct AxiomBinding {
  Label label;
  std::vector<std::string> schemes;
};

class TaintLattice {
 public:
  // Parses and validates a description. Throws NotALattice (with a
  // counterexample), NoBottom, UnknownLabel or SyntaxError.
  static TaintLattice load(std::string_view text);

  // I <= W <= C <= Ch with Nlem at C, WEM at W and Choice at Ch.
  static const std::string& four_chain_text();
  static std::shared_ptr<const TaintLattice> four_chain();

  std::size_t size() const { return names_.size(); }
  std::vector<Label> members() const;
  Label bottom() const { return bottom_; }
  bool contains(Label l) const { return l.id < names_.size(); }

  // Canonical name of a member.
  const std::string& name(Label l) const;
  // Resolves a declared name or alias.
  std::optional<Label> find(std::string_view name) const;
  // As find, throwing UnknownLabel.
  Label label(std::string_view name) const;

  Label join(Label a, Label b) const;
  bool leq(Label a, Label b) const;
  bool equiv(Label a, Label b) const;

  // Label an axiom scheme is bound to, if any.
  std::optional<Label> scheme_label(std::string_view scheme) const;
  const std::vector<AxiomBinding>& bindings() const { return bindings_; }

  // All pairs (a, b) with a <= b and a != b.
  std::vector<std::pair<Label, Label>> order_pairs() const;
  // Covering pairs of the order (edges of the Hasse diagram).
  std::vector<std::pair<Label, Label>> hasse_edges() const;

 private:
  TaintLattice() = default;
  void check(Label l) const;

  std::vector<std::string> names_;
  std::map<std::string, Label, std::less<>> lookup_;
  std::vector<Label> table_;  // row-major size() x size()
  Label bottom_;
  std::vector<AxiomBinding> bindings_;
};

}  // namespace holc

#endif  // HOLC_LATTICE_H_
