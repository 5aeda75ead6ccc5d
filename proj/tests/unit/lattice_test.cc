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

#include "doctest.h"
#include "holc/error.h"
#include "holc/lattice.h"
#include "support/label_oracle.h"

using namespace holc;
using holc::testing::LabelClosure;

namespace {

ErrorKind load_error(const std::string& text) {
  try {
    TaintLattice::load(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("lattice loaded unexpectedly");
  return ErrorKind::IoError;
}

const char* kDiamond =
    "labels: I A B T\n"
    "bottom: I\n"
    "join: A B = T\n"
    "join: A T = T\n"
    "join: B T = T\n";

}  // namespace

TEST_CASE("four-chain joins and order") {
  auto lat = TaintLattice::four_chain();
  Label I = lat->label("I"), W = lat->label("W"), C = lat->label("C"),
        Ch = lat->label("Ch");
  CHECK(lat->bottom() == I);
  CHECK(lat->join(C, I) == C);
  CHECK(lat->join(Ch, W) == Ch);
  for (Label l : lat->members()) {
    CHECK(lat->join(l, l) == l);
    CHECK(lat->leq(I, l));
    CHECK(lat->equiv(l, l));
  }
  CHECK(lat->leq(W, C));
  CHECK_FALSE(lat->leq(C, W));
  CHECK_FALSE(lat->equiv(I, C));
  CHECK(lat->scheme_label(kSchemeLem) == C);
  CHECK(lat->scheme_label(kSchemeWem) == W);
  CHECK(lat->scheme_label(kSchemeChoice) == Ch);
  CHECK(lat->hasse_edges().size() == 3);
}

TEST_CASE("four-chain order agrees with the equational closure") {
  auto lat = TaintLattice::four_chain();
  auto closure = holc::testing::four_chain_closure();
  for (Label a : lat->members())
    for (Label b : lat->members()) {
      CHECK(lat->leq(a, b) == closure.leq(lat->name(a), lat->name(b)));
      CHECK(lat->equiv(a, b) == closure.equiv(lat->name(a), lat->name(b)));
    }
}

TEST_CASE("without commutativity the generators leave pairs unrelated") {
  auto closure = holc::testing::four_chain_closure(false);
  CHECK(closure.leq("I", "Ch"));
  CHECK_FALSE(closure.leq("W", "Ch"));
}

TEST_CASE("singleton lattice") {
  auto lat = TaintLattice::load("labels: I\nbottom: I\n");
  CHECK(lat.size() == 1);
  CHECK(lat.join(lat.bottom(), lat.bottom()) == lat.bottom());
}

TEST_CASE("diamond lattice") {
  auto lat = TaintLattice::load(kDiamond);
  Label A = lat.label("A"), B = lat.label("B"), T = lat.label("T");
  CHECK(lat.join(A, B) == T);
  CHECK(lat.join(B, A) == T);
  CHECK_FALSE(lat.leq(A, B));
  CHECK(lat.hasse_edges().size() == 4);
  LabelClosure closure({"I", "A", "B", "T"}, "I",
                       {{"A", "B", "T"}, {"A", "T", "T"}, {"B", "T", "T"}});
  for (Label a : lat.members())
    for (Label b : lat.members())
      CHECK(lat.leq(a, b) == closure.leq(lat.name(a), lat.name(b)));
}

TEST_CASE("diamond with a missing join is rejected") {
  CHECK(load_error("labels: I A B T\nbottom: I\njoin: A T = T\njoin: B T = T\n") ==
        ErrorKind::NotALattice);
}

TEST_CASE("order form and label collapse") {
  auto lat = TaintLattice::load(
      "labels: I W C Ch Zorn\nbottom: I\norder: W <= C\norder: C <= Ch\n"
      "order: Ch <= Zorn\norder: Zorn <= Ch\n");
  CHECK(lat.size() == 4);
  CHECK(lat.equiv(lat.label("Ch"), lat.label("Zorn")));
  CHECK(lat.name(lat.label("Zorn")) == "Ch");
}

TEST_CASE("malformed lattice descriptions") {
  CHECK(load_error("labels: I A\n") == ErrorKind::NoBottom);
  CHECK(load_error("labels: I\nbottom: Q\n") == ErrorKind::NoBottom);
  CHECK(load_error("labels: I A B\nbottom: I\njoin: A B = A\njoin: B A = B\n") ==
        ErrorKind::NotALattice);
  CHECK(load_error("labels: I A\nbottom: I\naxiom: Nlem @ A\naxiom: Nlem @ I\n") ==
        ErrorKind::NotALattice);
  CHECK(load_error("nonsense line\n") == ErrorKind::SyntaxError);
  auto lat = TaintLattice::four_chain();
  CHECK_THROWS_AS(lat->label("Q"), Error);
}

TEST_CASE("random lattices satisfy the laws") {
  // Powerset lattices of {0..k-1} described in order form.
  for (int k = 1; k <= 3; ++k) {
    std::string text = "labels:";
    int n = 1 << k;
    for (int s = 0; s < n; ++s) text += " s" + std::to_string(s);
    text += "\nbottom: s0\n";
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        if (s != t && (s & t) == s) text += "order: s" + std::to_string(s) + " <= s" + std::to_string(t) + "\n";
    auto lat = TaintLattice::load(text);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        CHECK(lat.join(lat.label("s" + std::to_string(s)), lat.label("s" + std::to_string(t))) ==
              lat.label("s" + std::to_string(s | t)));
  }
}
