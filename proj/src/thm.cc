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

#include "holc/thm.h"

#include <algorithm>
#include <array>

namespace holc {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 37> kRuleNames{{
    {Rule::Ninit, "Ninit"},     {Rule::NtrueI, "NtrueI"},
    {Rule::NfalseE, "NfalseE"}, {Rule::Nlift, "Nlift"},
    {Rule::Nrefl, "Nrefl"},     {Rule::Nsym, "Nsym"},
    {Rule::Ntrans, "Ntrans"},   {Rule::Nlcong, "Nlcong"},
    {Rule::Nacong, "Nacong"},   {Rule::Nsubst, "Nsubst"},
    {Rule::Nbeta, "Nbeta"},     {Rule::Ninst, "Ninst"},
    {Rule::Neta, "Neta"},       {Rule::NnegI, "NnegI"},
    {Rule::NnegE, "NnegE"},     {Rule::NiffE1, "NiffE1"},
    {Rule::NiffE2, "NiffE2"},   {Rule::NiffI, "NiffI"},
    {Rule::Nwk, "Nwk"},         {Rule::NconjI, "NconjI"},
    {Rule::NconjE1, "NconjE1"}, {Rule::NconjE2, "NconjE2"},
    {Rule::NdisjI1, "NdisjI1"}, {Rule::NdisjI2, "NdisjI2"},
    {Rule::NdisjE, "NdisjE"},   {Rule::NimpI, "NimpI"},
    {Rule::NimpE, "NimpE"},     {Rule::NallE, "NallE"},
    {Rule::NallI, "NallI"},     {Rule::NexI, "NexI"},
    {Rule::NexE, "NexE"},       {Rule::Nlem, "Nlem"},
    {Rule::WEM, "WEM"},         {Rule::Choice, "Choice"},
    {Rule::Axiom, "Axiom"},     {Rule::Defn, "Defn"},
    {Rule::Placeholder, "Placeholder"},
}};

thread_local ThmObserver observer;

}  // namespace

std::string_view rule_name(Rule rule) {
  for (const auto& [r, n] : kRuleNames)
    if (r == rule) return n;
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& [r, n] : kRuleNames)
    if (n == name) return r;
  return std::nullopt;
}

Context make_context(std::vector<Term> members) {
  std::sort(members.begin(), members.end(),
            [](const Term& a, const Term& b) { return alpha_compare(a, b) < 0; });
  members.erase(std::unique(members.begin(), members.end(),
                            [](const Term& a, const Term& b) {
                              return alpha_compare(a, b) == 0;
                            }),
                members.end());
  return members;
}

bool context_contains(const Context& ctx, const Term& t) {
  return std::binary_search(
      ctx.begin(), ctx.end(), t,
      [](const Term& a, const Term& b) { return alpha_compare(a, b) < 0; });
}

Context context_insert(Context ctx, const Term& t) {
  auto it = std::lower_bound(
      ctx.begin(), ctx.end(), t,
      [](const Term& a, const Term& b) { return alpha_compare(a, b) < 0; });
  if (it == ctx.end() || alpha_compare(*it, t) != 0) ctx.insert(it, t);
  return ctx;
}

Context context_erase(Context ctx, const Term& t) {
  auto it = std::lower_bound(
      ctx.begin(), ctx.end(), t,
      [](const Term& a, const Term& b) { return alpha_compare(a, b) < 0; });
  if (it != ctx.end() && alpha_compare(*it, t) == 0) ctx.erase(it);
  return ctx;
}

bool context_equal(const Context& a, const Context& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (alpha_compare(a[i], b[i]) != 0) return false;
  return true;
}

bool context_subset(const Context& a, const Context& b) {
  for (const auto& t : a)
    if (!context_contains(b, t)) return false;
  return true;
}

std::set<VarRef> context_fv(const Context& ctx) {
  std::set<VarRef> out;
  for (const auto& t : ctx) out.insert(t.free_vars().begin(), t.free_vars().end());
  return out;
}

bool Thm::same_judgement(const Thm& other) const {
  return label() == other.label() && formula() == other.formula() &&
         context_equal(context(), other.context());
}

void set_thm_observer(ThmObserver obs) { observer = std::move(obs); }

namespace detail {
void notify_thm(const Thm& thm) {
  if (observer) observer(thm);
}
}  // namespace detail

}  // namespace holc
