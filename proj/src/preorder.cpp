// Copyright 2026 The lexmetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexmetric/preorder.hpp"

#include <algorithm>

#include "lexmetric/error.hpp"

namespace lexmetric {
namespace {

void close_transitively(std::vector<char>& rel, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[k * n + j]) rel[i * n + j] = 1;
      }
    }
  }
}

}  // namespace

Preorder Preorder::empty(std::vector<RuleMask> domain) {
  const std::size_t n = domain.size();
  std::vector<char> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  return Preorder(std::move(domain), std::move(rel));
}

Preorder Preorder::from_pairs(std::vector<RuleMask> domain,
                              const std::vector<Pair>& strict,
                              const std::vector<Pair>& indifferent) {
  Preorder p = empty(std::move(domain));
  const std::size_t n = p.size();
  for (const auto& [worse, better] : strict) {
    p.rel_[p.index_of(worse) * n + p.index_of(better)] = 1;
  }
  for (const auto& [a, b] : indifferent) {
    const std::size_t i = p.index_of(a), j = p.index_of(b);
    p.rel_[i * n + j] = 1;
    p.rel_[j * n + i] = 1;
  }
  close_transitively(p.rel_, n);
  for (const auto& [worse, better] : strict) {
    if (!p.less(p.index_of(worse), p.index_of(better))) {
      throw Error(Errc::kNotAPreorder,
                  "declared strict pair (" + std::to_string(worse) + ", " +
                      std::to_string(better) + ") collapses into a cycle");
    }
  }
  return p;
}

Preorder Preorder::from_matrix(std::vector<RuleMask> domain, std::vector<char> leq) {
  const std::size_t n = domain.size();
  if (leq.size() != n * n) throw Error(Errc::kInvalidArgument, "relation matrix has the wrong size");
  for (auto& c : leq) c = c ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i * n + i]) throw Error(Errc::kNotAPreorder, "relation is not reflexive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k * n + j] && !leq[i * n + j]) {
          throw Error(Errc::kNotAPreorder, "relation is not transitive");
        }
      }
    }
  }
  return Preorder(std::move(domain), std::move(leq));
}

Preorder Preorder::from_scores(std::vector<RuleMask> domain,
                               const std::vector<double>& scores) {
  const std::size_t n = domain.size();
  if (scores.size() != n) throw Error(Errc::kInvalidArgument, "one score per regulation expected");
  std::vector<char> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = scores[j] <= scores[i];
  }
  return Preorder(std::move(domain), std::move(rel));
}

std::size_t Preorder::index_of(RuleMask mask) const {
  auto it = std::find(domain_.begin(), domain_.end(), mask);
  if (it == domain_.end()) {
    throw Error(Errc::kInvalidArgument,
                "regulation " + std::to_string(mask) + " is outside the preference domain");
  }
  return static_cast<std::size_t>(it - domain_.begin());
}

bool Preorder::is_total() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (!comparable(i, j)) return false;
    }
  }
  return true;
}

std::vector<Preorder::Pair> Preorder::strict_pairs() const {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (less(i, j)) out.emplace_back(domain_[i], domain_[j]);
    }
  }
  return out;
}

std::vector<Preorder::Pair> Preorder::indifferent_pairs() const {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (leq(i, j) && leq(j, i)) out.emplace_back(domain_[i], domain_[j]);
    }
  }
  return out;
}

}  // namespace lexmetric
