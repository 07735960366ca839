// Copyright 2026 The parabraid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Builds the qutrit braid representation, names the single-qudit braid gates and
// computes the Clifford closure they generate.

#include <cstdio>

#include "parabraid/clifford_tools.hpp"
#include "parabraid/logical_gates.hpp"

int main() {
  using namespace parabraid;
  const int d = 3;
  const Encoding enc(d, 1);
  const auto rep = enc.representation(FZCParams{d, 0, Sign::plus});

  const auto res = check_representation(rep);
  std::printf("braid relations: max residual %.2e\n", res.max_residual());

  for (const auto& word : {BraidWord::parse("1"), braid_words::fourier()}) {
    const auto id = identify_gate(enc, rep, word);
    std::printf("word %-8s -> %s\n", word.to_string().c_str(), id.name.c_str());
  }

  const auto group = closure(braid_single_qudit_generators(enc, rep));
  std::printf("closure order %zu, modulo Paulis %zu, |Sp(2,Z_%d)| = %llu\n", group.order(),
              group.symplectic_order(), d, static_cast<unsigned long long>(symplectic_group_order(d, 1)));
  return 0;
}
