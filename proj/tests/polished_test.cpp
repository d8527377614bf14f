// Copyright 2026 The Bruhat Authors.
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

#include <gtest/gtest.h>

#include "bruhat/bruhat.hpp"
#include "oracles.hpp"

namespace bruhat {
namespace {

Permutation P(const char* s) { return parse_permutation(s); }

Permutation drop_prefix(const Permutation& w, int m) {
  std::vector<int> v;
  for (int i = m + 1; i <= w.degree(); ++i) v.push_back(w(i) - m);
  return Permutation(std::move(v));
}

TEST(Patterns, Examples) {
  EXPECT_TRUE(avoids_smooth_patterns(P("34521")));
  EXPECT_FALSE(avoids_smooth_patterns(P("4231")));
  EXPECT_FALSE(avoids_smooth_patterns(P("3412")));
  EXPECT_FALSE(avoids_selfdual_patterns(P("34521")));
  EXPECT_TRUE(avoids_selfdual_patterns(Permutation::identity(6)));
  EXPECT_TRUE(avoids_selfdual_patterns(P("154973268")));
  for (const auto& p : selfdual_patterns()) EXPECT_FALSE(avoids_selfdual_patterns(p)) << p.to_string();
}

TEST(Patterns, AgreeWithSubsetOracle) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& w : oracle::all_permutations(n)) {
      bool any = false;
      for (const auto& p : selfdual_patterns()) any = any || oracle::contains(w, p);
      ASSERT_EQ(avoids_selfdual_patterns(w), !any) << w.to_string();
    }
  }
}

TEST(ClassifyType, Examples) {
  const auto a = classify_type(P("34521"));
  EXPECT_EQ(a.type, StepType::r1);
  EXPECT_EQ(a.t, 2);
  EXPECT_EQ(a.c_chain, (std::vector<int>{1, 4, 5}));

  const auto b = classify_type(P("4321"));
  EXPECT_EQ(b.type, StepType::n);
  EXPECT_EQ(b.t, 3);

  const auto c = classify_type(P("1324"));
  EXPECT_EQ(c.type, StepType::n);
  EXPECT_EQ(c.t, 0);

  EXPECT_EQ(classify_type(P("54123")).type, StepType::l1);
  EXPECT_EQ(classify_type(P("312")).type, StepType::l0);
  EXPECT_EQ(classify_type(P("231")).type, StepType::r0);
}

TEST(ClassifyType, ErrorsNameThePattern) {
  try {
    classify_type(P("3412"));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("3412"), std::string::npos);
  }
  try {
    classify_type(P("4231"));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("4231"), std::string::npos);
  }
  try {
    classify_type(P("45321"));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("45321"), std::string::npos);
  }
}

TEST(ClassifyType, InvariantsOnSmoothPermutations) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : oracle::all_permutations(n)) {
      if (!avoids_smooth_patterns(w)) continue;
      const auto g = detail::regions(w);
      TypeTag tag;
      try {
        tag = classify_type(w);
      } catch (const ValidationError&) {
        ASSERT_FALSE(avoids_selfdual_patterns(w)) << w.to_string();
        continue;
      }
      ASSERT_EQ(static_cast<int>(tag.c_chain.size()), tag.t + 1);
      for (std::size_t i = 1; i < tag.c_chain.size(); ++i) {
        ASSERT_LT(tag.c_chain[i - 1], tag.c_chain[i]);
        ASSERT_GT(w(tag.c_chain[i - 1]), w(tag.c_chain[i]));
      }
      ASSERT_EQ(tag.type == StepType::n, g.r.empty() && g.l.empty()) << w.to_string();
      if (tag.type == StepType::r0 || tag.type == StepType::r1) {
        ASSERT_TRUE(g.l.empty() && !g.r.empty());
      }
      if (is_left_type(tag.type)) {
        const auto mirror = classify_type(inverse(w));
        ASSERT_EQ(mirror.type, tag.type == StepType::l0 ? StepType::r0 : StepType::r1);
      }
    }
  }
}

TEST(DecomposeStep, Examples) {
  const auto a = decompose_step(P("4321"));
  EXPECT_EQ(a.tag.type, StepType::n);
  EXPECT_TRUE(a.next.is_identity());
  EXPECT_EQ(a.K, (NodeSet{1, 2, 3}));

  const auto b = decompose_step(P("21"));
  EXPECT_EQ(b.tag.type, StepType::n);
  EXPECT_EQ(b.tag.t, 1);
  EXPECT_TRUE(b.next.is_identity());
  EXPECT_EQ(b.K, NodeSet{1});

  // Leading fixed points shift K.
  const auto c = decompose_step(P("1243"));
  EXPECT_EQ(c.K, NodeSet{3});
  EXPECT_TRUE(c.next.is_identity());

  EXPECT_THROW(decompose_step(Permutation::identity(3)), ValidationError);
}

TEST(DecomposeStep, OneStepReductionProperties) {
  int r1_steps = 0;
  for (int n = 2; n <= 7; ++n) {
    for (const auto& w : oracle::all_permutations(n)) {
      if (!avoids_selfdual_patterns(w)) continue;
      Permutation x = w;
      while (!x.is_identity()) {
        int m = 0;
        while (x(m + 1) == m + 1) ++m;
        const auto step = decompose_step(x);
        ASSERT_TRUE(avoids_selfdual_patterns(step.next)) << x.to_string();
        // The extra s_t of an overlap step adds one back.
        ASSERT_EQ(length(x) + (is_overlap_type(step.tag.type) ? 1 : 0),
                  length(step.next) + length(longest_element(SymmetricGroup(n), step.K)))
            << x.to_string();
        if (step.tag.type == StepType::r1) {
          const auto v = drop_prefix(x, m);
          const auto g = detail::regions(v);
          const int t = step.tag.t;
          int r1 = 0;
          for (int a : g.r) {
            if (t >= 2 && a > g.c[static_cast<std::size_t>(t - 2)] && a < g.c[static_cast<std::size_t>(t - 1)]) ++r1;
          }
          const auto after = classify_type(drop_prefix(step.next, m + t - 1));
          ASSERT_EQ(after.t, r1 + 1) << x.to_string();
          ASSERT_NE(after.type, StepType::r1) << x.to_string();
          ++r1_steps;
        }
        x = step.next;
      }
    }
  }
  EXPECT_GT(r1_steps, 0);
}

TEST(PolishedDecompose, NineElementExample) {
  const auto d = polished_decompose(P("154973268"));
  const PolishedDecomposition expected{{
      {NodeSet{8}, NodeSet{8}, NodeSet{}},
      {NodeSet::range(2, 7), NodeSet{2, 3, 4, 6, 7}, NodeSet{4, 5, 6}},
  }};
  EXPECT_EQ(d, expected);
  EXPECT_EQ(d.blocks[1].J & d.blocks[1].Jp, (NodeSet{4, 6}));
  EXPECT_EQ(reconstruct(d, DynkinDiagram::type_a(8)), P("154973268"));
}

TEST(PolishedDecompose, SmallExamples) {
  const PolishedDecomposition w0{{{NodeSet{1, 2, 3}, NodeSet{1, 2, 3}, NodeSet{}}}};
  EXPECT_EQ(polished_decompose(P("4321")), w0);
  EXPECT_TRUE(polished_decompose(Permutation::identity(5)).blocks.empty());
}

TEST(PolishedDecompose, RejectsPatternsWithMinimalWitness) {
  try {
    polished_decompose(P("34521"));
    FAIL();
  } catch (const PatternContainment& e) {
    EXPECT_EQ(e.occurrence().pattern, P("34521"));
    EXPECT_TRUE(is_minimal_occurrence(P("34521"), e.occurrence()));
  }
  try {
    polished_decompose(P("256431"));
    FAIL();
  } catch (const PatternContainment& e) {
    EXPECT_TRUE(is_minimal_occurrence(P("256431"), e.occurrence()));
  }
}

TEST(PolishedDecompose, RoundTripAndStructure) {
  for (int n = 1; n <= 7; ++n) {
    const SymmetricGroup g(n);
    for (const auto& w : oracle::all_permutations(n)) {
      if (!avoids_selfdual_patterns(w)) continue;
      const auto d = polished_decompose(w);
      ASSERT_NO_THROW(validate_decomposition(d, g.diagram()));
      ASSERT_EQ(reconstruct(g, d), w);
      NodeSet all;
      for (const auto& b : d.blocks) all = all | b.S;
      ASSERT_EQ(all, support(g, w)) << w.to_string();
    }
  }
}

TEST(PolishedDecompose, BlockLengthsAdd) {
  for (int n = 2; n <= 7; ++n) {
    const SymmetricGroup g(n);
    auto N = [&](NodeSet K) { return length(longest_element(g, K)); };
    for (const auto& w : oracle::all_permutations(n)) {
      if (!avoids_selfdual_patterns(w)) continue;
      int total = 0;
      for (const auto& b : polished_decompose(w).blocks) {
        const int expect = N(b.J) + N(b.Jp) - N(b.J & b.Jp);
        ASSERT_EQ(length(block_element(g, b)), expect) << w.to_string();
        total += expect;
      }
      ASSERT_EQ(total, length(w));
    }
  }
}

TEST(PolishedDecompose, SingleBlockIsBpDecomposition) {
  int single = 0;
  for (int n = 2; n <= 6; ++n) {
    const SymmetricGroup g(n);
    for (const auto& w : oracle::all_permutations(n)) {
      if (!avoids_selfdual_patterns(w)) continue;
      const auto d = polished_decompose(w);
      if (d.blocks.size() != 1) continue;
      const auto& b = d.blocks.front();
      const auto pd = parabolic_decompose(w, b.Jp);
      ASSERT_EQ(pd.parabolic_part, longest_element(g, b.Jp)) << w.to_string();
      ASSERT_EQ(pd.quotient_part, compose(longest_element(g, b.J), longest_element(g, b.J & b.Jp))) << w.to_string();
      ASSERT_TRUE(is_bp_decomposition(g, w, b.Jp)) << w.to_string();
      ++single;
    }
  }
  EXPECT_GT(single, 50);
}

TEST(Reconstruct, Examples) {
  const PolishedDecomposition s1{{{NodeSet{1}, NodeSet{1}, NodeSet{}}}};
  EXPECT_EQ(reconstruct(s1, DynkinDiagram::type_a(1)), P("21"));
  const PolishedDecomposition s1s2{{{NodeSet{1, 2}, NodeSet{1}, NodeSet{2}}}};
  EXPECT_EQ(reconstruct(s1s2, DynkinDiagram::type_a(2)), P("231"));
  EXPECT_EQ(reconstruct(PolishedDecomposition{}, DynkinDiagram::type_a(3)), Permutation::identity(4));
}

TEST(Reconstruct, ValidationErrors) {
  const auto A3 = DynkinDiagram::type_a(3);
  const PolishedDecomposition disconnected{{{NodeSet{1, 3}, NodeSet{1, 3}, NodeSet{}}}};
  EXPECT_THROW(reconstruct(disconnected, A3), ValidationError);
  const PolishedDecomposition joined{{{NodeSet{1, 2}, NodeSet{1, 2}, NodeSet{1, 2}}}};
  EXPECT_THROW(reconstruct(joined, A3), ValidationError);
  const PolishedDecomposition not_cover{{{NodeSet{1, 2, 3}, NodeSet{1}, NodeSet{3}}}};
  EXPECT_THROW(reconstruct(not_cover, A3), ValidationError);
  const PolishedDecomposition overlap{{{NodeSet{1}, NodeSet{1}, NodeSet{}}, {NodeSet{1, 2}, NodeSet{1, 2}, NodeSet{}}}};
  EXPECT_THROW(reconstruct(overlap, A3), ValidationError);
  const PolishedDecomposition outside{{{NodeSet{4}, NodeSet{4}, NodeSet{}}}};
  EXPECT_THROW(reconstruct(outside, A3), ValidationError);
  EXPECT_THROW(reconstruct(PolishedDecomposition{}, DynkinDiagram::type_b(2)), ValidationError);
}

TEST(BruteForce, Examples) {
  EXPECT_FALSE(is_polished_bruteforce(P("34521")));
  EXPECT_TRUE(is_polished_bruteforce(P("154973268")));
  EXPECT_TRUE(is_polished_bruteforce(Permutation::longest(6)));
  EXPECT_TRUE(is_polished_bruteforce(Permutation::identity(3)));
  const HyperoctahedralGroup b2(2);
  EXPECT_FALSE(is_polished_bruteforce(b2, evaluate(b2, {1, 2, 1})));
  EXPECT_FALSE(is_polished_bruteforce(b2, evaluate(b2, {2, 1, 2})));
  EXPECT_TRUE(is_polished_bruteforce(b2, longest_element(b2, b2.diagram().nodes())));
  EXPECT_THROW(is_polished_bruteforce(HyperoctahedralGroup(9), SignedPermutation::identity(9)), CapacityError);
}

TEST(BruteForce, AgreesWithPatternCriterion) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : oracle::all_permutations(n)) {
      ASSERT_EQ(is_polished_bruteforce(w), avoids_selfdual_patterns(w)) << w.to_string();
    }
  }
}

}  // namespace
}  // namespace bruhat
