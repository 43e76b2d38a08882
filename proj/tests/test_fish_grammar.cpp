#include <doctest.h>

#include <map>
#include <set>

#include "finfish/fish_grammar.hpp"

using namespace finfish;

TEST_CASE("term text round trip") {
  const char* samples[] = {"A",
                           "B1(A)",
                           "B2(B1(A))",
                           "C1(A,A)",
                           "C2(B2(A),2,A)",
                           "C3(C1(A,A),3,B1(A))"};
  for (const char* s : samples) {
    TermPtr t = parse_term(s);
    CHECK(term_to_string(*t) == s);
    CHECK(term_equal(*t, *parse_term(term_to_string(*t))));
  }
  CHECK_THROWS_AS(parse_term("B3(A)"), UsageError);
  CHECK_THROWS_AS(parse_term("C2(A,A)"), UsageError);
  CHECK_THROWS_AS(parse_term("A)"), UsageError);
  CHECK(term_size(*parse_term("C2(B2(A),2,A)")) == 5);
}

TEST_CASE("build worked examples") {
  CHECK(build(*term_a()).cell_count() == 1);

  FishComplex b1 = build(*term_b1(term_a()));
  CHECK(canonical_code(b1) == "F,F,1,F/0,F,F,F");
  auto stB1 = stats(b1);
  CHECK(stB1.size == 3);
  CHECK(stB1.lsize == 2);
  CHECK(stB1.rsize == 1);
  CHECK(stB1.fin_word == "LLR");

  auto stB2 = stats(build(*term_b2(term_a())));
  CHECK(stB2.size == 3);
  CHECK(stB2.rsize == 2);
  CHECK(stB2.fin_word == "LRR");

  FishComplex c1 = build(*term_c1(term_a(), term_a()));
  auto stC1 = stats(c1);
  CHECK(stC1.size == 4);
  CHECK(stC1.tails == 1);
  CHECK(stC1.fin_word == "LRLR");

  FishComplex c3 = build(*term_c3(term_a(), 1, term_a()));
  auto stC3 = stats(c3);
  CHECK(stC3.size == 4);
  CHECK(stC3.tails == 2);
  CHECK(stC3.rsize == 2);
  CHECK(stC3.lsize == 2);
  CHECK(stC3.fin_word == "LLR");

  FishComplex c2 = build(*parse_term("C2(B2(A),2,A)"));
  CHECK(c2.cell_count() == 4);
  auto stC2 = stats(c2);
  CHECK(stC2.size == 5);
  CHECK(stC2.tails == 2);
  CHECK(stC2.fin_word == "LRLR");

  FishComplex big = build(*parse_term("B2(C1(A,A))"));
  auto stBig = stats(big);
  CHECK(stBig.size == 5);
  CHECK(stBig.lsize == 2);
  CHECK(stBig.rsize == 3);
  CHECK(stBig.tails == 1);
  CHECK(stBig.fin_word == "LRLRR");
  CHECK(stBig.area == 5);

  // 2x2 parallelogram as B2(B1(A)): size 4, area 4
  auto stPara = stats(build(*parse_term("B2(B1(A))")));
  CHECK(stPara.size == 4);
  CHECK(stPara.area == 4);
}

TEST_CASE("build rejects bad positions") {
  CHECK_THROWS_AS(build(*term_c2(term_a(), 1, term_a())), StructureError);
  CHECK_THROWS_AS(build(*term_c2(term_a(), 2, term_a())), StructureError);
  CHECK_THROWS_AS(build(*term_c3(term_a(), 2, term_a())), StructureError);
  CHECK_THROWS_AS(build(*term_c3(term_a(), 5, term_a())), StructureError);
}

TEST_CASE("predicted stats match spec examples") {
  StatVector b1 = predicted_stats(*parse_term("B1(A)"));
  CHECK(b1 == StatVector{3, 1, 1, 2, 3});
  StatVector c1 = predicted_stats(*parse_term("C1(A,A)"));
  CHECK(c1 == StatVector{4, 1, 2, 2, 4});
  StatVector c3 = predicted_stats(*parse_term("C3(A,1,A)"));
  CHECK(c3 == StatVector{4, 2, 2, 2, 3});
}

TEST_CASE("terms per size and bijectivity") {
  std::map<int, long> counts;
  for_each_term(7, [&](const TermPtr& t, const FishComplex& c) {
    int s = term_size(*t);
    counts[s]++;
    // realization statistics agree with the grammar prediction
    StatVector p = predicted_stats(*t);
    FishStats st = stats(c);
    CHECK(p.size == st.size);
    CHECK(p.tails == st.tails);
    CHECK(p.rsize == st.rsize);
    CHECK(p.lsize == st.lsize);
    CHECK(p.fin == st.fin);
    // grammar round trip
    TermPtr back = decompose(c);
    CHECK(term_equal(*t, *back));
  });
  CHECK(counts[2] == 1);
  CHECK(counts[3] == 2);
  CHECK(counts[4] == 6);
  CHECK(counts[5] == 22);
  CHECK(counts[6] == 91);
  CHECK(counts[7] == 408);
}

TEST_CASE("decompose worked examples") {
  CHECK(term_equal(*decompose(FishComplex::single_cell()), *term_a()));
  for (const char* s : {"C2(B2(A),2,A)", "B2(C1(A,A))", "B1(B1(A))",
                        "C3(C1(A,A),3,B1(A))", "C1(B2(B1(A)),C3(A,1,A))"}) {
    TermPtr t = parse_term(s);
    CHECK(term_equal(*decompose(build(*t)), *t));
  }
}

TEST_CASE("complex round trip through the grammar") {
  // every fish of area <= 4 from the growth oracle decomposes and rebuilds
  for (const auto& code : enumerate_by_area(4)) {
    FishComplex f = parse_canonical_code(code);
    FishComplex g = build(*decompose(f));
    CHECK(canonical_code(g) == code);
  }
}

TEST_CASE("grammar and growth enumerate the same fish") {
  const int maxArea = 5;
  std::set<std::string> viaGrammar;
  for_each_term(maxArea + 1, [&](const TermPtr&, const FishComplex& c) {
    if (c.cell_count() <= maxArea) viaGrammar.insert(canonical_code(c));
  });
  CHECK(viaGrammar == enumerate_by_area(maxArea));
}

TEST_CASE("joint distribution at size 4") {
  JointTable jt = joint_distribution(4);
  // keys: (size, tails, rsize, lsize, fin)
  JointTable expected = {
      {{2, 1, 1, 1, 2}, 1}, {{3, 1, 1, 2, 3}, 1}, {{3, 1, 2, 1, 3}, 1},
      {{4, 1, 1, 3, 4}, 1}, {{4, 1, 2, 2, 4}, 3}, {{4, 1, 3, 1, 4}, 1},
      {{4, 2, 2, 2, 3}, 1},
  };
  CHECK(jt == expected);
}

TEST_CASE("joint distribution matches per-object enumeration") {
  const int maxSize = 7;
  JointTable byDP = joint_distribution(maxSize);
  JointTable byEnum;
  for_each_term(maxSize, [&](const TermPtr&, const FishComplex& c) {
    FishStats st = stats(c);
    byEnum[{st.size, st.tails, st.rsize, st.lsize, st.fin}] += 1;
  });
  CHECK(byDP == byEnum);
}

TEST_CASE("term budget guard") {
  TermBudget tiny;
  tiny.max_terms = 5;
  CHECK_THROWS_AS(for_each_term(5, [](const TermPtr&, const FishComplex&) {}, tiny),
                  BudgetError);
}
