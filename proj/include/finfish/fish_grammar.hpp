#ifndef FINFISH_FISH_GRAMMAR_HPP
#define FINFISH_FISH_GRAMMAR_HPP

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "finfish/fish_surface.hpp"
#include "finfish/numeric.hpp"

namespace finfish {

enum class TermKind : std::uint8_t { A, B1, B2, C1, C2, C3 };

struct FishTerm;
using TermPtr = std::shared_ptr<const FishTerm>;

// Grammar term. pos is the 1-based fin-edge position of build(*t1) used by
// C2 (an LR edge, not the last) and C3 (an LL edge).
struct FishTerm {
  TermKind kind = TermKind::A;
  TermPtr t1, t2;
  int pos = 0;
};

TermPtr term_a();
TermPtr term_b1(TermPtr t1);
TermPtr term_b2(TermPtr t1);
TermPtr term_c1(TermPtr t1, TermPtr t2);
TermPtr term_c2(TermPtr t1, int pos, TermPtr t2);
TermPtr term_c3(TermPtr t1, int pos, TermPtr t2);

// size(A) = 2, size(B(t)) = size(t)+1, size(C(t1,.,t2)) = size(t1)+size(t2)
int term_size(const FishTerm& t);

bool term_equal(const FishTerm& x, const FishTerm& y);

// Text form: A, B1(x), B2(x), C1(x,y), C2(x,p,y), C3(x,p,y).
std::string term_to_string(const FishTerm& t);
TermPtr parse_term(std::string_view text);

// Realize a term as a cell complex. Throws StructureError when a C2/C3
// position does not name a fin edge of the required kind.
FishComplex build(const FishTerm& t);

// Inverse of build, up to isomorphism: decompose(build(t)) equals t, and
// build(decompose(f)) has the canonical code of f.
TermPtr decompose(const FishComplex& f);

struct StatVector {
  int size = 0, tails = 0, rsize = 0, lsize = 0, fin = 0;
  friend bool operator==(const StatVector&, const StatVector&) = default;
  friend std::strong_ordering operator<=>(const StatVector&, const StatVector&) = default;
};

// Statistics from the grammar recurrences; the C2/C3 fin length is read off
// the realization.
StatVector predicted_stats(const FishTerm& t);

// Exact joint counts over (size, tails, rsize, lsize, fin) for all fish with
// 2 <= size <= max_size, by dynamic programming on the grammar.
JointTable joint_distribution(int max_size);

struct TermBudget {
  long long max_terms = 10'000'000;
};

// Every valid term with size <= max_size exactly once, ascending by size,
// together with its realization.
void for_each_term(int max_size,
                   const std::function<void(const TermPtr&, const FishComplex&)>& fn,
                   const TermBudget& budget = {});

}  // namespace finfish

#endif  // FINFISH_FISH_GRAMMAR_HPP
