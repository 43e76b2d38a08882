#include "finfish/fish_grammar.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <vector>

namespace finfish {

namespace {

TermPtr make_term(TermKind k, TermPtr t1, TermPtr t2, int pos) {
  auto t = std::make_shared<FishTerm>();
  t->kind = k;
  t->t1 = std::move(t1);
  t->t2 = std::move(t2);
  t->pos = pos;
  return t;
}

}  // namespace

TermPtr term_a() { return make_term(TermKind::A, nullptr, nullptr, 0); }
TermPtr term_b1(TermPtr t1) { return make_term(TermKind::B1, std::move(t1), nullptr, 0); }
TermPtr term_b2(TermPtr t1) { return make_term(TermKind::B2, std::move(t1), nullptr, 0); }
TermPtr term_c1(TermPtr t1, TermPtr t2) {
  return make_term(TermKind::C1, std::move(t1), std::move(t2), 0);
}
TermPtr term_c2(TermPtr t1, int pos, TermPtr t2) {
  return make_term(TermKind::C2, std::move(t1), std::move(t2), pos);
}
TermPtr term_c3(TermPtr t1, int pos, TermPtr t2) {
  return make_term(TermKind::C3, std::move(t1), std::move(t2), pos);
}

int term_size(const FishTerm& t) {
  switch (t.kind) {
    case TermKind::A: return 2;
    case TermKind::B1:
    case TermKind::B2: return term_size(*t.t1) + 1;
    default: return term_size(*t.t1) + term_size(*t.t2);
  }
}

bool term_equal(const FishTerm& x, const FishTerm& y) {
  if (x.kind != y.kind || x.pos != y.pos) return false;
  if (!!x.t1 != !!y.t1 || !!x.t2 != !!y.t2) return false;
  if (x.t1 && !term_equal(*x.t1, *y.t1)) return false;
  if (x.t2 && !term_equal(*x.t2, *y.t2)) return false;
  return true;
}

std::string term_to_string(const FishTerm& t) {
  switch (t.kind) {
    case TermKind::A: return "A";
    case TermKind::B1: return "B1(" + term_to_string(*t.t1) + ")";
    case TermKind::B2: return "B2(" + term_to_string(*t.t1) + ")";
    case TermKind::C1:
      return "C1(" + term_to_string(*t.t1) + "," + term_to_string(*t.t2) + ")";
    case TermKind::C2:
      return "C2(" + term_to_string(*t.t1) + "," + std::to_string(t.pos) + "," +
             term_to_string(*t.t2) + ")";
    case TermKind::C3:
      return "C3(" + term_to_string(*t.t1) + "," + std::to_string(t.pos) + "," +
             term_to_string(*t.t2) + ")";
  }
  throw StructureError("unknown term kind");
}

namespace {

struct TermParser {
  std::string_view s;
  std::size_t i = 0;

  char peek() const { return i < s.size() ? s[i] : '\0'; }
  void expect(char c) {
    if (peek() != c) throw UsageError("term parse: expected '" + std::string(1, c) + "'");
    ++i;
  }
  int number() {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw UsageError("term parse: expected a position");
    int v = std::atoi(std::string(s.substr(i, j - i)).c_str());
    i = j;
    return v;
  }
  TermPtr term() {
    if (peek() == 'A') {
      ++i;
      return term_a();
    }
    if (peek() == 'B') {
      ++i;
      char which = peek();
      if (which != '1' && which != '2') throw UsageError("term parse: B1 or B2");
      ++i;
      expect('(');
      TermPtr t1 = term();
      expect(')');
      return which == '1' ? term_b1(t1) : term_b2(t1);
    }
    if (peek() == 'C') {
      ++i;
      char which = peek();
      if (which != '1' && which != '2' && which != '3')
        throw UsageError("term parse: C1, C2 or C3");
      ++i;
      expect('(');
      TermPtr t1 = term();
      expect(',');
      if (which == '1') {
        TermPtr t2 = term();
        expect(')');
        return term_c1(t1, t2);
      }
      int pos = number();
      expect(',');
      TermPtr t2 = term();
      expect(')');
      return which == '2' ? term_c2(t1, pos, t2) : term_c3(t1, pos, t2);
    }
    throw UsageError("term parse: unexpected character");
  }
};

}  // namespace

TermPtr parse_term(std::string_view text) {
  TermParser p{text};
  TermPtr t = p.term();
  if (p.i != text.size()) throw UsageError("term parse: trailing input");
  return t;
}

namespace {

// Glue the strip cells for every L fin edge with 1-based index <= upto.
// Returns the strip cells in creation order.
std::vector<int> apply_strip(FishBuilder& b, const FinResult& f, int upto) {
  std::vector<int> cells;
  for (int i = 1; i <= upto; ++i) {
    if (f.word[i - 1] != 'L') continue;
    int d = b.add_cell();
    b.glue({d, SideKind::UR}, f.sides[i - 1]);
    if (!cells.empty()) {
      if (f.word[i - 2] == 'L')
        b.glue({d, SideKind::UL}, {cells.back(), SideKind::LR});
      else
        b.glue({d, SideKind::UL}, f.sides[i - 2]);
    }
    cells.push_back(d);
  }
  return cells;
}

}  // namespace

FishComplex build(const FishTerm& t) {
  switch (t.kind) {
    case TermKind::A:
      return FishComplex::single_cell();
    case TermKind::B1: {
      FishComplex base = build(*t.t1);
      FishBuilder b(base);
      int d = b.add_cell();
      b.glue({d, SideKind::LR}, {base.head_cell(), SideKind::UL});
      return b.freeze();
    }
    case TermKind::B2: {
      FishComplex base = build(*t.t1);
      FinResult f = fin(base);
      FishBuilder b(base);
      apply_strip(b, f, static_cast<int>(f.word.size()));
      return b.freeze();
    }
    case TermKind::C1: {
      FishComplex base = build(*t.t1);
      FinResult f = fin(base);
      FishBuilder b(base);
      apply_strip(b, f, static_cast<int>(f.word.size()));
      FishComplex extended = b.freeze();
      FinResult ef = fin(extended);
      FishComplex second = build(*t.t2);
      FishBuilder b2(extended);
      int off = b2.adopt(second);
      b2.glue({second.head_cell() + off, SideKind::UL}, ef.sides.back());
      return b2.freeze();
    }
    case TermKind::C2: {
      FishComplex base = build(*t.t1);
      FinResult f = fin(base);
      const int len = static_cast<int>(f.word.size());
      if (t.pos < 1 || t.pos >= len || f.word[t.pos - 1] != 'R')
        throw StructureError("C2 position must name a non-final R fin edge");
      FishBuilder b(base);
      apply_strip(b, f, t.pos - 1);
      FishComplex second = build(*t.t2);
      int off = b.adopt(second);
      b.glue({second.head_cell() + off, SideKind::UL}, f.sides[t.pos - 1]);
      return b.freeze();
    }
    case TermKind::C3: {
      FishComplex base = build(*t.t1);
      FinResult f = fin(base);
      const int len = static_cast<int>(f.word.size());
      if (t.pos < 1 || t.pos > len || f.word[t.pos - 1] != 'L')
        throw StructureError("C3 position must name an L fin edge");
      FishBuilder b(base);
      std::vector<int> strip = apply_strip(b, f, t.pos);
      FishComplex second = build(*t.t2);
      int off = b.adopt(second);
      b.glue({second.head_cell() + off, SideKind::UL}, {strip.back(), SideKind::LR});
      return b.freeze();
    }
  }
  throw StructureError("unknown term kind");
}

namespace {

// Does removing the gluing at side s disconnect the complex?
bool is_cut_edge(const FishComplex& f, SideRef s) {
  auto p = f.partner(s);
  if (!p) throw StructureError("cut-edge test on a free side");
  std::vector<char> seen(f.cell_count(), 0);
  std::queue<int> q;
  seen[s.cell] = 1;
  q.push(s.cell);
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    for (int k = 0; k < 4; ++k) {
      SideRef here{c, static_cast<SideKind>(k)};
      if (here == s || here == *p) continue;
      auto pr = f.partner(here);
      if (pr && !seen[pr->cell]) {
        seen[pr->cell] = 1;
        q.push(pr->cell);
      }
    }
  }
  return !seen[p->cell];
}

// Cells reachable from start without crossing the gluing (s, partner(s)).
std::vector<char> component_of(const FishComplex& f, int start, SideRef s) {
  auto p = f.partner(s);
  std::vector<char> seen(f.cell_count(), 0);
  std::queue<int> q;
  seen[start] = 1;
  q.push(start);
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    for (int k = 0; k < 4; ++k) {
      SideRef here{c, static_cast<SideKind>(k)};
      if (here == s || (p && here == *p)) continue;
      auto pr = f.partner(here);
      if (!pr) continue;
      if (!seen[pr->cell]) {
        seen[pr->cell] = 1;
        q.push(pr->cell);
      }
    }
  }
  return seen;
}

struct Extracted {
  FishComplex complex;
  std::vector<int> to_new;  // old cell -> new cell, -1 outside
};

Extracted extract_cells(const FishComplex& f, const std::vector<char>& keep) {
  std::vector<int> toNew(f.cell_count(), -1);
  int n = 0;
  for (int c = 0; c < f.cell_count(); ++c)
    if (keep[c]) toNew[c] = n++;
  if (n == 0) throw StructureError("extracting an empty subcomplex");
  std::vector<Gluing> gl;
  for (const auto& g : f.gluings())
    if (keep[g.a.cell] && keep[g.b.cell])
      gl.push_back({{toNew[g.a.cell], g.a.kind}, {toNew[g.b.cell], g.b.kind}});
  return {FishComplex::from_gluings(n, gl), std::move(toNew)};
}

int fin_position_of(const FinResult& f, SideRef s) {
  for (std::size_t i = 0; i < f.sides.size(); ++i)
    if (f.sides[i] == s) return static_cast<int>(i) + 1;
  return 0;
}

}  // namespace

TermPtr decompose(const FishComplex& f) {
  if (f.cell_count() == 1) return term_a();
  const FinResult fr = fin(f);
  std::vector<int> finCells;
  for (const SideRef& s : fr.sides)
    if (s.kind == SideKind::LL) finCells.push_back(s.cell);
  if (finCells.empty() || finCells.front() != f.head_cell())
    throw StructureError("decompose: fin does not start at the head");

  std::vector<char> removable(f.cell_count(), 0);
  int cutCell = -1;
  for (int c : finCells) {
    if (f.is_free({c, SideKind::UL})) {
      if (c != f.head_cell())
        throw StructureError("decompose: non-head fin cell with free UL");
      removable[c] = 1;
      continue;
    }
    if (is_cut_edge(f, {c, SideKind::UL})) {
      cutCell = c;
      break;
    }
    removable[c] = 1;
  }

  if (cutCell < 0) {
    // every fin cell removable: strip case B2
    std::vector<char> keep(f.cell_count(), 0);
    for (int c = 0; c < f.cell_count(); ++c) keep[c] = !removable[c];
    auto ex = extract_cells(f, keep);
    return term_b2(decompose(ex.complex));
  }

  const SideRef cutSide{cutCell, SideKind::UL};
  const SideRef cutPartner = *f.partner(cutSide);
  if (cutPartner.kind != SideKind::LR)
    throw StructureError("decompose: cut edge pairs UL with a non-LR side");

  // P2 = the side of the cut containing the non-removable fin cell.
  std::vector<char> inP2 = component_of(f, cutCell, cutSide);
  if (inP2[cutPartner.cell])
    throw StructureError("decompose: cut edge does not split the complex");
  std::vector<char> keep2 = inP2;
  auto exP2 = extract_cells(f, keep2);
  TermPtr p2 = decompose(exP2.complex);

  // P1 = other side minus the removable strip.
  std::vector<char> keep1(f.cell_count(), 0);
  bool p1Empty = true;
  for (int c = 0; c < f.cell_count(); ++c) {
    if (inP2[c]) {
      if (removable[c]) throw StructureError("decompose: removable cell fell in P2");
      continue;
    }
    if (!removable[c]) {
      keep1[c] = 1;
      p1Empty = false;
    }
  }

  if (p1Empty) {
    // the whole non-P2 part is the removable head, glued by its LR: case B1
    int stripCount = 0;
    for (int c = 0; c < f.cell_count(); ++c)
      if (!inP2[c] && removable[c]) ++stripCount;
    if (stripCount != 1 || cutPartner.cell != f.head_cell())
      throw StructureError("decompose: degenerate strip is not a B1 head");
    return term_b1(p2);
  }

  auto exP1 = extract_cells(f, keep1);
  const FinResult finP1 = fin(exP1.complex);

  if (removable[cutPartner.cell]) {
    // cut lands on a strip cell: case C3; its UR holds the chosen L fin edge
    auto l = f.partner({cutPartner.cell, SideKind::UR});
    if (!l || l->kind != SideKind::LL || exP1.to_new[l->cell] < 0)
      throw StructureError("decompose: C3 strip cell UR is not glued into P1");
    int pos = fin_position_of(finP1, {exP1.to_new[l->cell], SideKind::LL});
    if (pos == 0) throw StructureError("decompose: C3 edge not on the fin of P1");
    return term_c3(decompose(exP1.complex), pos, p2);
  }

  if (exP1.to_new[cutPartner.cell] < 0)
    throw StructureError("decompose: cut partner neither strip nor P1");
  int pos = fin_position_of(finP1, {exP1.to_new[cutPartner.cell], SideKind::LR});
  if (pos == 0) throw StructureError("decompose: attachment edge not on the fin of P1");
  if (pos == static_cast<int>(finP1.sides.size()))
    return term_c1(decompose(exP1.complex), p2);
  return term_c2(decompose(exP1.complex), pos, p2);
}

StatVector predicted_stats(const FishTerm& t) {
  switch (t.kind) {
    case TermKind::A:
      return {2, 1, 1, 1, 2};
    case TermKind::B1: {
      StatVector s = predicted_stats(*t.t1);
      return {s.size + 1, s.tails, s.rsize, s.lsize + 1, s.fin + 1};
    }
    case TermKind::B2: {
      StatVector s = predicted_stats(*t.t1);
      return {s.size + 1, s.tails, s.rsize + 1, s.lsize, s.fin + 1};
    }
    case TermKind::C1: {
      StatVector a = predicted_stats(*t.t1), b = predicted_stats(*t.t2);
      return {a.size + b.size, a.tails + b.tails - 1, a.rsize + b.rsize,
              a.lsize + b.lsize, a.fin + b.fin};
    }
    case TermKind::C2:
    case TermKind::C3: {
      StatVector a = predicted_stats(*t.t1), b = predicted_stats(*t.t2);
      int finLen = static_cast<int>(fin(build(t)).sides.size());
      return {a.size + b.size, a.tails + b.tails, a.rsize + b.rsize,
              a.lsize + b.lsize, finLen};
    }
  }
  throw StructureError("unknown term kind");
}

JointTable joint_distribution(int max_size) {
  if (max_size < 2) throw UsageError("joint_distribution: max_size must be >= 2");
  using Key3 = std::array<int, 3>;  // (tails, rsize, fin)
  std::vector<std::map<Key3, Int>> bySize(max_size + 1);
  bySize[2][{1, 1, 2}] = 1;
  for (int s = 3; s <= max_size; ++s) {
    for (const auto& [k, c] : bySize[s - 1]) {
      bySize[s][{k[0], k[1], k[2] + 1}] += c;      // B1
      bySize[s][{k[0], k[1] + 1, k[2] + 1}] += c;  // B2
    }
    for (int s1 = 2; s1 <= s - 2; ++s1) {
      int s2 = s - s1;
      for (const auto& [k1, c1] : bySize[s1])
        for (const auto& [k2, c2] : bySize[s2]) {
          Int prod = c1 * c2;
          bySize[s][{k1[0] + k2[0] - 1, k1[1] + k2[1], k1[2] + k2[2]}] += prod;  // C1
          // C2/C3 together sweep every intermediate fin value once
          for (int fv = k2[2] + 1; fv <= k2[2] + k1[2] - 1; ++fv)
            bySize[s][{k1[0] + k2[0], k1[1] + k2[1], fv}] += prod;
        }
    }
  }
  JointTable out;
  for (int s = 2; s <= max_size; ++s)
    for (const auto& [k, c] : bySize[s]) out[{s, k[0], k[1], s - k[1], k[2]}] = c;
  return out;
}

void for_each_term(int max_size,
                   const std::function<void(const TermPtr&, const FishComplex&)>& fn,
                   const TermBudget& budget) {
  if (max_size < 2) throw UsageError("for_each_term: max_size must be >= 2");
  struct Entry {
    TermPtr term;
    std::string fin_word;
  };
  std::vector<std::vector<Entry>> levels(max_size + 1);
  long long produced = 0;
  auto emit = [&](int s, const TermPtr& t) {
    if (++produced > budget.max_terms)
      throw BudgetError("for_each_term exceeded its term budget");
    FishComplex c = build(*t);
    levels[s].push_back({t, fin(c).word});
    fn(t, c);
  };
  emit(2, term_a());
  for (int s = 3; s <= max_size; ++s) {
    for (const Entry& e : levels[s - 1]) {
      emit(s, term_b1(e.term));
      emit(s, term_b2(e.term));
    }
    for (int s1 = 2; s1 <= s - 2; ++s1) {
      int s2 = s - s1;
      for (const Entry& e1 : levels[s1])
        for (const Entry& e2 : levels[s2]) {
          emit(s, term_c1(e1.term, e2.term));
          const std::string& w = e1.fin_word;
          for (int p = 1; p <= static_cast<int>(w.size()); ++p) {
            if (w[p - 1] == 'L')
              emit(s, term_c3(e1.term, p, e2.term));
            else if (p < static_cast<int>(w.size()))
              emit(s, term_c2(e1.term, p, e2.term));
          }
        }
    }
  }
}

}  // namespace finfish
