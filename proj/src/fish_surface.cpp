#include "finfish/fish_surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>

namespace finfish {

const char* side_name(SideKind k) {
  switch (k) {
    case SideKind::UL: return "UL";
    case SideKind::LL: return "LL";
    case SideKind::LR: return "LR";
    case SideKind::UR: return "UR";
  }
  return "??";
}

std::optional<SideKind> side_from_name(std::string_view name) {
  if (name == "UL") return SideKind::UL;
  if (name == "LL") return SideKind::LL;
  if (name == "LR") return SideKind::LR;
  if (name == "UR") return SideKind::UR;
  return std::nullopt;
}

namespace {

SideRef unpack_side(std::int32_t g) {
  return SideRef{g >> 2, static_cast<SideKind>(g & 3)};
}
std::int32_t pack_side(SideRef s) {
  return (s.cell << 2) | static_cast<std::int32_t>(s.kind);
}

// Positions of all cells by breadth-first propagation from the head; doubles
// as the connectivity check. Throws on conflicting constraints.
std::vector<std::pair<int, int>> positions_from(const std::vector<std::int32_t>& glue,
                                                int head) {
  const int n = static_cast<int>(glue.size() / 4);
  std::vector<std::pair<int, int>> pos(n);
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  pos[head] = {0, 0};
  seen[head] = 1;
  q.push(head);
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    for (int k = 0; k < 4; ++k) {
      std::int32_t g = glue[c * 4 + k];
      if (g < 0) continue;
      SideRef p = unpack_side(g);
      int dp = 0, dq = 0;
      switch (static_cast<SideKind>(k)) {
        case SideKind::UR: dp = 1; break;   // partner sits to the upper right
        case SideKind::LL: dp = -1; break;
        case SideKind::LR: dq = 1; break;
        case SideKind::UL: dq = -1; break;
      }
      std::pair<int, int> want{pos[c].first + dp, pos[c].second + dq};
      if (!seen[p.cell]) {
        seen[p.cell] = 1;
        pos[p.cell] = want;
        q.push(p.cell);
      } else if (pos[p.cell] != want) {
        throw StructureError("plane projection constraints conflict");
      }
    }
  }
  for (int c = 0; c < n; ++c)
    if (!seen[c]) throw StructureError("gluing graph is not connected");
  return pos;
}

// Full validation; returns the head cell.
std::int32_t validate_complex(const std::vector<std::int32_t>& glue) {
  if (glue.empty() || glue.size() % 4 != 0)
    throw StructureError("complex must contain at least one cell");
  const int n = static_cast<int>(glue.size() / 4);
  int freeLower = 0, freeUpper = 0;
  int head = -1;
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < 4; ++k) {
      std::int32_t g = glue[c * 4 + k];
      if (g < 0) {
        (is_lower(static_cast<SideKind>(k)) ? freeLower : freeUpper) += 1;
        continue;
      }
      SideRef p = unpack_side(g);
      if (p.cell < 0 || p.cell >= n)
        throw StructureError("gluing references a missing cell");
      if (p.kind != partner_kind(static_cast<SideKind>(k)))
        throw StructureError("gluing pairs non-complementary side kinds");
      if (glue[p.cell * 4 + static_cast<int>(p.kind)] !=
          pack_side({c, static_cast<SideKind>(k)}))
        throw StructureError("gluing is not an involution");
    }
    if (glue[c * 4 + static_cast<int>(SideKind::UL)] < 0 &&
        glue[c * 4 + static_cast<int>(SideKind::LL)] < 0) {
      if (head >= 0) throw StructureError("more than one cell has UL and LL free");
      head = c;
    }
  }
  if (head < 0) throw StructureError("no cell has both UL and LL free");
  if (freeLower != freeUpper)
    throw StructureError("free lower and upper side counts differ");
  positions_from(glue, head);
  return head;
}

SideRef boundary_successor(const FishComplex& f, SideRef s) {
  const long limit = 4L * f.cell_count() + 4;
  SideRef cand{s.cell, ccw_next(s.kind)};
  long guard = 0;
  while (auto p = f.partner(cand)) {
    cand = SideRef{p->cell, ccw_next(p->kind)};
    if (++guard > limit) throw StructureError("boundary successor does not terminate");
  }
  return cand;
}

}  // namespace

FishComplex FishComplex::single_cell() {
  FishComplex f;
  f.glue_.assign(4, -1);
  f.head_ = 0;
  return f;
}

FishComplex FishComplex::from_gluings(int cell_count, const std::vector<Gluing>& gluings) {
  if (cell_count < 1) throw StructureError("cell count must be positive");
  std::vector<std::int32_t> glue(static_cast<std::size_t>(cell_count) * 4, -1);
  for (const auto& g : gluings) {
    for (SideRef s : {g.a, g.b})
      if (s.cell < 0 || s.cell >= cell_count)
        throw StructureError("gluing references a missing cell");
    if (g.b.kind != partner_kind(g.a.kind))
      throw StructureError("gluing pairs non-complementary side kinds");
    if (glue[index(g.a)] >= 0 || glue[index(g.b)] >= 0)
      throw StructureError("side glued twice");
    glue[index(g.a)] = pack(g.b);
    glue[index(g.b)] = pack(g.a);
  }
  FishComplex f;
  f.glue_ = std::move(glue);
  f.head_ = validate_complex(f.glue_);
  return f;
}

std::vector<Gluing> FishComplex::gluings() const {
  std::vector<Gluing> out;
  for (int c = 0; c < cell_count(); ++c)
    for (int k = 0; k < 4; ++k) {
      SideRef s{c, static_cast<SideKind>(k)};
      auto p = partner(s);
      if (p && s < *p) out.push_back({s, *p});
    }
  return out;
}

FishBuilder::FishBuilder(const FishComplex& base) {
  glue_.resize(static_cast<std::size_t>(base.cell_count()) * 4);
  for (int c = 0; c < base.cell_count(); ++c)
    for (int k = 0; k < 4; ++k) {
      SideRef s{c, static_cast<SideKind>(k)};
      auto p = base.partner(s);
      glue_[FishComplex::index(s)] = p ? FishComplex::pack(*p) : -1;
    }
}

int FishBuilder::add_cell() {
  glue_.insert(glue_.end(), 4, -1);
  return cell_count() - 1;
}

int FishBuilder::adopt(const FishComplex& other) {
  const int offset = cell_count();
  for (int c = 0; c < other.cell_count(); ++c)
    for (int k = 0; k < 4; ++k) {
      SideRef s{c, static_cast<SideKind>(k)};
      auto p = other.partner(s);
      glue_.push_back(p ? FishComplex::pack({p->cell + offset, p->kind}) : -1);
    }
  return offset;
}

bool FishBuilder::is_free(SideRef s) const {
  if (s.cell < 0 || s.cell >= cell_count()) throw StructureError("side out of range");
  return glue_[FishComplex::index(s)] < 0;
}

void FishBuilder::glue(SideRef a, SideRef b) {
  if (b.kind != partner_kind(a.kind))
    throw StructureError("gluing pairs non-complementary side kinds");
  if (!is_free(a) || !is_free(b)) throw StructureError("side glued twice");
  glue_[FishComplex::index(a)] = FishComplex::pack(b);
  glue_[FishComplex::index(b)] = FishComplex::pack(a);
}

FishComplex FishBuilder::freeze() const {
  FishComplex f;
  f.glue_ = glue_;
  f.head_ = validate_complex(f.glue_);
  return f;
}

std::vector<SideRef> trace_boundary(const FishComplex& f) {
  int freeCount = 0;
  for (int c = 0; c < f.cell_count(); ++c)
    for (int k = 0; k < 4; ++k)
      if (f.is_free({c, static_cast<SideKind>(k)})) ++freeCount;
  const SideRef start{f.head_cell(), SideKind::LL};
  std::vector<SideRef> cycle;
  SideRef s = start;
  do {
    cycle.push_back(s);
    if (static_cast<int>(cycle.size()) > freeCount)
      throw StructureError("boundary is not a single cycle");
    s = boundary_successor(f, s);
  } while (s != start);
  if (static_cast<int>(cycle.size()) != freeCount)
    throw StructureError("boundary misses some free sides");
  return cycle;
}

FinResult fin(const FishComplex& f) {
  FinResult r;
  SideRef s{f.head_cell(), SideKind::LL};
  const std::size_t limit = static_cast<std::size_t>(f.cell_count()) * 2 + 2;
  for (;;) {
    if (!is_lower(s.kind)) throw StructureError("fin reached an upper side");
    r.sides.push_back(s);
    r.word.push_back(s.kind == SideKind::LL ? 'L' : 'R');
    if (r.sides.size() > limit) throw StructureError("fin does not terminate");
    if (s.kind == SideKind::LR && f.is_free({s.cell, SideKind::UR})) break;
    s = boundary_successor(f, s);
  }
  return r;
}

FishStats stats(const FishComplex& f) {
  FishStats st;
  st.area = f.cell_count();
  for (int c = 0; c < st.area; ++c) {
    bool ll = f.is_free({c, SideKind::LL});
    bool lr = f.is_free({c, SideKind::LR});
    bool ur = f.is_free({c, SideKind::UR});
    st.lsize += ll ? 1 : 0;
    st.rsize += lr ? 1 : 0;
    if (lr && ur) ++st.tails;
  }
  st.size = st.lsize + st.rsize;
  auto fr = fin(f);
  st.fin = static_cast<int>(fr.sides.size());
  st.fin_word = std::move(fr.word);
  st.branch_points = st.tails - 1;
  st.lower_flats = st.size - st.tails;
  return st;
}

PlanePlacement project(const FishComplex& f) {
  std::vector<std::int32_t> glue(static_cast<std::size_t>(f.cell_count()) * 4, -1);
  for (int c = 0; c < f.cell_count(); ++c)
    for (int k = 0; k < 4; ++k) {
      SideRef s{c, static_cast<SideKind>(k)};
      if (auto p = f.partner(s)) glue[c * 4 + k] = pack_side(*p);
    }
  PlanePlacement pl;
  pl.pos = positions_from(glue, f.head_cell());
  return pl;
}

Classification classify(const FishComplex& f) {
  Classification cl;
  auto pl = project(f);
  std::map<std::pair<int, int>, int> at;
  cl.planar = true;
  for (int c = 0; c < f.cell_count(); ++c)
    if (!at.emplace(pl.pos[c], c).second) cl.planar = false;
  if (!cl.planar) return cl;
  cl.polyomino = true;
  for (int c = 0; c < f.cell_count() && cl.polyomino; ++c) {
    auto [p, q] = pl.pos[c];
    if (auto it = at.find({p + 1, q}); it != at.end()) {
      auto pr = f.partner({c, SideKind::UR});
      if (!pr || pr->cell != it->second) cl.polyomino = false;
    }
    if (auto it = at.find({p, q + 1}); it != at.end()) {
      auto pr = f.partner({c, SideKind::LR});
      if (!pr || pr->cell != it->second) cl.polyomino = false;
    }
  }
  return cl;
}

std::vector<FishComplex> grow_all(const FishComplex& f) {
  std::vector<FishComplex> out;
  const int n = f.cell_count();
  for (int a = 0; a < n; ++a) {
    if (f.is_free({a, SideKind::UR})) {
      FishBuilder b(f);
      int d = b.add_cell();
      b.glue({d, SideKind::LL}, {a, SideKind::UR});
      out.push_back(b.freeze());
    }
    if (f.is_free({a, SideKind::LR})) {
      FishBuilder b(f);
      int d = b.add_cell();
      b.glue({d, SideKind::UL}, {a, SideKind::LR});
      out.push_back(b.freeze());
    }
    auto up = f.partner({a, SideKind::UR});
    auto lo = f.partner({a, SideKind::LR});
    if (up && lo && f.is_free({up->cell, SideKind::LR}) &&
        f.is_free({lo->cell, SideKind::UR})) {
      FishBuilder b(f);
      int d = b.add_cell();
      b.glue({d, SideKind::UL}, {up->cell, SideKind::LR});
      b.glue({d, SideKind::LL}, {lo->cell, SideKind::UR});
      out.push_back(b.freeze());
    }
  }
  return out;
}

namespace {

// Breadth-first discovery order from the head, sides scanned UL, LL, LR, UR.
std::vector<int> canonical_order(const FishComplex& f) {
  std::vector<int> order;
  order.reserve(f.cell_count());
  std::vector<int> rank(f.cell_count(), -1);
  std::queue<int> q;
  rank[f.head_cell()] = 0;
  order.push_back(f.head_cell());
  q.push(f.head_cell());
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    for (int k = 0; k < 4; ++k)
      if (auto p = f.partner({c, static_cast<SideKind>(k)}); p && rank[p->cell] < 0) {
        rank[p->cell] = static_cast<int>(order.size());
        order.push_back(p->cell);
        q.push(p->cell);
      }
  }
  return order;
}

}  // namespace

std::string canonical_code(const FishComplex& f) {
  auto order = canonical_order(f);
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += '/';
    for (int k = 0; k < 4; ++k) {
      if (k) out += ',';
      auto p = f.partner({order[i], static_cast<SideKind>(k)});
      if (p)
        out += std::to_string(rank[p->cell]);
      else
        out += 'F';
    }
  }
  return out;
}

FishComplex canonicalize(const FishComplex& f) {
  auto order = canonical_order(f);
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  std::vector<Gluing> gl;
  for (const auto& g : f.gluings())
    gl.push_back({{rank[g.a.cell], g.a.kind}, {rank[g.b.cell], g.b.kind}});
  return FishComplex::from_gluings(f.cell_count(), gl);
}

FishComplex parse_canonical_code(const std::string& code) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : code) {
    if (ch == '/') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  cells.push_back(cur);
  const int n = static_cast<int>(cells.size());
  std::vector<std::vector<std::string>> tok(n);
  for (int c = 0; c < n; ++c) {
    std::string t;
    for (char ch : cells[c]) {
      if (ch == ',') {
        tok[c].push_back(t);
        t.clear();
      } else {
        t += ch;
      }
    }
    tok[c].push_back(t);
    if (tok[c].size() != 4) throw StructureError("canonical code: cell needs 4 sides");
  }
  auto parsed = [&](const std::string& t) -> int {
    if (t == "F") return -1;
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw StructureError("canonical code: bad token '" + t + "'");
    long v = std::strtol(t.c_str(), nullptr, 10);
    if (v < 0 || v >= n) throw StructureError("canonical code: cell index out of range");
    return static_cast<int>(v);
  };
  std::vector<Gluing> gl;
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) {
      int m = parsed(tok[c][k]);
      if (m < 0) continue;
      SideKind mk = partner_kind(static_cast<SideKind>(k));
      // reciprocity: the partner's matching token must point back
      if (parsed(tok[m][static_cast<int>(mk)]) != c)
        throw StructureError("canonical code: gluing tokens not reciprocal");
      SideRef a{c, static_cast<SideKind>(k)}, b{m, mk};
      if (a < b) gl.push_back({a, b});
    }
  FishComplex f = FishComplex::from_gluings(n, gl);
  if (canonical_code(f) != code)
    throw StructureError("canonical code: numbering is not canonical");
  return f;
}

std::set<std::string> enumerate_by_area(int max_area, const EnumBudget& budget) {
  if (max_area < 1) throw UsageError("max_area must be >= 1");
  std::set<std::string> seen;
  std::queue<FishComplex> frontier;
  FishComplex seed = FishComplex::single_cell();
  seen.insert(canonical_code(seed));
  frontier.push(std::move(seed));
  long long sides = 4;
  while (!frontier.empty()) {
    FishComplex f = std::move(frontier.front());
    frontier.pop();
    if (f.cell_count() >= max_area) continue;
    for (auto& g : grow_all(f)) {
      sides += 4LL * g.cell_count();
      if (sides > budget.max_sides)
        throw BudgetError("enumerate_by_area exceeded its side budget");
      if (seen.insert(canonical_code(g)).second) frontier.push(std::move(g));
    }
  }
  return seen;
}

}  // namespace finfish
