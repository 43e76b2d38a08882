#ifndef FINFISH_FISH_SURFACE_HPP
#define FINFISH_FISH_SURFACE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finfish/errors.hpp"

namespace finfish {

// The four sides of a 45-degree tilted square cell. The enum order is the
// counterclockwise cyclic order UL -> LL -> LR -> UR -> UL.
enum class SideKind : std::uint8_t { UL = 0, LL = 1, LR = 2, UR = 3 };

constexpr SideKind ccw_next(SideKind k) {
  return static_cast<SideKind>((static_cast<unsigned>(k) + 1) & 3u);
}

// Gluings pair complementary kinds only: LL with UR, UL with LR.
constexpr SideKind partner_kind(SideKind k) {
  return static_cast<SideKind>(static_cast<unsigned>(k) ^ 2u);
}

constexpr bool is_lower(SideKind k) {
  return k == SideKind::LL || k == SideKind::LR;
}

const char* side_name(SideKind k);
std::optional<SideKind> side_from_name(std::string_view name);

struct SideRef {
  std::int32_t cell = 0;
  SideKind kind = SideKind::UL;

  friend bool operator==(const SideRef&, const SideRef&) = default;
  friend std::strong_ordering operator<=>(const SideRef&, const SideRef&) = default;
};

struct Gluing {
  SideRef a, b;
};

// A finite collection of cells with side gluings satisfying the invariants
// checked by from_gluings. Immutable once constructed.
class FishComplex {
 public:
  static FishComplex single_cell();

  // Validates: complementary kinds, involution with no side glued twice,
  // connectedness, a unique cell with both UL and LL free, a consistent plane
  // projection, and equal counts of free lower and free upper sides.
  static FishComplex from_gluings(int cell_count, const std::vector<Gluing>& gluings);

  int cell_count() const { return static_cast<int>(glue_.size() / 4); }
  int head_cell() const { return head_; }

  bool is_free(SideRef s) const { return glue_[index(s)] < 0; }
  std::optional<SideRef> partner(SideRef s) const {
    auto g = glue_[index(s)];
    if (g < 0) return std::nullopt;
    return unpack(g);
  }

  // Every gluing once, ordered by its smaller endpoint.
  std::vector<Gluing> gluings() const;

  friend bool operator==(const FishComplex&, const FishComplex&) = default;

 private:
  friend class FishBuilder;
  FishComplex() = default;

  static std::size_t index(SideRef s) {
    return static_cast<std::size_t>(s.cell) * 4 + static_cast<unsigned>(s.kind);
  }
  static SideRef unpack(std::int32_t g) {
    return SideRef{g >> 2, static_cast<SideKind>(g & 3)};
  }
  static std::int32_t pack(SideRef s) {
    return (s.cell << 2) | static_cast<std::int32_t>(s.kind);
  }

  std::vector<std::int32_t> glue_;  // 4 entries per cell, -1 = free
  std::int32_t head_ = 0;
};

// Incremental construction; freeze() runs the full validation.
class FishBuilder {
 public:
  FishBuilder() = default;
  explicit FishBuilder(const FishComplex& base);

  int cell_count() const { return static_cast<int>(glue_.size() / 4); }
  int add_cell();
  // Appends all cells of other, returning the index offset they got.
  int adopt(const FishComplex& other);
  void glue(SideRef a, SideRef b);
  bool is_free(SideRef s) const;

  FishComplex freeze() const;

 private:
  std::vector<std::int32_t> glue_;
};

// --- boundary -------------------------------------------------------------

// The full boundary cycle starting at head.LL, listing each free side once in
// counterclockwise order. Throws StructureError if the free sides do not form
// a single cycle.
std::vector<SideRef> trace_boundary(const FishComplex& f);

struct FinResult {
  std::vector<SideRef> sides;  // free lower sides from head.LL to the first tail
  std::string word;            // 'L' for LL, 'R' for LR, one char per side
};

// The fin: the lower boundary from head.LL through the first tail's LR side.
FinResult fin(const FishComplex& f);

struct FishStats {
  int size = 0;        // free lower sides
  int lsize = 0;       // free LL sides
  int rsize = 0;       // free LR sides
  int tails = 0;       // cells with LR and UR both free
  int fin = 0;         // fin length
  std::string fin_word;
  int area = 0;        // number of cells
  int branch_points = 0;  // cells with all four sides glued
  int lower_flats = 0;    // free LL immediately followed by free LR on the boundary
};

FishStats stats(const FishComplex& f);

// --- plane projection -------------------------------------------------------

struct PlanePlacement {
  // Coordinates (p, q) per cell; head at (0, 0). A cell glued on its UR to
  // another's LL is at offset (1, 0) from it; glued on its LR to another's UL,
  // offset (0, 1).
  std::vector<std::pair<int, int>> pos;
};

PlanePlacement project(const FishComplex& f);

struct Classification {
  bool planar = false;     // projection injective
  bool polyomino = false;  // planar and every adjacent pair of cells glued
};

Classification classify(const FishComplex& f);

// --- growth -----------------------------------------------------------------

// Every complex obtainable from f by one growth step:
//   1. new cell glued LL to a free UR;
//   2. new cell glued UL to a free LR;
//   3. for cells a,b,c with b.LL~a.UR, c.UL~a.LR, b.LR and c.UR free:
//      new cell glued UL to b.LR and LL to c.UR.
std::vector<FishComplex> grow_all(const FishComplex& f);

// --- canonical form -----------------------------------------------------------

// Breadth-first renumbering from the head (neighbors scanned UL, LL, LR, UR),
// then for each cell in order its four sides in that order, each rendered as
// "F" or the partner cell's number; sides joined with ",", cells with "/".
std::string canonical_code(const FishComplex& f);

// Inverse of canonical_code; accepts any code produced by it and validates.
FishComplex parse_canonical_code(const std::string& code);

// Renumbers cells to the canonical breadth-first order.
FishComplex canonicalize(const FishComplex& f);

struct EnumBudget {
  long long max_sides = 100'000'000;  // cumulative sides over constructed complexes
};

// Canonical codes of every fish with at most max_area cells, generated by
// iterated growth from the single cell.
std::set<std::string> enumerate_by_area(int max_area, const EnumBudget& budget = {});

}  // namespace finfish

#endif  // FINFISH_FISH_SURFACE_HPP
