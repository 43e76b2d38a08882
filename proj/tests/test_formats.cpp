#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "finfish/cache.hpp"
#include "finfish/errors.hpp"
#include "finfish/fish_grammar.hpp"
#include "finfish/json_io.hpp"
#include "finfish/render.hpp"

using namespace finfish;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++n;
  return n;
}

FishComplex non_planar_area5() {
  for (const std::string& code : enumerate_by_area(5)) {
    FishComplex f = parse_canonical_code(code);
    if (!classify(f).planar) return f;
  }
  throw std::runtime_error("missing known non-planar fish");
}

}  // namespace

TEST_CASE("fish JSON round trip") {
  FishComplex cell = FishComplex::single_cell();
  std::string j = fish_to_json(cell);
  CHECK(j == R"({"cells":1,"gluings":[],"head":0})");
  CHECK(fish_from_json(j) == cell);

  FishComplex strip = canonicalize(build(*parse_term("B2(A)")));
  std::string js = fish_to_json(strip);
  CHECK(js == R"({"cells":2,"gluings":[[0,"UR",1,"LL"]],"head":0})");
  CHECK(fish_from_json(js) == strip);

  for (const std::string& code : enumerate_by_area(4)) {
    FishComplex f = parse_canonical_code(code);
    CHECK(fish_from_json(fish_to_json(f)) == f);
  }
}

TEST_CASE("fish JSON rejects malformed input") {
  CHECK_THROWS_AS(fish_from_json("not json"), UsageError);
  CHECK_THROWS_AS(fish_from_json("[]"), UsageError);
  CHECK_THROWS_AS(fish_from_json(R"({"cells":1,"gluings":[]})"), UsageError);
  CHECK_THROWS_AS(fish_from_json(R"({"cells":1,"gluings":[],"head":"x"})"), UsageError);
  CHECK_THROWS_AS(fish_from_json(R"({"cells":2,"gluings":[[0,"XX",1,"LL"]],"head":0})"),
                  UsageError);
  CHECK_THROWS_AS(fish_from_json(R"({"cells":2,"gluings":[[0,"UR",1]],"head":0})"),
                  UsageError);
  // structurally valid complex, wrong declared head
  CHECK_THROWS_AS(fish_from_json(R"({"cells":2,"gluings":[[0,"UR",1,"LL"]],"head":1})"),
                  StructureError);
  // two heads / inconsistent gluings are rejected by the complex validator
  CHECK_THROWS_AS(fish_from_json(R"({"cells":2,"gluings":[],"head":0})"), StructureError);
}

TEST_CASE("SVG rendering") {
  std::string svg = render_svg(FishComplex::single_cell());
  CHECK(svg.find("<svg") == 0);
  CHECK(count_occurrences(svg, "<polygon") == 1);
  CHECK(count_occurrences(svg, "class=\"fin\"") == 2);  // fin covers LL then LR
  CHECK(count_occurrences(svg, "<text") == 0);  // no multiplicity badges

  // a straight strip of three cells: three diamonds, no badges
  std::string strip = render_svg(build(*parse_term("B2(B2(A))")));
  CHECK(count_occurrences(strip, "<polygon") == 3);
  CHECK(count_occurrences(strip, "<text") == 0);

  // the area-5 fish whose projection covers one position twice
  std::string np = render_svg(non_planar_area5());
  CHECK(count_occurrences(np, "<polygon") == 4);  // 5 cells, 4 distinct positions
  CHECK(count_occurrences(np, ">x2</text>") == 1);
}

TEST_CASE("ASCII rendering") {
  CHECK(render_ascii(FishComplex::single_cell()) == "/  \\\n#  #\n");

  std::string np = render_ascii(non_planar_area5());
  CHECK(count_occurrences(np, "2") == 1);
  CHECK(np.find('#') != std::string::npos);

  // head sits lower-left; a strip climbs up and to the right
  std::string strip = render_ascii(build(*parse_term("B2(A)")));
  CHECK(strip == "  /  \\\n/ \\\\ #\n#  #\n");
}

TEST_CASE("result cache") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "finfish_cache_test";
  fs::remove_all(dir);
  setenv("FINFISH_CACHE", dir.c_str(), 1);
  REQUIRE(cache_enabled());

  std::string key = make_cache_key("fish table", "--max-size 9");
  CHECK(key != make_cache_key("fish table", "--max-size 8"));
  CHECK(key != make_cache_key("trees table", "--max-size 9"));

  int runs = 0;
  auto producer = [&] {
    ++runs;
    return std::string("payload \"with\" quotes\nand lines");
  };
  std::string first = cached(key, producer);
  std::string second = cached(key, producer);
  CHECK(runs == 1);
  CHECK(first == second);

  // corrupt the stored entry: the value is recomputed and replaced
  bool corrupted = false;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ofstream out(entry.path(), std::ios::trunc);
    out << "{broken";
    corrupted = true;
  }
  REQUIRE(corrupted);
  CHECK(cached(key, producer) == first);
  CHECK(runs == 2);
  CHECK(cached(key, producer) == first);
  CHECK(runs == 2);

  // a key collision in the hashed filename is detected via the stored key
  CHECK(!cache_get(make_cache_key("other", "params")));

  unsetenv("FINFISH_CACHE");
  CHECK(!cache_enabled());
  CHECK(cached(key, producer) == first);
  CHECK(runs == 3);
  setenv("FINFISH_CACHE", dir.c_str(), 1);
  fs::remove_all(dir);
  unsetenv("FINFISH_CACHE");
}
