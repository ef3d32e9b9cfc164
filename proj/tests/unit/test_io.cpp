#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gramclass/error.hpp"
#include "gramclass/io.hpp"
#include "gramclass/quiver.hpp"
#include "gramclass/standard.hpp"
#include "gramclass/unitform.hpp"
#include "helpers.hpp"

using namespace gramclass;

namespace {

Quiver q_one() { return Quiver{3, {{3, 1}, {2, 3}, {1, 2}, {3, 1}}}; }

// Writes content to a fresh file under the system temp directory and returns
// its path.
std::string write_temp(const std::string& name, const std::string& content) {
  static int counter = 0;
  auto dir = std::filesystem::temp_directory_path() / "gramclass_io_tests";
  std::filesystem::create_directories(dir);
  std::string path =
      (dir / (std::to_string(counter++) + "_" + name)).string();
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("fixture files match the in-code running examples") {
  CHECK(load_quiver(fixture("q1_quiver.json")) == q_one());
  CHECK(load_quiver(fixture("q0_quiver.json")) ==
        Quiver{3, {{3, 1}, {2, 3}, {3, 1}, {1, 2}}});
  CHECK(load_form(fixture("q1.json")) == from_quiver(q_one()));
  CHECK(load_quiver(fixture("q1_standard_quiver.json")) ==
        standard_quiver(Partition{3}, 1, StandardVariant::A));
  CHECK(load_quiver(fixture("q0_standard_quiver.json")) ==
        standard_quiver(Partition{1, 1, 1}, 0, StandardVariant::A));
  CHECK(load_form(fixture("q1_standard_form.json")) ==
        from_quiver(standard_quiver(Partition{3}, 1, StandardVariant::A)));
  CHECK(load_form(fixture("q0_standard_form.json")) ==
        from_quiver(standard_quiver(Partition{1, 1, 1}, 0, StandardVariant::A)));
}

TEST_CASE("input dispatch on JSON files") {
  Input a = load_input(fixture("q1_quiver.json"));
  CHECK(a.is_quiver);
  Input b = load_input(fixture("q0.json"));
  CHECK_FALSE(b.is_quiver);
  CHECK(b.form == from_quiver(Quiver{3, {{3, 1}, {2, 3}, {3, 1}, {1, 2}}}));
  CHECK_FAILS_WITH(Errc::InvariantError, load_form(fixture("q1_quiver.json")));
  CHECK_FAILS_WITH(Errc::InvariantError, load_quiver(fixture("q1.json")));
}

TEST_CASE("text quivers") {
  std::string p = write_temp("quiver.txt", "3 4\n3 1\n2 3\n1 2\n3 1\n");
  Input in = load_input(p);
  CHECK(in.is_quiver);
  CHECK(in.quiver == q_one());
  // Negative and crammed whitespace forms are fine for the tokenizer.
  std::string p2 = write_temp("quiver2.txt", "  2   1 \n 1   2");
  CHECK(load_quiver(p2) == Quiver{2, {{1, 2}}});
}

TEST_CASE("text matrices") {
  std::string p = write_temp("id.txt", "2 2\n1 0\n0 1\n");
  CHECK(load_matrix(p) == IntMatrix::identity(2));
  std::string p2 = write_temp("neg.txt", "1 3\n-1 0 +2\n");
  CHECK(load_matrix(p2) == IntMatrix{{-1, 0, 2}});
  // Entries beyond 64 bits survive the text round trip.
  IntMatrix big(1, 1);
  big.at(0, 0) = Int("123456789012345678901234567890");
  std::string p3 = write_temp("big.txt", matrix_to_text(big));
  CHECK(load_matrix(p3) == big);
}

TEST_CASE("matrix fixtures parse with their stated shapes") {
  IntMatrix b1 = load_matrix(fixture("B_q1.txt"));
  CHECK(b1.rows() == 4);
  CHECK(b1.cols() == 4);
  IntMatrix k = load_matrix(fixture("K_standard_q0.txt"));
  CHECK(k.rows() == 4);
  CHECK(k.cols() == 2);
}

TEST_CASE("json round trips") {
  Quiver q = q_one();
  CHECK(quiver_from_json(to_json(q)) == q);
  UnitForm f = from_quiver(q);
  CHECK(form_from_json(to_json(f)) == f);
  IntMatrix m{{1, -2}, {3, 4}};
  CHECK(matrix_from_json(to_json(m)) == m);
  // Large entries are emitted as strings and parse back exactly.
  IntMatrix big(1, 2);
  big.at(0, 0) = Int("98765432109876543210987654321");
  big.at(0, 1) = Int("-98765432109876543210987654321");
  Json j = to_json(big);
  CHECK(j[0][0].is_string());
  CHECK(matrix_from_json(j) == big);
  // Small entries stay plain JSON numbers.
  CHECK(to_json(m)[0][0].is_number_integer());
  // Partition rendering.
  CHECK(to_json(Partition{3, 1}).dump() == "[3,1]");
}

TEST_CASE("save_json writes parseable files") {
  auto dir = std::filesystem::temp_directory_path() / "gramclass_io_tests";
  std::filesystem::create_directories(dir);
  std::string path = (dir / "saved.json").string();
  save_json(to_json(q_one()), path);
  CHECK(load_quiver(path) == q_one());
  std::string tpath = (dir / "saved.txt").string();
  save_text(matrix_to_text(IntMatrix::identity(3)), tpath);
  CHECK(load_matrix(tpath) == IntMatrix::identity(3));
}

TEST_CASE("parse errors carry the path and line") {
  CHECK_FAILS_WITH(Errc::ParseError, load_input("does_not_exist_9931.json"));
  std::string bad = write_temp("bad.json", "{\"n\": ");
  CHECK_FAILS_WITH(Errc::ParseError, load_input(bad));
  std::string trunc = write_temp("trunc.txt", "2 2\n1 0\n0");
  bool threw = false;
  try {
    (void)load_matrix(trunc);
  } catch (const Error& e) {
    threw = true;
    CHECK(e.kind() == Errc::ParseError);
    CHECK(std::string(e.what()).find(trunc) != std::string::npos);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(threw);
  std::string junk = write_temp("junk.txt", "2 2\none two\n3 4\n");
  CHECK_FAILS_WITH(Errc::ParseError, load_matrix(junk));
  std::string trailing = write_temp("trailing.txt", "1 1\n5\nextra");
  CHECK_FAILS_WITH(Errc::ParseError, load_matrix(trailing));
}

TEST_CASE("invariant errors name the violated structure") {
  std::string neither = write_temp("neither.json", "{\"x\": 1}");
  CHECK_FAILS_WITH(Errc::InvariantError, load_input(neither));
  std::string badarrows =
      write_temp("badarrows.json", "{\"vertices\": 2, \"arrows\": 3}");
  CHECK_FAILS_WITH(Errc::InvariantError, load_input(badarrows));
  std::string badpair =
      write_temp("badpair.json", "{\"vertices\": 2, \"arrows\": [[1, 2, 3]]}");
  CHECK_FAILS_WITH(Errc::InvariantError, load_input(badpair));
  std::string badn =
      write_temp("badn.json", "{\"n\": \"x\", \"upper\": [[1]]}");
  CHECK_FAILS_WITH(Errc::InvariantError, load_input(badn));
  std::string ragged =
      write_temp("ragged.json", "{\"n\": 2, \"upper\": [[1, 0], [1]]}");
  CHECK_FAILS_WITH(Errc::InvariantError, load_input(ragged));
  std::string toplevel = write_temp("toplevel.json", "[1, 2]");
  CHECK_FAILS_WITH(Errc::InvariantError, load_input(toplevel));
}

TEST_CASE("json_int boundary behavior") {
  CHECK(json_int(Int(5)) == Json(5));
  CHECK(json_int(Int(-7)) == Json(-7));
  Int big = Int("9223372036854775807");  // max long long: still a number
  CHECK(json_int(big).is_number_integer());
  CHECK(json_int(big + 1).is_string());
  CHECK(json_int(big + 1).get<std::string>() == "9223372036854775808");
  Int small = Int("-9223372036854775808");
  CHECK(json_int(small).is_number_integer());
  CHECK(json_int(small - 1).is_string());
}
