#include "gramclass/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "gramclass/error.hpp"

namespace gramclass {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  check(bool(in), Errc::ParseError, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' || ch == '[';
  }
  return false;
}

Json parse_json(const std::string& text, const std::string& path) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::ParseError, path + ": " + e.what());
  }
}

long long expect_int(const Json& j, const std::string& what) {
  check(j.is_number_integer(), Errc::InvariantError, what + " must be an integer");
  return j.get<long long>();
}

// Accepts either a JSON integer or a decimal string (the emitted form of
// entries too large for 64 bits).
Int expect_bigint(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    size_t k = (!s.empty() && s[0] == '-') ? 1 : 0;
    bool ok = k < s.size();
    for (; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) ok = false;
    check(ok, Errc::InvariantError, what + " string must be a decimal integer");
    return Int(s);
  }
  fail(Errc::InvariantError, what + " must be an integer or a decimal string");
}

// Whitespace-separated integer tokens with line tracking for error messages.
struct TextReader {
  const std::string& text;
  std::string path;
  size_t pos = 0;
  int line = 1;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      if (text[pos] == '\n') ++line;
      ++pos;
    }
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  [[noreturn]] void bail(const std::string& what) {
    fail(Errc::ParseError, path + ": line " + std::to_string(line) + ": " + what);
  }

  std::string next_token(const std::string& what) {
    skip_ws();
    if (pos >= text.size()) bail("expected " + what + ", found end of input");
    size_t start = pos;
    if (text[pos] == '-' || text[pos] == '+') ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) bail("expected " + what);
    return text.substr(start, pos - start);
  }

  long long next_int(const std::string& what) {
    std::string tok = next_token(what);
    try {
      return std::stoll(tok);
    } catch (const std::exception&) {
      bail(what + " is out of range");
    }
  }

  Int next_bigint(const std::string& what) {
    std::string tok = next_token(what);
    if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
    return Int(tok);
  }
};

}  // namespace

Quiver quiver_from_json(const Json& j) {
  check(j.contains("vertices"), Errc::InvariantError, "quiver JSON needs a \"vertices\" key");
  check(j.contains("arrows"), Errc::InvariantError, "quiver JSON needs an \"arrows\" key");
  Quiver q;
  q.vertices = int(expect_int(j["vertices"], "\"vertices\""));
  check(j["arrows"].is_array(), Errc::InvariantError, "\"arrows\" must be an array");
  for (const auto& a : j["arrows"]) {
    check(a.is_array() && a.size() == 2, Errc::InvariantError,
          "each arrow must be a [source, target] pair");
    q.arrows.push_back(
        {int(expect_int(a[0], "arrow source")), int(expect_int(a[1], "arrow target"))});
  }
  return q;
}

UnitForm form_from_json(const Json& j) {
  check(j.contains("n"), Errc::InvariantError, "form JSON needs an \"n\" key");
  check(j.contains("upper"), Errc::InvariantError, "form JSON needs an \"upper\" key");
  UnitForm f;
  f.n = int(expect_int(j["n"], "\"n\""));
  f.upper = matrix_from_json(j["upper"]);
  return f;
}

namespace {

Quiver quiver_from_text(const std::string& text, const std::string& path) {
  TextReader r{text, path};
  Quiver q;
  q.vertices = int(r.next_int("vertex count"));
  long long n = r.next_int("arrow count");
  if (n < 0) r.bail("arrow count must be non-negative");
  for (long long i = 0; i < n; ++i) {
    int s = int(r.next_int("arrow source"));
    int t = int(r.next_int("arrow target"));
    q.arrows.push_back({s, t});
  }
  if (!r.at_end()) r.bail("trailing input after the last arrow");
  return q;
}

IntMatrix matrix_from_text(const std::string& text, const std::string& path) {
  TextReader r{text, path};
  long long rows = r.next_int("row count");
  long long cols = r.next_int("column count");
  if (rows < 0 || cols < 0) r.bail("matrix dimensions must be non-negative");
  const int nrows = int(rows), ncols = int(cols);
  IntMatrix m(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) m.at(i, j) = r.next_bigint("matrix entry");
  if (!r.at_end()) r.bail("trailing input after the last matrix entry");
  return m;
}

}  // namespace

Input load_input(const std::string& path) {
  std::string text = read_file(path);
  Input in;
  if (looks_like_json(text)) {
    Json j = parse_json(text, path);
    check(j.is_object(), Errc::InvariantError, path + ": top-level JSON must be an object");
    if (j.contains("arrows")) {
      in.is_quiver = true;
      in.quiver = quiver_from_json(j);
    } else if (j.contains("upper")) {
      in.is_quiver = false;
      in.form = form_from_json(j);
    } else {
      fail(Errc::InvariantError, path + ": object has neither \"arrows\" nor \"upper\"");
    }
  } else {
    in.is_quiver = true;
    in.quiver = quiver_from_text(text, path);
  }
  return in;
}

Quiver load_quiver(const std::string& path) {
  Input in = load_input(path);
  check(in.is_quiver, Errc::InvariantError, path + ": expected a quiver, found a unit form");
  return in.quiver;
}

UnitForm load_form(const std::string& path) {
  Input in = load_input(path);
  check(!in.is_quiver, Errc::InvariantError, path + ": expected a unit form, found a quiver");
  return in.form;
}

IntMatrix load_matrix(const std::string& path) {
  std::string text = read_file(path);
  if (looks_like_json(text)) {
    Json j = parse_json(text, path);
    check(j.is_array(), Errc::InvariantError, path + ": matrix JSON must be an array of rows");
    return matrix_from_json(j);
  }
  return matrix_from_text(text, path);
}

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& [s, t] : q.arrows) arrows.push_back(Json::array({s, t}));
  return Json{{"vertices", q.vertices}, {"arrows", arrows}};
}

Json to_json(const UnitForm& q) { return Json{{"n", q.n}, {"upper", to_json(q.upper)}}; }

Json to_json(const IntMatrix& M) {
  Json rows = Json::array();
  for (int i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(json_int(M.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (int part : p.parts) out.push_back(part);
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  check(j.is_array(), Errc::InvariantError, "matrix JSON must be an array of rows");
  const int rows = int(j.size());
  int cols = -1;
  for (const auto& row : j) {
    check(row.is_array(), Errc::InvariantError, "each matrix row must be an array");
    if (cols < 0) cols = int(row.size());
    check(int(row.size()) == cols, Errc::InvariantError, "matrix rows have unequal lengths");
  }
  IntMatrix m(rows, std::max(cols, 0));
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < m.cols(); ++k)
      m.at(i, k) = expect_bigint(j[size_t(i)][size_t(k)], "matrix entry");
  return m;
}

Json json_int(const Int& x) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (x >= lo && x <= hi) return Json(x.convert_to<long long>());
  return Json(x.str());
}

std::string matrix_to_text(const IntMatrix& M) {
  std::ostringstream os;
  os << M.rows() << ' ' << M.cols() << '\n';
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) {
      if (j) os << ' ';
      os << M.at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  check(bool(out), Errc::ParseError, "cannot write file: " + path);
  out << j.dump(2) << '\n';
  check(bool(out), Errc::ParseError, "write failed: " + path);
}

void save_text(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  check(bool(out), Errc::ParseError, "cannot write file: " + path);
  out << text;
  check(bool(out), Errc::ParseError, "write failed: " + path);
}

}  // namespace gramclass
