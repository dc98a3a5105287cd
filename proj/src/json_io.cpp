#include "slash/json_io.hpp"

#include <fstream>
#include <sstream>

namespace slash {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw parse_error(where.empty() ? what : where + ": " + what);
}

std::string at(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

std::string at(const std::string& where, std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << where << ".entries[" << i << "][" << j << "]";
  return os.str();
}

const Json& field(const Json& v, const char* key, const std::string& where) {
  auto it = v.find(key);
  if (it == v.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

Rational opt_rational(const Json& v, const char* key,
                      const std::string& where) {
  auto it = v.find(key);
  return it == v.end() ? Rational(0) : json_to_rational(*it, at(where, key));
}

// shared shape handling: returns the entries array and checks "algebra"
const Json& matrix_entries(const Json& v, const char* expected_algebra,
                           bool rational_ok, const std::string& where) {
  if (v.is_array()) return v;
  if (!v.is_object()) bad(where, "expected a matrix object or array");
  if (auto it = v.find("algebra"); it != v.end()) {
    const std::string a = it->get<std::string>();
    if (a != expected_algebra && !(rational_ok && a == "rational"))
      bad(at(where, "algebra"),
          "expected \"" + std::string(expected_algebra) + "\", got \"" + a +
              "\"");
  }
  return field(v, "entries", where);
}

template <class T, class Reader>
Mat<T> read_matrix(const Json& v, const char* algebra, bool rational_ok,
                   const std::string& where, Reader read_entry) {
  const Json& rows = matrix_entries(v, algebra, rational_ok, where);
  if (!rows.is_array()) bad(at(where, "entries"), "expected an array of rows");
  const std::size_t r = rows.size();
  std::size_t c = 0;
  if (r > 0) {
    if (!rows[0].is_array()) bad(at(where, "entries"), "rows must be arrays");
    c = rows[0].size();
  }
  Mat<T> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c)
      bad(at(where, "entries"), "rows must all have the same length");
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = read_entry(rows[i][j], at(where, i, j));
  }
  return m;
}

Json json_from_entries(const char* algebra, Json entries) {
  Json out;
  out["algebra"] = algebra;
  out["entries"] = std::move(entries);
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw parse_error(origin + ": " + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

Rational json_to_rational(const Json& v, const std::string& where) {
  if (v.is_string()) return rational_from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return Rational(v.get<std::uint64_t>());
  bad(where, "expected a rational (\"p/q\" string or integer)");
}

Gaussian json_to_gaussian(const Json& v, const std::string& where) {
  if (!v.is_object()) return Gaussian(json_to_rational(v, where));
  return Gaussian(opt_rational(v, "re", where), opt_rational(v, "im", where));
}

Lorentz json_to_lorentz(const Json& v, const std::string& where) {
  if (!v.is_object()) return Lorentz(json_to_rational(v, where));
  return Lorentz(opt_rational(v, "a", where), opt_rational(v, "b", where));
}

Quaternion json_to_quaternion(const Json& v, const std::string& where) {
  if (!v.is_object()) return Quaternion(json_to_rational(v, where));
  return Quaternion(opt_rational(v, "w", where), opt_rational(v, "x", where),
                    opt_rational(v, "y", where), opt_rational(v, "z", where));
}

MatQ json_to_matq(const Json& v, const std::string& where) {
  return read_matrix<Rational>(v, "rational", true, where, json_to_rational);
}

MatG json_to_matg(const Json& v, const std::string& where) {
  return read_matrix<Gaussian>(v, "gaussian", true, where, json_to_gaussian);
}

MatL json_to_matl(const Json& v, const std::string& where) {
  return read_matrix<Lorentz>(v, "lorentz", true, where, json_to_lorentz);
}

BlockEndo json_to_blockendo(const Json& v, const std::string& where) {
  if (!v.is_object()) bad(where, "expected a block endomorphism object");
  MatQ a = json_to_matq(field(v, "A", where), at(where, "A"));
  MatQ b = json_to_matq(field(v, "B", where), at(where, "B"));
  MatQ c = json_to_matq(field(v, "C", where), at(where, "C"));
  MatQ d = json_to_matq(field(v, "D", where), at(where, "D"));
  if (auto it = v.find("n"); it != v.end()) {
    if (!it->is_number_unsigned() && !it->is_number_integer())
      bad(at(where, "n"), "expected an integer");
    if (it->get<std::int64_t>() != static_cast<std::int64_t>(a.rows()))
      bad(at(where, "n"), "does not match the block size");
  }
  try {
    return BlockEndo(std::move(a), std::move(b), std::move(c), std::move(d));
  } catch (const InputError& e) {
    bad(where, e.what());
  }
}

LieAlgebra json_to_lie_algebra(const Json& v, const std::string& where) {
  if (!v.is_object()) bad(where, "expected a Lie algebra object");
  const Json& dim = field(v, "dim", where);
  if (!dim.is_number_unsigned() || dim.get<std::uint64_t>() == 0)
    bad(at(where, "dim"), "expected a positive integer");
  const std::size_t n = dim.get<std::size_t>();
  LieAlgebra g(n);
  const Json& brackets = field(v, "brackets", where);
  if (!brackets.is_array()) bad(at(where, "brackets"), "expected an array");
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    std::ostringstream os;
    os << where << (where.empty() ? "" : ".") << "brackets[" << b << "]";
    const std::string bw = os.str();
    const Json& item = brackets[b];
    if (!item.is_object()) bad(bw, "expected an object");
    const Json &ji = field(item, "i", bw), &jj = field(item, "j", bw);
    if (!ji.is_number_integer() && !ji.is_number_unsigned())
      bad(at(bw, "i"), "expected an integer");
    if (!jj.is_number_integer() && !jj.is_number_unsigned())
      bad(at(bw, "j"), "expected an integer");
    const std::int64_t i = ji.get<std::int64_t>(), j = jj.get<std::int64_t>();
    if (i < 1 || j <= i || j > static_cast<std::int64_t>(n))
      bad(bw, "indices must satisfy 1 <= i < j <= dim");
    const Json& coeffs = field(item, "coeffs", bw);
    if (!coeffs.is_object()) bad(at(bw, "coeffs"), "expected an object");
    for (const auto& [key, val] : coeffs.items()) {
      std::int64_t k = 0;
      try {
        k = std::stoll(key);
      } catch (...) {
        bad(at(bw, "coeffs"), "key '" + key + "' is not an index");
      }
      if (k < 1 || k > static_cast<std::int64_t>(n))
        bad(at(bw, "coeffs"), "key '" + key + "' is out of range");
      g.set_bracket(static_cast<std::size_t>(i - 1),
                    static_cast<std::size_t>(j - 1),
                    static_cast<std::size_t>(k - 1),
                    json_to_rational(val, at(bw, "coeffs." + key)));
    }
  }
  return g;
}

Json json_from_rational(const Rational& x) { return rational_str(x); }

Json json_from_gaussian(const Gaussian& x) {
  return Json{{"re", rational_str(x.re)}, {"im", rational_str(x.im)}};
}

Json json_from_lorentz(const Lorentz& x) {
  return Json{{"a", rational_str(x.a)}, {"b", rational_str(x.b)}};
}

Json json_from_quaternion(const Quaternion& x) {
  return Json{{"w", rational_str(x.w)},
              {"x", rational_str(x.x)},
              {"y", rational_str(x.y)},
              {"z", rational_str(x.z)}};
}

namespace {

template <class T, class Writer>
Json write_entries(const Mat<T>& m, Writer write_entry) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(write_entry(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json json_from_matrix(const MatQ& m) {
  return json_from_entries("rational", write_entries(m, json_from_rational));
}

Json json_from_matrix(const MatG& m) {
  return json_from_entries("gaussian", write_entries(m, json_from_gaussian));
}

Json json_from_matrix(const MatL& m) {
  return json_from_entries("lorentz", write_entries(m, json_from_lorentz));
}

Json json_from_matrix(const MatH& m) {
  return json_from_entries("quaternion",
                           write_entries(m, json_from_quaternion));
}

Json json_from_blockendo(const BlockEndo& e) {
  return Json{{"n", e.n},
              {"A", json_from_matrix(e.A)},
              {"B", json_from_matrix(e.B)},
              {"C", json_from_matrix(e.C)},
              {"D", json_from_matrix(e.D)}};
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace slash
