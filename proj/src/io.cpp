#include "leadsolve/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace leadsolve {
namespace {

using Json = nlohmann::json;

// Keeps the source text of non-integer numbers (as a string node) so that
// decimals like 0.1 are read exactly instead of through a double.
class ExactSax : public nlohmann::detail::json_sax_dom_parser<Json> {
 public:
  using json_sax_dom_parser::json_sax_dom_parser;

  bool number_float(Json::number_float_t /*val*/, const std::string& raw) {
    std::string copy = raw;
    return json_sax_dom_parser::string(copy);
  }
};

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw ParseError("game_core: " + source + (where.empty() ? "" : ": " + where) + ": " + what);
}

Json parse_document(std::string_view text, const std::string& source) {
  Json doc;
  ExactSax sax(doc);
  try {
    Json::sax_parse(text, &sax);
  } catch (const Json::parse_error& e) {
    fail(source, "", std::string("malformed document (") + e.what() + ")");
  }
  return doc;
}

Rational token(const Json& v, const std::string& source, const std::string& where) {
  switch (v.type()) {
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
      return Rational::from_integer_string(v.dump());
    case Json::value_t::string:
      try {
        return parse_rational(v.get_ref<const std::string&>());
      } catch (const ParseError& e) {
        fail(source, where, e.what());
      }
    default:
      fail(source, where, "expected a rational token, got " + std::string(v.type_name()));
  }
}

RatMatrix matrix(const Json& v, const std::string& source, const std::string& name) {
  if (!v.is_array() || v.empty()) fail(source, name, "expected a non-empty array of rows");
  std::vector<RatVector> rows;
  std::size_t width = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string where = name + "[" + std::to_string(i) + "]";
    const Json& row = v[i];
    if (!row.is_array() || row.empty()) fail(source, where, "expected a non-empty array of tokens");
    if (i == 0) width = row.size();
    if (row.size() != width) {
      throw StructuralError("game_core: " + source + ": " + where + ": ragged row with " +
                            std::to_string(row.size()) + " entries, expected " + std::to_string(width));
    }
    RatVector values;
    for (std::size_t j = 0; j < row.size(); ++j) {
      values.push_back(token(row[j], source, where + "[" + std::to_string(j) + "]"));
    }
    rows.push_back(std::move(values));
  }
  return RatMatrix::from_rows(rows);
}

std::vector<std::string> labels(const Json& v, const std::string& source, const std::string& name) {
  if (!v.is_array()) fail(source, name, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Json& l = v[i];
    if (l.is_string()) {
      out.push_back(l.get<std::string>());
    } else if (l.is_number_integer()) {
      out.push_back(l.dump());
    } else {
      fail(source, name + "[" + std::to_string(i) + "]", "label must be a string or an integer");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("game_core: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_token(std::ostream& os, const Rational& r) {
  if (r.is_integer()) {
    os << r.str();
  } else {
    os << '"' << r.str() << '"';
  }
}

void write_matrix(std::ostream& os, const RatMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",\n        [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      write_token(os, m(i, j));
    }
    os << "]";
  }
  os << "]";
}

}  // namespace

Game parse_game(std::string_view text, const std::string& source) {
  const Json doc = parse_document(text, source);
  if (!doc.is_object()) fail(source, "", "expected an object with fields A and B");
  for (const auto& [key, value] : doc.items()) {
    if (key != "name" && key != "rows" && key != "cols" && key != "A" && key != "B") {
      fail(source, key, "unknown field");
    }
  }
  if (!doc.contains("A")) fail(source, "", "missing field A");
  if (!doc.contains("B")) fail(source, "", "missing field B");

  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail(source, "name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  RatMatrix a = matrix(doc["A"], source, "A");
  RatMatrix b = matrix(doc["B"], source, "B");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw StructuralError("game_core: " + source + ": A is " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " but B is " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  }
  std::vector<std::string> rows, cols;
  if (doc.contains("rows")) {
    rows = labels(doc["rows"], source, "rows");
    if (rows.size() != a.rows()) fail(source, "rows", "expected " + std::to_string(a.rows()) + " labels");
  }
  if (doc.contains("cols")) {
    cols = labels(doc["cols"], source, "cols");
    if (cols.size() != a.cols()) fail(source, "cols", "expected " + std::to_string(a.cols()) + " labels");
  }
  return Game(std::move(a), std::move(b), std::move(rows), std::move(cols), std::move(name));
}

Game load_game(const std::string& path) { return parse_game(read_file(path), path); }

RatMatrix parse_matrix(std::string_view text, const std::string& source) {
  return matrix(parse_document(text, source), source, "z");
}

RatMatrix load_matrix(const std::string& path) { return parse_matrix(read_file(path), path); }

std::string render_game(const Game& g) {
  std::ostringstream os;
  os << "{\n";
  if (!g.name().empty()) os << "  \"name\": " << Json(g.name()).dump() << ",\n";
  os << "  \"rows\": " << Json(g.row_labels()).dump() << ",\n";
  os << "  \"cols\": " << Json(g.col_labels()).dump() << ",\n";
  os << "  \"A\": ";
  write_matrix(os, g.A());
  os << ",\n  \"B\": ";
  write_matrix(os, g.B());
  os << "\n}\n";
  return os.str();
}

}  // namespace leadsolve
