#include "mmdescend/scheme_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mmdescend {

namespace {

using json = nlohmann::ordered_json;

QElem entry_from_json(const json& j, FieldDesc f) {
  if (j.is_number_integer())
    return QElem::rational(Rat(static_cast<long>(j.get<long long>())), f);
  if (j.is_string()) return parse_entry(j.get<std::string>(), f);
  throw parse_error("matrix entry must be a string or an integer");
}

ExactMat matrix_from_json(const json& j, int rows, int cols, FieldDesc f,
                          const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw parse_error(std::string(what) + ": expected " +
                      std::to_string(rows) + " rows");
  ExactMat M(rows, cols, f);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw parse_error(std::string(what) + ": expected " +
                        std::to_string(cols) + " columns in row " +
                        std::to_string(i + 1));
    for (int k = 0; k < cols; ++k) M.at(i, k) = entry_from_json(row[k], f);
  }
  return M;
}

json matrix_to_json(const ExactMat& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < M.cols(); ++j)
      row.push_back(entry_to_string(M.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

LoadedScheme parse_scheme(const std::string& text, bool skip_verify) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("scheme document must be an object");
  if (!doc.contains("dims") || !doc["dims"].is_array() ||
      doc["dims"].size() != 3)
    throw parse_error("missing or malformed \"dims\" [m,n,p]");
  int m = doc["dims"][0].get<int>(), n = doc["dims"][1].get<int>(),
      p = doc["dims"][2].get<int>();
  if (!doc.contains("field") || !doc["field"].contains("d"))
    throw parse_error("missing \"field\": {\"d\": D}");
  FieldDesc f = [&] {
    try {
      return FieldDesc(doc["field"]["d"].get<long long>());
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what());
    }
  }();

  std::optional<LoadedScheme> out;
  if (doc.contains("triples")) {
    const json& ts = doc["triples"];
    if (!ts.is_array() || ts.empty())
      throw parse_error("\"triples\" must be a nonempty array");
    if (doc.contains("rank") &&
        doc["rank"].get<int>() != static_cast<int>(ts.size()))
      throw parse_error("declared rank does not match number of triples");
    std::vector<Triple> triples;
    for (size_t j = 0; j < ts.size(); ++j) {
      const json& t = ts[j];
      if (!t.contains("O") || !t.contains("P") || !t.contains("Q"))
        throw parse_error("triple " + std::to_string(j + 1) +
                          " must have O, P, Q");
      triples.push_back(Triple{matrix_from_json(t["O"], m, n, f, "O"),
                               matrix_from_json(t["P"], n, p, f, "P"),
                               matrix_from_json(t["Q"], p, m, f, "Q")});
    }
    out = LoadedScheme{Scheme(m, n, p, std::move(triples), f),
                       SchemeFileForm::Triples};
  } else if (doc.contains("U") && doc.contains("V") && doc.contains("W")) {
    int r = static_cast<int>(doc["U"].size());
    EncodingMatrices e{matrix_from_json(doc["U"], r, m * n, f, "U"),
                       matrix_from_json(doc["V"], r, n * p, f, "V"),
                       matrix_from_json(doc["W"], r, p * m, f, "W")};
    out = LoadedScheme{from_encoding(e, m, n, p), SchemeFileForm::Encoding};
  } else {
    throw parse_error("scheme document needs \"triples\" or \"U\",\"V\",\"W\"");
  }

  if (!skip_verify) {
    BrentReport rep = brent_verify(out->scheme);
    if (!rep.ok) throw brent_violation_error(std::move(rep));
  }
  return std::move(*out);
}

LoadedScheme load_scheme(const std::string& path, bool skip_verify) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scheme(ss.str(), skip_verify);
}

std::string serialize_scheme(const Scheme& s, SchemeFileForm form) {
  json doc;
  doc["dims"] = {s.m(), s.n(), s.p()};
  if (form == SchemeFileForm::Triples) doc["rank"] = s.rank();
  doc["field"] = {{"d", s.field().d}};
  if (form == SchemeFileForm::Triples) {
    json ts = json::array();
    for (const auto& t : s.triples()) {
      json jt;
      jt["O"] = matrix_to_json(t.O);
      jt["P"] = matrix_to_json(t.P);
      jt["Q"] = matrix_to_json(t.Q);
      ts.push_back(std::move(jt));
    }
    doc["triples"] = std::move(ts);
  } else {
    EncodingMatrices e = to_encoding(s);
    doc["U"] = matrix_to_json(e.U);
    doc["V"] = matrix_to_json(e.V);
    doc["W"] = matrix_to_json(e.W);
  }
  return doc.dump(2) + "\n";
}

void save_scheme(const Scheme& s, const std::string& path,
                 SchemeFileForm form) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_scheme(s, form);
}

ExactMat parse_matrix_literal(const std::string& text, FieldDesc field) {
  // [[e,e,...],[...],...] with entries in the exactnum grammar.
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  size_t pos = 0;
  auto expect = [&](char c) {
    if (pos >= s.size() || s[pos] != c)
      throw parse_error("matrix literal: expected '" + std::string(1, c) +
                        "' at offset " + std::to_string(pos));
    ++pos;
  };
  expect('[');
  std::vector<std::vector<QElem>> rows;
  while (true) {
    expect('[');
    std::vector<QElem> row;
    while (true) {
      size_t end = s.find_first_of(",]", pos);
      if (end == std::string::npos)
        throw parse_error("matrix literal: unterminated row");
      row.push_back(parse_entry(s.substr(pos, end - pos), field));
      pos = end;
      if (s[pos] == ']') break;
      ++pos;  // skip ','
    }
    expect(']');
    rows.push_back(std::move(row));
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  if (pos != s.size()) throw parse_error("matrix literal: trailing characters");
  const size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw parse_error("matrix literal: ragged rows");
  ExactMat M(static_cast<int>(rows.size()), static_cast<int>(cols), field);
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) M.at(i, j) = rows[i][j];
  return M;
}

std::string matrix_to_literal(const ExactMat& A) {
  std::string out = "[";
  for (int i = 0; i < A.rows(); ++i) {
    out += (i ? ",[" : "[");
    for (int j = 0; j < A.cols(); ++j) {
      if (j) out += ",";
      out += entry_to_string(A.at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace mmdescend
