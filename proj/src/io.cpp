#include "ffc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ffc {

const char* kCsvHeader = "context,param1,param2,lhs,rhs,margin,satisfied";

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("polynomial: expected a JSON object");
  Polynomial p;
  if (j.contains("coeffs")) {
    std::vector<Rational> c;
    for (const auto& v : j.at("coeffs")) {
      if (v.is_string())
        c.push_back(parse_rational(v.get<std::string>()));
      else if (v.is_number_integer())
        c.push_back(Rational(Integer(v.get<long>())));
      else if (v.is_number())
        c.push_back(Rational(v.get<double>()));
      else
        throw ParseError("polynomial: coefficient must be a string or number");
    }
    p = Polynomial(std::move(c));
  } else if (j.contains("roots")) {
    std::vector<Rational> roots;
    for (const auto& v : j.at("roots")) {
      if (v.is_string())
        roots.push_back(parse_rational(v.get<std::string>()));
      else if (v.is_number_integer())
        roots.push_back(Rational(Integer(v.get<long>())));
      else if (v.is_number())
        roots.push_back(Rational(v.get<double>()));
      else
        throw ParseError("polynomial: root must be a string or number");
    }
    p = from_roots(roots);
  } else {
    throw ParseError("polynomial: need a \"coeffs\" or \"roots\" field");
  }
  if (j.contains("degree")) {
    long want = j.at("degree").get<long>();
    if (want != p.degree())
      throw ParseError("polynomial: declared degree " + std::to_string(want) +
                       " does not match actual degree " + std::to_string(p.degree()));
  }
  return p;
}

nlohmann::ordered_json polynomial_to_json(const Polynomial& p) {
  nlohmann::ordered_json j;
  j["degree"] = p.degree();
  auto& arr = j["coeffs"] = nlohmann::ordered_json::array();
  for (int k = 0; k <= p.degree(); ++k) arr.push_back(to_fraction_string(p.coeff(k)));
  return j;
}

Polynomial read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return polynomial_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

nlohmann::ordered_json rational_matrix_to_json(const RationalMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.dim(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(to_fraction_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix rational_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix: expected rows");
  int d = static_cast<int>(j.size());
  RationalMatrix m(d);
  for (int i = 0; i < d; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != d)
      throw ParseError("matrix: expected a square array of rows");
    for (int k = 0; k < d; ++k) {
      const auto& v = j[i][k];
      if (v.is_string())
        m.at(i, k) = parse_rational(v.get<std::string>());
      else if (v.is_number_integer())
        m.at(i, k) = Rational(Integer(v.get<long>()));
      else
        throw ParseError("matrix: entries must be strings or integers");
    }
  }
  return m;
}

nlohmann::ordered_json bound_report_to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["context"] = r.context;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["satisfied"] = r.satisfied;
  j["tolerance"] = r.tolerance;
  return j;
}

std::string csv_row(const BoundReport& r, const std::string& param1,
                    const std::string& param2) {
  std::ostringstream os;
  os << r.context << ',' << param1 << ',' << param2 << ',' << format_double(r.lhs)
     << ',' << format_double(r.rhs) << ',' << format_double(r.margin) << ','
     << (r.satisfied ? "true" : "false");
  return os.str();
}

}  // namespace ffc
