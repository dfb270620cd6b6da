#include "aqrm/render.hpp"

namespace aqrm {

namespace {

constexpr const char* kTableNames[4] = {"A", "B", "C", "D"};

const CoeffMap& table_of(const CoeffTables& t, int which) {
  switch (which) {
    case 0: return t.a;
    case 1: return t.b;
    case 2: return t.c;
    default: return t.d;
  }
}

CoeffMap& table_of(CoeffTables& t, int which) {
  switch (which) {
    case 0: return t.a;
    case 1: return t.b;
    case 2: return t.c;
    default: return t.d;
  }
}

// (a_+^{\dagger})^{i} a_-^{j}; empty for the scalar monomial.
std::string monomial_latex(int i, int j) {
  std::string s;
  if (i > 0) {
    s += "(a_+^{\\dagger})";
    if (i > 1) s += "^{" + std::to_string(i) + "}";
  }
  if (j > 0) {
    s += "a_-";
    if (j > 1) s += "^{" + std::to_string(j) + "}";
  }
  return s;
}

std::string table_latex(const CoeffMap& m, const char* name) {
  std::string out = std::string(name) + " &= ";
  const NormalOp op = to_normal_op(m);  // canonical (level desc, i asc) order
  if (op.is_zero()) return out + "0 \\\\";
  bool first = true;
  for (const auto& [key, poly] : op.terms()) {
    const std::string mono = monomial_latex(key.dag_pow, key.low_pow);
    std::string body;
    if (poly.terms().size() > 1 && !mono.empty()) {
      body = "\\left(" + poly.latex() + "\\right)" + mono;
    } else if (poly == LaurentPoly::one() && !mono.empty()) {
      body = mono;
    } else if (poly == -LaurentPoly::one() && !mono.empty()) {
      body = "-" + mono;
    } else {
      body = poly.latex() + mono;
    }
    if (!first && body.rfind('-', 0) != 0) out += " + ";
    if (!first && body.rfind('-', 0) == 0) {
      out += " - ";
      body.erase(0, 1);
    }
    out += body;
    first = false;
  }
  return out + " \\\\";
}

}  // namespace

nlohmann::json tables_to_json(const CoeffTables& t) {
  nlohmann::json out;
  out["N"] = t.bias;
  for (int which = 0; which < 4; ++which) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [ij, poly] : table_of(t, which))
      entries.push_back(
          {{"i", ij.first}, {"j", ij.second}, {"poly", poly.to_json()}});
    out[kTableNames[which]] = std::move(entries);
  }
  return out;
}

CoeffTables tables_from_json(const nlohmann::json& j) try {
  if (!j.is_object() || !j.contains("N"))
    throw std::invalid_argument("tables: expected object with \"N\"");
  CoeffTables t;
  t.bias = j.at("N").get<int>();
  if (t.bias < 0) throw std::invalid_argument("tables: negative bias");
  for (int which = 0; which < 4; ++which) {
    const auto& entries = j.at(kTableNames[which]);
    if (!entries.is_array())
      throw std::invalid_argument("tables: expected array for table");
    CoeffMap& m = table_of(t, which);
    for (const auto& e : entries) {
      const int i = e.at("i").get<int>();
      const int jj = e.at("j").get<int>();
      if (i < 0 || jj < 0 || i + jj > t.bias)
        throw std::invalid_argument("tables: index out of range");
      if (m.count({i, jj}))
        throw std::invalid_argument("tables: duplicate entry");
      const LaurentPoly poly = LaurentPoly::from_json(e.at("poly"));
      if (poly.is_zero())
        throw std::invalid_argument("tables: explicit zero entry");
      m.emplace(std::make_pair(i, jj), poly);
    }
  }
  return t;
} catch (const nlohmann::json::exception& e) {
  // Missing keys / wrong value types surface as one malformed-input error.
  throw std::invalid_argument(std::string("tables: ") + e.what());
}

std::string tables_to_latex(const CoeffTables& t) {
  std::string out;
  for (int which = 0; which < 4; ++which) {
    out += table_latex(table_of(t, which), kTableNames[which]);
    out += '\n';
  }
  return out;
}

std::string render_tables(const CoeffTables& t, const std::string& format) {
  if (format == "json") return tables_to_json(t).dump(2) + "\n";
  if (format == "latex") return tables_to_latex(t);
  throw std::invalid_argument("render_tables: unknown format '" + format + "'");
}

}  // namespace aqrm
