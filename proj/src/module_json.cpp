#include "tautilt/module_json.hpp"

#include <limits>

#include <json.hpp>

#include "tautilt/errors.hpp"

namespace tautilt {

namespace {

Rational entry_value(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad matrix entry: ") + e.what(), 0);
    }
  }
  throw ParseError("matrix entries must be integers or \"p/q\" strings", 0);
}

nlohmann::ordered_json entry_json(const Rational& r) {
  if (is_integer(r)) {
    const BigInt n = boost::multiprecision::numerator(r);
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
      return n.convert_to<long long>();
  }
  return format_rational(r);
}

}  // namespace

Representation parse_module(const BoundQuiver& q, std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("module literal is not valid JSON: ") + e.what(), 0);
  }
  if (!doc.is_object() || !doc.contains("dims") || !doc["dims"].is_array())
    throw ParseError("module literal needs a \"dims\" array", 0);
  Representation m;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 0) throw ParseError("dims must be non-negative integers", 0);
    m.dims.push_back(d.get<int>());
  }
  if (m.dims.size() != static_cast<std::size_t>(q.vertex_count()))
    throw InputError("module literal has " + std::to_string(m.dims.size()) + " dims for " +
                     std::to_string(q.vertex_count()) + " vertices");
  const nlohmann::json arrows = doc.value("arrows", nlohmann::json::object());
  if (!arrows.is_object()) throw ParseError("\"arrows\" must be an object", 0);
  for (auto it = arrows.begin(); it != arrows.end(); ++it)
    if (!q.find_arrow(it.key())) throw InputError("module literal names unknown arrow " + it.key());
  for (const Arrow& a : q.arrows()) {
    const auto rows = static_cast<Eigen::Index>(m.dims[static_cast<std::size_t>(a.target)]);
    const auto cols = static_cast<Eigen::Index>(m.dims[static_cast<std::size_t>(a.source)]);
    Mat mat = Mat::Zero(rows, cols);
    if (arrows.contains(a.name)) {
      const auto& rows_json = arrows[a.name];
      if (!rows_json.is_array() || static_cast<Eigen::Index>(rows_json.size()) != rows)
        throw InputError("matrix of arrow " + a.name + " must have " + std::to_string(rows) + " rows");
      for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& row = rows_json[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
          throw InputError("matrix of arrow " + a.name + " must have " + std::to_string(cols) + " columns");
        for (Eigen::Index c = 0; c < cols; ++c) mat(r, c) = entry_value(row[static_cast<std::size_t>(c)]);
      }
    } else if (rows > 0 && cols > 0) {
      throw InputError("module literal omits the matrix of arrow " + a.name);
    }
    m.arrows.push_back(std::move(mat));
  }
  validate(q, m);
  return m;
}

std::string format_module(const BoundQuiver& q, const Representation& m) {
  nlohmann::ordered_json doc;
  doc["dims"] = m.dims;
  nlohmann::ordered_json arrows = nlohmann::ordered_json::object();
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < m.arrows[a].rows(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Eigen::Index c = 0; c < m.arrows[a].cols(); ++c) row.push_back(entry_json(m.arrows[a](r, c)));
      rows.push_back(std::move(row));
    }
    arrows[q.arrows()[a].name] = std::move(rows);
  }
  doc["arrows"] = std::move(arrows);
  return doc.dump();
}

}  // namespace tautilt
