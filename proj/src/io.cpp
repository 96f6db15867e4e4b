#include "logmono/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace logmono::io {

namespace {

void expect_keys(const Json& doc, const std::string& path, const std::set<std::string>& keys) {
  if (!doc.is_object()) throw ParseError(path + ": expected an object");
  for (const auto& [key, value] : doc.items())
    if (!keys.count(key)) throw ParseError(path + ": unknown key \"" + key + "\"");
  for (const auto& key : keys)
    if (!doc.contains(key)) throw ParseError(path + ": missing key \"" + key + "\"");
}

const Json& expect_array(const Json& doc, const std::string& path) {
  if (!doc.is_array()) throw ParseError(path + ": expected an array");
  return doc;
}

Integer expect_int(const Json& doc, const std::string& path) {
  if (!doc.is_number_integer()) throw ParseError(path + ": expected an integer");
  return doc.get<Integer>();
}

std::string expect_string(const Json& doc, const std::string& path) {
  if (!doc.is_string()) throw ParseError(path + ": expected a string");
  return doc.get<std::string>();
}

std::string item(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

IntMatrix parse_square(const Json& rows, Integer h, const std::string& path) {
  expect_array(rows, path);
  if (static_cast<Integer>(rows.size()) != h) throw ParseError(path + ": expected " + std::to_string(h) + " rows");
  IntMatrix m(h, h);
  for (Integer i = 0; i < h; ++i) {
    const auto rpath = item(path, static_cast<std::size_t>(i));
    const Json& row = expect_array(rows[static_cast<std::size_t>(i)], rpath);
    if (static_cast<Integer>(row.size()) != h) throw ParseError(rpath + ": expected " + std::to_string(h) + " entries");
    for (Integer j = 0; j < h; ++j)
      m(i, j) = expect_int(row[static_cast<std::size_t>(j)], item(rpath, static_cast<std::size_t>(j)));
  }
  return m;
}

Json matrix_rows(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> parse_factors(const Json& doc, const std::string& path) {
  std::vector<int> factors;
  expect_array(doc, path);
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const Integer m = expect_int(doc[i], item(path, i));
    if (m < 2 || m > 4096) throw ParseError(item(path, i) + ": invariant factor must be between 2 and 4096");
    factors.push_back(static_cast<int>(m));
  }
  return factors;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read file \"" + path.string() + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TropicalCurve parse_curve(const Json& doc) {
  expect_keys(doc, "curve", {"base_rank", "vertices", "edges"});
  TropicalCurve curve;
  curve.base_rank = expect_int(doc["base_rank"], "base_rank");

  const Json& vertices = expect_array(doc["vertices"], "vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto path = item("vertices", i);
    expect_keys(vertices[i], path, {"id", "genus"});
    curve.vertices.push_back({expect_string(vertices[i]["id"], path + ".id"),
                              expect_int(vertices[i]["genus"], path + ".genus")});
  }

  const Json& edges = expect_array(doc["edges"], "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto path = item("edges", i);
    expect_keys(edges[i], path, {"id", "src", "dst", "length"});
    const Json& length = expect_array(edges[i]["length"], path + ".length");
    IntVector coords(static_cast<Eigen::Index>(length.size()));
    for (std::size_t k = 0; k < length.size(); ++k)
      coords(static_cast<Eigen::Index>(k)) = expect_int(length[k], item(path + ".length", k));
    curve.edges.push_back({expect_string(edges[i]["id"], path + ".id"), expect_string(edges[i]["src"], path + ".src"),
                           expect_string(edges[i]["dst"], path + ".dst"), MonoidVector(std::move(coords))});
  }
  return curve;
}

TropicalCurve parse_curve_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_curve(doc);
}

TropicalCurve read_curve_file(const std::filesystem::path& path) {
  try {
    return parse_curve_text(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Json to_json(const TropicalCurve& curve) {
  Json doc;
  doc["base_rank"] = curve.base_rank;
  doc["vertices"] = Json::array();
  for (const auto& v : curve.vertices) doc["vertices"].push_back({{"id", v.id}, {"genus", v.genus}});
  doc["edges"] = Json::array();
  for (const auto& e : curve.edges) {
    Json length = Json::array();
    for (Eigen::Index k = 0; k < e.length.rank(); ++k) length.push_back(e.length.coords(k));
    doc["edges"].push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}, {"length", std::move(length)}});
  }
  return doc;
}

Json to_json(const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) out.push_back({{"locus", v.locus}, {"message", v.message}});
  return out;
}

Json to_json(const CycleBasis& basis) {
  Json doc;
  doc["h"] = basis.rank();
  doc["edges"] = basis.edge_ids;
  doc["generators"] = basis.generators;
  doc["cycles"] = matrix_rows(basis.matrix);
  return doc;
}

Json to_json(const PairingMatrix& pm) {
  Json doc;
  doc["h"] = pm.h();
  doc["base_rank"] = pm.base_rank();
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < pm.h(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < pm.h(); ++j) {
      const MonoidVector v = pm.entry(i, j);
      row.push_back(std::vector<Integer>(v.coords.data(), v.coords.data() + v.coords.size()));
    }
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  return doc;
}

Json int_matrix_json(const IntMatrix& b) {
  Json doc;
  doc["h"] = b.rows();
  doc["entries"] = matrix_rows(b);
  return doc;
}

Json to_json(const MonodromyOperator& op) {
  Json doc;
  doc["modulus"] = op.modulus();
  doc["h"] = op.h();
  doc["a"] = op.a();
  doc["w"] = op.winding();
  doc["matrix"] = matrix_rows(op.matrix());
  return doc;
}

Json to_json(const HodgeTable& table) {
  Json doc;
  doc["gr_-1"] = table.rows[0];
  doc["gr_0"] = table.rows[1];
  doc["gr_1"] = table.rows[2];
  return doc;
}

Json to_json(const WeightDims& dims) {
  Json doc;
  doc["h"] = dims.h;
  doc["a"] = dims.a;
  doc["total"] = dims.total;
  return doc;
}

Json to_json(const TorsionRanks& ranks) {
  Json doc;
  doc["modulus"] = ranks.modulus;
  doc["ranks"] = {ranks.toric, ranks.abelian, ranks.discrete};
  return doc;
}

Json to_json(const extpan::TorsorReport& report) {
  Json doc;
  doc["fiber_size"] = report.fiber_size;
  doc["ext1_order"] = report.ext1_order;
  doc["stabilizer_order"] = report.stabilizer_order;
  doc["transitive"] = report.transitive;
  doc["section_ok"] = report.section_ok;
  doc["connecting_image_order"] = report.connecting_image_order;
  doc["stabilizer_is_connecting_image"] = report.stabilizer_is_connecting_image;
  return doc;
}

PairingMatrix parse_pairing(const Json& doc) {
  expect_keys(doc, "pairing", {"h", "base_rank", "entries"});
  const Integer h = expect_int(doc["h"], "h");
  const Integer r = expect_int(doc["base_rank"], "base_rank");
  if (h < 0 || r < 0) throw ParseError("pairing: h and base_rank must be nonnegative");
  const Json& rows = expect_array(doc["entries"], "entries");
  if (static_cast<Integer>(rows.size()) != h) throw ParseError("entries: expected " + std::to_string(h) + " rows");
  std::vector<IntMatrix> layers(static_cast<std::size_t>(r), IntMatrix(h, h));
  for (Integer i = 0; i < h; ++i) {
    const auto rpath = item("entries", static_cast<std::size_t>(i));
    const Json& row = expect_array(rows[static_cast<std::size_t>(i)], rpath);
    if (static_cast<Integer>(row.size()) != h) throw ParseError(rpath + ": expected " + std::to_string(h) + " entries");
    for (Integer j = 0; j < h; ++j) {
      const auto epath = item(rpath, static_cast<std::size_t>(j));
      const Json& v = expect_array(row[static_cast<std::size_t>(j)], epath);
      if (static_cast<Integer>(v.size()) != r) throw ParseError(epath + ": expected " + std::to_string(r) + " coordinates");
      for (Integer k = 0; k < r; ++k)
        layers[static_cast<std::size_t>(k)](i, j) = expect_int(v[static_cast<std::size_t>(k)], item(epath, static_cast<std::size_t>(k)));
    }
  }
  try {
    return PairingMatrix(r, std::move(layers));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("pairing: ") + e.what());
  }
}

IntMatrix parse_int_matrix(const Json& doc) {
  expect_keys(doc, "matrix", {"h", "entries"});
  const Integer h = expect_int(doc["h"], "h");
  if (h < 0) throw ParseError("h: must be nonnegative");
  return parse_square(doc["entries"], h, "entries");
}

MonodromyOperator parse_operator(const Json& doc) {
  expect_keys(doc, "operator", {"modulus", "h", "a", "w", "matrix"});
  const Integer h = expect_int(doc["h"], "h");
  const Integer a = expect_int(doc["a"], "a");
  if (h < 0 || a < 0) throw ParseError("operator: h and a must be nonnegative");
  try {
    return MonodromyOperator(expect_int(doc["modulus"], "modulus"), h, a, expect_int(doc["w"], "w"),
                             parse_square(doc["matrix"], 2 * (h + a), "matrix"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("operator: ") + e.what());
  }
}

HodgeTable parse_hodge_table(const Json& doc) {
  expect_keys(doc, "hodge", {"gr_-1", "gr_0", "gr_1"});
  HodgeTable t;
  const char* keys[] = {"gr_-1", "gr_0", "gr_1"};
  for (std::size_t r = 0; r < 3; ++r) {
    const Json& row = expect_array(doc[keys[r]], keys[r]);
    if (row.size() != 2) throw ParseError(std::string(keys[r]) + ": expected [F0, F1]");
    t.rows[r] = {expect_int(row[0], item(keys[r], 0)), expect_int(row[1], item(keys[r], 1))};
  }
  return t;
}

extpan::TorsorReport parse_torsor_report(const Json& doc) {
  expect_keys(doc, "report",
              {"fiber_size", "ext1_order", "stabilizer_order", "transitive", "section_ok", "connecting_image_order",
               "stabilizer_is_connecting_image"});
  auto flag = [&](const char* key) {
    if (!doc[key].is_boolean()) throw ParseError(std::string(key) + ": expected a boolean");
    return doc[key].get<bool>();
  };
  extpan::TorsorReport r;
  r.fiber_size = expect_int(doc["fiber_size"], "fiber_size");
  r.ext1_order = expect_int(doc["ext1_order"], "ext1_order");
  r.stabilizer_order = expect_int(doc["stabilizer_order"], "stabilizer_order");
  r.connecting_image_order = expect_int(doc["connecting_image_order"], "connecting_image_order");
  r.transitive = flag("transitive");
  r.section_ok = flag("section_ok");
  r.stabilizer_is_connecting_image = flag("stabilizer_is_connecting_image");
  return r;
}

extpan::Cocycle parse_cocycle(const Json& doc) {
  expect_keys(doc, "cocycle", {"source", "target", "table"});
  extpan::GroupPtr source;
  extpan::GroupPtr target;
  try {
    source = extpan::make_group(parse_factors(doc["source"], "source"));
    target = extpan::make_group(parse_factors(doc["target"], "target"));
  } catch (const std::length_error& e) {
    throw ParseError(std::string("cocycle: ") + e.what());
  }
  const int n = source->order();
  const Json& rows = expect_array(doc["table"], "table");
  if (static_cast<int>(rows.size()) != n) throw ParseError("table: expected " + std::to_string(n) + " rows");
  std::vector<int> table;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    const auto rpath = item("table", a);
    const Json& row = expect_array(rows[a], rpath);
    if (static_cast<int>(row.size()) != n) throw ParseError(rpath + ": expected " + std::to_string(n) + " entries");
    for (std::size_t b = 0; b < row.size(); ++b) {
      const auto epath = item(rpath, b);
      const Json& coords = expect_array(row[b], epath);
      if (coords.size() != target->factors().size())
        throw ParseError(epath + ": expected " + std::to_string(target->factors().size()) + " coordinates");
      std::vector<int> c;
      for (std::size_t i = 0; i < coords.size(); ++i) {
        const Integer v = expect_int(coords[i], item(epath, i));
        if (v < 0 || v >= target->factors()[i])
          throw ParseError(item(epath, i) + ": coordinate out of range for Z/" + std::to_string(target->factors()[i]));
        c.push_back(static_cast<int>(v));
      }
      table.push_back(target->element(c));
    }
  }
  try {
    return extpan::Cocycle(source, target, std::move(table));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("cocycle: ") + e.what());
  }
}

extpan::Cocycle read_cocycle_file(const std::filesystem::path& path) {
  Json doc;
  try {
    doc = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": malformed JSON: " + e.what());
  }
  try {
    return parse_cocycle(doc);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Json to_json(const extpan::Cocycle& c) {
  Json doc;
  doc["source"] = c.source().factors();
  doc["target"] = c.target().factors();
  Json rows = Json::array();
  for (int a = 0; a < c.source().order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < c.source().order(); ++b) row.push_back(c.target().coords(c(a, b)));
    rows.push_back(std::move(row));
  }
  doc["table"] = std::move(rows);
  return doc;
}

}  // namespace logmono::io
