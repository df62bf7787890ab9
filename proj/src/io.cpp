#include "sj/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace sj {

namespace {

using json = nlohmann::json;  // std::map-backed: keys serialize sorted

json matrix_to_json(const Matrix<Rational>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<Rational> matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty())
    throw io_error("matrix must be a non-empty array of rows");
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows[0].size());
  Matrix<Rational> m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw io_error("ragged matrix rows");
    for (int j = 0; j < c; ++j)
      m(i, j) = parse_rational(rows[i][j].get<std::string>());
  }
  return m;
}

}  // namespace

std::string algebra_to_json(const Superalgebra<Rational>& J) {
  const int n = J.dim();
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["name"] = J.name;
  doc["dim"] = n;
  doc["parities"] = std::vector<int>(J.parities.begin(), J.parities.end());
  json constants = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) {
      std::vector<std::string> dense(n, "0");
      for (const auto& [k, c] : J.prod(i, j)) dense[k] = to_string(c);
      row.push_back(dense);
    }
    constants.push_back(std::move(row));
  }
  doc["constants"] = std::move(constants);
  if (J.realization) {
    json r;
    r["block_p"] = J.realization->block_p;
    r["block_q"] = J.realization->block_q;
    r["q_form"] = J.realization->q_form;
    json mats = json::array();
    for (const auto& m : J.realization->mats) mats.push_back(matrix_to_json(m));
    r["mats"] = std::move(mats);
    doc["realization"] = std::move(r);
  }
  return doc.dump();
}

Superalgebra<Rational> algebra_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    throw io_error(std::string("malformed JSON: ") + ex.what());
  }
  try {
    if (doc.at("format_version").get<int>() != kFormatVersion)
      throw io_error("unsupported format_version");
    const int n = doc.at("dim").get<int>();
    auto par_ints = doc.at("parities").get<std::vector<int>>();
    if (static_cast<int>(par_ints.size()) != n)
      throw io_error("parities length != dim");
    ParityVec parities;
    for (int p : par_ints) {
      if (p != 0 && p != 1) throw io_error("parities must be 0 or 1");
      parities.push_back(static_cast<std::uint8_t>(p));
    }
    SuperalgebraBuilder b(doc.at("name").get<std::string>(), parities,
                          Rational(1));
    const auto& constants = doc.at("constants");
    if (static_cast<int>(constants.size()) != n)
      throw io_error("constants shape != dim");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& cell = constants.at(i).at(j);
        if (static_cast<int>(cell.size()) != n)
          throw io_error("constants shape != dim");
        for (int k = 0; k < n; ++k) {
          Rational c = parse_rational(cell.at(k).get<std::string>());
          if (!is_zero(c)) b.add(i, j, k, c);
        }
      }
    if (doc.contains("realization")) {
      const auto& r = doc.at("realization");
      Realization<Rational> real;
      real.block_p = r.at("block_p").get<int>();
      real.block_q = r.at("block_q").get<int>();
      real.q_form = r.at("q_form").get<bool>();
      for (const auto& m : r.at("mats")) real.mats.push_back(matrix_from_json(m));
      b.set_realization(std::move(real));
    }
    return b.build();
  } catch (const json::exception& ex) {
    throw io_error(std::string("bad algebra file: ") + ex.what());
  }
}

void write_algebra_file(const Superalgebra<Rational>& J,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << algebra_to_json(J) << '\n';
}

Superalgebra<Rational> read_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return algebra_from_json(buf.str());
}

std::string report_to_json(const MaximalityReport& rep,
                           const MaximalityOptions& opt, double seconds) {
  json doc;
  doc["algebra"] = rep.algebra;
  doc["sub_even_dim"] = rep.b_even;
  doc["sub_odd_dim"] = rep.b_odd;
  doc["mode"] = rep.mode;
  doc["verdict"] = to_string(rep.verdict);
  doc["proof"] = rep.proof;
  doc["tested"] = rep.tested;
  doc["seconds"] = seconds;
  if (opt.mode == MaximalityMode::Randomized) doc["seed"] = opt.seed;
  if (opt.mode == MaximalityMode::ExhaustiveModP) doc["prime"] = opt.p;
  if (!rep.detail.empty()) doc["detail"] = rep.detail;
  json wit = json::array();
  for (const auto& w : rep.witnesses) {
    json e;
    e["vector"] = w.vec;
    e["generated"] = w.generated;
    e["closure_dim"] = w.closure_dim;
    wit.push_back(std::move(e));
  }
  doc["witnesses"] = std::move(wit);
  return doc.dump();
}

}  // namespace sj

