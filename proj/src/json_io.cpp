#include "isingbraid/json_io.hpp"

namespace ising {
namespace {

json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

mpz_class mpz_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<std::int64_t>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("matrix_from_json: integer expected");
}

}  // namespace

json cyclo_to_json(const Cyclo& x) {
  json entry = json::array();
  for (int k = 0; k < 4; ++k) {
    mpq_class c = x.coeff(k);
    entry.push_back(mpz_to_json(c.get_num()));
    entry.push_back(mpz_to_json(c.get_den()));
  }
  return entry;
}

Cyclo cyclo_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8)
    throw std::invalid_argument("cyclo_from_json: expected 8 integers");
  mpq_class c[4];
  for (int k = 0; k < 4; ++k) {
    c[k] = mpq_class(mpz_from_json(j[2 * k]), mpz_from_json(j[2 * k + 1]));
    c[k].canonicalize();
  }
  return Cyclo::from_coeffs(c[0], c[1], c[2], c[3]);
}

json matrix_to_json(const CMatrix& m) {
  json j;
  j["dim"] = m.rows();
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(cyclo_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("entries"))
    throw std::invalid_argument("matrix_from_json: need dim and entries");
  Eigen::Index dim = j["dim"].get<Eigen::Index>();
  const json& rows = j["entries"];
  if (dim < 1 || !rows.is_array() ||
      rows.size() != static_cast<std::size_t>(dim))
    throw std::invalid_argument("matrix_from_json: bad row count");
  CMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
      throw std::invalid_argument("matrix_from_json: bad column count");
    for (Eigen::Index c = 0; c < dim; ++c)
      m(i, c) = cyclo_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json complex_matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(i, c).real(), m(i, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix complex_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("complex_matrix_from_json: array expected");
  Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw std::invalid_argument("complex_matrix_from_json: ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& e = row[static_cast<std::size_t>(c)];
      m(i, c) = {e.at(0).get<double>(), e.at(1).get<double>()};
    }
  }
  return m;
}

}  // namespace ising
