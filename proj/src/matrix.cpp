#include "isingbraid/matrix.hpp"

namespace ising {

CMatrix c_identity(Eigen::Index n) {
  CMatrix m = CMatrix::Constant(n, n, Cyclo(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Cyclo(1);
  return m;
}

CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mat_mul: dimension mismatch");
  CMatrix r = CMatrix::Constant(a.rows(), b.cols(), Cyclo(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const Cyclo& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        const Cyclo& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

CMatrix mat_dagger(const CMatrix& a) {
  CMatrix r(a.cols(), a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(j, i) = a(i, j).conj();
  return r;
}

bool mat_equal(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool is_zero(const CMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

bool is_unitary(const CMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return mat_equal(mat_mul(m, mat_dagger(m)), c_identity(m.rows()));
}

std::optional<Cyclo> equal_up_to_phase(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("equal_up_to_phase: dimension mismatch");
  if (mat_equal(a, b)) return Cyclo(1);
  // lambda from the first nonzero entry of b, verified everywhere.
  std::optional<Cyclo> lambda;
  for (Eigen::Index i = 0; i < b.rows() && !lambda; ++i)
    for (Eigen::Index j = 0; j < b.cols() && !lambda; ++j)
      if (!b(i, j).is_zero()) lambda = a(i, j) / b(i, j);
  if (!lambda) return std::nullopt;  // b == 0 and a != b
  if (!lambda->is_unit()) return std::nullopt;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != *lambda * b(i, j)) return std::nullopt;
  return lambda;
}

std::string matrix_key(const CMatrix& m) {
  std::string s;
  s.reserve(static_cast<std::size_t>(m.size()) * 12);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      s += m(i, j).key();
      s += ';';
    }
  }
  return s;
}

CMatrix phase_gauge(const CMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) {
        Cyclo scale = m(i, j).inv();
        CMatrix r(m.rows(), m.cols());
        for (Eigen::Index p = 0; p < m.rows(); ++p)
          for (Eigen::Index q = 0; q < m.cols(); ++q)
            r(p, q) = m(p, q) * scale;
        return r;
      }
    }
  }
  return m;  // zero matrix is its own gauge
}

std::string phase_gauged_key(const CMatrix& m) {
  return matrix_key(phase_gauge(m));
}

Eigen::Index exact_rank(CMatrix m) {
  Eigen::Index rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    Cyclo inv_p = m(row, col).inv();
    for (Eigen::Index r = row + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      Cyclo f = m(r, col) * inv_p;
      for (Eigen::Index c = col; c < m.cols(); ++c)
        m(r, c) -= f * m(row, c);
    }
    ++row;
    ++rank;
  }
  return rank;
}

ComplexMatrix embed(const CMatrix& m) {
  ComplexMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_complex();
  return r;
}

}  // namespace ising
