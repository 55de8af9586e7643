#include "isingbraid/rep.hpp"

#include <bit>

namespace ising {

std::string to_string(Convention c) {
  return c == Convention::wavefunction ? "wavefunction" : "quantumgroup";
}

std::optional<Convention> convention_from_string(const std::string& s) {
  if (s == "wavefunction") return Convention::wavefunction;
  if (s == "quantumgroup") return Convention::quantumgroup;
  return std::nullopt;
}

RepSpec::RepSpec(int anyons_, Convention convention_, bool projected_)
    : anyons(anyons_), convention(convention_), projected(projected_) {
  if (anyons < 4 || anyons % 2 != 0)
    throw std::invalid_argument("RepSpec: anyon count must be even and >= 4");
}

QubitEncoding qubit_basis_map(int n_pairs) {
  if (n_pairs < 2)
    throw std::invalid_argument("qubit_basis_map: need at least 2 pairs");
  QubitEncoding enc;
  enc.n_pairs = n_pairs;
  const int n_qubits = n_pairs - 1;
  enc.channels.resize(std::size_t(1) << n_qubits);
  for (std::uint32_t q = 0; q < enc.channels.size(); ++q) {
    // qubit bit j (1-based) read MSB-first from q
    auto qbit = [&](int j) -> std::uint32_t {
      return (q >> (n_qubits - j)) & 1u;
    };
    std::uint32_t e = qbit(1);  // e1 = q1
    for (int j = 2; j <= n_pairs - 1; ++j)
      e = (e << 1) | (qbit(j - 1) ^ qbit(j));
    e = (e << 1) | qbit(n_qubits);  // e_n = q_{n-1}
    enc.channels[q] = e;
  }
  return enc;
}

CMatrix odd_exchange_matrix() {
  CMatrix r = c_identity(2);
  r(1, 1) = Cyclo::i();
  return r;
}

CMatrix even_exchange_matrix() {
  const Cyclo s = Cyclo::inv_sqrt2();
  const Cyclo mi = -Cyclo::i();  // -i
  CMatrix r = CMatrix::Constant(4, 4, Cyclo(0));
  for (int d = 0; d < 4; ++d) r(d, d) = s;
  r(0, 3) = s * mi;
  r(1, 2) = s * mi;
  r(2, 1) = s * mi;
  r(3, 0) = s * mi;
  return r;
}

CMatrix build_generator(const RepSpec& spec, int k) {
  if (spec.projected)
    throw std::invalid_argument("build_generator: spec must be unprojected");
  if (k < 1 || k > spec.generator_count())
    throw std::invalid_argument("build_generator: generator index out of range");
  const int n = spec.pairs();
  auto id = [](int factors) {
    return c_identity(Eigen::Index(1) << factors);
  };
  CMatrix g;
  if (k % 2 == 1) {
    const int j = (k + 1) / 2;  // acts on factor j
    g = kron(kron(id(j - 1), odd_exchange_matrix()), id(n - j));
  } else {
    const int j = k / 2;  // acts on factors j, j+1
    g = kron(kron(id(j - 1), even_exchange_matrix()), id(n - j - 1));
    if (spec.convention == Convention::wavefunction) {
      const Cyclo z = Cyclo::zeta();
      for (Eigen::Index r = 0; r < g.rows(); ++r)
        for (Eigen::Index c = 0; c < g.cols(); ++c)
          if (!g(r, c).is_zero()) g(r, c) *= z;
    }
  }
  return g;
}

CMatrix parity_projector(int n_pairs) {
  if (n_pairs < 1)
    throw std::invalid_argument("parity_projector: need at least 1 pair");
  const Eigen::Index dim = Eigen::Index(1) << n_pairs;
  CMatrix p = CMatrix::Constant(dim, dim, Cyclo(0));
  for (Eigen::Index s = 0; s < dim; ++s)
    if (std::popcount(static_cast<std::uint64_t>(s)) % 2 == 0)
      p(s, s) = Cyclo(1);
  return p;
}

CMatrix project_generator(const RepSpec& spec, int k) {
  if (!spec.projected)
    throw std::invalid_argument("project_generator: spec must be projected");
  RepSpec full = spec;
  full.projected = false;
  CMatrix g = build_generator(full, k);
  QubitEncoding enc = qubit_basis_map(spec.pairs());
  const Eigen::Index dim = spec.projected_dim();
  CMatrix r(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index b = 0; b < dim; ++b)
      r(a, b) = g(enc.channels[std::size_t(a)], enc.channels[std::size_t(b)]);
  return r;
}

std::vector<CMatrix> generators(const RepSpec& spec) {
  std::vector<CMatrix> gens;
  gens.reserve(std::size_t(spec.generator_count()));
  for (int k = 1; k <= spec.generator_count(); ++k)
    gens.push_back(spec.projected ? project_generator(spec, k)
                                  : build_generator(spec, k));
  return gens;
}

namespace {

CMatrix from_ints(Eigen::Index dim, const std::vector<long>& v) {
  CMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      m(i, j) = Cyclo(v[std::size_t(i * dim + j)]);
  return m;
}

}  // namespace

std::map<std::string, CMatrix> paper_constants() {
  std::map<std::string, CMatrix> t;
  const RepSpec b4(4, Convention::wavefunction, true);
  const RepSpec b6(6, Convention::wavefunction, true);
  t["R4_12"] = project_generator(b4, 1);
  t["R4_23"] = project_generator(b4, 2);
  t["R4_34"] = project_generator(b4, 3);
  t["R6_12"] = project_generator(b6, 1);
  t["R6_23"] = project_generator(b6, 2);
  t["R6_34"] = project_generator(b6, 3);
  t["R6_45"] = project_generator(b6, 4);
  t["R6_56"] = project_generator(b6, 5);

  CMatrix h(2, 2);
  const Cyclo s = Cyclo::inv_sqrt2();
  h(0, 0) = s;
  h(0, 1) = s;
  h(1, 0) = s;
  h(1, 1) = -s;
  t["H"] = h;

  CMatrix tg = c_identity(2);
  tg(1, 1) = Cyclo::zeta();
  t["T"] = tg;

  t["CNOT"] = from_ints(4, {1, 0, 0, 0,  //
                            0, 1, 0, 0,  //
                            0, 0, 0, 1,  //
                            0, 0, 1, 0});
  return t;
}

std::optional<CMatrix> named_gate(const std::string& name) {
  static const std::map<std::string, CMatrix> table = [] {
    std::map<std::string, CMatrix> t = paper_constants();
    t["I"] = c_identity(2);
    t["X"] = from_ints(2, {0, 1, 1, 0});
    t["Z"] = from_ints(2, {1, 0, 0, -1});
    CMatrix cz = c_identity(4);
    cz(3, 3) = Cyclo(-1);
    t["CZ"] = cz;
    return t;
  }();
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

bool is_tensor_factorizable(const CMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw std::invalid_argument("is_tensor_factorizable: need a 4x4 matrix");
  // Rearrange so row (i,j) holds the vectorized 2x2 block B_ij of
  // M[(i,k),(j,l)]; M = A (x) B iff this has rank <= 1.
  CMatrix r(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          r(2 * i + j, 2 * k + l) = m(2 * i + k, 2 * j + l);
  return exact_rank(r) <= 1;
}

}  // namespace ising
