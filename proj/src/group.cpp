#include "isingbraid/group.hpp"

namespace ising {

bool GroupImage::insert(const CMatrix& m) {
  auto [it, fresh] = index_.try_emplace(matrix_key(m), elements_.size());
  if (fresh) elements_.push_back(m);
  return fresh;
}

namespace {

void validate_generators(const std::vector<CMatrix>& gens) {
  if (gens.empty())
    throw std::invalid_argument("enumeration: need at least one generator");
  const Eigen::Index dim = gens.front().rows();
  for (const auto& g : gens) {
    if (g.rows() != dim || g.cols() != dim)
      throw std::invalid_argument("enumeration: generator dimensions differ");
    if (!is_unitary(g))
      throw std::invalid_argument("enumeration: generator is not unitary");
  }
}

void check_limit(std::size_t next, std::size_t limit) {
  if (next > limit) throw enumeration_limit_error(next - 1, limit);
}

}  // namespace

GroupImage dimino_enumerate(const std::vector<CMatrix>& generators,
                            std::size_t limit) {
  validate_generators(generators);
  if (limit == 0) throw std::invalid_argument("enumeration: limit must be > 0");
  const Eigen::Index dim = generators.front().rows();
  const CMatrix id = c_identity(dim);

  GroupImage image(dim, generators);
  image.insert(id);

  // Cyclic group of the first generator.
  CMatrix g = generators[0];
  while (image.insert(g)) {
    check_limit(image.order() + 1, limit);
    g = mat_mul(g, generators[0]);
  }

  for (std::size_t i = 1; i < generators.size(); ++i) {
    if (image.contains_exact(generators[i])) continue;
    // Inductive step: extend the subgroup H enumerated so far by gens[i].
    // New elements arrive as whole cosets H*rep; further coset reps are
    // found by multiplying known reps with all generators considered yet.
    const std::size_t prev_order = image.order();
    check_limit(image.order() + prev_order, limit);
    image.insert(generators[i]);
    for (std::size_t j = 1; j < prev_order; ++j)
      image.insert(mat_mul(image.elements()[j], generators[i]));

    std::size_t rep_pos = prev_order;
    while (rep_pos < image.order()) {
      const CMatrix rep = image.elements()[rep_pos];
      for (std::size_t s = 0; s <= i; ++s) {
        CMatrix candidate = mat_mul(rep, generators[s]);
        if (image.contains_exact(candidate)) continue;
        check_limit(image.order() + prev_order, limit);
        image.insert(candidate);
        for (std::size_t j = 1; j < prev_order; ++j)
          image.insert(mat_mul(image.elements()[j], candidate));
      }
      rep_pos += prev_order;
    }
  }
  return image;
}

GroupImage naive_closure(const std::vector<CMatrix>& generators,
                         std::size_t limit) {
  validate_generators(generators);
  const Eigen::Index dim = generators.front().rows();

  GroupImage image(dim, generators);
  image.insert(c_identity(dim));
  std::size_t frontier_begin = 0;
  while (frontier_begin < image.order()) {
    const std::size_t frontier_end = image.order();
    for (std::size_t e = frontier_begin; e < frontier_end; ++e) {
      for (const auto& g : generators) {
        CMatrix m = mat_mul(image.elements()[e], g);
        check_limit(image.order() + 1, limit);
        image.insert(m);
      }
    }
    frontier_begin = frontier_end;
  }
  return image;
}

mpz_class read_order_formula(int two_n) {
  if (two_n < 6 || two_n % 2 != 0)
    throw std::invalid_argument(
        "read_order_formula: defined for even anyon counts >= 6");
  const int n = two_n / 2;
  mpz_class result = 1;
  mpz_ui_pow_ui(result.get_mpz_t(), 2,
                static_cast<unsigned long>(n % 2 == 0 ? two_n - 1 : two_n));
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(two_n));
  return result * fact;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::exact:
      return "exact";
    case Verdict::projective:
      return "projective";
    default:
      return "fail";
  }
}

namespace {

RelationReport compare_sides(std::string relation, const CMatrix& lhs,
                             const CMatrix& rhs, RelationMode mode) {
  RelationReport report;
  report.relation = std::move(relation);
  if (mat_equal(lhs, rhs)) {
    report.verdict = Verdict::exact;
    return report;
  }
  if (mode == RelationMode::projective) {
    if (auto phase = equal_up_to_phase(lhs, rhs)) {
      report.verdict = Verdict::projective;
      report.phase = phase;
      return report;
    }
  }
  report.verdict = Verdict::fail;
  return report;
}

}  // namespace

std::vector<RelationReport> check_artin_relations(
    const std::vector<CMatrix>& generators, RelationMode mode) {
  if (generators.size() < 2)
    throw std::invalid_argument("check_artin_relations: need >= 2 generators");
  std::vector<RelationReport> reports;
  for (std::size_t k = 0; k + 1 < generators.size(); ++k) {
    const CMatrix& a = generators[k];
    const CMatrix& b = generators[k + 1];
    CMatrix lhs = mat_mul(mat_mul(a, b), a);
    CMatrix rhs = mat_mul(mat_mul(b, a), b);
    reports.push_back(compare_sides(
        "artin(" + std::to_string(k + 1) + "," + std::to_string(k + 2) + ")",
        lhs, rhs, mode));
  }
  return reports;
}

std::vector<RelationReport> check_far_commutativity(
    const std::vector<CMatrix>& generators) {
  std::vector<RelationReport> reports;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    for (std::size_t l = k + 2; l < generators.size(); ++l) {
      CMatrix lhs = mat_mul(generators[k], generators[l]);
      CMatrix rhs = mat_mul(generators[l], generators[k]);
      reports.push_back(compare_sides(
          "far(" + std::to_string(k + 1) + "," + std::to_string(l + 1) + ")",
          lhs, rhs, RelationMode::projective));
    }
  }
  return reports;
}

RelationReport check_yang_baxter(const CMatrix& r) {
  if (r.rows() != 4 || r.cols() != 4)
    throw std::invalid_argument("check_yang_baxter: need a 4x4 matrix");
  const CMatrix id2 = c_identity(2);
  CMatrix r12 = kron(r, id2);
  CMatrix r23 = kron(id2, r);
  CMatrix lhs = mat_mul(mat_mul(r12, r23), r12);
  CMatrix rhs = mat_mul(mat_mul(r23, r12), r23);
  return compare_sides("yang-baxter", lhs, rhs, RelationMode::projective);
}

bool check_projector_commutation(const RepSpec& spec) {
  if (spec.projected)
    throw std::invalid_argument(
        "check_projector_commutation: spec must be unprojected");
  const CMatrix p = parity_projector(spec.pairs());
  for (int k = 1; k <= spec.generator_count(); ++k) {
    CMatrix g = build_generator(spec, k);
    if (!mat_equal(mat_mul(p, g), mat_mul(g, p))) return false;
  }
  return true;
}

bool contains(const GroupImage& image, const CMatrix& m, bool up_to_phase) {
  if (m.rows() != image.dim() || m.cols() != image.dim())
    throw std::invalid_argument("contains: dimension mismatch");
  if (!up_to_phase) return image.contains_exact(m);
  if (image.phase_index_.empty()) {
    for (std::size_t e = 0; e < image.elements().size(); ++e)
      image.phase_index_.emplace(phase_gauged_key(image.elements()[e]), e);
  }
  auto it = image.phase_index_.find(phase_gauged_key(m));
  if (it == image.phase_index_.end()) return false;
  // The gauge identifies matrices up to any scalar; confirm it is a unit.
  return equal_up_to_phase(m, image.elements()[it->second]).has_value();
}

int element_order(const CMatrix& m, int bound) {
  if (!is_unitary(m))
    throw std::invalid_argument("element_order: matrix is not unitary");
  const CMatrix id = c_identity(m.rows());
  CMatrix power = m;
  for (int k = 1; k <= bound; ++k) {
    if (mat_equal(power, id)) return k;
    power = mat_mul(power, m);
  }
  throw std::runtime_error("element_order: exceeded bound of " +
                           std::to_string(bound));
}

}  // namespace ising
