#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "isingbraid/rep.hpp"

namespace ising {

/// Raised when an enumeration would exceed its element limit; carries the
/// count discovered so far (signals a non-finite group or a low limit).
class enumeration_limit_error : public std::runtime_error {
public:
  enumeration_limit_error(std::size_t partial, std::size_t limit)
      : std::runtime_error("enumeration exceeded limit of " +
                           std::to_string(limit) + " elements (found " +
                           std::to_string(partial) + " so far)"),
        partial_count(partial) {}
  std::size_t partial_count;
};

/// A fully enumerated finite matrix group: deduplicated element store keyed
/// by canonical serialization, in deterministic discovery order.
class GroupImage {
public:
  GroupImage(Eigen::Index dim, std::vector<CMatrix> generators)
      : dim_(dim), generators_(std::move(generators)) {}

  Eigen::Index dim() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<CMatrix>& elements() const { return elements_; }
  const std::vector<CMatrix>& generators() const { return generators_; }

  bool contains_exact(const CMatrix& m) const {
    return index_.count(matrix_key(m)) > 0;
  }

  /// Inserts unless already present; returns true when new.
  bool insert(const CMatrix& m);

private:
  friend bool contains(const GroupImage&, const CMatrix&, bool);

  Eigen::Index dim_;
  std::vector<CMatrix> generators_;
  std::vector<CMatrix> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  // phase-gauged key -> element position, built on first phase query
  mutable std::unordered_map<std::string, std::size_t> phase_index_;
};

/// Dimino's inductive closure: cyclic group of the first generator, then
/// coset expansion per added generator.  Deterministic discovery order.
GroupImage dimino_enumerate(const std::vector<CMatrix>& generators,
                            std::size_t limit = 10'000'000);

/// Plain breadth-first closure; independent cross-check for small orders.
GroupImage naive_closure(const std::vector<CMatrix>& generators,
                         std::size_t limit = 10'000);

/// Closed-form image order for 2n >= 6 anyons: 2^(2n-1) (2n)! when n is
/// even, 2^(2n) (2n)! when n is odd.  The 4-anyon order 96 is a separate
/// constant, not this formula.
mpz_class read_order_formula(int two_n);

enum class Verdict { exact, projective, fail };

std::string to_string(Verdict v);

/// Outcome of one defining-relation check; a projective verdict carries the
/// unit phase with left = phase * right, verified exactly.
struct RelationReport {
  std::string relation;
  Verdict verdict = Verdict::fail;
  std::optional<Cyclo> phase;
};

enum class RelationMode { exact, projective };

/// g_k g_{k+1} g_k = g_{k+1} g_k g_{k+1} for all adjacent pairs.
std::vector<RelationReport> check_artin_relations(
    const std::vector<CMatrix>& generators,
    RelationMode mode = RelationMode::projective);

/// g_k g_l = g_l g_k for all |k - l| >= 2.
std::vector<RelationReport> check_far_commutativity(
    const std::vector<CMatrix>& generators);

/// (R (x) I)(I (x) R)(R (x) I) = (I (x) R)(R (x) I)(I (x) R) for a 4x4 R,
/// checked exactly over dim-8 matrices.
RelationReport check_yang_baxter(const CMatrix& r);

/// True iff the parity projector commutes exactly with every unprojected
/// generator of the spec.
bool check_projector_commutation(const RepSpec& spec);

/// Membership; in phase mode the query is matched up to a unit scalar,
/// accelerated by gauging the first nonzero entry to 1.
bool contains(const GroupImage& image, const CMatrix& m, bool up_to_phase);

/// Least m >= 1 with M^m = I.
int element_order(const CMatrix& m, int bound = 1'000'000);

}  // namespace ising
