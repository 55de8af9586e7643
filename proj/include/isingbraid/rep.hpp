#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isingbraid/matrix.hpp"

namespace ising {

/// Phase convention for the elementary exchange matrices.
///  - quantumgroup: exactly the printed R matrices of the universal-R
///    construction (odd k: diag(1,i); even k: the 4x4 with 1/sqrt(2)).
///  - wavefunction: even-k generators carry an extra overall factor
///    exp(i*pi/4), which is what makes the projected 4-anyon generators
///    reproduce the wave-function exchange matrices verbatim.
enum class Convention { wavefunction, quantumgroup };

std::string to_string(Convention c);
std::optional<Convention> convention_from_string(const std::string& s);

/// Description of a braid-group representation carried by 2n Ising anyons.
/// Anyons pair up (2j-1, 2j) into n tensor factors; the first pair is the
/// most significant factor.  Unprojected matrices act on 2^n states, the
/// positive-parity projection on 2^(n-1).
struct RepSpec {
  int anyons = 4;
  Convention convention = Convention::wavefunction;
  bool projected = true;

  RepSpec() = default;
  RepSpec(int anyons_, Convention convention_, bool projected_);

  int pairs() const { return anyons / 2; }
  int generator_count() const { return anyons - 1; }
  Eigen::Index full_dim() const { return Eigen::Index(1) << pairs(); }
  Eigen::Index projected_dim() const {
    return Eigen::Index(1) << (pairs() - 1);
  }
  Eigen::Index dim() const { return projected ? projected_dim() : full_dim(); }
};

/// Computational-basis encoding: qubit string (q1..q_{n-1}) to the
/// pair-channel bit string (e1..e_n), e = 0 for the sigma+sigma+ channel.
/// Images are exactly the even-weight strings (positive total parity).
struct QubitEncoding {
  int n_pairs = 0;
  /// channels[q] = channel bits of qubit index q, first pair = MSB.
  std::vector<std::uint32_t> channels;
};

/// e1 = q1; e_j = q_{j-1} xor q_j; e_n = q_{n-1}.  Requires n >= 2.
QubitEncoding qubit_basis_map(int n_pairs);

/// Unprojected generator k (1 <= k <= 2n-1) on 2^n states.
/// Odd k = 2j-1 acts as diag(1, i) on factor j; even k = 2j acts on factors
/// j, j+1 with the 4x4 R matrix, times exp(i*pi/4) in the wavefunction
/// convention.
CMatrix build_generator(const RepSpec& spec, int k);

/// Diagonal 0/1 projector onto even-weight pair-channel strings.
CMatrix parity_projector(int n_pairs);

/// Generator k compressed to the positive-parity subspace and reordered to
/// the computational basis of qubit_basis_map.
CMatrix project_generator(const RepSpec& spec, int k);

/// All generators 1..2n-1 of the spec (projected or not per the flag).
std::vector<CMatrix> generators(const RepSpec& spec);

/// The explicit matrices printed in the source material: the 4-anyon and
/// 6-anyon exchange matrices and the gates H, T, CNOT.
std::map<std::string, CMatrix> paper_constants();

/// Gate table for the CLI and tests: I, X, Z, H, T, CNOT, CZ.
std::optional<CMatrix> named_gate(const std::string& name);

/// True iff the 4x4 matrix is A (x) B for some 2x2 A, B.  Decided exactly:
/// reshape into the 4x4 matrix of vectorized 2x2 blocks and test rank <= 1.
bool is_tensor_factorizable(const CMatrix& m);

/// The two elementary R matrices of the universal-R construction.
CMatrix odd_exchange_matrix();   // diag(1, i)
CMatrix even_exchange_matrix();  // (1/sqrt2) [[1,0,0,-i],[0,1,-i,0],...]

}  // namespace ising
