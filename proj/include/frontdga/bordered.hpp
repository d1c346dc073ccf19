// Bordered pieces over the interval algebras I_n, and gluing along lines.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frontdga/algebra.hpp"
#include "frontdga/disks.hpp"
#include "frontdga/front.hpp"

namespace fdga {

struct IntervalAlgebra {
  int n = 0;
  std::vector<long> mu;
  Dga dga;

  GenId rho(int i, int j) const { return dga.id(rho_name(i, j)); }
};

IntervalAlgebra interval_algebra(const std::vector<long>& mu, int modulus = 0);

struct BorderedPiece {
  FrontDiagram front;
  int n_left = 0;
  int n_right = 0;
  std::vector<long> mu_left;
  std::vector<long> mu_right;
  Dga algebra;                           // vertices, then left ρ_ij
  std::optional<IntervalAlgebra> right;  // I_m of the right line
  std::vector<Poly> w_right;             // indexed by right->dga ids

  bool has_right() const { return right.has_value(); }
  /// w: I_m -> algebra.
  DgaMorphism w_morphism() const;
  /// Rendered w table, one "w(rho_i_j) = ..." line per generator.
  std::string w_table() const;
};

/// Builds the piece algebra and its right half-disk map, if it has a right line.
BorderedPiece make_piece(const FrontDiagram& f, const SweepOptions& opts = {});
/// Shape-checked constructors: A has only a right line, D only a left line, DA both.
BorderedPiece type_A(const FrontDiagram& f, const SweepOptions& opts = {});
BorderedPiece type_D(const FrontDiagram& f, const SweepOptions& opts = {});
BorderedPiece type_DA(const FrontDiagram& f, const SweepOptions& opts = {});

/// Substitutes ρ_ij -> left.w(ρ_ij) into the right piece. The result keeps
/// left's left line and right's right line.
BorderedPiece glue(const BorderedPiece& left, const BorderedPiece& right);

/// w': D(right) -> glue(left, right), identity on vertices and w on ρ_ij.
DgaMorphism w_prime(const BorderedPiece& left, const BorderedPiece& right, const Dga& glued);

struct PushoutReport {
  bool w_ok = true;        // w graded chain map
  bool w_prime_ok = true;  // w' graded chain map
  bool dga_ok = true;      // check_dga on every algebra involved
  bool glue_matches = true;
  int points = 0;
  std::vector<long> potentials;
  std::vector<std::string> failures;
  bool ok() const { return w_ok && w_prime_ok && dga_ok && glue_matches; }
};

PushoutReport verify_pushout(const FrontDiagram& front, const std::string& divider,
                             const SweepOptions& opts = {});

/// Cuts at every divider in order and checks both bracketings of the gluing
/// against the algebra of the whole front.
PushoutReport verify_pairing(const FrontDiagram& front, const SweepOptions& opts = {});

/// Pieces between consecutive dividers, with inherited potentials.
std::vector<FrontDiagram> cut_all(const FrontDiagram& front, const PotentialMap& pot);

}  // namespace fdga
