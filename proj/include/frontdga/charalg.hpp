// Abelianized characteristic algebras: commutative polynomials over GF(2),
// Gröbner bases under degrevlex, and presentation checks.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "frontdga/algebra.hpp"
#include "frontdga/front.hpp"

namespace fdga {

/// Exponent vector over the ring's variables.
using Monomial = std::vector<std::uint16_t>;

/// Degrevlex with variable 0 largest.
bool degrevlex_greater(const Monomial& a, const Monomial& b);

/// GF(2) polynomial in commuting variables, terms sorted by decreasing degrevlex.
class CommutativePoly {
 public:
  CommutativePoly() = default;
  static CommutativePoly one(std::size_t nvars);
  static CommutativePoly var(std::size_t nvars, std::size_t i);
  static CommutativePoly monomial(Monomial m);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Monomial& lead() const { return terms_.front(); }
  bool mentions(std::size_t var) const;

  CommutativePoly& operator+=(const CommutativePoly& o);
  friend CommutativePoly operator+(CommutativePoly a, const CommutativePoly& b) { return a += b; }
  friend CommutativePoly operator*(const CommutativePoly& a, const CommutativePoly& b);
  CommutativePoly times(const Monomial& m) const;
  bool operator==(const CommutativePoly&) const = default;

 private:
  std::vector<Monomial> terms_;
};

/// Variable names, in degrevlex order.
class CommutativeRing {
 public:
  CommutativeRing() = default;
  explicit CommutativeRing(std::vector<std::string> names) : names_(std::move(names)) {}
  static CommutativeRing of(const Dga& d) { return CommutativeRing(d.names()); }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t index(std::string_view name) const;  // throws Error

  CommutativePoly one() const { return CommutativePoly::one(size()); }
  CommutativePoly var(std::string_view name) const { return CommutativePoly::var(size(), index(name)); }
  /// '+'-joined terms of space- or '*'-separated names with optional ^k;
  /// parentheses group sums, e.g. "rho1_2 (1 + d c) + rho1_4 c".
  CommutativePoly parse(std::string_view text) const;
  std::string render(const CommutativePoly& p) const;

 private:
  std::vector<std::string> names_;
};

/// Letters commute; the ring must contain every generator name of d.
CommutativePoly abelianize(const Dga& d, const Poly& p, const CommutativeRing& ring);

struct GroebnerCaps {
  std::size_t max_basis = 4000;
  std::size_t max_pairs = 400000;
  unsigned max_degree = 64;
};

class GroebnerCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Reduced Gröbner basis, sorted by leading monomial.
std::vector<CommutativePoly> groebner(std::vector<CommutativePoly> gens, const GroebnerCaps& caps = {});
/// Unique remainder of p modulo a Gröbner basis.
CommutativePoly normal_form(const CommutativePoly& p, const std::vector<CommutativePoly>& basis);

class CharIdeal {
 public:
  CharIdeal(CommutativeRing ring, std::vector<CommutativePoly> generators, const GroebnerCaps& caps = {});

  const CommutativeRing& ring() const { return ring_; }
  const std::vector<CommutativePoly>& generators() const { return generators_; }
  const std::vector<CommutativePoly>& basis() const { return basis_; }
  CommutativePoly normal_form(const CommutativePoly& p) const { return fdga::normal_form(p, basis_); }
  bool contains(const CommutativePoly& p) const { return normal_form(p).is_zero(); }
  bool contains(std::string_view text) const { return contains(ring_.parse(text)); }
  bool is_unit_ideal() const;

 private:
  CommutativeRing ring_;
  std::vector<CommutativePoly> generators_;
  std::vector<CommutativePoly> basis_;
};

/// Ideal generated by the abelianized ∂v over all generators v.
CharIdeal char_ideal(const Dga& d, const GroebnerCaps& caps = {});

struct MembershipCheck {
  std::string poly;
  std::string remainder;  // rendered normal form
  bool member = false;
};

MembershipCheck check_member(const CharIdeal& ideal, std::string_view poly);

/// A claimed presentation: after eliminating each listed generator v by
/// v = f (in order), the ideal is generated by `relations`, and `free_vars`
/// occur in no relation at all.
struct Presentation {
  std::vector<std::pair<std::string, std::string>> eliminations;
  std::vector<std::string> relations;
  std::vector<std::string> free_vars;
};

struct PresentationReport {
  std::vector<MembershipCheck> memberships;  // extra checks requested by the caller
  std::vector<MembershipCheck> eliminations;  // v + f in the ideal
  bool free_ok = true;
  bool relations_ok = true;        // reduced ideal equals the claimed relations
  std::vector<std::string> reduced;  // Gröbner basis after elimination
  std::vector<std::string> failures;
  bool ok() const;
};

PresentationReport check_presentation(const CharIdeal& ideal, const Presentation& p,
                                      const std::vector<std::string>& memberships = {});

/// C'(I_4)/<ρ12ρ34 = 1> as relations in the ρ's.
std::vector<std::string> interval_base_relations();

/// The partial front kS: k stacked S tangles closed off on the right, with
/// crossings a1..a_{k+1} and cusps x1..x_{k+2}.
FrontDiagram s_chain_front(int k);
/// The maximal-tb twist knot K_{-n}, n >= 2, built from S tangles.
FrontDiagram twist_knot_front(int n);

struct NamedReport {
  std::string name;
  PresentationReport report;
};

/// S and Z half diagrams and 3S, with the membership checks of their
/// presentations. `fronts_dir` holds tangle_S.front and tangle_Z.dga.
std::vector<NamedReport> verify_sz_equivalence(const std::string& fronts_dir, const GroebnerCaps& caps = {});

struct TwistKnotEntry {
  int n = 0;
  std::string family;  // "odd", "even" or "" when no family is claimed
  std::size_t generators = 0;
  long tb = 0;
  PresentationReport report;
};

/// K_{-n} for n = 2..max_n; families are checked for n >= 3.
std::vector<TwistKnotEntry> twist_knot_suite(int max_n = 8, const GroebnerCaps& caps = {});

struct PushoutIdealReport {
  bool glued_in_whole = true;
  bool whole_in_glued = true;
  std::vector<std::string> failures;
  bool ok() const { return glued_in_whole && whole_in_glued; }
};

/// The ideal of Ch(front) against the ideal generated by the piece ideals
/// mapped by inclusion and w'.
PushoutIdealReport pushout_ideal_check(const FrontDiagram& front, const std::string& divider,
                                       const GroebnerCaps& caps = {});

}  // namespace fdga
