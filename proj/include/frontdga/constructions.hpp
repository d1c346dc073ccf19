// Front-level constructions: connected sum, 2-copy, Whitehead double, and
// local tangle replacements with their induced DGA morphisms.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "frontdga/algebra.hpp"
#include "frontdga/front.hpp"
#include "frontdga/linear.hpp"

namespace fdga {

/// Joins the top right cusp of k1 to the first left cusp of k2. Labels get
/// suffixes "_1" and "_2"; a divider "sum" separates the two halves.
FrontDiagram connected_sum(const FrontDiagram& k1, const FrontDiagram& k2);

enum class Quadrant { N, E, S, W };
char quadrant_char(Quadrant q);

struct TwoCopy {
  FrontDiagram front;
  std::map<std::string, Quadrant> quadrant;  // per vertex label
  std::map<std::string, std::string> origin;  // c_N -> c, x_N -> x; empty for l_i
  std::string clasp;  // label of the clasp crossing, Whitehead doubles only
};

/// Vertical 2-copy; the top copy K1 has potentials one greater than K2.
/// The W crossing of the top right cusp sits after a divider "site".
TwoCopy two_copy(const FrontDiagram& k);
TwoCopy two_copy(const FrontDiagram& k, const PotentialMap& pot);

/// 2-copy with the clasp tangle at the top right cusp: crossings "<x>_W"
/// and "b" after a divider "clasp", where x is the top closure label.
TwoCopy whitehead_double(const FrontDiagram& k);
TwoCopy whitehead_double(const FrontDiagram& k, const PotentialMap& pot);

/// ε'(c_N) = ε'(c_S) = ε(c), ε'(clasp) = 1, zero elsewhere. `eps` is indexed
/// by chekanov_dga(k); the result by chekanov_dga(doubled.front).
Augmentation proper_augmentation(const Dga& k_dga, const Augmentation& eps, const TwoCopy& doubled,
                                 const Dga& doubled_dga);

struct NsewSplit {
  std::map<Quadrant, LinearizedComplex> parts;
  bool closed = true;  // every part is closed under the boundary
  std::vector<std::string> leaks;
  std::map<Quadrant, std::map<long, long>> homology;
  std::map<long, long> total;
};

NsewSplit nsew_split(const TwoCopy& doubled, const Dga& doubled_dga, const Augmentation& eps);

struct LemmaReport {
  bool n_ok = true, s_ok = true, w_ok = true, e_ok = true, total_ok = true;
  std::vector<std::string> failures;
  bool ok() const { return n_ok && s_ok && w_ok && e_ok && total_ok; }
};

/// Compares the quadrant homologies with H(A^{K,ε}).
LemmaReport nsew_lemmas(const NsewSplit& split, const std::map<long, long>& base);

// ---------------------------------------------------------------------------

enum class TangleRuleId { P_to_C, C_to_P, X_to_C };
std::string rule_name(TangleRuleId r);
TangleRuleId parse_rule(const std::string& s);

/// One step of a morphism recipe. Polys are written in the local names of
/// the tangle (a, b, x, y, c, d, p, q and rho<i>_<j> on a 4-point line).
struct RecipeStep {
  enum class Kind { add, substitute, destabilize, rename } kind;
  std::string first;
  std::string second;  // poly for add/substitute, partner for destabilize, new name for rename
  long grading = 0;    // for add
};

struct Recipe {
  std::vector<std::string> lhs_crossings;  // local names, event order
  std::vector<std::string> lhs_cusps;
  std::vector<std::string> rhs_cusps;
  std::vector<RecipeStep> steps;
};

/// The tame sequence taking D(P) plus one free generator to D(C).
Recipe parallel_break_recipe();
/// The tame sequence taking D(X) plus two free generators to D(C).
Recipe clasp_unhook_recipe();

struct RecipeRun {
  Dga start;     // D(lhs) with local names
  Dga extended;  // after the add steps
  Dga final;     // after all steps
  Dga expected;  // D(rhs) with local names
  std::vector<Poly> images;  // of start's generators, in final
  std::vector<std::string> log;
  bool matches = false;  // final == expected generator by generator
};

/// Replays a recipe on the piece algebra `lhs` (whose pattern vertices already
/// carry local names), with line indices shifted by `shift`.
RecipeRun run_recipe(const Recipe& r, const Dga& lhs, const Dga& rhs, int shift = 0);

struct TangleResult {
  FrontDiagram front;         // the replaced front
  DgaMorphism morphism;       // from the P or X side to the C side
  bool source_is_input = true;  // false for C->P, where the new front is the source
  RecipeRun local;
  MorphismCheck check;
};

/// The site is a divider followed only by the rule's pattern crossings and
/// the closure; `pair` selects which closure pair starts the window (1-based)
/// when the pattern has no crossings.
TangleResult apply_tangle_rule(const FrontDiagram& front, TangleRuleId rule, const std::string& site,
                               int pair = 1);

/// Inserts a divider named `name` just before the last crossing.
FrontDiagram mark_last_crossing(const FrontDiagram& front, const std::string& name = "site");

}  // namespace fdga
