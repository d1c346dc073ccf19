// Free associative algebras over GF(2) with a differential.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "frontdga/front.hpp"

namespace fdga {

using GenId = std::uint32_t;
using Word = std::vector<GenId>;

/// Shortlex order on words: shorter first, then lexicographic by id.
bool shortlex_less(const Word& a, const Word& b);

/// A GF(2) sum of distinct words, kept sorted in shortlex order.
class Poly {
 public:
  Poly() = default;
  static Poly one() { return word({}); }
  static Poly gen(GenId g) { return word({g}); }
  static Poly word(Word w);
  /// Builds from any list of words; repeated words cancel in pairs.
  static Poly from_words(std::vector<Word> ws);

  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool is_zero() const { return words_.empty(); }
  bool has_unit() const { return !words_.empty() && words_.front().empty(); }
  bool contains(const Word& w) const;
  bool mentions(GenId g) const;
  std::size_t max_length() const { return words_.empty() ? 0 : words_.back().size(); }

  Poly& operator+=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly&) const = default;

 private:
  std::vector<Word> words_;
};

/// Replaces each letter g by images[g]; letters beyond images.size() stay fixed.
Poly evaluate(const Poly& p, const std::vector<Poly>& images);
/// Replaces the single letter g by phi.
Poly substitute(const Poly& p, GenId g, const Poly& phi);

struct Generator {
  std::string name;
  long grading = 0;
};

/// A semi-free DGA: ordered named generators with gradings in Z/m and a
/// differential table. Modulus 0 means integer gradings.
class Dga {
 public:
  explicit Dga(int modulus = 0) : modulus_(modulus) {}

  GenId add(std::string name, long grading, Poly d = {});
  void set_d(GenId g, Poly d) { diff_.at(g) = std::move(d); }
  const Poly& d(GenId g) const { return diff_.at(g); }
  const Generator& gen(GenId g) const { return gens_.at(g); }
  const std::string& name(GenId g) const { return gens_.at(g).name; }
  long grading(GenId g) const { return gens_.at(g).grading; }
  std::size_t size() const { return gens_.size(); }
  int modulus() const { return modulus_; }
  long reduce(long g) const { return reduce_grading(g, modulus_); }

  std::optional<GenId> find(std::string_view name) const;
  GenId id(std::string_view name) const;  // throws Error if absent
  std::vector<std::string> names() const;

  long degree(const Word& w) const;
  /// Homogeneous degree, or nullopt for zero / inhomogeneous polys.
  std::optional<long> degree(const Poly& p) const;

  /// Leibniz extension of the differential.
  Poly differentiate(const Poly& p) const;

  /// Parses '+'-joined words; letters are generator names separated by
  /// spaces or '*', and runs of letters are split by longest match.
  Poly parse_poly(std::string_view text) const;
  std::string render(const Poly& p) const;
  std::string render_word(const Word& w) const;

  /// Translates a poly of `other` into this algebra by generator name.
  Poly import(const Dga& other, const Poly& p) const;

  bool operator==(const Dga& o) const;

 private:
  int modulus_;
  std::vector<Generator> gens_;
  std::vector<Poly> diff_;
  std::unordered_map<std::string, GenId> index_;
};

std::string render_dga(const Dga& d);
Dga parse_dga(std::string_view text);
Dga load_dga(const std::string& path);

struct DgaCheck {
  bool degree_ok = true;
  bool d_squared_zero = true;
  std::vector<std::string> failures;
  bool ok() const { return degree_ok && d_squared_zero; }
};

DgaCheck check_dga(const Dga& d);

/// Generator-by-generator comparison by name: same generator sets, gradings
/// and differentials. Returns a description of each mismatch.
std::vector<std::string> compare_by_name(const Dga& a, const Dga& b);

/// New coordinate g' = g + phi: every differential is rewritten with
/// g := g + phi and the new differential of g is (dg + dphi)[g := g + phi].
Dga tame_substitute(const Dga& d, GenId g, const Poly& phi);
/// Adds a, b with |a| = k, |b| = k - 1, da = b, db = 0.
Dga stabilize(const Dga& d, long k, const std::string& a, const std::string& b);
/// Removes a, b; requires da = b, db = 0 and no other use of a or b.
Dga destabilize(const Dga& d, GenId a, GenId b);

struct DgaMorphism {
  Dga source;
  Dga target;
  std::vector<Poly> images;  // indexed by source generator

  Poly apply(const Poly& p) const { return evaluate(p, images); }
  static DgaMorphism identity(const Dga& d);
};

struct MorphismCheck {
  bool graded = true;
  bool chain_map = true;
  std::vector<std::string> failures;
  bool ok() const { return graded && chain_map; }
};

MorphismCheck verify_morphism(const DgaMorphism& f);
/// g after f.
DgaMorphism compose(const DgaMorphism& f, const DgaMorphism& g);

/// Integer Laurent polynomial in t; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const long, long>> terms);
  static LaurentPoly monomial(long degree, long coeff = 1);
  static LaurentPoly parse(std::string_view text);

  long coeff(long degree) const;
  void add(long degree, long coeff);
  const std::map<long, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long eval_minus_one() const;
  /// p(1/t).
  LaurentPoly inverted() const;
  std::string str() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;
  bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

 private:
  std::map<long, long> terms_;
};

}  // namespace fdga
