#include "frontdga/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace fdga {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

// Sorts and cancels equal pairs.
void normalize(std::vector<Word>& ws) {
  std::sort(ws.begin(), ws.end(), shortlex_less);
  std::vector<Word> out;
  out.reserve(ws.size());
  for (std::size_t i = 0; i < ws.size();) {
    std::size_t j = i;
    while (j < ws.size() && ws[j] == ws[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(ws[i]));
    i = j;
  }
  ws = std::move(out);
}

}  // namespace

Poly Poly::word(Word w) {
  Poly p;
  p.words_.push_back(std::move(w));
  return p;
}

Poly Poly::from_words(std::vector<Word> ws) {
  normalize(ws);
  Poly p;
  p.words_ = std::move(ws);
  return p;
}

bool Poly::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w, shortlex_less);
}

bool Poly::mentions(GenId g) const {
  for (const auto& w : words_)
    if (std::find(w.begin(), w.end(), g) != w.end()) return true;
  return false;
}

Poly& Poly::operator+=(const Poly& o) {
  std::vector<Word> out;
  out.reserve(words_.size() + o.words_.size());
  auto a = words_.begin();
  auto b = o.words_.begin();
  while (a != words_.end() && b != o.words_.end()) {
    if (shortlex_less(*a, *b)) {
      out.push_back(std::move(*a++));
    } else if (shortlex_less(*b, *a)) {
      out.push_back(*b++);
    } else {
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), std::make_move_iterator(a), std::make_move_iterator(words_.end()));
  out.insert(out.end(), b, o.words_.end());
  words_ = std::move(out);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  std::vector<Word> ws;
  ws.reserve(a.size() * b.size());
  for (const auto& x : a.words())
    for (const auto& y : b.words()) {
      Word w = x;
      w.insert(w.end(), y.begin(), y.end());
      ws.push_back(std::move(w));
    }
  return Poly::from_words(std::move(ws));
}

Poly evaluate(const Poly& p, const std::vector<Poly>& images) {
  std::vector<Word> acc;
  for (const auto& w : p.words()) {
    std::vector<Word> partial{Word{}};
    for (GenId g : w) {
      if (g >= images.size()) {
        for (auto& x : partial) x.push_back(g);
        continue;
      }
      std::vector<Word> next;
      next.reserve(partial.size() * images[g].size());
      for (const auto& x : partial)
        for (const auto& y : images[g].words()) {
          Word z = x;
          z.insert(z.end(), y.begin(), y.end());
          next.push_back(std::move(z));
        }
      normalize(next);
      partial = std::move(next);
      if (partial.empty()) break;
    }
    acc.insert(acc.end(), std::make_move_iterator(partial.begin()),
               std::make_move_iterator(partial.end()));
  }
  return Poly::from_words(std::move(acc));
}

Poly substitute(const Poly& p, GenId g, const Poly& phi) {
  if (!p.mentions(g)) return p;
  std::vector<Poly> images(g + 1);
  for (GenId h = 0; h < g; ++h) images[h] = Poly::gen(h);
  images[g] = phi;
  return evaluate(p, images);
}

// ---------------------------------------------------------------------------

GenId Dga::add(std::string name, long grading, Poly d) {
  if (name.empty()) throw Error("empty generator name");
  if (index_.count(name)) throw Error("duplicate generator '" + name + "'");
  GenId id = static_cast<GenId>(gens_.size());
  index_.emplace(name, id);
  gens_.push_back({std::move(name), reduce(grading)});
  diff_.push_back(std::move(d));
  return id;
}

std::optional<GenId> Dga::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GenId Dga::id(std::string_view name) const {
  auto g = find(name);
  if (!g) throw Error("unknown generator '" + std::string(name) + "'");
  return *g;
}

std::vector<std::string> Dga::names() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.name);
  return out;
}

long Dga::degree(const Word& w) const {
  long s = 0;
  for (GenId g : w) s += gens_.at(g).grading;
  return reduce(s);
}

std::optional<long> Dga::degree(const Poly& p) const {
  if (p.is_zero()) return std::nullopt;
  long d0 = degree(p.words().front());
  for (const auto& w : p.words())
    if (degree(w) != d0) return std::nullopt;
  return d0;
}

Poly Dga::differentiate(const Poly& p) const {
  std::vector<Word> acc;
  for (const auto& w : p.words())
    for (std::size_t i = 0; i < w.size(); ++i)
      for (const auto& dw : diff_.at(w[i]).words()) {
        Word z(w.begin(), w.begin() + static_cast<long>(i));
        z.insert(z.end(), dw.begin(), dw.end());
        z.insert(z.end(), w.begin() + static_cast<long>(i) + 1, w.end());
        acc.push_back(std::move(z));
      }
  return Poly::from_words(std::move(acc));
}

Poly Dga::parse_poly(std::string_view text) const {
  std::vector<Word> ws;
  std::string s(text);
  std::istringstream terms(s);
  bool saw_term = false;
  for (std::string term; std::getline(terms, term, '+');) {
    for (char& ch : term)
      if (ch == '*') ch = ' ';
    std::istringstream toks(term);
    std::vector<std::string> parts;
    for (std::string t; toks >> t;) parts.push_back(t);
    if (parts.empty()) throw Error("empty term in '" + s + "'");
    saw_term = true;
    if (parts.size() == 1 && parts[0] == "0") continue;
    Word w;
    for (const auto& tok : parts) {
      if (tok == "1" && !find(tok)) continue;
      if (auto g = find(tok)) {
        w.push_back(*g);
        continue;
      }
      std::size_t pos = 0;
      while (pos < tok.size()) {
        std::size_t best = 0;
        GenId best_id = 0;
        for (std::size_t len = tok.size() - pos; len > 0; --len)
          if (auto g = find(std::string_view(tok).substr(pos, len))) {
            best = len;
            best_id = *g;
            break;
          }
        if (best == 0) throw Error("cannot parse '" + tok + "' into generators");
        w.push_back(best_id);
        pos += best;
      }
    }
    ws.push_back(std::move(w));
  }
  if (!saw_term) throw Error("empty polynomial");
  return Poly::from_words(std::move(ws));
}

std::string Dga::render_word(const Word& w) const {
  if (w.empty()) return "1";
  bool spaced = std::any_of(w.begin(), w.end(), [&](GenId g) { return name(g).size() > 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && spaced) out += ' ';
    out += name(w[i]);
  }
  return out;
}

std::string Dga::render(const Poly& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& w : p.words()) {
    if (!out.empty()) out += " + ";
    out += render_word(w);
  }
  return out;
}

Poly Dga::import(const Dga& other, const Poly& p) const {
  std::vector<Word> ws;
  for (const auto& w : p.words()) {
    Word z;
    for (GenId g : w) z.push_back(id(other.name(g)));
    ws.push_back(std::move(z));
  }
  return Poly::from_words(std::move(ws));
}

bool Dga::operator==(const Dga& o) const {
  if (modulus_ != o.modulus_ || gens_.size() != o.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name != o.gens_[i].name || gens_[i].grading != o.gens_[i].grading ||
        diff_[i] != o.diff_[i])
      return false;
  return true;
}

std::string render_dga(const Dga& d) {
  std::ostringstream out;
  out << "modulus " << d.modulus() << "\n";
  for (GenId g = 0; g < d.size(); ++g) out << "gen " << d.name(g) << " " << d.grading(g) << "\n";
  for (GenId g = 0; g < d.size(); ++g) out << "d " << d.name(g) << " = " << d.render(d.d(g)) << "\n";
  return out.str();
}

Dga parse_dga(std::string_view text) {
  std::string s(text);
  std::istringstream in(s);
  std::vector<std::pair<std::string, std::string>> diffs;
  std::vector<std::pair<std::string, long>> gens;
  int modulus = 0;
  for (std::string line; std::getline(in, line);) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "modulus") {
      if (!(ls >> modulus)) throw Error("bad modulus line");
    } else if (kw == "gen") {
      std::string name;
      long g;
      if (!(ls >> name >> g)) throw Error("bad gen line: " + line);
      gens.emplace_back(name, g);
    } else if (kw == "d") {
      std::string name, eq;
      if (!(ls >> name >> eq) || eq != "=") throw Error("bad d line: " + line);
      std::string rest;
      std::getline(ls, rest);
      diffs.emplace_back(name, rest);
    } else {
      throw Error("unknown keyword '" + kw + "'");
    }
  }
  Dga d(modulus);
  for (auto& [n, g] : gens) d.add(n, g);
  for (auto& [n, p] : diffs) d.set_d(d.id(n), d.parse_poly(p));
  return d;
}

Dga load_dga(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_dga(buf.str());
}

DgaCheck check_dga(const Dga& d) {
  DgaCheck r;
  for (GenId g = 0; g < d.size(); ++g) {
    for (const auto& w : d.d(g).words()) {
      if (d.degree(w) != d.reduce(d.grading(g) - 1)) {
        r.degree_ok = false;
        r.failures.push_back("degree: d" + d.name(g) + " contains " + d.render_word(w) + " of degree " +
                             std::to_string(d.degree(w)));
      }
    }
    Poly dd = d.differentiate(d.d(g));
    if (!dd.is_zero()) {
      r.d_squared_zero = false;
      r.failures.push_back("d^2 " + d.name(g) + " = " + d.render(dd));
    }
  }
  return r;
}

std::vector<std::string> compare_by_name(const Dga& a, const Dga& b) {
  std::vector<std::string> out;
  if (a.modulus() != b.modulus())
    out.push_back("modulus " + std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
  for (GenId g = 0; g < a.size(); ++g)
    if (!b.find(a.name(g))) out.push_back("generator " + a.name(g) + " missing on the right");
  for (GenId g = 0; g < b.size(); ++g)
    if (!a.find(b.name(g))) out.push_back("generator " + b.name(g) + " missing on the left");
  if (!out.empty()) return out;
  for (GenId g = 0; g < a.size(); ++g) {
    GenId h = b.id(a.name(g));
    if (a.grading(g) != b.grading(h))
      out.push_back("grading of " + a.name(g) + ": " + std::to_string(a.grading(g)) + " vs " +
                    std::to_string(b.grading(h)));
    Poly bd = a.import(b, b.d(h));
    if (a.d(g) != bd)
      out.push_back("d" + a.name(g) + ": " + a.render(a.d(g)) + " vs " + a.render(bd));
  }
  return out;
}

Dga tame_substitute(const Dga& d, GenId g, const Poly& phi) {
  if (phi.mentions(g)) throw Error("substitution for " + d.name(g) + " mentions it");
  if (!phi.is_zero()) {
    auto deg = d.degree(phi);
    if (!deg || *deg != d.grading(g))
      throw Error("substitution for " + d.name(g) + " is not homogeneous of degree " +
                  std::to_string(d.grading(g)));
  }
  Dga out(d.modulus());
  for (GenId h = 0; h < d.size(); ++h) out.add(d.name(h), d.grading(h));
  for (GenId h = 0; h < d.size(); ++h) {
    Poly src = h == g ? d.d(g) + d.differentiate(phi) : d.d(h);
    out.set_d(h, substitute(src, g, Poly::gen(g) + phi));
  }
  return out;
}

Dga stabilize(const Dga& d, long k, const std::string& a, const std::string& b) {
  Dga out = d;
  GenId ga = out.add(a, k);
  GenId gb = out.add(b, k - 1);
  out.set_d(ga, Poly::gen(gb));
  return out;
}

Dga destabilize(const Dga& d, GenId a, GenId b) {
  if (a == b || d.d(a) != Poly::gen(b) || !d.d(b).is_zero())
    throw Error("cannot destabilize (" + d.name(a) + ", " + d.name(b) + "): need d" + d.name(a) +
                " = " + d.name(b) + " and d" + d.name(b) + " = 0");
  for (GenId h = 0; h < d.size(); ++h) {
    if (h == a || h == b) continue;
    if (d.d(h).mentions(a) || d.d(h).mentions(b))
      throw Error("cannot destabilize: d" + d.name(h) + " = " + d.render(d.d(h)) + " uses the pair");
  }
  Dga out(d.modulus());
  std::vector<Poly> remap(d.size());
  for (GenId h = 0; h < d.size(); ++h) {
    if (h == a || h == b) continue;
    remap[h] = Poly::gen(out.add(d.name(h), d.grading(h)));
  }
  for (GenId h = 0; h < d.size(); ++h) {
    if (h == a || h == b) continue;
    out.set_d(out.id(d.name(h)), evaluate(d.d(h), remap));
  }
  return out;
}

DgaMorphism DgaMorphism::identity(const Dga& d) {
  DgaMorphism f{d, d, {}};
  for (GenId g = 0; g < d.size(); ++g) f.images.push_back(Poly::gen(g));
  return f;
}

MorphismCheck verify_morphism(const DgaMorphism& f) {
  MorphismCheck r;
  const Dga& s = f.source;
  const Dga& t = f.target;
  if (f.images.size() != s.size()) {
    r.graded = r.chain_map = false;
    r.failures.push_back("image table has " + std::to_string(f.images.size()) + " entries for " +
                         std::to_string(s.size()) + " generators");
    return r;
  }
  for (GenId g = 0; g < s.size(); ++g) {
    for (const auto& w : f.images[g].words())
      if (t.degree(w) != t.reduce(s.grading(g))) {
        r.graded = false;
        r.failures.push_back("grading: image of " + s.name(g) + " contains " + t.render_word(w));
        break;
      }
    Poly lhs = t.differentiate(f.images[g]);
    Poly rhs = f.apply(s.d(g));
    if (lhs != rhs) {
      r.chain_map = false;
      r.failures.push_back("chain map fails on " + s.name(g) + ": " + t.render(lhs) + " vs " +
                           t.render(rhs));
    }
  }
  return r;
}

DgaMorphism compose(const DgaMorphism& f, const DgaMorphism& g) {
  DgaMorphism h{f.source, g.target, {}};
  for (const auto& img : f.images) h.images.push_back(g.apply(img));
  return h;
}

// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const long, long>> terms) {
  for (const auto& [d, c] : terms) add(d, c);
}

LaurentPoly LaurentPoly::monomial(long degree, long coeff) {
  LaurentPoly p;
  p.add(degree, coeff);
  return p;
}

long LaurentPoly::coeff(long degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add(long degree, long c) {
  if (c == 0) return;
  long& v = terms_[degree];
  v += c;
  if (v == 0) terms_.erase(degree);
}

long LaurentPoly::eval_minus_one() const {
  long s = 0;
  for (const auto& [d, c] : terms_) s += (d % 2 == 0) ? c : -c;
  return s;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly p;
  for (const auto& [d, c] : terms_) p.add(-d, c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [d1, c1] : a.terms_)
    for (const auto& [d2, c2] : b.terms_) p.add(d1 + d2, c1 * c2);
  return p;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [d, c] = *it;
    long mag = c < 0 ? -c : c;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (d == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "t";
    if (d != 1) out += "^" + std::to_string(d);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error("empty Laurent polynomial");
  LaurentPoly p;
  if (s == "0") return p;
  std::size_t i = 0;
  auto read_int = [&](long& v) {
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw Error("bad Laurent polynomial '" + s + "'");
    v = std::stol(s.substr(start, i - start));
  };
  while (i < s.size()) {
    long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    long c = 1;
    bool has_coeff = i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    if (has_coeff) read_int(c);
    long d = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      d = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        read_int(d);
      }
    } else if (!has_coeff) {
      throw Error("bad Laurent polynomial '" + s + "'");
    }
    p.add(d, sign * c);
  }
  return p;
}

}  // namespace fdga
