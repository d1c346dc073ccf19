#include "frontdga/front.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fdga {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char ch) {
    return std::isalnum(ch) || ch == '_' || ch == '\'' || ch == '.';
  });
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

long parse_long(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + s + "'");
  }
}

}  // namespace

long reduce_grading(long g, int modulus) {
  if (modulus == 0) return g;
  long r = g % modulus;
  return r < 0 ? r + modulus : r;
}

int FrontDiagram::strands_at(std::size_t column) const {
  int n = left_strands;
  for (std::size_t i = 0; i < column && i < events.size(); ++i)
    if (std::holds_alternative<LeftCusp>(events[i])) n += 2;
  return n;
}

std::optional<std::size_t> FrontDiagram::divider_index(std::string_view want) const {
  for (std::size_t i = 0; i < events.size(); ++i)
    if (auto* d = std::get_if<Divider>(&events[i]); d && d->name == want) return i;
  return std::nullopt;
}

std::vector<std::string> FrontDiagram::divider_names() const {
  std::vector<std::string> out;
  for (const auto& e : events)
    if (auto* d = std::get_if<Divider>(&e)) out.push_back(d->name);
  return out;
}

std::vector<std::string> FrontDiagram::vertex_labels() const {
  std::vector<std::string> out;
  for (const auto& e : events)
    if (auto* c = std::get_if<Crossing>(&e)) out.push_back(c->label);
  out.insert(out.end(), closure.begin(), closure.end());
  return out;
}

std::size_t FrontDiagram::crossing_count() const {
  return static_cast<std::size_t>(std::count_if(events.begin(), events.end(), [](const Event& e) {
    return std::holds_alternative<Crossing>(e);
  }));
}

void FrontDiagram::validate() const {
  if (left_strands < 0) throw Error("negative left strand count");
  if (modulus && *modulus < 0) throw Error("negative modulus");
  int n = left_strands;
  std::set<std::string> labels, dividers;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const std::string where = "event " + std::to_string(i + 1) + ": ";
    std::visit(overloaded{
                   [&](const LeftCusp& c) {
                     if (c.position < 1 || c.position > n + 1)
                       throw Error(where + "left cusp position " + std::to_string(c.position) +
                                   " out of range 1.." + std::to_string(n + 1));
                     n += 2;
                   },
                   [&](const Crossing& c) {
                     if (c.position < 1 || c.position > n - 1)
                       throw Error(where + "crossing position " + std::to_string(c.position) +
                                   " out of range for " + std::to_string(n) + " strands");
                     if (!valid_label(c.label)) throw Error(where + "bad label '" + c.label + "'");
                     if (!labels.insert(c.label).second)
                       throw Error(where + "duplicate label '" + c.label + "'");
                   },
                   [&](const Divider& d) {
                     if (!valid_label(d.name)) throw Error(where + "bad divider name '" + d.name + "'");
                     if (!dividers.insert(d.name).second)
                       throw Error(where + "duplicate divider '" + d.name + "'");
                   },
               },
               events[i]);
  }
  if (open_right) {
    if (!closure.empty()) throw Error("open front cannot have a closure");
  } else {
    if (n % 2 != 0) throw Error("odd strand count " + std::to_string(n) + " at closure");
    if (static_cast<std::size_t>(n) != 2 * closure.size())
      throw Error("closure has " + std::to_string(closure.size()) + " cusps for " +
                  std::to_string(n) + " strands");
    for (const auto& l : closure) {
      if (!valid_label(l)) throw Error("bad closure label '" + l + "'");
      if (!labels.insert(l).second) throw Error("duplicate label '" + l + "'");
    }
  }
  for (const auto& o : overrides) {
    if (o.column < 0 || static_cast<std::size_t>(o.column) > events.size())
      throw Error("override column " + std::to_string(o.column) + " out of range");
    if (o.position < 1 || o.position > strands_at(o.column))
      throw Error("override position " + std::to_string(o.position) + " out of range");
  }
}

FrontDiagram parse_front(std::string_view text) {
  FrontDiagram f;
  bool ended = false;
  bool in_closure = false;
  int line_no = 0;
  std::string body(text);
  std::istringstream in(body);
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::istringstream parts(raw);
    for (std::string stmt; std::getline(parts, stmt, ';');) {
      auto t = tokens(stmt);
      if (t.empty()) continue;
      if (ended) throw ParseError(line_no, "content after 'end'");
      const std::string& kw = t[0];
      auto need = [&](std::size_t k) {
        if (t.size() != k) throw ParseError(line_no, "malformed '" + kw + "' line");
      };
      auto no_closure = [&] {
        if (in_closure) throw ParseError(line_no, "'" + kw + "' after closure");
      };
      if (kw == "front") {
        need(2);
        f.name = t[1];
      } else if (kw == "left") {
        need(2);
        if (!f.events.empty()) throw ParseError(line_no, "'left' must precede events");
        f.left_strands = static_cast<int>(parse_long(t[1], line_no));
      } else if (kw == "modulus") {
        need(2);
        f.modulus = static_cast<int>(parse_long(t[1], line_no));
      } else if (kw == "L") {
        need(2);
        no_closure();
        f.events.push_back(LeftCusp{static_cast<int>(parse_long(t[1], line_no))});
      } else if (kw == "X") {
        need(3);
        no_closure();
        f.events.push_back(Crossing{static_cast<int>(parse_long(t[1], line_no)), t[2]});
      } else if (kw == "|") {
        need(2);
        no_closure();
        f.events.push_back(Divider{t[1]});
      } else if (kw == "mu") {
        need(3);
        auto dot = t[1].find('.');
        if (dot == std::string::npos) throw ParseError(line_no, "mu reference must be <col>.<pos>");
        f.overrides.push_back({static_cast<int>(parse_long(t[1].substr(0, dot), line_no)),
                               static_cast<int>(parse_long(t[1].substr(dot + 1), line_no)),
                               parse_long(t[2], line_no)});
      } else if (kw == "R") {
        need(2);
        if (f.open_right) throw ParseError(line_no, "closure on an open front");
        in_closure = true;
        f.closure.push_back(t[1]);
      } else if (kw == "open") {
        need(1);
        if (in_closure) throw ParseError(line_no, "'open' after closure");
        f.open_right = true;
      } else if (kw == "end") {
        need(1);
        ended = true;
      } else {
        throw ParseError(line_no, "unknown keyword '" + kw + "'");
      }
    }
  }
  try {
    f.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
  return f;
}

std::string render_front(const FrontDiagram& f) {
  std::ostringstream out;
  if (!f.name.empty()) out << "front " << f.name << "\n";
  if (f.left_strands > 0) out << "left " << f.left_strands << "\n";
  if (f.modulus) out << "modulus " << *f.modulus << "\n";
  for (const auto& o : f.overrides)
    out << "mu " << o.column << "." << o.position << " " << o.value << "\n";
  for (const auto& e : f.events) {
    std::visit(overloaded{
                   [&](const LeftCusp& c) { out << "L " << c.position << "\n"; },
                   [&](const Crossing& c) { out << "X " << c.position << " " << c.label << "\n"; },
                   [&](const Divider& d) { out << "| " << d.name << "\n"; },
               },
               e);
  }
  if (f.open_right) out << "open\n";
  for (const auto& l : f.closure) out << "R " << l << "\n";
  out << "end\n";
  return out.str();
}

FrontDiagram load_front(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  FrontDiagram f = parse_front(buf.str());
  if (f.name.empty()) {
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    f.name = base.substr(0, base.find('.'));
  }
  return f;
}

// ---------------------------------------------------------------------------

Layout::Layout(const FrontDiagram& f) {
  f.validate();
  std::vector<int> col;
  for (int p = 0; p < f.left_strands; ++p) {
    col.push_back(static_cast<int>(arcs.size()));
    arcs.push_back({{EndKind::left_boundary, p + 1}, {EndKind::right_boundary, -1}});
  }
  columns.push_back(col);
  left_cusp_arcs.assign(f.events.size(), {-1, -1});
  for (std::size_t i = 0; i < f.events.size(); ++i) {
    if (auto* c = std::get_if<LeftCusp>(&f.events[i])) {
      int up = static_cast<int>(arcs.size());
      arcs.push_back({{EndKind::left_cusp, static_cast<int>(i)}, {EndKind::right_boundary, -1}});
      arcs.push_back({{EndKind::left_cusp, static_cast<int>(i)}, {EndKind::right_boundary, -1}});
      col.insert(col.begin() + (c->position - 1), {up, up + 1});
      left_cusp_arcs[i] = {up, up + 1};
    } else if (auto* x = std::get_if<Crossing>(&f.events[i])) {
      std::swap(col[x->position - 1], col[x->position]);
    }
    columns.push_back(col);
  }
  if (f.open_right) {
    for (std::size_t p = 0; p < col.size(); ++p)
      arcs[col[p]].right = {EndKind::right_boundary, static_cast<int>(p + 1)};
  } else {
    for (std::size_t j = 0; j < f.closure.size(); ++j) {
      int up = col[2 * j], lo = col[2 * j + 1];
      arcs[up].right = arcs[lo].right = {EndKind::right_cusp, static_cast<int>(j)};
      right_cusp_arcs.push_back({up, lo});
    }
  }
  // components through cusps
  std::vector<int> parent(arcs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto join = [&](std::pair<int, int> pr) {
    if (pr.first >= 0) parent[find(pr.first)] = find(pr.second);
  };
  for (auto pr : left_cusp_arcs) join(pr);
  for (auto pr : right_cusp_arcs) join(pr);
  component.assign(arcs.size(), -1);
  std::map<int, int> ids;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    auto [it, fresh] = ids.emplace(find(static_cast<int>(a)), static_cast<int>(ids.size()));
    component[a] = it->second;
  }
  component_count = static_cast<int>(ids.size());
}

PotentialMap::PotentialMap(std::vector<long> arc_potentials, int modulus, Layout layout)
    : potentials_(std::move(arc_potentials)), modulus_(modulus), layout_(std::move(layout)) {}

long PotentialMap::reduce(long g) const { return reduce_grading(g, modulus_); }

long PotentialMap::at(std::size_t column, int position) const {
  return potentials_.at(layout_.columns.at(column).at(position - 1));
}

std::vector<long> PotentialMap::boundary(std::size_t column) const {
  std::vector<long> out;
  for (int a : layout_.columns.at(column)) out.push_back(potentials_[a]);
  return out;
}

PotentialMap assign_potentials(const FrontDiagram& f, const std::vector<PotentialOverride>& extra) {
  Layout lay(f);
  const int n = static_cast<int>(lay.arcs.size());
  // weighted union-find: pot[a] = pot[root] + off[a]
  std::vector<int> parent(n);
  std::vector<long> off(n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) -> int {
    if (parent[a] == a) return a;
    int r = find(parent[a]);
    off[a] += off[parent[a]];
    parent[a] = r;
    return r;
  };
  long holonomy = 0;
  auto constrain = [&](int up, int lo) {  // pot[up] = pot[lo] + 1
    int ru = find(up), rl = find(lo);
    if (ru == rl) {
      holonomy = std::gcd(holonomy, std::labs(off[up] - off[lo] - 1));
      return;
    }
    // pot[ru] + off[up] = pot[rl] + off[lo] + 1
    parent[ru] = rl;
    off[ru] = off[lo] + 1 - off[up];
  };
  for (auto pr : lay.left_cusp_arcs)
    if (pr.first >= 0) constrain(pr.first, pr.second);
  for (auto pr : lay.right_cusp_arcs) constrain(pr.first, pr.second);

  int m = static_cast<int>(holonomy);
  if (f.modulus) {
    if (*f.modulus == 0 ? m != 0 : m % *f.modulus != 0)
      throw Error("modulus " + std::to_string(*f.modulus) + " incompatible with holonomy " +
                  std::to_string(m));
    m = *f.modulus;
  }

  std::map<int, long> root_value;
  auto pin = [&](const PotentialOverride& o) {
    if (o.column < 0 || static_cast<std::size_t>(o.column) >= lay.columns.size() ||
        o.position < 1 || o.position > static_cast<int>(lay.columns[o.column].size()))
      throw Error("override " + std::to_string(o.column) + "." + std::to_string(o.position) +
                  " out of range");
    int a = lay.columns[o.column][o.position - 1];
    int r = find(a);
    long v = o.value - off[a];
    auto [it, fresh] = root_value.emplace(r, v);
    if (!fresh && reduce_grading(it->second - v, m) != 0)
      throw Error("inconsistent potential override at " + std::to_string(o.column) + "." +
                  std::to_string(o.position));
  };
  for (const auto& o : f.overrides) pin(o);
  for (const auto& o : extra) pin(o);
  // defaults: lower strand of the leftmost left cusp, else topmost boundary strand
  for (auto pr : lay.left_cusp_arcs) {
    if (pr.first < 0) continue;
    root_value.emplace(find(pr.second), -off[pr.second]);
  }
  for (int a : lay.columns[0]) root_value.emplace(find(a), -off[a]);

  std::vector<long> pot(n);
  for (int a = 0; a < n; ++a) {
    int r = find(a);
    auto it = root_value.find(r);
    long base = it == root_value.end() ? -off[r] : it->second;
    pot[a] = reduce_grading(base + off[a], m);
  }
  return PotentialMap(std::move(pot), m, std::move(lay));
}

ClassicalInvariants classical_invariants(const FrontDiagram& f, const std::vector<bool>& flip) {
  if (!f.is_full()) throw Error("classical invariants need a full front");
  Layout lay(f);
  ClassicalInvariants ci;
  ci.num_right_cusps = static_cast<int>(f.closure.size());
  const int n = static_cast<int>(lay.arcs.size());
  std::vector<int> dir(n, 0);  // +1 rightward, -1 leftward
  long down = 0, up = 0;
  auto partner_left = [&](int a) {
    auto pr = lay.left_cusp_arcs[lay.arcs[a].left.index];
    return pr.first == a ? pr.second : pr.first;
  };
  auto partner_right = [&](int a) {
    auto pr = lay.right_cusp_arcs[lay.arcs[a].right.index];
    return pr.first == a ? pr.second : pr.first;
  };
  auto is_upper_left = [&](int a) { return lay.left_cusp_arcs[lay.arcs[a].left.index].first == a; };
  auto is_upper_right = [&](int a) { return lay.right_cusp_arcs[lay.arcs[a].right.index].first == a; };
  for (std::size_t i = 0; i < f.events.size(); ++i) {
    auto pr = lay.left_cusp_arcs[i];
    if (pr.first < 0 || dir[pr.first] != 0) continue;
    int c = static_cast<int>(ci.components.size());
    bool rev = c < static_cast<int>(flip.size()) && flip[c];
    std::vector<int> cycle;
    int a = rev ? pr.second : pr.first;
    while (dir[a] == 0) {
      // rightward along a, across a right cusp, leftward along its partner, across a left cusp
      dir[a] = 1;
      cycle.push_back(a);
      (is_upper_right(a) ? down : up) += 1;
      int b = partner_right(a);
      dir[b] = -1;
      cycle.push_back(b);
      // arriving leftward on the lower arc of a left cusp means moving up
      (is_upper_left(b) ? down : up) += 1;
      a = partner_left(b);
    }
    ci.components.push_back(std::move(cycle));
  }
  for (std::size_t i = 0; i < f.events.size(); ++i) {
    auto* x = std::get_if<Crossing>(&f.events[i]);
    if (!x) continue;
    int s1 = lay.columns[i][x->position - 1], s2 = lay.columns[i][x->position];
    ci.writhe += dir[s1] == dir[s2] ? 1 : -1;
  }
  ci.tb = ci.writhe - ci.num_right_cusps;
  ci.rotation = (down - up) / 2;
  return ci;
}

// ---------------------------------------------------------------------------

FrontDiagram sub_front(const FrontDiagram& f, const PotentialMap& pot, std::size_t begin,
                       std::size_t end, std::string name) {
  if (begin > end || end > f.events.size()) throw Error("bad event range");
  FrontDiagram p;
  p.name = std::move(name);
  p.left_strands = f.strands_at(begin);
  p.events.assign(f.events.begin() + static_cast<long>(begin), f.events.begin() + static_cast<long>(end));
  if (end == f.events.size() && !f.open_right) {
    p.closure = f.closure;
  } else {
    p.open_right = true;
  }
  if (pot.modulus() != 0) p.modulus = pot.modulus();
  for (int q = 1; q <= p.left_strands; ++q)
    p.overrides.push_back({0, q, pot.at(begin, q)});
  for (std::size_t i = begin; i < end; ++i)
    if (auto* c = std::get_if<LeftCusp>(&f.events[i]))
      p.overrides.push_back({static_cast<int>(i - begin + 1), c->position + 1,
                             pot.at(i + 1, c->position + 1)});
  p.validate();
  return p;
}

SplitFront split_at(const FrontDiagram& f, const PotentialMap& pot, std::string_view divider) {
  auto idx = f.divider_index(divider);
  if (!idx) throw Error("unknown divider '" + std::string(divider) + "'");
  SplitFront s;
  s.left = sub_front(f, pot, 0, *idx, f.name + "_A");
  s.right = sub_front(f, pot, *idx + 1, f.events.size(), f.name + "_D");
  s.points = f.strands_at(*idx);
  s.potentials = pot.boundary(*idx);
  return s;
}

SplitFront split_at(const FrontDiagram& f, std::string_view divider) {
  return split_at(f, assign_potentials(f), divider);
}

std::string ascii_sketch(const FrontDiagram& f) {
  const int rows = [&] {
    int mx = f.left_strands;
    for (std::size_t c = 0; c <= f.events.size(); ++c) mx = std::max(mx, f.strands_at(c));
    return mx;
  }();
  std::vector<std::string> grid(static_cast<std::size_t>(rows));
  int n = f.left_strands;
  for (int r = 0; r < rows; ++r) grid[r] = r < n ? "|-" : "  ";
  for (const auto& e : f.events) {
    std::vector<std::string> cell(static_cast<std::size_t>(rows), "   ");
    std::visit(overloaded{
                   [&](const LeftCusp& c) {
                     for (int r = 0; r < n + 2; ++r) cell[r] = "---";
                     cell[c.position - 1] = " /-";
                     cell[c.position] = " \\-";
                     n += 2;
                   },
                   [&](const Crossing& c) {
                     for (int r = 0; r < n; ++r) cell[r] = "---";
                     cell[c.position - 1] = "-\\-";
                     cell[c.position] = "-/-";
                   },
                   [&](const Divider&) {
                     for (int r = 0; r < n; ++r) cell[r] = "-:-";
                   },
               },
               e);
    for (int r = 0; r < rows; ++r) grid[r] += cell[r];
  }
  std::ostringstream out;
  for (int r = 0; r < rows; ++r) {
    out << grid[r];
    if (f.open_right) {
      if (r < n) out << "-|";
    } else if (r < n) {
      out << (r % 2 == 0 ? "\\" : "/");
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace fdga
