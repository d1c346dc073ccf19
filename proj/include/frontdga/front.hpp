// Simple Legendrian fronts in plat form: left cusps and crossings followed by a
// single closure column of right cusps.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fdga {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct LeftCusp {
  int position;  // 1-based; the new pair occupies position, position+1
  bool operator==(const LeftCusp&) const = default;
};

struct Crossing {
  int position;  // strands position, position+1 swap
  std::string label;
  bool operator==(const Crossing&) const = default;
};

struct Divider {
  std::string name;
  bool operator==(const Divider&) const = default;
};

using Event = std::variant<LeftCusp, Crossing, Divider>;

/// Pins the potential of the strand found at `position` after `column` events
/// (column 0 is the left boundary).
struct PotentialOverride {
  int column;
  int position;
  long value;
  bool operator==(const PotentialOverride&) const = default;
};

/// A simple front, or a piece of one cut out by vertical lines.
///
/// A full front has `left_strands == 0` and a closure. A piece may enter from
/// a left dividing line (`left_strands > 0`) and may leave through a right
/// dividing line (`open_right`, in which case `closure` is empty).
struct FrontDiagram {
  std::string name;
  int left_strands = 0;
  std::vector<Event> events;
  std::vector<std::string> closure;
  bool open_right = false;
  std::vector<PotentialOverride> overrides;
  std::optional<int> modulus;  // forced grading modulus for pieces of r != 0 fronts

  bool operator==(const FrontDiagram&) const = default;

  /// Throws Error describing the first violated bookkeeping rule.
  void validate() const;

  bool is_full() const { return left_strands == 0 && !open_right; }
  /// Strand count after the first `column` events.
  int strands_at(std::size_t column) const;
  int right_strands() const { return strands_at(events.size()); }
  std::optional<std::size_t> divider_index(std::string_view name) const;
  std::vector<std::string> divider_names() const;
  /// Crossing labels in event order followed by closure labels.
  std::vector<std::string> vertex_labels() const;
  std::size_t crossing_count() const;
};

FrontDiagram parse_front(std::string_view text);
std::string render_front(const FrontDiagram& front);
FrontDiagram load_front(const std::string& path);

/// Strand bookkeeping. Arcs are maximal strand pieces between cusps or
/// boundary lines; crossings do not end arcs.
struct Layout {
  enum class EndKind { left_cusp, right_cusp, left_boundary, right_boundary };
  struct ArcEnd {
    EndKind kind;
    int index;  // event index, closure index or boundary position
  };
  struct Arc {
    ArcEnd left;
    ArcEnd right;
  };

  /// columns[c][p-1] is the arc at position p after c events.
  std::vector<std::vector<int>> columns;
  std::vector<Arc> arcs;
  /// For each left-cusp event index: (upper arc, lower arc); -1 for other events.
  std::vector<std::pair<int, int>> left_cusp_arcs;
  /// For each closure cusp: (upper arc, lower arc).
  std::vector<std::pair<int, int>> right_cusp_arcs;
  /// Component id per arc; components are joined through cusps.
  std::vector<int> component;
  int component_count = 0;

  explicit Layout(const FrontDiagram& front);
};

/// Maslov potentials per arc; modulus 0 means integer gradings.
class PotentialMap {
 public:
  PotentialMap(std::vector<long> arc_potentials, int modulus, Layout layout);

  int modulus() const { return modulus_; }
  long reduce(long g) const;
  long arc(int arc_id) const { return potentials_[arc_id]; }
  long at(std::size_t column, int position) const;
  std::vector<long> boundary(std::size_t column) const;
  const Layout& layout() const { return layout_; }

 private:
  std::vector<long> potentials_;
  int modulus_;
  Layout layout_;
};

long reduce_grading(long g, int modulus);

/// Assigns potentials satisfying upper = lower + 1 at every cusp. Components
/// without an override get 0 on the lower strand of their leftmost left cusp
/// (or on their topmost left-boundary strand when they have no left cusp).
PotentialMap assign_potentials(const FrontDiagram& front,
                               const std::vector<PotentialOverride>& extra = {});

struct ClassicalInvariants {
  long tb = 0;
  long rotation = 0;
  long writhe = 0;
  int num_right_cusps = 0;
  std::vector<std::vector<int>> components;  // arc ids in traversal order
};

/// `flip[c]` reverses the default orientation of component c. The default
/// traverses each component rightward along the upper arc of its leftmost
/// left cusp.
ClassicalInvariants classical_invariants(const FrontDiagram& front,
                                         const std::vector<bool>& flip = {});

struct SplitFront {
  FrontDiagram left;
  FrontDiagram right;
  int points = 0;
  std::vector<long> potentials;  // top to bottom along the dividing line
};

/// Cuts at a divider. Both pieces carry overrides reproducing the potentials
/// of `pot`, which must belong to `front`.
SplitFront split_at(const FrontDiagram& front, const PotentialMap& pot, std::string_view divider);
SplitFront split_at(const FrontDiagram& front, std::string_view divider);

/// Column range [begin, end) of events as its own piece, potentials inherited.
FrontDiagram sub_front(const FrontDiagram& front, const PotentialMap& pot, std::size_t begin,
                       std::size_t end, std::string name);

/// Rough text picture of the front, one row per strand position.
std::string ascii_sketch(const FrontDiagram& front);

}  // namespace fdga
