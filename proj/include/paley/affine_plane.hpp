#ifndef PALEY_AFFINE_PLANE_HPP
#define PALEY_AFFINE_PLANE_HPP

#include <array>
#include <compare>
#include <map>
#include <vector>

#include <json.hpp>

#include "paley/certificate.hpp"
#include "paley/finite_field.hpp"

namespace paley {

// Affine line {base + c*slope : c in F_q}, canonicalized: slope is a
// canonical direction representative and base is the least point on the
// line, so equal lines compare equal.
struct Line {
  int slope = 0;
  int base = 0;

  auto operator<=>(const Line&) const = default;
};

// The q+1 canonical direction representatives: 1, and c + alpha for each
// c in F_q. Sorted by element index.
std::vector<int> directions(const QuadExtContext& ctx);

// Representative of the F_q*-scaling class of a nonzero direction.
int canonical_slope(const QuadExtContext& ctx, int direction);

Line line_with_slope_through(const QuadExtContext& ctx, int slope_rep, int p);
Line line_through(const QuadExtContext& ctx, int p1, int p2);  // p1 != p2

std::vector<int> line_points(const QuadExtContext& ctx, const Line& l);  // sorted
std::vector<Line> lines_through(const QuadExtContext& ctx, int p);       // q+1 lines
std::vector<Line> all_lines(const QuadExtContext& ctx);                  // q(q+1) lines

bool is_quadratic_line(const QuadExtContext& ctx, const Line& l);

struct LineOvalMeet {
  int count = 0;
  std::array<int, 2> points{-1, -1};  // first two intersection points
};

// The norm-one oval with every line's intersection precomputed.
class OvalView {
 public:
  static OvalView norm_one_oval(const QuadExtContext& ctx);

  const std::vector<int>& points() const { return pts_; }
  bool contains(int p) const { return member_[static_cast<std::size_t>(p)] != 0; }
  const LineOvalMeet& meet(const Line& l) const { return cache_.at(l); }

 private:
  std::vector<int> pts_;
  std::vector<char> member_;
  std::map<Line, LineOvalMeet> cache_;
};

struct TangentPencil {
  int count = 0;
  std::vector<Line> tangents;
};

// All tangent lines through p. On-oval points get exactly one; points off
// the oval get 0 or 2 (Qvist, verified separately).
TangentPencil tangents_from(const QuadExtContext& ctx, const OvalView& oval, int p);

enum class TangentClass { kAllQuadratic, kAllNonQuadratic };

// Classifies every tangent to the oval; throws std::runtime_error if the
// tangents do not all fall in one squareness class.
TangentClass verify_tangent_uniformity(const QuadExtContext& ctx, const OvalView& oval);

// Incidence axioms, direction-coset partition, per-point quadratic line
// counts, and difference/squareness coherence along lines.
CheckList verify_affine_plane(const QuadExtContext& ctx);

// Oval size, no-three-collinear, per-point tangent counts on and off the
// oval, and tangent squareness uniformity.
CheckList verify_oval_axioms(const QuadExtContext& ctx, const OvalView& oval);

// Per-point tangent/secant/exterior and quadratic counts.
nlohmann::json line_classification_json(const QuadExtContext& ctx, const OvalView& oval);

}  // namespace paley

#endif  // PALEY_AFFINE_PLANE_HPP
