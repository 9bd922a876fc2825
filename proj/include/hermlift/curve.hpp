#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hermlift/gf.hpp"
#include "hermlift/polyring.hpp"

namespace hermlift::curve {

using gf::Field;
using gf::FieldElem;

/// Affine point of x^q + x + y^{q+1} = 0 over F_{q^2}.
struct CurvePoint {
  FieldElem x;
  FieldElem y;
  std::size_t index = 0;  // codeword coordinate

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// The line t -> (alpha t + beta, t).
struct LineParam {
  FieldElem alpha;
  FieldElem beta;
  FieldElem gamma;  // beta + beta^q
  bool tangent = false;

  friend bool operator==(const LineParam&, const LineParam&) = default;
};

LineParam make_line(const Field& f, FieldElem alpha, FieldElem beta);

/// Some line with the given (alpha, gamma); beta is the least code with trace gamma.
/// gamma must lie in F_q.
LineParam line_from_key(const Field& f, FieldElem alpha, FieldElem gamma);

/// Every (alpha, beta) pair, ordered by (alpha code, beta code).
std::vector<LineParam> all_lines(const Field& f);

bool is_on_curve(const Field& f, FieldElem x, FieldElem y) noexcept;

/// t^{q+1} + alpha^q t^q + alpha t + gamma.
poly::UniPoly line_poly(const Field& f, const LineParam& line);

/// Roots of line_poly by scanning F_{q^2}, in code order.
std::vector<FieldElem> line_roots(const Field& f, const LineParam& line);

/// 1 or q+1, counted from the roots.
std::size_t intersection_count(const Field& f, const LineParam& line);

/// Lines through a point, one per alpha (code order) with beta = x - alpha y.
std::vector<LineParam> lines_through(const Field& f, const CurvePoint& point);

/// The q^3 affine points of the Hermitian curve in canonical order: y-major,
/// then x, both by element code.
class HermitianCurve {
 public:
  explicit HermitianCurve(Field field);

  const Field& field() const noexcept { return field_; }
  const std::vector<CurvePoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const CurvePoint& operator[](std::size_t i) const { return points_[i]; }

  std::optional<std::size_t> index_of(FieldElem x, FieldElem y) const;

  /// Indices of curve points on the line, ordered by their t parameter (= y code).
  std::vector<std::size_t> points_on_line(const LineParam& line) const;

 private:
  Field field_;
  std::vector<CurvePoint> points_;
  std::vector<std::size_t> row_start_;  // first index with a given y code, plus sentinel
};

}  // namespace hermlift::curve
