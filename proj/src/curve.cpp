#include "hermlift/curve.hpp"

#include <algorithm>

#include "hermlift/errors.hpp"

namespace hermlift::curve {

LineParam make_line(const Field& f, FieldElem alpha, FieldElem beta) {
  LineParam line{alpha, beta, f.trace(beta), false};
  line.tangent = line.gamma == f.norm(alpha);
  return line;
}

LineParam line_from_key(const Field& f, FieldElem alpha, FieldElem gamma) {
  if (!f.in_subfield(gamma)) throw Error(Errc::InvalidArgument, "gamma must lie in F_q");
  for (std::uint64_t c = 0; c < f.q2(); ++c) {
    const FieldElem beta{c};
    if (f.trace(beta) == gamma) return make_line(f, alpha, beta);
  }
  // trace is onto F_q
  throw Error(Errc::InvalidArgument, "no beta with the requested trace");
}

std::vector<LineParam> all_lines(const Field& f) {
  std::vector<LineParam> out;
  out.reserve(f.q2() * f.q2());
  for (std::uint64_t a = 0; a < f.q2(); ++a) {
    for (std::uint64_t b = 0; b < f.q2(); ++b) out.push_back(make_line(f, FieldElem{a}, FieldElem{b}));
  }
  return out;
}

bool is_on_curve(const Field& f, FieldElem x, FieldElem y) noexcept {
  return f.add(f.trace(x), f.norm(y)).is_zero();
}

poly::UniPoly line_poly(const Field& f, const LineParam& line) {
  std::vector<FieldElem> c(f.q() + 2);
  c[0] = line.gamma;
  c[1] = f.add(c[1], line.alpha);  // q >= 2, so t and t^q are distinct terms
  c[f.q()] = f.frobenius(line.alpha);
  c[f.q() + 1] = f.one();
  return poly::UniPoly(std::move(c));
}

std::vector<FieldElem> line_roots(const Field& f, const LineParam& line) {
  const poly::UniPoly pl = line_poly(f, line);
  std::vector<FieldElem> roots;
  for (std::uint64_t c = 0; c < f.q2(); ++c) {
    if (pl.evaluate(f, FieldElem{c}).is_zero()) roots.push_back(FieldElem{c});
  }
  return roots;
}

std::size_t intersection_count(const Field& f, const LineParam& line) { return line_roots(f, line).size(); }

std::vector<LineParam> lines_through(const Field& f, const CurvePoint& point) {
  std::vector<LineParam> out;
  out.reserve(f.q2());
  for (std::uint64_t a = 0; a < f.q2(); ++a) {
    const FieldElem alpha{a};
    out.push_back(make_line(f, alpha, f.sub(point.x, f.mul(alpha, point.y))));
  }
  return out;
}

HermitianCurve::HermitianCurve(Field field) : field_(std::move(field)) {
  const Field& f = field_;
  points_.reserve(f.q() * f.q2());
  row_start_.reserve(f.q2() + 1);
  for (std::uint64_t yc = 0; yc < f.q2(); ++yc) {
    row_start_.push_back(points_.size());
    const FieldElem y{yc};
    // need trace(x) = -norm(y)
    const FieldElem target = f.neg(f.norm(y));
    for (std::uint64_t xc = 0; xc < f.q2(); ++xc) {
      const FieldElem x{xc};
      if (f.trace(x) == target) points_.push_back(CurvePoint{x, y, points_.size()});
    }
  }
  row_start_.push_back(points_.size());
}

std::optional<std::size_t> HermitianCurve::index_of(FieldElem x, FieldElem y) const {
  if (y.code >= field_.q2()) return std::nullopt;
  const auto first = points_.begin() + static_cast<std::ptrdiff_t>(row_start_[y.code]);
  const auto last = points_.begin() + static_cast<std::ptrdiff_t>(row_start_[y.code + 1]);
  const auto it = std::lower_bound(first, last, x, [](const CurvePoint& pt, FieldElem v) { return pt.x < v; });
  if (it == last || it->x != x) return std::nullopt;
  return it->index;
}

std::vector<std::size_t> HermitianCurve::points_on_line(const LineParam& line) const {
  const Field& f = field_;
  std::vector<std::size_t> out;
  for (std::uint64_t tc = 0; tc < f.q2(); ++tc) {
    const FieldElem t{tc};
    const FieldElem x = f.add(f.mul(line.alpha, t), line.beta);
    if (auto idx = index_of(x, t)) out.push_back(*idx);
  }
  return out;
}

}  // namespace hermlift::curve
