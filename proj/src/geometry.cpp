#include "orthoconvex/geometry.hpp"

#include "big_rat.hpp"
#include "orthoconvex/error.hpp"

namespace oc {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::NonAlignedCell: return "NonAlignedCell";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::NotPathConnected: return "NotPathConnected";
    case ErrorCode::NotOrthoConvex: return "NotOrthoConvex";
    case ErrorCode::PointInside: return "PointInside";
    case ErrorCode::PointOutside: return "PointOutside";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NotAxisAligned: return "NotAxisAligned";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InsufficientItems: return "InsufficientItems";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownObject: return "UnknownObject";
  }
  return "Unknown";
}

AxisSegment::AxisSegment(Pt2 p, Pt2 q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.x != q_.x && p_.y != q_.y)
    throw Error(ErrorCode::NotAxisAligned, "segment " + p_.str() + "-" + q_.str() + " is not axis-aligned");
}

AxisRect::AxisRect(Pt2 min, Pt2 max) : min_(std::move(min)), max_(std::move(max)) {
  if (max_.x < min_.x || max_.y < min_.y)
    throw Error(ErrorCode::InvalidGeometry, "rectangle min " + min_.str() + " exceeds max " + max_.str());
}

AxisRect AxisRect::of_points(const Pt2& a, const Pt2& b) {
  return AxisRect({oc::min(a.x, b.x), oc::min(a.y, b.y)}, {oc::max(a.x, b.x), oc::max(a.y, b.y)});
}

Rat norm2_sq(const Pt2& a, const Pt2& b) {
  Rat dx = a.x - b.x;
  Rat dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Rat norm1(const Pt2& a, const Pt2& b) { return abs(a.x - b.x) + abs(a.y - b.y); }

namespace {

Rat gap(const Rat& lo1, const Rat& hi1, const Rat& lo2, const Rat& hi2) {
  if (hi1 < lo2) return lo2 - hi1;
  if (hi2 < lo1) return lo1 - hi2;
  return Rat(0);
}

bool perfect_square(const mpz_class& v, mpz_class& root) {
  if (v < 0) return false;
  root = sqrt(v);
  return root * root == v;
}

// Smallest power of two K with 1/K <= w (w > 0).
mpz_class pow2_at_least_inverse(const mpq_class& w) {
  mpz_class k = 1;
  mpq_class prod = w;
  while (prod < 1) {
    k <<= 1;
    prod *= 2;
  }
  return k;
}

}  // namespace

Rat rect_distance_sq(const AxisRect& a, const AxisRect& b) {
  Rat dx = gap(a.min().x, a.max().x, b.min().x, b.max().x);
  Rat dy = gap(a.min().y, a.max().y, b.min().y, b.max().y);
  return dx * dx + dy * dy;
}

Rat point_rect_distance_sq(const Pt2& p, const AxisRect& r) {
  Rat dx = gap(p.x, p.x, r.min().x, r.max().x);
  Rat dy = gap(p.y, p.y, r.min().y, r.max().y);
  return dx * dx + dy * dy;
}

RatInterval sqrt_bracket(const Rat& x, const Rat& width) {
  if (x.sign() < 0) throw Error(ErrorCode::PreconditionViolated, "sqrt of negative value " + x.str());
  if (width.sign() <= 0) throw Error(ErrorCode::PreconditionViolated, "sqrt bracket width must be positive");
  if (x.sign() == 0) return {Rat(0), Rat(0)};
  mpq_class q = as_mpq(x);
  mpz_class rn, rd;
  if (perfect_square(q.get_num(), rn) && perfect_square(q.get_den(), rd)) {
    Rat r = Rat::from_big(BigRat{mpq_class(rn, rd)});
    return {r, r};
  }
  mpz_class k = pow2_at_least_inverse(as_mpq(width));
  // floor(sqrt(floor(x*k^2))) == floor(sqrt(x)*k)
  mpz_class scaled = q.get_num() * k * k / q.get_den();
  mpz_class root = sqrt(scaled);
  Rat lo = Rat::from_big(BigRat{mpq_class(root, k)});
  Rat hi = Rat::from_big(BigRat{mpq_class(root + 1, k)});
  return {lo, hi};
}

Rat rat_sqrt_lower(const Rat& x, const Rat& slack) {
  if (slack.sign() <= 0) throw Error(ErrorCode::PreconditionViolated, "sqrt slack must be positive");
  // x - r^2 <= (sqrt(x) - r) * 2 sqrt(x) <= width * 2 max(1, x)
  Rat width = slack / (Rat(2) * max(Rat(1), x));
  return sqrt_bracket(x, width).lo;
}

Rat rat_sqrt_upper(const Rat& x, const Rat& width) { return sqrt_bracket(x, width).hi; }

}  // namespace oc
