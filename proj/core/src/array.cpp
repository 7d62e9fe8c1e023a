#include "riordan/array.hpp"

#include <algorithm>

#include "riordan/combinatorics.hpp"
#include "riordan/error.hpp"

namespace riordan {

RiordanArray::RiordanArray(Series f, Series g, Flavor flavor)
    : f_(std::move(f)), g_(std::move(g)), flavor_(flavor) {
  if (flavor_ == Flavor::Square) {
    if (!g_[0].is_one()) throw DomainError("square array requires a(0) = 1");
    if (f_[0].is_zero()) throw DomainError("square array requires b(0) != 0");
  } else if (!g_[0].is_zero()) {
    throw DomainError("Riordan array requires g(0) = 0");
  }
}

RiordanArray RiordanArray::identity(std::size_t order, Flavor flavor) {
  if (flavor == Flavor::Square) throw DomainError("square arrays have no identity element");
  return RiordanArray(Series::constant(1, order), Series::x(order), flavor);
}

RiordanArray RiordanArray::pascal(const Rational& phi, std::size_t order) {
  const Series geo = Series::geometric(phi, order);
  return RiordanArray(geo, geo.times_x().truncated(order));
}

std::size_t RiordanArray::order() const { return std::min(f_.order(), g_.order()); }

bool RiordanArray::is_proper() const {
  if (flavor_ == Flavor::Square) return false;
  return !f_[0].is_zero() && g_.order() >= 1 && !g_[1].is_zero();
}

Rational RiordanArray::entry(std::size_t n, std::size_t m) const {
  if (n > order()) throw RangeError("row " + std::to_string(n) + " beyond array order " + std::to_string(order()));
  if (flavor_ != Flavor::Square && m > n) return 0;
  const Series f = f_.truncated(n);
  const Series col = f * pow_series(g_.truncated(n), static_cast<long>(m));
  Rational v = col[n];
  if (flavor_ == Flavor::Exponential) v *= factorial(static_cast<long>(n)) / factorial(static_cast<long>(m));
  return v;
}

TriangleSlice RiordanArray::materialize(SliceKind kind, std::size_t n) const {
  const std::size_t N = order();
  if (n > N) throw RangeError("index " + std::to_string(n) + " beyond array order " + std::to_string(N));
  TriangleSlice slice{{}, kind, n};
  const Series f = f_.truncated(N);
  const Series g = g_.truncated(N);
  // Column generating functions are produced incrementally as f g^m.
  auto scaled = [&](Rational v, std::size_t row, std::size_t col) {
    if (flavor_ == Flavor::Exponential) {
      v *= factorial(static_cast<long>(row)) / factorial(static_cast<long>(col));
    }
    return v;
  };
  switch (kind) {
    case SliceKind::Row: {
      const std::size_t width = flavor_ == Flavor::Square ? N + 1 : n + 1;
      Series col = f;
      for (std::size_t m = 0; m < width; ++m) {
        slice.entries.push_back(scaled(col[n], n, m));
        col = col * g;
      }
      break;
    }
    case SliceKind::Column: {
      const Series col = f * pow_series(g, static_cast<long>(n));
      for (std::size_t r = 0; r <= N; ++r) slice.entries.push_back(scaled(col[r], r, n));
      break;
    }
    case SliceKind::Diagonal: {
      Series col = f;
      for (std::size_t k = 0; k + n <= N; ++k) {
        slice.entries.push_back(scaled(col[n + k], n + k, k));
        col = col * g;
      }
      break;
    }
  }
  return slice;
}

std::vector<std::vector<Rational>> RiordanArray::window(std::size_t rows) const {
  std::vector<std::vector<Rational>> out(rows, std::vector<Rational>(rows));
  if (rows == 0) return out;
  const std::size_t N = rows - 1;
  if (N > order()) throw RangeError("window larger than array order");
  Series col = f_.truncated(N);
  const Series g = g_.truncated(N);
  for (std::size_t m = 0; m < rows; ++m) {
    for (std::size_t r = 0; r < rows; ++r) {
      Rational v = col[r];
      if (flavor_ == Flavor::Exponential && !v.is_zero()) {
        v *= factorial(static_cast<long>(r)) / factorial(static_cast<long>(m));
      }
      out[r][m] = v;
    }
    col = col * g;
  }
  return out;
}

RiordanArray riordan_mul(const RiordanArray& lhs, const RiordanArray& rhs) {
  if (lhs.flavor() != rhs.flavor()) throw DomainError("product of Riordan arrays of different flavors");
  if (lhs.flavor() == Flavor::Square) throw DomainError("square arrays do not form a group");
  return RiordanArray(lhs.f() * compose(rhs.f(), lhs.g()), compose(rhs.g(), lhs.g()), lhs.flavor());
}

RiordanArray riordan_inverse(const RiordanArray& r) {
  if (!r.is_proper()) throw DomainError("inverse of a non-proper Riordan array");
  const Series h = reversion(r.g());
  const Series f = Series::constant(1, h.order()) / compose(r.f(), h);
  return RiordanArray(f, h, r.flavor());
}

Poly sheffer_row(const RiordanArray& r, std::size_t n) {
  if (r.flavor() != Flavor::Exponential) throw DomainError("Sheffer rows are defined for exponential arrays");
  return Poly(r.materialize(SliceKind::Row, n).entries);
}

Series lagrange_pair(const Series& a) {
  if (!a[0].is_one()) throw DomainError("Lagrange pair requires a(0) = 1");
  const Series inv = Series::constant(1, a.order()) / a;
  return reversion(inv.times_x()).over_x();
}

Series generalized_lagrange(const Series& a, const Rational& beta) {
  if (!a[0].is_one()) throw DomainError("generalized Lagrange series requires a(0) = 1");
  if (beta.is_zero()) return a;
  const std::size_t N = a.order();
  const Series h = reversion(pow_series(a, -beta).times_x());
  return compose(a, h.truncated(N));
}

Series table_row(const Series& b, const Series& a, const Rational& phi, long v, long k) {
  if (!a[0].is_one()) throw DomainError("table rows require a(0) = 1");
  if (b[0].is_zero()) throw DomainError("table rows require b(0) != 0");
  const std::size_t N = std::min(a.order(), b.order());
  const Rational vphi = phi * Rational(v);
  const Series L = generalized_lagrange(a.truncated(N), vphi);
  const Series P = pow_series(L, vphi);
  const Series outer = compose(b.truncated(N), P.times_x().truncated(N));
  Series factor = Series::constant(1, N);
  if (N >= 1 && !vphi.is_zero()) factor += (log_series(L).derivative() * vphi).times_x();
  return outer * factor * pow_series(L, phi * Rational(k));
}

}  // namespace riordan
