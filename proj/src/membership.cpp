#include "ugb/membership.hpp"

#include <algorithm>
#include <tuple>

namespace ugb {

struct TruncatedModule::Echelon {
  RingKind kind = RingKind::Integers;
  Integer modulus = 0;
  std::size_t generator_rows = 0;
  // Z and Z/n: E = U * A (mod n), rows of E in echelon form.
  std::vector<std::vector<Integer>> rows;
  std::vector<std::vector<Integer>> transform;
  // Q: the same over the field.
  std::vector<std::vector<RingElement>> field_rows;
  std::vector<std::vector<RingElement>> field_transform;
  // (row, column), ascending by column.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

namespace {

using IntRow = std::vector<Integer>;
using Echelon = TruncatedModule::Echelon;

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    q -= 1;
  return q;
}

Integer floor_mod(const Integer& a, const Integer& n) {
  Integer r = a % n;
  if (r < 0)
    r += n;
  return r;
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
std::tuple<Integer, Integer, Integer> xgcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, Integer(old_r - q * r));
    std::tie(old_s, s) = std::make_tuple(s, Integer(old_s - q * s));
    std::tie(old_t, t) = std::make_tuple(t, Integer(old_t - q * t));
  }
  if (old_r < 0)
    return {Integer(-old_r), Integer(-old_s), Integer(-old_t)};
  return {old_r, old_s, old_t};
}

void reduce_row(IntRow& row, const Integer& modulus) {
  if (modulus.is_zero())
    return;
  for (auto& x : row)
    x = floor_mod(x, modulus);
}

// x := a*x + b*y, y := c*x + d*y
void mix_rows(IntRow& x, IntRow& y, const Integer& a, const Integer& b, const Integer& c,
              const Integer& d, const Integer& modulus) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    Integer nx = a * x[k] + b * y[k];
    Integer ny = c * x[k] + d * y[k];
    x[k] = std::move(nx);
    y[k] = std::move(ny);
  }
  reduce_row(x, modulus);
  reduce_row(y, modulus);
}

// x := x - q*y
void sub_multiple(IntRow& x, const Integer& q, const IntRow& y, const Integer& modulus) {
  if (q.is_zero())
    return;
  for (std::size_t k = 0; k < x.size(); ++k)
    x[k] -= q * y[k];
  reduce_row(x, modulus);
}

IntRow times(const Integer& c, const IntRow& row, const Integer& modulus) {
  IntRow out(row.size());
  for (std::size_t k = 0; k < row.size(); ++k)
    out[k] = c * row[k];
  reduce_row(out, modulus);
  return out;
}

bool all_zero(const IntRow& row) {
  return std::all_of(row.begin(), row.end(), [](const Integer& x) { return x.is_zero(); });
}

// Column-by-column elimination with 2x2 unimodular (extended gcd) row moves.
// Over Z this yields the Hermite normal form (positive pivots, entries above
// each pivot reduced into [0, pivot)). Over Z/n each pivot is replaced by
// gcd(pivot, n) and the annihilator multiple (n/g)*row is appended so later
// columns see it; the result has the Howell property, which makes forward
// substitution complete.
void integer_echelon(Echelon& e, std::size_t columns) {
  const Integer& n = e.modulus;
  auto& E = e.rows;
  auto& U = e.transform;
  std::size_t r = 0;
  for (std::size_t col = 0; col < columns && r < E.size(); ++col) {
    for (std::size_t i = r + 1; i < E.size(); ++i) {
      if (E[i][col].is_zero())
        continue;
      if (E[r][col].is_zero()) {
        std::swap(E[r], E[i]);
        std::swap(U[r], U[i]);
        continue;
      }
      const Integer a = E[r][col];
      const Integer b = E[i][col];
      auto [g, s, t] = xgcd(a, b);
      const Integer c = -(b / g);
      const Integer d = a / g;
      mix_rows(E[r], E[i], s, t, c, d, n);
      mix_rows(U[r], U[i], s, t, c, d, n);
    }
    if (E[r][col].is_zero())
      continue;
    if (!n.is_zero()) {
      auto [g, s, t] = xgcd(E[r][col], n);
      (void)t;
      IntRow annihilated = times(n / g, E[r], n);
      if (!all_zero(annihilated)) {
        U.push_back(times(n / g, U[r], n));
        E.push_back(std::move(annihilated));
      }
      E[r] = times(s, E[r], n);
      U[r] = times(s, U[r], n);
    } else if (E[r][col] < 0) {
      E[r] = times(-1, E[r], n);
      U[r] = times(-1, U[r], n);
    }
    for (std::size_t k = 0; k < r; ++k) {
      const Integer q = floor_div(E[k][col], E[r][col]);
      sub_multiple(E[k], q, E[r], n);
      sub_multiple(U[k], q, U[r], n);
    }
    e.pivots.emplace_back(r, col);
    ++r;
  }
}

void field_echelon(Echelon& e, std::size_t columns, const RingSpec& ring) {
  auto& E = e.field_rows;
  auto& U = e.field_transform;
  std::size_t r = 0;
  for (std::size_t col = 0; col < columns && r < E.size(); ++col) {
    std::size_t p = r;
    while (p < E.size() && E[p][col].is_zero())
      ++p;
    if (p == E.size())
      continue;
    std::swap(E[r], E[p]);
    std::swap(U[r], U[p]);
    const RingElement inv = E[r][col].inverse();
    for (auto& x : E[r])
      x = x * inv;
    for (auto& x : U[r])
      x = x * inv;
    for (std::size_t i = 0; i < E.size(); ++i) {
      if (i == r || E[i][col].is_zero())
        continue;
      const RingElement q = E[i][col];
      for (std::size_t k = 0; k < E[i].size(); ++k)
        E[i][k] = E[i][k] - q * E[r][k];
      for (std::size_t k = 0; k < U[i].size(); ++k)
        U[i][k] = U[i][k] - q * U[r][k];
    }
    e.pivots.emplace_back(r, col);
    ++r;
  }
  (void)ring;
}

// Words of length `len` in lexicographic order; non-decreasing only when
// `sorted` is set.
void words_of_length(std::size_t rank, std::size_t len, bool sorted, std::vector<Word>& out) {
  std::vector<Letter> current;
  auto rec = [&](auto&& self, Letter start) -> void {
    if (current.size() == len) {
      out.emplace_back(current);
      return;
    }
    for (Letter a = sorted ? start : 0; a < rank; ++a) {
      current.push_back(a);
      self(self, a);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

} // namespace

TruncatedModule build_truncation(const GenSet& gens, std::size_t degree_bound) {
  const Algebra& alg = gens.algebra();
  const bool commutative = alg.oracle() == MulOracle::CommutativeMerge;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].degree() > degree_bound)
      throw Error(Errc::BoundTooSmall, "degree bound " + std::to_string(degree_bound) +
                                           " is below the degree of generator " + std::to_string(i));

  TruncatedModule m;
  m.algebra_ = gens.algebra_ptr();
  m.bound_ = degree_bound;

  // Columns: every basis word of degree <= D, descending.
  for (std::size_t d = degree_bound + 1; d-- > 0;) {
    std::vector<Word> level;
    words_of_length(alg.rank(), d, commutative, level);
    std::reverse(level.begin(), level.end());
    for (auto& w : level)
      m.columns_.push_back(std::move(w));
  }
  for (std::size_t k = 0; k < m.columns_.size(); ++k)
    m.column_index_.emplace(m.columns_[k], k);

  const RingElement one = alg.ring().one();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::size_t slack = degree_bound - gens[i].degree();
    for (std::size_t total = 0; total <= slack; ++total) {
      for (std::size_t a = 0; a <= total; ++a) {
        const std::size_t b = total - a;
        if (commutative && b > 0)
          continue;
        std::vector<Word> lefts, rights;
        words_of_length(alg.rank(), a, commutative, lefts);
        words_of_length(alg.rank(), b, commutative, rights);
        for (const auto& u : lefts) {
          for (const auto& v : rights) {
            Poly value = scale(one, u, gens[i], v);
            if (value.degree() > degree_bound)
              continue;
            const bool duplicate = std::any_of(m.rows_.begin(), m.rows_.end(),
                                               [&](const SpanningRow& r) { return r.value == value; });
            if (!duplicate)
              m.rows_.push_back({i, u, v, std::move(value)});
          }
        }
      }
    }
  }

  auto e = std::make_shared<TruncatedModule::Echelon>();
  const RingSpec& ring = alg.ring();
  e->kind = ring.kind();
  e->modulus = ring.modulus();
  e->generator_rows = m.rows_.size();
  const std::size_t rows = m.rows_.size();
  const std::size_t cols = m.columns_.size();
  if (ring.kind() == RingKind::Rationals) {
    e->field_rows.assign(rows, std::vector<RingElement>(cols, ring.zero()));
    e->field_transform.assign(rows, std::vector<RingElement>(rows, ring.zero()));
    for (std::size_t r = 0; r < rows; ++r) {
      for (const auto& t : m.rows_[r].value.terms())
        e->field_rows[r][m.column_index_.at(t.word)] = t.coeff;
      e->field_transform[r][r] = ring.one();
    }
    field_echelon(*e, cols, ring);
  } else {
    e->rows.assign(rows, IntRow(cols, 0));
    e->transform.assign(rows, IntRow(rows, 0));
    for (std::size_t r = 0; r < rows; ++r) {
      for (const auto& t : m.rows_[r].value.terms())
        e->rows[r][m.column_index_.at(t.word)] = t.coeff.numerator();
      e->transform[r][r] = 1;
    }
    integer_echelon(*e, cols);
  }
  m.echelon_ = std::move(e);
  return m;
}

Membership is_member(const Poly& f, const TruncatedModule& module) {
  if (!same_algebra(f.algebra_ptr(), module.algebra_))
    throw Error(Errc::AlgebraMismatch, "polynomial and truncated module live in different algebras");
  if (f.degree() > module.bound_)
    throw Error(Errc::BoundTooSmall, "polynomial of degree " + std::to_string(f.degree()) +
                                         " exceeds the truncation bound " +
                                         std::to_string(module.bound_));
  const Echelon& e = *module.echelon_;
  const RingSpec& ring = f.ring();
  const std::size_t cols = module.columns_.size();
  const std::size_t generator_rows = e.generator_rows;

  Membership out;
  std::vector<RingElement> coefficients(generator_rows, ring.zero());
  if (e.kind == RingKind::Rationals) {
    std::vector<RingElement> residual(cols, ring.zero());
    for (const auto& t : f.terms())
      residual[module.column_index_.at(t.word)] = t.coeff;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < cols; ++col) {
      if (next_pivot < e.pivots.size() && e.pivots[next_pivot].second == col) {
        const std::size_t r = e.pivots[next_pivot++].first;
        const RingElement q = residual[col];
        if (q.is_zero())
          continue;
        for (std::size_t k = col; k < cols; ++k)
          residual[k] = residual[k] - q * e.field_rows[r][k];
        for (std::size_t k = 0; k < generator_rows; ++k)
          coefficients[k] = coefficients[k] + q * e.field_transform[r][k];
      } else if (!residual[col].is_zero()) {
        return out;
      }
    }
  } else {
    const Integer& n = e.modulus;
    IntRow residual(cols, 0);
    for (const auto& t : f.terms())
      residual[module.column_index_.at(t.word)] = t.coeff.numerator();
    IntRow combination(generator_rows, 0);
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < cols; ++col) {
      if (next_pivot < e.pivots.size() && e.pivots[next_pivot].second == col) {
        const std::size_t r = e.pivots[next_pivot++].first;
        const Integer& pivot = e.rows[r][col];
        if (residual[col] % pivot != 0)
          return out;
        const Integer q = residual[col] / pivot;
        sub_multiple(residual, q, e.rows[r], n);
        for (std::size_t k = 0; k < generator_rows; ++k)
          combination[k] += q * e.transform[r][k];
      } else if (!residual[col].is_zero()) {
        return out;
      }
    }
    for (std::size_t k = 0; k < generator_rows; ++k)
      coefficients[k] = ring.from_integer(combination[k]);
  }

  Poly check(f.algebra_ptr());
  for (std::size_t k = 0; k < generator_rows; ++k) {
    if (coefficients[k].is_zero())
      continue;
    const auto& row = module.rows_[k];
    out.witness.push_back({coefficients[k], row.left, row.gen, row.right});
    check = combine(check, coefficients[k], row.value);
  }
  if (!(check == f))
    throw std::logic_error("membership witness does not reconstruct the input");
  out.status = Membership::Status::Member;
  return out;
}

} // namespace ugb
