#include "sternpoly/sparse_poly.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <span>
#include <utility>

#include "sternpoly/error.hpp"

namespace sternpoly {

namespace {
std::atomic<std::size_t> g_term_cap{1'000'000};

// Merge two sorted term lists with sign applied to the second.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back({b[j].exp, sign_b > 0 ? BigInt(b[j].coeff) : BigInt(-b[j].coeff)});
      ++j;
    } else {
      BigInt c = sign_b > 0 ? BigInt(a[i].coeff + b[j].coeff) : BigInt(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

struct WordTerm {
  std::int64_t exp;
  std::int64_t coeff;
};

std::vector<WordTerm> merge(const std::vector<WordTerm>& a, const std::vector<WordTerm>& b, int) {
  std::vector<WordTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back(b[j++]);
    } else {
      if (const std::int64_t c = a[i].coeff + b[j].coeff; c != 0) out.push_back({a[i].exp, c});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Product {
  const std::vector<Term>* lhs;
  const std::vector<Term>* rhs;
  int sign;
};

// Rows are pushed on a stack and merged like a binary counter, so only
// O(log rows) partial sums are alive at once.
template <class T>
class RowAccumulator {
 public:
  void push(std::vector<T> row) {
    std::size_t rank = 0;
    while (!stack_.empty() && stack_.back().second == rank) {
      row = merge(stack_.back().first, row, +1);
      check(row);
      stack_.pop_back();
      ++rank;
    }
    stack_.emplace_back(std::move(row), rank);
  }

  std::vector<T> finish() {
    if (stack_.empty()) return {};
    std::vector<T> acc = std::move(stack_.back().first);
    stack_.pop_back();
    while (!stack_.empty()) {
      acc = merge(stack_.back().first, acc, +1);
      check(acc);
      stack_.pop_back();
    }
    return acc;
  }

 private:
  static void check(const std::vector<T>& row) {
    if (row.size() > 4 * term_cap()) fail(ErrorKind::CapExceeded, "intermediate product exceeds the term cap");
  }
  std::vector<std::pair<std::vector<T>, std::size_t>> stack_;
};

constexpr std::int64_t kWordLimit = std::int64_t{1} << 62;

// True when every exponent sum and every accumulated coefficient fits in 62 bits.
bool fits_words(std::span<const Product> products) {
  BigInt coeff_bound = 0;
  for (const auto& p : products) {
    BigInt max_exp[2] = {0, 0}, max_coeff[2] = {0, 0};
    const std::vector<Term>* sides[2] = {p.lhs, p.rhs};
    for (int side = 0; side < 2; ++side)
      for (const auto& term : *sides[side]) {
        if (term.exp > max_exp[side]) max_exp[side] = term.exp;
        if (abs(term.coeff) > max_coeff[side]) max_coeff[side] = abs(term.coeff);
      }
    if (max_exp[0] + max_exp[1] >= kWordLimit) return false;
    coeff_bound += max_coeff[0] * max_coeff[1] * std::min(p.lhs->size(), p.rhs->size());
  }
  return coeff_bound < kWordLimit;
}

std::vector<Term> sum_of_products(std::span<const Product> products) {
  if (fits_words(products)) {
    RowAccumulator<WordTerm> acc;
    for (const auto& p : products) {
      const bool lhs_small = p.lhs->size() <= p.rhs->size();
      const auto& small = lhs_small ? *p.lhs : *p.rhs;
      const auto& large = lhs_small ? *p.rhs : *p.lhs;
      std::vector<WordTerm> base;
      base.reserve(large.size());
      for (const auto& l : large) base.push_back({l.exp.get_si(), l.coeff.get_si()});
      for (const auto& s : small) {
        const std::int64_t shift = s.exp.get_si(), factor = s.coeff.get_si() * p.sign;
        std::vector<WordTerm> row(base);
        for (auto& term : row) {
          term.exp += shift;
          term.coeff *= factor;
        }
        acc.push(std::move(row));
      }
    }
    std::vector<WordTerm> words = acc.finish();
    std::vector<Term> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back({BigInt(static_cast<long>(w.exp)), BigInt(static_cast<long>(w.coeff))});
    return out;
  }
  RowAccumulator<Term> acc;
  for (const auto& p : products) {
    const bool lhs_small = p.lhs->size() <= p.rhs->size();
    const auto& small = lhs_small ? *p.lhs : *p.rhs;
    const auto& large = lhs_small ? *p.rhs : *p.lhs;
    for (const auto& s : small) {
      std::vector<Term> row;
      row.reserve(large.size());
      for (const auto& l : large) row.push_back({l.exp + s.exp, l.coeff * s.coeff * p.sign});
      acc.push(std::move(row));
    }
  }
  return acc.finish();
}
}  // namespace

std::size_t term_cap() noexcept { return g_term_cap.load(std::memory_order_relaxed); }
void set_term_cap(std::size_t cap) noexcept { g_term_cap.store(cap, std::memory_order_relaxed); }

SparsePoly::SparsePoly(std::vector<Term> normalized) : terms_(std::move(normalized)) { enforce_cap(); }

void SparsePoly::enforce_cap() const {
  if (terms_.size() > term_cap())
    fail(ErrorKind::CapExceeded,
         "polynomial has " + std::to_string(terms_.size()) + " terms, cap is " + std::to_string(term_cap()));
}

SparsePoly::SparsePoly(const BigInt& c) {
  if (c != 0) terms_.push_back({0, c});
}

SparsePoly SparsePoly::constant(const BigInt& c) { return SparsePoly(c); }

SparsePoly SparsePoly::monomial(const BigInt& exp, const BigInt& coeff) {
  if (sgn(exp) < 0) fail(ErrorKind::InvalidParameter, "negative exponent");
  if (coeff == 0) return {};
  return SparsePoly(std::vector<Term>{{exp, coeff}});
}

SparsePoly SparsePoly::from_terms(std::vector<Term> terms) {
  for (const auto& term : terms)
    if (sgn(term.exp) < 0) fail(ErrorKind::InvalidParameter, "negative exponent");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& term : terms) {
    if (!out.empty() && out.back().exp == term.exp) {
      out.back().coeff += term.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(term));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return SparsePoly(std::move(out));
}

const BigInt& SparsePoly::degree() const {
  if (is_zero()) fail(ErrorKind::InvalidParameter, "degree of the zero polynomial is undefined");
  return terms_.back().exp;
}

BigInt SparsePoly::coefficient(const BigInt& exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& term, const BigInt& e) { return term.exp < e; });
  return (it != terms_.end() && it->exp == exp) ? it->coeff : BigInt(0);
}

BigInt SparsePoly::constant_term() const { return coefficient(0); }

BigInt SparsePoly::value_at_one() const {
  BigInt sum = 0;
  for (const auto& term : terms_) sum += term.coeff;
  return sum;
}

Rational SparsePoly::evaluate(const Rational& x) const {
  // Horner over exponent gaps keeps each power computation incremental.
  Rational acc = 0;
  BigInt prev_exp = 0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (it != terms_.rbegin()) acc *= pow(x, BigInt(prev_exp - it->exp));
    acc += Rational(it->coeff);
    prev_exp = it->exp;
  }
  if (!terms_.empty()) acc *= pow(x, terms_.front().exp);
  acc.canonicalize();
  return acc;
}

SparsePoly SparsePoly::truncated(const BigInt& order) const {
  auto end = std::lower_bound(terms_.begin(), terms_.end(), order,
                              [](const Term& term, const BigInt& e) { return term.exp < e; });
  return SparsePoly(std::vector<Term>(terms_.begin(), end));
}

SparsePoly SparsePoly::scaled(const BigInt& by, const BigInt& coeff) const {
  if (sgn(by) < 0) fail(ErrorKind::InvalidParameter, "negative shift");
  if (coeff == 0) return {};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) out.push_back({term.exp + by, term.coeff * coeff});
  return SparsePoly(std::move(out));
}

SparsePoly SparsePoly::operator-() const { return scaled(0, -1); }

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return SparsePoly(merge(a.terms_, b.terms_, +1)); }

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return SparsePoly(merge(a.terms_, b.terms_, -1)); }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  const Product products[] = {{&a.terms_, &b.terms_, +1}};
  return SparsePoly(sum_of_products(products));
}

SparsePoly multiply_sub(const SparsePoly& a, const SparsePoly& b, const SparsePoly& c, const SparsePoly& d) {
  const Product products[] = {{&a.terms_, &b.terms_, +1}, {&c.terms_, &d.terms_, -1}};
  return SparsePoly(sum_of_products(products));
}

SparsePoly compose_power(const SparsePoly& p, const BigInt& m) {
  if (m < 1) fail(ErrorKind::InvalidParameter, "compose_power requires m >= 1");
  std::vector<Term> out;
  out.reserve(p.term_count());
  for (const auto& term : p.terms()) out.push_back({term.exp * m, term.coeff});
  return SparsePoly::from_terms(std::move(out));
}

BigInt first_difference(const SparsePoly& a, const SparsePoly& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0;
  while (i < x.size() && i < y.size() && x[i] == y[i]) ++i;
  if (i == x.size() && i == y.size()) return -1;
  if (i == x.size()) return y[i].exp;
  if (i == y.size()) return x[i].exp;
  return x[i].exp < y[i].exp ? x[i].exp : y[i].exp;
}

std::string to_text(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : p.terms()) {
    BigInt mag = abs(term.coeff);
    if (first) {
      if (term.coeff < 0) out += "-";
    } else {
      out += term.coeff < 0 ? " - " : " + ";
    }
    first = false;
    if (term.exp == 0) {
      out += to_decimal(mag);
      continue;
    }
    if (mag != 1) out += to_decimal(mag) + "*";
    out += term.exp == 1 ? std::string("z") : "z^" + to_decimal(term.exp);
  }
  return out;
}

}  // namespace sternpoly
