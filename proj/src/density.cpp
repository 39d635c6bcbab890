#include "latpack/density.hpp"

#include <sstream>
#include <stdexcept>
#include <thread>

namespace latpack {

SequenceSpec SequenceSpec::dn(Int d, Int n) {
  if (d < 1 || n < 1) throw std::invalid_argument("(d,n) sequence needs d >= 1 and n >= 1");
  SequenceSpec s;
  s.dn_ = true;
  s.d_ = d;
  s.n_ = n;
  return s;
}

SequenceSpec SequenceSpec::list(std::vector<Int> values) {
  if (values.empty()) throw std::invalid_argument("empty sequence");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1) throw std::invalid_argument("sequence entries must be positive");
    if (i > 0 && values[i] < values[i - 1]) throw std::invalid_argument("sequence must be nondecreasing");
  }
  SequenceSpec s;
  s.values_ = std::move(values);
  return s;
}

Int SequenceSpec::at(Int i) const {
  if (i < 1) throw std::out_of_range("sequence index starts at 1");
  if (dn_) return d_ + (i - 1) / n_;
  if (i > static_cast<Int>(values_.size())) throw std::out_of_range("index past the end of the sequence");
  return values_[static_cast<std::size_t>(i - 1)];
}

std::optional<Int> SequenceSpec::length() const {
  if (dn_) return std::nullopt;
  return static_cast<Int>(values_.size());
}

std::string SequenceSpec::str() const {
  if (dn_) return "(d=" + std::to_string(d_) + ",n=" + std::to_string(n_) + ")";
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values_[i]);
  }
  return out + ")";
}

namespace {

struct Area {
  Int num;
  Int den;
};

Area area_parts(LatticeKind kind, Int k) {
  if (k < 1) throw std::invalid_argument("k-area needs k >= 1");
  Int m = k / 2;
  switch (kind) {
    case LatticeKind::Hex:
      if (k % 2 == 0) return {3 * m * m + 3 * m + 2, 2};
      m = k / 4;
      if (k % 4 == 1) return {6 * m * m + 6 * m + 2, 1};
      return {6 * m * m + 12 * m + 6, 1};
    case LatticeKind::Square:
      if (k % 2 == 0) return {2 * m * m + 2 * m + 1, 1};
      return {2 * m * m + 4 * m + 2, 1};
    case LatticeKind::Tri:
      if (k % 2 == 0) return {3 * m * m + 3 * m + 1, 1};
      return {3 * m * m + 6 * m + 3, 1};
  }
  return {1, 1};
}

struct Fraction {
  mpz_class p = 0;
  mpz_class q = 1;
};

Fraction merge(const Fraction& x, const Fraction& y) {
  return {x.p * y.q + y.p * x.q, x.q * y.q};
}

// weight * sum_{j=lo}^{hi-1} 1/A(j), not reduced
Fraction split_sum(LatticeKind kind, Int lo, Int hi, Int weight) {
  if (hi - lo <= 8) {
    Fraction acc;
    for (Int j = lo; j < hi; ++j) {
      Area a = area_parts(kind, j);
      acc = merge(acc, {mpz_class(static_cast<long>(weight * a.den)), mpz_class(static_cast<long>(a.num))});
    }
    return acc;
  }
  Int mid = lo + (hi - lo) / 2;
  return merge(split_sum(kind, lo, mid, weight), split_sum(kind, mid, hi, weight));
}

}  // namespace

Rational k_area_formula(LatticeKind kind, Int k) {
  Area a = area_parts(kind, k);
  return Rational(a.num, a.den);
}

Rational k_area_direct(LatticeKind kind, Int k, Vertex x) {
  if (k < 1) throw std::invalid_argument("k-area needs k >= 1");
  Int inner = k / 2;
  Rational area(static_cast<long>(ball(kind, x, inner).size()));
  if (k % 2 == 0) return area;
  Int outer = inner + 1;
  for (Vertex u : sphere(kind, x, outer)) {
    Int in_ball = 0, on_sphere = 0;
    for (Vertex w : neighbors(kind, u)) {
      Int dw = distance(kind, x, w);
      if (dw <= inner) ++in_ball;
      else if (dw == outer) ++on_sphere;
    }
    area += Rational(2 * in_ball + on_sphere, 2 * degree(kind));
  }
  return area;
}

Rational density_upper_bound(LatticeKind kind, Int i) {
  return k_area_formula(kind, i).reciprocal();
}

Rational tail_constant(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Hex: return Rational(3, 8);
    case LatticeKind::Square: return Rational(1, 2);
    case LatticeKind::Tri: return Rational(3, 4);
  }
  return Rational(1);
}

Rational area_reciprocal_sum(LatticeKind kind, Int lo, Int hi, Int weight, int jobs) {
  if (lo < 1) throw std::invalid_argument("k-area sum starts at 1");
  if (hi < lo) return Rational(0);
  Int count = hi - lo + 1;
  Int chunks = std::max<Int>(1, std::min<Int>(jobs, count / 64));
  std::vector<Fraction> parts(static_cast<std::size_t>(chunks));
  auto bound = [&](Int c) { return lo + count * c / chunks; };
  if (chunks == 1) {
    parts[0] = split_sum(kind, lo, hi + 1, weight);
  } else {
    std::vector<std::thread> pool;
    for (Int c = 0; c < chunks; ++c)
      pool.emplace_back([&, c] { parts[static_cast<std::size_t>(c)] = split_sum(kind, bound(c), bound(c + 1), weight); });
    for (auto& t : pool) t.join();
  }
  Fraction total;
  for (const auto& p : parts) total = merge(total, p);
  return Rational(total.p, total.q);
}

InfeasibilityCertificate feasibility_sum(LatticeKind kind, const SequenceSpec& spec, Int horizon, int jobs) {
  InfeasibilityCertificate cert{kind, spec, horizon, Rational(0), Rational(0), Rational(0)};
  if (spec.is_dn()) {
    if (horizon < spec.d()) throw std::invalid_argument("horizon below the starting radius of the sequence");
    cert.partial_sum = area_reciprocal_sum(kind, spec.d(), horizon, spec.n(), jobs);
    cert.tail_bound = Rational(spec.n()) / (tail_constant(kind) * Rational(horizon));
  } else {
    Rational sum(0);
    for (Int s : spec.values()) sum += density_upper_bound(kind, s);
    cert.partial_sum = sum;
  }
  cert.total_bound = cert.partial_sum + cert.tail_bound;
  return cert;
}

std::string InfeasibilityCertificate::report(bool exact) const {
  std::ostringstream out;
  out << "lattice: " << name(kind) << "\n";
  out << "sequence: " << spec.str() << "\n";
  if (spec.is_dn()) out << "horizon: " << horizon << "\n";
  auto show = [&](const char* label, const Rational& r) {
    out << label << ": ";
    if (exact || r.digits() <= 40) out << r.str();
    else out << "[" << r.decimal_floor(6) << ", " << r.decimal_ceil(6) << "] (exact rational, "
             << r.digits() << "-digit denominator)";
    out << "\n";
  };
  show("partial_sum", partial_sum);
  show("tail_bound", tail_bound);
  show("total_bound", total_bound);
  out << "verdict: " << (verdict() == Verdict::Infeasible ? "INFEASIBLE (chi = infinity)" : "INCONCLUSIVE") << "\n";
  return out.str();
}

Int density_lower_bound(LatticeKind kind, const SequenceSpec& spec, Int cap) {
  const Rational one(1);
  Rational sum(0);
  if (!spec.is_dn()) {
    Int i = 0;
    for (Int s : spec.values()) {
      ++i;
      sum += density_upper_bound(kind, s);
      if (sum >= one) return i;
    }
    throw std::domain_error("no finite lower bound within the given sequence");
  }
  // The whole series is bounded by the certificate total; skip the loop when it cannot reach 1.
  if (feasibility_sum(kind, spec).verdict() == Verdict::Infeasible)
    throw std::domain_error("no finite lower bound at this cap (sequence is infeasible)");
  Int used = 0;
  for (Int j = spec.d(); used < cap; ++j) {
    Rational a = k_area_formula(kind, j);
    Rational block = Rational(spec.n()) / a;
    if (sum + block >= one) {
      mpz_class t = ((one - sum) * a).ceil();
      return used + t.get_si();
    }
    sum += block;
    used += spec.n();
  }
  throw std::domain_error("no finite lower bound at this cap");
}

}  // namespace latpack
