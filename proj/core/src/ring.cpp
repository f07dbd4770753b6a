#include "selt/ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

#include "selt/error.hpp"
#include "selt/pfaffian.hpp"

namespace selt {

int Monomial::degree() const {
  int d = z;
  for (int i : c) d += i;
  return d;
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.z = a.z + b.z;
  out.c.reserve(a.c.size() + b.c.size());
  std::merge(a.c.begin(), a.c.end(), b.c.begin(), b.c.end(), std::back_inserter(out.c));
  return out;
}

std::string monomial_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << '*';
    first = false;
  };
  if (m.z > 0) {
    sep();
    os << 'z';
    if (m.z > 1) os << '^' << m.z;
  }
  for (size_t i = 0; i < m.c.size();) {
    size_t j = i;
    while (j < m.c.size() && m.c[j] == m.c[i]) ++j;
    sep();
    os << "c_" << m.c[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

}  // namespace

RingElement RingElement::constant(const Integer& v) { return monomial({}, v); }

RingElement RingElement::z_power(int k) { return monomial({k, {}}); }

RingElement RingElement::c(int i) {
  if (i < 0) return {};
  if (i == 0) return constant(1);
  return monomial({0, {i}});
}

RingElement RingElement::monomial(Monomial m, const Integer& coeff) {
  std::sort(m.c.begin(), m.c.end());
  RingElement out;
  out.add(m, coeff);
  return out;
}

std::optional<int> RingElement::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [m, k] : terms_) {
    if (!d) {
      d = m.degree();
    } else if (*d != m.degree()) {
      return std::nullopt;
    }
  }
  return d;
}

bool RingElement::is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

void RingElement::add(const Monomial& m, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement& RingElement::operator+=(const RingElement& o) {
  for (const auto& [m, k] : o.terms_) add(m, k);
  return *this;
}

RingElement RingElement::operator+(const RingElement& o) const {
  RingElement out = *this;
  out += o;
  return out;
}

RingElement RingElement::operator-() const {
  RingElement out = *this;
  for (auto& [m, k] : out.terms_) k = -k;
  return out;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator*(const RingElement& o) const {
  RingElement out;
  for (const auto& [a, ka] : terms_) {
    for (const auto& [b, kb] : o.terms_) out.add(multiply(a, b), ka * kb);
  }
  return out;
}

RingElement RingElement::operator*(const Integer& k) const {
  if (k == 0) return {};
  RingElement out = *this;
  for (auto& [m, v] : out.terms_) v *= k;
  return out;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest c-degree first reads more naturally: c_1^2 - 2*c_2 - z*c_1.
  std::vector<std::pair<Monomial, Integer>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.z != b.first.z) return a.first.z < b.first.z;
    return a.first.c.size() > b.first.c.size();
  });
  for (const auto& [m, k] : ordered) {
    Integer mag = k < 0 ? Integer(-k) : k;
    if (first) {
      if (k < 0) os << '-';
    } else {
      os << (k < 0 ? " - " : " + ");
    }
    first = false;
    const std::string body = monomial_string(m);
    if (body.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << body;
    }
  }
  return os.str();
}

RingElement c_pq(int p, int q) {
  if (p < 0 || q < 0) throw InvalidArgument("c_{p,q} requires p, q >= 0");
  RingElement out;
  for (int b = 0; b <= q; ++b) {
    for (int a = 0; a <= b; ++a) {
      const std::int64_t k = binomial(b, a) + binomial(b - 1, a);
      if (k == 0) continue;
      RingElement term = RingElement::z_power(a) * RingElement::c(p + b - a) * RingElement::c(q - b);
      out += term * Integer(b % 2 == 0 ? k : -k);
    }
  }
  return out;
}

RingElement sigma(const StrictPartition& lambda) {
  std::vector<int> parts = lambda.parts();
  if (parts.size() % 2 == 1) parts.push_back(0);
  const size_t n = parts.size();
  std::vector<std::vector<RingElement>> m(n, std::vector<RingElement>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      m[i][j] = c_pq(parts[i], parts[j]);
      m[j][i] = -m[i][j];
    }
  }
  return pfaffian(m, RingElement{}, RingElement::constant(1));
}

namespace {

// c_{p,p} - c_p^2: what c_p^2 is rewritten into (with a sign flip).
const RingElement& relation_tail(int p) {
  thread_local std::map<int, RingElement> cache;
  auto it = cache.find(p);
  if (it == cache.end()) {
    RingElement tail = c_pq(p, p);
    tail.add({0, {p, p}}, -1);
    it = cache.emplace(p, std::move(tail)).first;
  }
  return it->second;
}

const RingElement& normal_form_of(const Monomial& m) {
  thread_local std::map<Monomial, RingElement> cache;
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  RingElement out;
  auto dup = std::adjacent_find(m.c.begin(), m.c.end());
  if (dup == m.c.end()) {
    out.add(m, 1);
  } else {
    const int p = *dup;
    Monomial rest = m;
    rest.c.erase(rest.c.begin() + (dup - m.c.begin()), rest.c.begin() + (dup - m.c.begin()) + 2);
    // c_p^2 * rest = -(tail) * rest modulo c_{p,p}. Each rewrite raises the
    // z-power or the sum of squared c-indices, so the recursion ends.
    for (const auto& [t, k] : relation_tail(p).terms()) {
      const RingElement& reduced = normal_form_of(multiply(rest, t));
      for (const auto& [r, kr] : reduced.terms()) out.add(r, -k * kr);
    }
  }
  return cache.emplace(m, std::move(out)).first->second;
}

std::vector<int> descending(const std::vector<int>& ascending) {
  return {ascending.rbegin(), ascending.rend()};
}

// Order used for back-substitution: by z-power, then by the c-part read as a
// partition, lexicographically.
bool key_less(const Monomial& a, const Monomial& b) {
  if (a.z != b.z) return a.z < b.z;
  return descending(a.c) < descending(b.c);
}

void require_homogeneous(const RingElement& x, int degree) {
  for (const auto& [m, k] : x.terms()) {
    if (m.degree() != degree) {
      throw HomogeneityError("term " + RingElement::monomial(m, k).to_string() + " has degree " +
                             std::to_string(m.degree()) + ", expected " + std::to_string(degree));
    }
  }
}

// NF(sigma_nu), checked to be c_nu plus terms strictly later in key order.
const RingElement& sigma_normal_form(const StrictPartition& nu) {
  thread_local std::map<StrictPartition, RingElement> cache;
  if (auto it = cache.find(nu); it != cache.end()) return it->second;
  RingElement nf = normal_form(sigma(nu));
  const Monomial lead{0, {nu.parts().rbegin(), nu.parts().rend()}};
  auto it = nf.terms().find(lead);
  if (it == nf.terms().end() || it->second != 1) {
    throw SolveError("normal form of sigma_" + nu.to_string() + " does not lead with c_" +
                     nu.to_string());
  }
  for (const auto& [m, k] : nf.terms()) {
    if (m != lead && !key_less(lead, m)) {
      throw SolveError("normal form of sigma_" + nu.to_string() + " is not triangular");
    }
  }
  return cache.emplace(nu, std::move(nf)).first->second;
}

SigmaExpansion expand_by_normal_form(const RingElement& x, int degree) {
  SigmaExpansion out;
  out.degree = degree;
  RingElement rest = normal_form(x);
  while (!rest.is_zero()) {
    auto lowest = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
      if (key_less(it->first, lowest->first)) lowest = it;
    }
    const Monomial m = lowest->first;
    const Integer k = lowest->second;
    const StrictPartition nu(descending(m.c));
    out.terms[nu].add(m.z, k);
    rest += sigma_normal_form(nu) * RingElement::z_power(m.z) * Integer(-k);
  }
  return out;
}

// All monomials of degree d: z^a times a (not necessarily strict) partition
// of d - a.
std::vector<Monomial> slice_monomials(int d) {
  std::vector<Monomial> out;
  std::vector<int> cur;
  std::function<void(int, int, int)> rec = [&](int z, int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back({z, {cur.rbegin(), cur.rend()}});
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(z, remaining - p, p);
      cur.pop_back();
    }
  };
  for (int a = 0; a <= d; ++a) rec(a, d - a, d - a);
  return out;
}

// Row reduction of [ideal slice | z^{d-|nu|} sigma_nu] in degree d, kept as
// the left transform P with P * A in reduced row echelon form.
struct DegreeSolver {
  int degree = 0;
  std::map<Monomial, size_t> row_of;
  std::vector<std::vector<Rational>> transform;  // P, rows x rows
  size_t rank = 0;
  std::vector<StrictPartition> sigmas;
  std::vector<size_t> sigma_pivot_row;

  explicit DegreeSolver(int d) : degree(d) {
    const std::vector<Monomial> monos = slice_monomials(d);
    for (size_t i = 0; i < monos.size(); ++i) row_of.emplace(monos[i], i);
    const size_t rows = monos.size();

    std::vector<RingElement> columns;
    for (int p = 1; 2 * p <= d; ++p) {
      const RingElement rel = c_pq(p, p);
      for (const Monomial& m : slice_monomials(d - 2 * p)) {
        columns.push_back(rel * RingElement::monomial(m));
      }
    }
    const size_t ideal_cols = columns.size();
    for (const StrictPartition& nu : strict_partitions_up_to(d)) {
      sigmas.push_back(nu);
      columns.push_back(RingElement::z_power(d - nu.size()) * sigma(nu));
    }

    const size_t cols = columns.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + rows));
    for (size_t j = 0; j < cols; ++j) {
      for (const auto& [m, k] : columns[j].terms()) a[row_of.at(m)][j] = Rational(k);
    }
    for (size_t i = 0; i < rows; ++i) a[i][cols + i] = 1;

    std::vector<std::optional<size_t>> pivot_row(cols);
    size_t r = 0;
    for (size_t j = 0; j < cols && r < rows; ++j) {
      size_t piv = r;
      while (piv < rows && a[piv][j] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[piv], a[r]);
      const Rational inv = 1 / a[r][j];
      for (auto& v : a[r]) {
        if (v != 0) v *= inv;
      }
      for (size_t i = 0; i < rows; ++i) {
        if (i == r || a[i][j] == 0) continue;
        const Rational f = a[i][j];
        for (size_t c = j; c < cols + rows; ++c) {
          if (a[r][c] != 0) a[i][c] -= f * a[r][c];
        }
      }
      pivot_row[j] = r++;
    }
    rank = r;
    for (size_t s = 0; s < sigmas.size(); ++s) {
      const auto& pr = pivot_row[ideal_cols + s];
      if (!pr) {
        throw SolveError("sigma_" + sigmas[s].to_string() + " is not independent modulo the " +
                         "relations in degree " + std::to_string(d));
      }
      sigma_pivot_row.push_back(*pr);
    }
    transform.assign(rows, std::vector<Rational>(rows));
    for (size_t i = 0; i < rows; ++i) {
      for (size_t c = 0; c < rows; ++c) transform[i][c] = a[i][cols + c];
    }
  }

  SigmaExpansion solve(const RingElement& x) const {
    std::vector<std::pair<size_t, Rational>> rhs;
    for (const auto& [m, k] : x.terms()) rhs.emplace_back(row_of.at(m), Rational(k));
    auto reduced = [&](size_t row) {
      Rational v = 0;
      for (const auto& [c, k] : rhs) v += transform[row][c] * k;
      return v;
    };
    for (size_t i = rank; i < transform.size(); ++i) {
      if (reduced(i) != 0) {
        throw SolveError("inconsistent sigma-basis system in degree " + std::to_string(degree));
      }
    }
    SigmaExpansion out;
    out.degree = degree;
    for (size_t s = 0; s < sigmas.size(); ++s) {
      const Rational v = reduced(sigma_pivot_row[s]);
      if (v == 0) continue;
      if (denominator(v) != 1) {
        throw SolveError("non-integral coefficient for sigma_" + sigmas[s].to_string());
      }
      out.terms[sigmas[s]] = ZPolynomial::monomial(numerator(v), degree - sigmas[s].size());
    }
    return out;
  }
};

const DegreeSolver& degree_solver(int d) {
  thread_local std::map<int, DegreeSolver> cache;
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, DegreeSolver(d)).first;
  return it->second;
}

}  // namespace

RingElement normal_form(const RingElement& x) {
  RingElement out;
  for (const auto& [m, k] : x.terms()) {
    for (const auto& [r, kr] : normal_form_of(m).terms()) out.add(r, k * kr);
  }
  return out;
}

ZPolynomial ZPolynomial::monomial(const Integer& coeff, int power) {
  ZPolynomial p;
  p.add(power, coeff);
  return p;
}

void ZPolynomial::add(int power, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(power, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::optional<std::pair<Integer, int>> ZPolynomial::as_monomial() const {
  if (coeffs_.size() != 1) return std::nullopt;
  return std::make_pair(coeffs_.begin()->second, coeffs_.begin()->first);
}

std::string ZPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [power, k] = *it;
    const Integer mag = k < 0 ? Integer(-k) : k;
    if (first) {
      if (k < 0) os << '-';
    } else {
      os << (k < 0 ? " - " : " + ");
    }
    first = false;
    if (power == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'z';
    if (power > 1) os << '^' << power;
  }
  return os.str();
}

ZPolynomial SigmaExpansion::coefficient(const StrictPartition& nu) const {
  auto it = terms.find(nu);
  return it == terms.end() ? ZPolynomial{} : it->second;
}

SigmaExpansion expand_in_sigma_basis(const RingElement& x, int degree, SolveMethod method) {
  if (degree < 0) throw InvalidArgument("degree must be nonnegative");
  require_homogeneous(x, degree);
  if (method == SolveMethod::kAuto) {
    method = degree <= kLinearSystemMaxDegree ? SolveMethod::kLinearSystem
                                               : SolveMethod::kNormalForm;
  }
  if (method == SolveMethod::kLinearSystem) return degree_solver(degree).solve(x);
  return expand_by_normal_form(x, degree);
}

const SigmaExpansion& product_expansion(const StrictPartition& lambda, const StrictPartition& mu,
                                        SolveMethod method) {
  using Key = std::tuple<StrictPartition, StrictPartition, SolveMethod>;
  thread_local std::map<Key, SigmaExpansion> cache;
  const Key key{lambda, mu, method};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const int d = lambda.size() + mu.size();
  SolveMethod resolved = method;
  if (resolved == SolveMethod::kAuto) {
    resolved = d <= kLinearSystemMaxDegree ? SolveMethod::kLinearSystem : SolveMethod::kNormalForm;
  }
  // The normal-form route never needs the free-ring product.
  const RingElement x = resolved == SolveMethod::kNormalForm
                            ? normal_form(sigma_normal_form(lambda) * sigma_normal_form(mu))
                            : sigma(lambda) * sigma(mu);
  SigmaExpansion e = expand_in_sigma_basis(x, d, resolved);
  e.lambda = lambda;
  e.mu = mu;
  return cache.emplace(key, std::move(e)).first->second;
}

ZPolynomial frak_D(const StrictPartition& lambda, const StrictPartition& mu,
                   const StrictPartition& nu, SolveMethod method) {
  return product_expansion(lambda, mu, method).coefficient(nu);
}

Integer frak_d(const StrictPartition& lambda, const StrictPartition& mu,
               const StrictPartition& nu, SolveMethod method) {
  const ZPolynomial big = frak_D(lambda, mu, nu, method);
  if (big.is_zero()) return 0;
  const int delta = lambda.size() + mu.size() - nu.size();
  const int ell = lambda.length() + mu.length() - nu.length();
  const auto mono = big.as_monomial();
  if (!mono || mono->second != delta) {
    throw FormError("D = " + big.to_string() + " is not of the form e*z^" +
                    std::to_string(delta));
  }
  Integer e = mono->first;
  if (ell >= delta) {
    const Integer power = Integer(1) << (ell - delta);
    if (e % power != 0) {
      throw DivisibilityError("2^" + std::to_string(ell - delta) + " does not divide " +
                              e.str());
    }
    e /= power;
  } else {
    e <<= (delta - ell);
  }
  if (e < 0) throw FormError("normalized coefficient " + e.str() + " is negative");
  return e;
}

}  // namespace selt
