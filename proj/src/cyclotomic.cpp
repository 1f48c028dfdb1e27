#include "stickel/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "stickel/error.hpp"

namespace stickel {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

int moebius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

/// Divides a by the monic polynomial b; the division must be exact.
IntPoly poly_divexact(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

// Powers x^k mod Phi_n for 0 <= k < n, shared per conductor.
struct Basis {
  std::int64_t n = 1;
  std::int64_t phi = 1;
  std::vector<std::vector<Integer>> rows;
  std::vector<std::vector<std::int64_t>> rows64;  // empty if some entry overflows
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> sparse64;  // nonzeros of rows64
};

Basis build_basis(std::int64_t n) {
  Basis b;
  b.n = n;
  const IntPoly phi_poly = cyclo_poly(n);
  b.phi = static_cast<std::int64_t>(phi_poly.size()) - 1;
  b.rows.reserve(static_cast<std::size_t>(n));
  std::vector<Integer> cur(static_cast<std::size_t>(b.phi), 0);
  cur[0] = 1;
  b.rows.push_back(cur);
  for (std::int64_t k = 1; k < n; ++k) {
    const Integer top = cur.back();
    for (std::int64_t i = b.phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::int64_t i = 0; i < b.phi; ++i) cur[i] -= top * phi_poly[i];
    b.rows.push_back(cur);
  }
  b.rows64.reserve(b.rows.size());
  for (const auto& row : b.rows) {
    std::vector<std::int64_t> r64;
    r64.reserve(row.size());
    for (const auto& v : row) {
      if (!v.fits_slong_p() || abs(v) > (Integer(1) << 20)) {
        b.rows64.clear();
        return b;
      }
      r64.push_back(v.get_si());
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> nz;
    for (std::size_t i = 0; i < r64.size(); ++i)
      if (r64[i] != 0) nz.emplace_back(static_cast<std::int64_t>(i), r64[i]);
    b.rows64.push_back(std::move(r64));
    b.sparse64.push_back(std::move(nz));
  }
  return b;
}

const Basis& basis(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::unique_ptr<Basis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Basis>(build_basis(n));
  return *slot;
}

/// Reduces an exponent-indexed vector (length n) onto the canonical basis.
std::vector<Rational> reduce(const Basis& b, const std::vector<Rational>& buf) {
  std::vector<Rational> out(static_cast<std::size_t>(b.phi), 0);
  for (std::int64_t k = 0; k < b.n; ++k) {
    const Rational& a = buf[k];
    if (sgn(a) == 0) continue;
    if (k < b.phi) {
      out[k] += a;
      continue;
    }
    const auto& row = b.rows[k];
    for (std::int64_t i = 0; i < b.phi; ++i)
      if (row[i] != 0) out[i] += a * row[i];
  }
  return out;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return make_rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InvalidArgument, "malformed rational '" + text + "'");
  }
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPoly cyclo_poly(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclo_poly: n must be >= 1");
  IntPoly num{1};
  std::vector<IntPoly> dens;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = moebius(n / d);
    if (mu == 0) continue;
    IntPoly f(static_cast<std::size_t>(d) + 1, 0);
    f[0] = -1;
    f[d] = 1;
    if (mu == 1)
      num = poly_mul(num, f);
    else
      dens.push_back(std::move(f));
  }
  for (const auto& f : dens) num = poly_divexact(std::move(num), f);
  return num;
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
Cyclotomic::Cyclotomic(const Rational& r) : conductor_(1), coeffs_{r} {}
Cyclotomic::Cyclotomic(long r) : conductor_(1), coeffs_{Rational(r)} {}
Cyclotomic::Cyclotomic(std::int64_t n, std::vector<Rational> coeffs)
    : conductor_(n), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t n, std::int64_t k) {
  return from_terms(n, {{Rational(1), k}});
}

Cyclotomic Cyclotomic::from_terms(
    std::int64_t n, const std::vector<std::pair<Rational, std::int64_t>>& terms) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "conductor must be >= 1");
  const Basis& b = basis(n);
  std::vector<Rational> buf(static_cast<std::size_t>(n), 0);
  for (const auto& [c, e] : terms) buf[mod_floor(e, n)] += c;
  return Cyclotomic(n, reduce(b, buf));
}

Cyclotomic Cyclotomic::lifted(std::int64_t N) const {
  if (N == conductor_) return *this;
  if (N % conductor_ != 0)
    throw Error(ErrorCode::InvalidArgument, "lift target is not a multiple of the conductor");
  const std::int64_t step = N / conductor_;
  std::vector<Rational> buf(static_cast<std::size_t>(N), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) buf[i * step] = coeffs_[i];
  return Cyclotomic(N, reduce(basis(N), buf));
}

Cyclotomic Cyclotomic::galois_apply(std::int64_t k) const {
  const std::int64_t n = conductor_;
  if (std::gcd(mod_floor(k, n), n) != 1 && n > 1)
    throw Error(ErrorCode::InvalidArgument,
                "galois_apply: exponent " + std::to_string(k) + " not coprime to conductor " +
                    std::to_string(n));
  if (n == 1) return *this;
  const std::int64_t kk = mod_floor(k, n);
  std::vector<Rational> buf(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    buf[mod_floor(static_cast<std::int64_t>(i) * kk, n)] += coeffs_[i];
  return Cyclotomic(n, reduce(basis(n), buf));
}

std::optional<Rational> Cyclotomic::to_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return std::nullopt;
  return coeffs_[0];
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const std::int64_t n = std::lcm(conductor_, rhs.conductor_);
  if (n != conductor_) *this = lifted(n);
  if (n == rhs.conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  } else {
    const Cyclotomic r = rhs.lifted(n);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (rhs.conductor_ == 1) return *this *= rhs.coeffs_[0];
  if (conductor_ == 1) {
    const Rational c = coeffs_[0];
    *this = rhs;
    return *this *= c;
  }
  const std::int64_t n = std::lcm(conductor_, rhs.conductor_);
  const Cyclotomic a = lifted(n);
  const Cyclotomic b = rhs.lifted(n);
  std::vector<Rational> buf(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      buf[(i + j) % static_cast<std::size_t>(n)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  *this = Cyclotomic(n, reduce(basis(n), buf));
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const std::int64_t n = std::lcm(a.conductor_, b.conductor_);
  return a.lifted(n).coeffs_ == b.lifted(n).coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << stickel::to_string(coeffs_[i]);
    if (i > 0) os << "*z" << conductor_ << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::optional<std::vector<std::int64_t>> integer_exponent_form(const Cyclotomic& x,
                                                               std::int64_t n) {
  const Cyclotomic y = x.lifted(n);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < y.coeffs().size(); ++i) {
    const Rational& c = y.coeffs()[i];
    if (c.get_den() != 1) return std::nullopt;
    const Integer& z = c.get_num();
    if (abs(z) > Integer(1) << 31) return std::nullopt;
    out[i] = z.get_si();
  }
  return out;
}

std::vector<std::int64_t> reduce_integer_exponents(std::int64_t n,
                                                   const std::vector<std::int64_t>& v) {
  const Basis& b = basis(n);
  std::vector<std::int64_t> out(static_cast<std::size_t>(b.phi), 0);
  if (b.rows64.empty()) {
    std::vector<Rational> buf(v.begin(), v.end());
    const auto exact = reduce(b, buf);
    for (std::size_t i = 0; i < exact.size(); ++i) out[i] = exact[i].get_num().get_si();
    return out;
  }
  for (std::int64_t k = 0; k < n; ++k) {
    const std::int64_t a = v[k];
    if (a == 0) continue;
    if (k < b.phi) {
      out[k] += a;
      continue;
    }
    for (const auto& [i, c] : b.sparse64[k]) out[i] += a * c;
  }
  return out;
}

nlohmann::json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw Error(ErrorCode::InvalidArgument, "expected an integer, got " + j.dump());
}

nlohmann::json to_json(const Cyclotomic& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    const Rational& c = x.coeffs()[i];
    if (sgn(c) == 0) continue;
    terms.push_back({integer_to_json(c.get_num()), integer_to_json(c.get_den()), i});
  }
  return {{"conductor", x.conductor()}, {"terms", terms}};
}

Cyclotomic cyclotomic_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Cyclotomic(Rational(j.get<long>()));
  if (j.is_string()) return Cyclotomic(parse_rational(j.get<std::string>()));
  if (!j.is_object() || !j.contains("conductor") || !j.contains("terms"))
    throw Error(ErrorCode::InvalidArgument, "cyclotomic must have 'conductor' and 'terms'");
  const auto n = j.at("conductor").get<std::int64_t>();
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic conductor must be >= 1");
  std::vector<std::pair<Rational, std::int64_t>> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 3)
      throw Error(ErrorCode::InvalidArgument, "cyclotomic term must be [num, den, exp]");
    terms.emplace_back(make_rational(integer_from_json(t[0]), integer_from_json(t[1])),
                       t[2].get<std::int64_t>());
  }
  return Cyclotomic::from_terms(n, terms);
}

}  // namespace stickel
