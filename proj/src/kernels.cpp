#include "stickel/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>
#include <numeric>

#include "stickel/bounds.hpp"
#include "stickel/characters.hpp"
#include "stickel/stickelberger.hpp"

namespace stickel::kernels {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t order_of(const CayleyTable& t, Elem x) {
  std::int64_t k = 1;
  for (Elem y = x; y != t.identity; y = t.product(y, x)) ++k;
  return k;
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

void set_num_threads(int n) { omp_set_num_threads(std::max(1, n)); }

std::vector<std::int64_t> element_orders_serial(const CayleyTable& t) {
  std::vector<std::int64_t> out(t.n);
  for (Elem x = 0; x < t.n; ++x) out[x] = order_of(t, x);
  return out;
}

std::vector<std::int64_t> element_orders(const CayleyTable& t) {
  std::vector<std::int64_t> out(t.n);
  const auto n = static_cast<std::int64_t>(t.n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t x = 0; x < n; ++x) out[x] = order_of(t, static_cast<Elem>(x));
  return out;
}

std::vector<Elem> class_minima_serial(const CayleyTable& t) {
  std::vector<Elem> out(t.n, t.n);
  for (Elem x = 0; x < t.n; ++x) {
    if (out[x] != t.n) continue;
    std::deque<Elem> queue{x};
    out[x] = x;
    while (!queue.empty()) {
      const Elem y = queue.front();
      queue.pop_front();
      for (Elem g = 0; g < t.n; ++g) {
        const Elem z = t.product(t.product(g, y), t.inv[g]);
        if (out[z] == t.n) {
          out[z] = x;
          queue.push_back(z);
        }
      }
    }
  }
  return out;
}

std::vector<Elem> class_minima(const CayleyTable& t) {
  std::vector<Elem> out(t.n);
  const auto n = static_cast<std::int64_t>(t.n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t xi = 0; xi < n; ++xi) {
    const auto x = static_cast<Elem>(xi);
    Elem best = x;
    for (Elem g = 0; g < t.n; ++g) best = std::min(best, t.product(t.product(g, x), t.inv[g]));
    out[x] = best;
  }
  return out;
}

std::optional<std::vector<std::int64_t>> dft_integer_forms(
    const std::vector<const std::vector<std::int64_t>*>& seq, std::int64_t n) {
  const auto m = static_cast<std::int64_t>(seq.size());
  const std::int64_t step = n / m;
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> nz(seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k)
    for (std::int64_t i = 0; i < n; ++i)
      if ((*seq[k])[i] != 0) nz[k].emplace_back(i, (*seq[k])[i]);
  std::vector<std::int64_t> mult(static_cast<std::size_t>(m), 0);
  std::vector<std::int64_t> acc(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < m; ++j) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::int64_t k = 0; k < m; ++k) {
      const std::int64_t shift = mod_floor(-j * k * step, n);
      for (const auto& [i, v] : nz[k]) acc[(i + shift) % n] += v;
    }
    const auto red = reduce_integer_exponents(n, acc);
    for (std::size_t i = 1; i < red.size(); ++i)
      if (red[i] != 0) return std::nullopt;
    if (red[0] % m != 0) return std::nullopt;
    mult[j] = red[0] / m;
  }
  return mult;
}

MultiplicityCube irreducible_multiplicities_serial(
    const ConjClassSet& classes, const std::vector<std::vector<Cyclotomic>>& irreducibles) {
  MultiplicityCube out(irreducibles.size());
  for (std::size_t i = 0; i < irreducibles.size(); ++i) {
    out[i].resize(classes.count());
    for (ClassId c = 0; c < classes.count(); ++c) {
      std::vector<Cyclotomic> seq;
      for (std::int64_t k = 0; k < classes.rep_orders[c]; ++k)
        seq.push_back(irreducibles[i][classes.power_map[c][k]]);
      out[i][c] = multiplicities_from_values(seq);
    }
  }
  return out;
}

MultiplicityCube irreducible_multiplicities(
    const ConjClassSet& classes, const std::vector<std::vector<Cyclotomic>>& irreducibles) {
  std::int64_t n = 1;
  for (auto m : classes.rep_orders) n = std::lcm(n, m);
  for (const auto& row : irreducibles)
    for (const auto& v : row) n = std::lcm(n, v.conductor());

  // Integer exponent forms of every value; a row with a non-integral value
  // goes through the exact route.
  std::vector<std::vector<std::vector<std::int64_t>>> forms(irreducibles.size());
  std::vector<char> integral(irreducibles.size(), 1);
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    for (const auto& v : irreducibles[i]) {
      auto f = integer_exponent_form(v, n);
      if (!f) {
        integral[i] = 0;
        break;
      }
      forms[i].push_back(std::move(*f));
    }
  reduce_integer_exponents(n, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));

  const std::size_t r = irreducibles.size();
  const std::size_t k = classes.count();
  MultiplicityCube out(r, std::vector<std::vector<std::int64_t>>(k));
  const auto total = static_cast<std::int64_t>(r * k);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const std::size_t i = static_cast<std::size_t>(idx) / k;
    const auto c = static_cast<ClassId>(static_cast<std::size_t>(idx) % k);
    const std::int64_t m = classes.rep_orders[c];
    std::optional<std::vector<std::int64_t>> mult;
    if (integral[i]) {
      std::vector<const std::vector<std::int64_t>*> seq;
      for (std::int64_t j = 0; j < m; ++j) seq.push_back(&forms[i][classes.power_map[c][j]]);
      mult = dft_integer_forms(seq, n);
    }
    if (!mult) {
      std::vector<Cyclotomic> seq;
      for (std::int64_t j = 0; j < m; ++j) seq.push_back(irreducibles[i][classes.power_map[c][j]]);
      mult = multiplicities_from_values(seq);
    }
    out[i][c] = std::move(*mult);
  }
  return out;
}

std::vector<std::int64_t> gcd_claim_failures_serial(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t e = lo; e <= hi; ++e)
    if (!gcd_claim(e)) out.push_back(e);
  return out;
}

std::vector<std::int64_t> gcd_claim_failures(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
#pragma omp parallel
  {
    std::vector<std::int64_t> local;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t e = lo; e <= hi; ++e)
      if (!gcd_claim(e)) local.push_back(e);
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void tally_one(const CharacterTable& table, const VirtualCharacter& phi, IntegralityTally& t) {
  const bool a = table.group() ? theta(table, phi).is_integral()
                               : theta_bar(table, phi).is_integral();
  const bool b = in_AG(table, phi);
  const bool c = det_is_trivial(det_character(table, phi));
  ++t.samples;
  t.theta_integral += a;
  t.in_ag += b;
  t.det_trivial += c;
  t.disagreements += !(a == b && b == c);
}

}  // namespace

IntegralityTally integrality_tally_serial(const CharacterTable& table,
                              const std::vector<VirtualCharacter>& batch) {
  IntegralityTally t;
  for (const auto& phi : batch) tally_one(table, phi, t);
  return t;
}

IntegralityTally integrality_tally(const CharacterTable& table, const std::vector<VirtualCharacter>& batch) {
  IntegralityTally total;
  const auto n = static_cast<std::int64_t>(batch.size());
#pragma omp parallel
  {
    IntegralityTally local;
#pragma omp for schedule(dynamic, 4) nowait
    for (std::int64_t i = 0; i < n; ++i) tally_one(table, batch[i], local);
#pragma omp critical
    {
      total.samples += local.samples;
      total.theta_integral += local.theta_integral;
      total.in_ag += local.in_ag;
      total.det_trivial += local.det_trivial;
      total.disagreements += local.disagreements;
    }
  }
  return total;
}

}  // namespace stickel::kernels
