// Brute-force reference calculators used to cross-check the library.
// Everything here works on plain flat vectors with its own index
// arithmetic, independent of the library's marginalization path.
#pragma once

#include <cmath>
#include <random>
#include <vector>

namespace oracle {

// Odometer-style coordinates for a row-major tensor, last variable fastest.
inline std::vector<int> coords_of(long flat, const std::vector<int>& cards) {
  std::vector<int> c(cards.size());
  for (std::size_t j = cards.size(); j-- > 0;) {
    c[j] = static_cast<int>(flat % cards[j]);
    flat /= cards[j];
  }
  return c;
}

inline long size_of(const std::vector<int>& cards) {
  long n = 1;
  for (int c : cards) n *= c;
  return n;
}

inline std::vector<double> marginal(const std::vector<double>& p,
                                    const std::vector<int>& cards,
                                    const std::vector<int>& keep) {
  std::vector<int> sub_cards;
  for (int j : keep) sub_cards.push_back(cards[static_cast<std::size_t>(j)]);
  std::vector<double> m(static_cast<std::size_t>(size_of(sub_cards)), 0.0);
  for (long t = 0; t < size_of(cards); ++t) {
    const std::vector<int> c = coords_of(t, cards);
    long dest = 0;
    for (std::size_t i = 0; i < keep.size(); ++i)
      dest = dest * sub_cards[i] + c[static_cast<std::size_t>(keep[i])];
    m[static_cast<std::size_t>(dest)] += p[static_cast<std::size_t>(t)];
  }
  return m;
}

inline double entropy_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

inline double subset_entropy_bits(const std::vector<double>& p,
                                  const std::vector<int>& cards,
                                  const std::vector<int>& subset) {
  return entropy_bits(marginal(p, cards, subset));
}

inline std::vector<int> joined(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline double mi_bits(const std::vector<double>& p,
                      const std::vector<int>& cards, const std::vector<int>& a,
                      const std::vector<int>& b) {
  return subset_entropy_bits(p, cards, a) + subset_entropy_bits(p, cards, b) -
         subset_entropy_bits(p, cards, joined(a, b));
}

inline double cmi_bits(const std::vector<double>& p,
                       const std::vector<int>& cards, const std::vector<int>& a,
                       const std::vector<int>& b, const std::vector<int>& c) {
  return subset_entropy_bits(p, cards, joined(a, c)) +
         subset_entropy_bits(p, cards, joined(b, c)) -
         subset_entropy_bits(p, cards, c) -
         subset_entropy_bits(p, cards, joined(joined(a, b), c));
}

// Dirichlet(1) draw: a strictly positive random pmf.
inline std::vector<double> random_pmf(std::mt19937_64& rng, long n) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> p(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (double& v : p) {
    v = exp1(rng) + 1e-9;
    sum += v;
  }
  for (double& v : p) v /= sum;
  return p;
}

}  // namespace oracle
