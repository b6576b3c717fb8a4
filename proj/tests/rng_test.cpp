#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tweedie/oracle.hpp"
#include "tweedie/rng.hpp"

using namespace tweedie;

namespace {

struct Moments {
  double mean;
  double var;
};

template <typename F>
Moments sample_moments(std::size_t n, F&& draw) {
  double s = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = draw();
    s += x;
    s2 += x * x;
  }
  const double mean = s / n;
  return {mean, s2 / n - mean * mean};
}

// One-sample Kolmogorov-Smirnov statistic against a CDF.
template <typename Cdf>
double ks_statistic(std::vector<double>& xs, Cdf&& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double ks = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    ks = std::max(ks, std::max(f - i / n, (i + 1) / n - f));
  }
  return ks;
}

}  // namespace

TEST_CASE("streams are deterministic and split streams are decorrelated") {
  RngStream a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  RngStream parent(7);
  RngStream c1 = parent.split(1), c2 = parent.split(2);
  CHECK(c1.next_u64() != c2.next_u64());
  // Splitting is independent of the parent's consumption position.
  RngStream parent2(7);
  parent2.next_u64();
  CHECK(parent2.split(1).next_u64() == RngStream(7).split(1).next_u64());
}

TEST_CASE("uniform stays inside the open interval and is flat") {
  RngStream rng(1);
  double mn = 1.0, mx = 0.0;
  const auto m = sample_moments(200000, [&] {
    const double u = rng.uniform();
    mn = std::min(mn, u);
    mx = std::max(mx, u);
    return u;
  });
  CHECK(mn > 0.0);
  CHECK(mx < 1.0);
  CHECK(m.mean == doctest::Approx(0.5).epsilon(0.01));
  CHECK(m.var == doctest::Approx(1.0 / 12.0).epsilon(0.02));
}

TEST_CASE("normal moments") {
  RngStream rng(2);
  const auto m = sample_moments(400000, [&] { return rng.normal(); });
  CHECK(std::fabs(m.mean) < 3.0 / std::sqrt(400000.0));
  CHECK(m.var == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("gamma convention: mean is shape over rate") {
  RngStream rng(3);
  const std::size_t n = 1000000;
  const auto m = sample_moments(n, [&] { return sample_gamma(12.0, 10.0, rng); });
  const double se = std::sqrt(12.0 / 100.0 / n);
  CHECK(std::fabs(m.mean - 1.2) < 3.0 * se);
  CHECK(m.var == doctest::Approx(0.12).epsilon(0.02));
  CHECK_THROWS_AS(sample_gamma(0.0, 1.0, rng), std::domain_error);
  CHECK_THROWS_AS(sample_gamma(1.0, -1.0, rng), std::domain_error);
}

TEST_CASE("gamma with small shape") {
  RngStream rng(4);
  const std::size_t n = 400000;
  const auto m = sample_moments(n, [&] { return sample_gamma(0.4, 2.0, rng); });
  CHECK(m.mean == doctest::Approx(0.2).epsilon(0.02));
}

TEST_CASE("gamma(1, rate) equals exponential: KS against the closed-form CDF") {
  RngStream rng(5);
  std::vector<double> xs(1000000);
  for (auto& x : xs) x = sample_gamma(1.0, 2.0, rng);
  const double ks = ks_statistic(xs, [](double x) { return 1.0 - std::exp(-2.0 * x); });
  CHECK(ks < 0.002);
}

TEST_CASE("lognormal: median exp(mu), mean exp(mu + sigma2/2)") {
  RngStream rng(6);
  const std::size_t n = 1000000;
  std::vector<double> xs(n);
  for (auto& x : xs) x = sample_lognormal(0.0, 1.0, rng);
  std::nth_element(xs.begin(), xs.begin() + n / 2, xs.end());
  const double median = xs[n / 2];
  CHECK(median == doctest::Approx(1.0).epsilon(0.01));
  double s = 0.0;
  for (double x : xs) s += x;
  CHECK(s / n == doctest::Approx(std::exp(0.5)).epsilon(0.02));
  CHECK_THROWS_AS(sample_lognormal(0.0, 0.0, rng), std::domain_error);
}

TEST_CASE("poisson moments across the sampler switchover") {
  RngStream rng(7);
  for (double mean : {0.5, 3.0, 9.5, 12.0, 80.0, 4000.0}) {
    const std::size_t n = 200000;
    const auto m = sample_moments(n, [&] { return double(sample_poisson(mean, rng)); });
    const double se = std::sqrt(mean / n);
    CHECK(std::fabs(m.mean - mean) < 4.0 * se);
    CHECK(m.var == doctest::Approx(mean).epsilon(0.03));
  }
}

TEST_CASE("noncentral chi-squared mean and variance") {
  RngStream rng(8);
  const std::size_t n = 1000000;
  {
    const auto m = sample_moments(n, [&] { return sample_noncentral_chi2(3.0, 0.0, rng); });
    CHECK(std::fabs(m.mean - 3.0) < 3.0 * std::sqrt(6.0 / n));
  }
  {
    const auto m = sample_moments(n, [&] { return sample_noncentral_chi2(2.0, 8.0, rng); });
    const double var = 2.0 * (2.0 + 16.0);
    CHECK(std::fabs(m.mean - 10.0) < 3.0 * std::sqrt(var / n));
  }
  {
    const auto m = sample_moments(n, [&] { return sample_noncentral_chi2(3.0, 5.0, rng); });
    const double var = 2.0 * (3.0 + 10.0);  // 26
    CHECK(m.var == doctest::Approx(var).epsilon(0.02));
  }
  CHECK_THROWS_AS(sample_noncentral_chi2(0.0, 1.0, rng), std::domain_error);
  CHECK_THROWS_AS(sample_noncentral_chi2(2.0, -1.0, rng), std::domain_error);
}

TEST_CASE("noncentral chi-squared sampler matches the mixture-series CDF") {
  for (auto [dof, nc, seed] : {std::tuple{3.0, 0.5, 11u}, std::tuple{2.0, 10.0, 12u}}) {
    RngStream rng(seed);
    std::vector<double> xs(1000000);
    for (auto& x : xs) x = sample_noncentral_chi2(dof, nc, rng);
    const double ks =
        ks_statistic(xs, [dof, nc](double x) { return oracle::noncentral_chi2_cdf(dof, nc, x); });
    CHECK(ks < 0.002);
  }
}

TEST_CASE("non-integer dof is exact (moment check)") {
  RngStream rng(13);
  const std::size_t n = 500000;
  const double dof = 2.7, nc = 1.3;
  const auto m = sample_moments(n, [&] { return sample_noncentral_chi2(dof, nc, rng); });
  CHECK(std::fabs(m.mean - (dof + nc)) < 4.0 * std::sqrt(2.0 * (dof + 2.0 * nc) / n));
}
