#include "hslin/abelian_solver.hpp"

#include <random>

#include <boost/integer/common_factor.hpp>

#include "hslin/error.hpp"

namespace hslin {

namespace {

// Solves a * t = c (mod m) for one t, given g = gcd(a, m) divides c.
std::int64_t particular_solution(std::int64_t a, std::int64_t c, std::int64_t m) {
  const std::int64_t g = boost::integer::gcd(a, m);
  const std::int64_t mg = m / g;
  if (mg == 1) return 0;
  // extended Euclid for (a/g)^-1 mod m/g
  std::int64_t old_r = mod_floor<std::int64_t>(a / g, mg), r = mg, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  const std::int64_t inv = mod_floor<std::int64_t>(old_s, mg);
  const __int128 t = static_cast<__int128>(c / g) * inv;
  return static_cast<std::int64_t>(t % mg);
}

}  // namespace

void validate(const AbelianSystem& sys) {
  const auto m = static_cast<Eigen::Index>(sys.invariants.size());
  if (sys.coefficients.cols() != static_cast<Eigen::Index>(sys.num_vars))
    throw Error(Errc::MalformedSystem, "coefficient matrix must have num_vars columns");
  if (sys.rhs.rows() != sys.coefficients.rows() || sys.rhs.cols() != m)
    throw Error(Errc::MalformedSystem, "rhs must be equations x factors");
  for (auto d : sys.invariants)
    if (d <= 0) throw Error(Errc::MalformedSystem, "cyclic orders must be positive");
  if ((sys.coefficients.array() < 0).any())
    throw Error(Errc::MalformedSystem, "coefficients must be non-negative multiplicities");
  for (Eigen::Index f = 0; f < m; ++f)
    if ((sys.rhs.col(f).array() < 0).any() || (sys.rhs.col(f).array() >= sys.invariants[f]).any())
      throw Error(Errc::MalformedSystem, "rhs components must be reduced mod d_i");
}

std::optional<AbelianSolution> solve(const AbelianSystem& sys, std::uint64_t seed) {
  validate(sys);
  const Eigen::Index eqs = sys.coefficients.rows(), n = static_cast<Eigen::Index>(sys.num_vars);
  const auto factors = static_cast<Eigen::Index>(sys.invariants.size());

  BigMatrix d = sys.coefficients.cast<BigInt>();
  BigMatrix ub = sys.rhs.cast<BigInt>();
  BigMatrix v = BigMatrix::Identity(n, n);
  const Eigen::Index rank = smith_reduce(d, &ub, &v);

  std::mt19937_64 rng(seed);
  AbelianSolution out;
  out.assignment = IntMatrix::Zero(n, factors);
  out.free_dims.assign(static_cast<std::size_t>(factors), 0);

  for (Eigen::Index f = 0; f < factors; ++f) {
    const std::int64_t mod = sys.invariants[f];
    const BigInt big_mod(mod);
    // Zero rows of D demand (Ub)_j = 0.
    for (Eigen::Index j = rank; j < eqs; ++j)
      if (mod_floor(ub(j, f), big_mod) != 0) return std::nullopt;

    std::uniform_int_distribution<std::int64_t> any(0, mod - 1);
    std::vector<std::int64_t> t(static_cast<std::size_t>(n), 0);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j >= rank) {
        t[j] = any(rng);
        if (mod > 1) ++out.free_dims[f];
        continue;
      }
      const auto dj = static_cast<std::int64_t>(mod_floor(d(j, j), big_mod));
      const auto cj = static_cast<std::int64_t>(mod_floor(ub(j, f), big_mod));
      const std::int64_t g = boost::integer::gcd(dj, mod);
      if (cj % g != 0) return std::nullopt;
      const std::int64_t base = particular_solution(dj, cj, mod);
      if (g > 1) {
        std::uniform_int_distribution<std::int64_t> shift(0, g - 1);
        t[j] = (base + shift(rng) * (mod / g)) % mod;
        ++out.free_dims[f];
      } else {
        t[j] = base;
      }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      BigInt acc = 0;
      for (Eigen::Index j = 0; j < n; ++j)
        if (t[j] != 0) acc += v(i, j) * t[j];
      out.assignment(i, f) = static_cast<std::int64_t>(mod_floor(acc, big_mod));
    }
  }
  return out;
}

bool verify(const AbelianSystem& sys, const IntMatrix& x) {
  if (x.rows() != static_cast<Eigen::Index>(sys.num_vars) ||
      x.cols() != static_cast<Eigen::Index>(sys.invariants.size()))
    throw Error(Errc::LengthMismatch, "assignment shape does not match system");
  for (Eigen::Index f = 0; f < x.cols(); ++f) {
    const std::int64_t mod = sys.invariants[f];
    for (Eigen::Index e = 0; e < sys.coefficients.rows(); ++e) {
      __int128 acc = 0;
      for (Eigen::Index i = 0; i < x.rows(); ++i)
        acc += static_cast<__int128>(sys.coefficients(e, i)) * x(i, f);
      if (static_cast<std::int64_t>(((acc % mod) + mod) % mod) != sys.rhs(e, f)) return false;
    }
  }
  return true;
}

}  // namespace hslin
