#include "qbundle/builders.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "qbundle/errors.hpp"

namespace qb {

namespace {

void validate_group(const CayleyTable& g) {
  const std::size_t n = g.size();
  if (n == 0) throw InvalidStructure("group table is empty");
  for (const auto& row : g) {
    if (row.size() != n) throw InvalidStructure("group table is not square");
    for (auto x : row)
      if (x >= n) throw InvalidStructure("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (g[0][a] != a || g[a][0] != a) throw InvalidStructure("element 0 of the group table is not the identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g[g[a][b]][c] != g[a][g[b][c]]) {
          throw InvalidStructure("group table is not associative at (" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c) + ")");
        }
}

std::size_t inverse_of(const CayleyTable& g, std::size_t a) {
  for (std::size_t b = 0; b < g.size(); ++b)
    if (g[a][b] == 0 && g[b][a] == 0) return b;
  throw InvalidStructure("group element " + std::to_string(a) + " has no inverse");
}

void require_ok(const AxiomReport& r, const std::string& what) {
  if (r.ok()) return;
  std::string msg = what + " fails axiom '" + r.violations.front().axiom + "' at basis (";
  for (std::size_t i = 0; i < r.violations.front().witness.size(); ++i)
    msg += (i ? "," : "") + std::to_string(r.violations.front().witness[i]);
  throw InvalidStructure(msg + ")");
}

HopfAlgebraData checked(HopfAlgebraData h, const std::string& what) {
  require_ok(check_hopf(h), what);
  return h;
}

ComoduleAlgebraData checked(ComoduleAlgebraData p, const std::string& what) {
  require_ok(check_algebra(p.algebra()), what);
  require_ok(check_comodule_algebra(p), what);
  return p;
}

// Evaluates the polynomial with coefficients `q` (constant term first) at
// the element `a` of `alg`.
Vector evaluate(const AlgebraData& alg, const Vector& q, const Vector& a) {
  Vector acc = zero_vector(alg.dim());
  for (std::size_t k = q.size(); k-- > 0;) acc = alg.product(acc, a) + scaled(alg.unit(), q[k]);
  return acc;
}

}  // namespace

CayleyTable cyclic_group(std::size_t n) {
  CayleyTable g(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g[a][b] = (a + b) % n;
  return g;
}

CayleyTable symmetric_group_s3() {
  using Perm = std::array<std::size_t, 3>;
  const std::array<Perm, 6> perms{{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  CayleyTable g(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      Perm ab{};
      for (std::size_t x = 0; x < 3; ++x) ab[x] = perms[a][perms[b][x]];
      for (std::size_t c = 0; c < 6; ++c)
        if (perms[c] == ab) g[a][b] = c;
    }
  return g;
}

CayleyTable direct_product(const CayleyTable& g, const CayleyTable& h) {
  const std::size_t m = h.size();
  const std::size_t n = g.size() * m;
  CayleyTable out(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out[a][b] = g[a / m][b / m] * m + h[a % m][b % m];
  return out;
}

AlgebraData scalars() { return AlgebraData(LinearMap(Matrix::identity(1)), Vector{Scalar(1)}, {"1"}); }

AlgebraData polynomial_quotient(const Vector& monic) {
  if (monic.size() < 2 || monic.back() != 1) throw InvalidStructure("modulus must be monic of degree >= 1");
  const std::size_t n = monic.size() - 1;
  std::vector<Vector> powers;
  for (std::size_t k = 0; k < n; ++k) powers.push_back(unit_vector(n, k));
  for (std::size_t k = n; k + 1 < 2 * n; ++k) {
    const Vector& prev = powers.back();
    Vector next(n);
    for (std::size_t j = 0; j + 1 < n; ++j) next[j + 1] = prev[j];
    const Scalar overflow = prev[n - 1];
    for (std::size_t j = 0; j < n; ++j) next[j] -= overflow * monic[j];
    powers.push_back(std::move(next));
  }
  Matrix mult(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) mult(r, i * n + j) = powers[i + j][r];
  std::vector<std::string> names{"1"};
  for (std::size_t k = 1; k < n; ++k) names.push_back(k == 1 ? "t" : "t^" + std::to_string(k));
  return AlgebraData(LinearMap(std::move(mult)), unit_vector(n, 0), std::move(names));
}

AlgebraData truncated_polynomial(std::size_t n) {
  Vector monic(n + 1);
  monic[n] = 1;
  AlgebraData base = polynomial_quotient(monic);
  std::vector<std::string> names{"1"};
  for (std::size_t k = 1; k < n; ++k) names.push_back(k == 1 ? "x" : "x^" + std::to_string(k));
  return AlgebraData(base.mult(), base.unit(), std::move(names));
}

HopfAlgebraData group_algebra(const CayleyTable& g) {
  validate_group(g);
  const std::size_t n = g.size();
  Matrix mult(n, n * n), comult(n * n, n), counit(1, n), antipode(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult(g[a][b], a * n + b) = 1;
    comult(a * n + a, a) = 1;
    counit(0, a) = 1;
    antipode(inverse_of(g, a), a) = 1;
  }
  std::vector<std::string> names{"1"};
  for (std::size_t a = 1; a < n; ++a) names.push_back(n == 2 ? "g" : "g" + std::to_string(a));
  AlgebraData alg(LinearMap(std::move(mult)), unit_vector(n, 0), std::move(names));
  return checked(HopfAlgebraData(std::move(alg), LinearMap(std::move(comult)), LinearMap(std::move(counit)),
                                 LinearMap(std::move(antipode))),
                 "group_algebra");
}

HopfAlgebraData dual_group_hopf(const CayleyTable& g) {
  validate_group(g);
  const std::size_t n = g.size();
  Matrix mult(n, n * n), comult(n * n, n), counit(1, n), antipode(n, n);
  Vector unit(n);
  for (std::size_t a = 0; a < n; ++a) {
    mult(a, a * n + a) = 1;
    unit[a] = 1;
    for (std::size_t b = 0; b < n; ++b) comult(a * n + b, g[a][b]) = 1;
    antipode(inverse_of(g, a), a) = 1;
  }
  counit(0, 0) = 1;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) names.push_back("d" + std::to_string(a));
  AlgebraData alg(LinearMap(std::move(mult)), std::move(unit), std::move(names));
  return checked(HopfAlgebraData(std::move(alg), LinearMap(std::move(comult)), LinearMap(std::move(counit)),
                                 LinearMap(std::move(antipode))),
                 "dual_group_hopf");
}

HopfAlgebraData sweedler_h4() {
  // Basis index of g^a x^b is a + 2b: 1, g, x, gx.
  constexpr std::size_t one = 0, g = 1, x = 2, gx = 3;
  Matrix mult(4, 16);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) {
          if (b + d > 1) continue;  // x² = 0
          // x^b g^c = (-1)^{bc} g^c x^b
          const Scalar sign = (b * c) % 2 ? -1 : 1;
          mult(((a + c) % 2) + 2 * (b + d), (a + 2 * b) * 4 + (c + 2 * d)) = sign;
        }

  Matrix comult(16, 4);
  comult(one * 4 + one, one) = 1;
  comult(g * 4 + g, g) = 1;
  comult(x * 4 + one, x) = 1;  // Δx = x⊗1 + g⊗x
  comult(g * 4 + x, x) = 1;
  comult(gx * 4 + g, gx) = 1;  // Δ(gx) = gx⊗g + 1⊗gx
  comult(one * 4 + gx, gx) = 1;

  Matrix counit(1, 4);
  counit(0, one) = 1;
  counit(0, g) = 1;

  Matrix antipode(4, 4);
  antipode(one, one) = 1;
  antipode(g, g) = 1;
  antipode(gx, x) = -1;  // S(x) = -gx
  antipode(x, gx) = 1;   // S(gx) = x

  AlgebraData alg(LinearMap(std::move(mult)), unit_vector(4, one), {"1", "g", "x", "gx"});
  return checked(HopfAlgebraData(std::move(alg), LinearMap(std::move(comult)), LinearMap(std::move(counit)),
                                 LinearMap(std::move(antipode))),
                 "sweedler_h4");
}

ComoduleAlgebraData graded_comodule(const AlgebraData& algebra, const std::vector<std::size_t>& degrees,
                                    std::size_t n) {
  if (degrees.size() != algebra.dim()) throw DimensionError("graded_comodule: one degree per basis element");
  HopfAlgebraData h = group_algebra(cyclic_group(n));
  Matrix coaction(algebra.dim() * n, algebra.dim());
  for (std::size_t i = 0; i < algebra.dim(); ++i) coaction(i * n + degrees[i] % n, i) = 1;
  return checked(ComoduleAlgebraData(std::move(h), algebra, LinearMap(std::move(coaction))), "graded_comodule");
}

ComoduleAlgebraData trivial_coaction(const AlgebraData& algebra, const HopfAlgebraData& hopf) {
  LinearMap coaction = tensor_map(LinearMap::identity(algebra.dim()), hopf.algebra().unit_map());
  return checked(ComoduleAlgebraData(hopf, algebra, std::move(coaction)), "trivial_coaction");
}

ComoduleAlgebraData regular_comodule(const HopfAlgebraData& hopf) {
  return checked(ComoduleAlgebraData(hopf, hopf.algebra(), hopf.comult()), "regular_comodule");
}

ComoduleAlgebraData field_extension_comodule(const Vector& monic, const std::vector<Vector>& automorphisms) {
  AlgebraData p = polynomial_quotient(monic);
  const std::size_t n = p.dim();

  // Each automorphism as the matrix whose column k is σ(t)^k.
  auto as_matrix = [&](const Vector& image_of_t) {
    if (image_of_t.size() != n) throw DimensionError("automorphism image has the wrong length");
    if (!is_zero(evaluate(p, monic, image_of_t)))
      throw InvalidStructure("automorphism does not send t to a root of the modulus");
    Matrix m(n, n);
    Vector power = p.unit();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t r = 0; r < n; ++r) m(r, k) = power[r];
      power = p.product(power, image_of_t);
    }
    if (rank(m) != n) throw InvalidStructure("automorphism is not bijective");
    return m;
  };

  std::vector<Matrix> group{Matrix::identity(n)};
  for (const auto& a : automorphisms) {
    Matrix m = as_matrix(a);
    if (std::find(group.begin(), group.end(), m) == group.end()) group.push_back(std::move(m));
  }
  // Close under composition.
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t size = group.size();
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        Matrix c = group[i] * group[j];
        if (std::find(group.begin(), group.end(), c) == group.end()) {
          group.push_back(std::move(c));
          grew = true;
        }
      }
    if (group.size() > n) throw InvalidStructure("automorphisms generate more than [P:Q] elements");
  }

  const std::size_t order = group.size();
  CayleyTable table(order, std::vector<std::size_t>(order));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) {
      const Matrix c = group[i] * group[j];  // σ_i ∘ σ_j
      table[i][j] = static_cast<std::size_t>(std::find(group.begin(), group.end(), c) - group.begin());
    }

  HopfAlgebraData h = dual_group_hopf(table);
  Matrix coaction(n * order, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t s = 0; s < order; ++s)
      for (std::size_t r = 0; r < n; ++r) coaction(r * order + s, k) = group[s](r, k);
  return checked(ComoduleAlgebraData(std::move(h), std::move(p), LinearMap(std::move(coaction))),
                 "field_extension_comodule");
}

}  // namespace qb
