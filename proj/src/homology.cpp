#include "qbundle/homology.hpp"

#include "qbundle/errors.hpp"

namespace qb {

namespace {

bool injective(const LinearMap& f) { return rank(f) == f.domain_dim(); }
bool surjective(const LinearMap& f) { return rank(f) == f.codomain_dim(); }
bool bijective(const LinearMap& f) { return f.domain_dim() == f.codomain_dim() && injective(f); }

}  // namespace

MapChain::MapChain(std::vector<std::size_t> spaces, std::vector<LinearMap> maps)
    : spaces_(std::move(spaces)), maps_(std::move(maps)) {
  if (spaces_.empty() || maps_.size() + 1 != spaces_.size())
    throw DimensionError("map chain needs exactly one map between consecutive spaces");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (maps_[i].domain_dim() != spaces_[i] || maps_[i].codomain_dim() != spaces_[i + 1])
      throw DimensionError("map " + std::to_string(i) + " of the chain does not match its spaces");
  }
}

MapChain MapChain::from_maps(std::vector<LinearMap> maps) {
  if (maps.empty()) throw DimensionError("map chain needs at least one map");
  std::vector<std::size_t> spaces{maps.front().domain_dim()};
  for (const auto& m : maps) spaces.push_back(m.codomain_dim());
  return MapChain(std::move(spaces), std::move(maps));
}

bool is_exact_at(const MapChain& chain, std::size_t i) {
  const auto& maps = chain.maps();
  if (i >= chain.nodes()) throw DimensionError("is_exact_at: node out of range");
  if (maps.empty()) return chain.spaces()[0] == 0;
  if (i == 0) return injective(maps.front());
  if (i + 1 == chain.nodes()) return surjective(maps.back());
  return image(maps[i - 1]) == kernel(maps[i]);
}

bool is_exact(const MapChain& chain) {
  for (std::size_t i = 1; i + 1 < chain.nodes(); ++i)
    if (!is_exact_at(chain, i)) return false;
  return true;
}

bool is_exact_padded(const MapChain& chain) {
  for (std::size_t i = 0; i < chain.nodes(); ++i)
    if (!is_exact_at(chain, i)) return false;
  return true;
}

// ------------------------------------------------------------------ snake

SnakeDiagram::SnakeDiagram(LinearMap top_in, LinearMap top_out, LinearMap bottom_in, LinearMap bottom_out,
                           LinearMap f, LinearMap g, LinearMap h)
    : top_in_(std::move(top_in)), top_out_(std::move(top_out)), bottom_in_(std::move(bottom_in)),
      bottom_out_(std::move(bottom_out)), f_(std::move(f)), g_(std::move(g)), h_(std::move(h)) {
  auto fits = [](const LinearMap& m, std::size_t dom, std::size_t cod) {
    return m.domain_dim() == dom && m.codomain_dim() == cod;
  };
  if (top_in_.codomain_dim() != top_out_.domain_dim() || bottom_in_.codomain_dim() != bottom_out_.domain_dim() ||
      !fits(f_, top_in_.domain_dim(), bottom_in_.domain_dim()) ||
      !fits(g_, top_out_.domain_dim(), bottom_out_.domain_dim()) ||
      !fits(h_, top_out_.codomain_dim(), bottom_out_.codomain_dim()))
    throw DiagramInvalid("snake diagram: shapes do not fit together");
  if (!is_exact_padded(MapChain::from_maps({top_in_, top_out_})))
    throw DiagramInvalid("snake diagram: top row is not short exact");
  if (!is_exact_padded(MapChain::from_maps({bottom_in_, bottom_out_})))
    throw DiagramInvalid("snake diagram: bottom row is not short exact");
  if (!(compose(g_, top_in_) == compose(bottom_in_, f_)))
    throw DiagramInvalid("snake diagram: left square does not commute");
  if (!(compose(h_, top_out_) == compose(bottom_out_, g_)))
    throw DiagramInvalid("snake diagram: right square does not commute");
}

LinearMap connecting_map(const SnakeDiagram& d, const LiftRule& lift) {
  const Subspace ker_h = kernel(d.h());
  const QuotientSpace coker_f = cokernel(d.f());
  Matrix delta(coker_f.quotient_dim(), ker_h.dim());
  for (std::size_t k = 0; k < ker_h.dim(); ++k) {
    const Vector c = ker_h.basis_vector(k);
    Vector b;
    if (lift) {
      b = lift(c);
      if (!(d.top_out()(b) == c)) throw InternalError("connecting_map: lift rule returned a non-preimage");
    } else {
      auto x = solve(d.top_out().matrix(), c);
      if (!x) throw InternalError("connecting_map: top row is not surjective");
      b = std::move(*x);
    }
    // g(b) lies in Ker(bottom_out) = Im(bottom_in).
    auto a = solve(d.bottom_in().matrix(), d.g()(b));
    if (!a) throw InternalError("connecting_map: g(lift) is not in the image of the bottom row");
    const Vector q = coker_f.projection()(*a);
    for (std::size_t r = 0; r < q.size(); ++r) delta(r, k) = q[r];
  }
  return LinearMap(std::move(delta));
}

SnakeResult snake(const SnakeDiagram& d) {
  SnakeResult r;
  r.ker_f = kernel(d.f());
  r.ker_g = kernel(d.g());
  r.ker_h = kernel(d.h());
  r.coker_f = cokernel(d.f());
  r.coker_g = cokernel(d.g());
  r.coker_h = cokernel(d.h());

  const LinearMap kf_kg = compose(r.ker_g.coordinate_map(), compose(d.top_in(), r.ker_f.inclusion()));
  const LinearMap kg_kh = compose(r.ker_h.coordinate_map(), compose(d.top_out(), r.ker_g.inclusion()));
  r.connecting = connecting_map(d);
  const LinearMap cf_cg = induced_map(d.bottom_in(), r.coker_f, r.coker_g);
  const LinearMap cg_ch = induced_map(d.bottom_out(), r.coker_g, r.coker_h);

  const std::size_t kf = r.ker_f.dim();
  const std::size_t ch = r.coker_h.quotient_dim();
  r.six_term = MapChain({0, kf, r.ker_g.dim(), r.ker_h.dim(), r.coker_f.quotient_dim(), r.coker_g.quotient_dim(), ch, 0},
                        {LinearMap::zero(0, kf), kf_kg, kg_kh, r.connecting, cf_cg, cg_ch, LinearMap::zero(ch, 0)});
  if (!is_exact(r.six_term)) throw InternalError("snake: six-term sequence is not exact");
  return r;
}

// ------------------------------------------------------------ five lemma

FiveLemmaReport five_lemma_check(const MapChain& top, const MapChain& bottom, const std::vector<LinearMap>& verticals) {
  if (top.nodes() != 5 || bottom.nodes() != 5 || verticals.size() != 5)
    throw DiagramInvalid("five lemma: rows need five nodes and five verticals");
  for (std::size_t i = 0; i < 5; ++i) {
    if (verticals[i].domain_dim() != top.spaces()[i] || verticals[i].codomain_dim() != bottom.spaces()[i])
      throw DiagramInvalid("five lemma: vertical " + std::to_string(i) + " does not fit the rows");
  }
  if (!is_exact(top)) throw DiagramInvalid("five lemma: top row is not exact");
  if (!is_exact(bottom)) throw DiagramInvalid("five lemma: bottom row is not exact");
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(compose(verticals[i + 1], top.maps()[i]) == compose(bottom.maps()[i], verticals[i])))
      throw DiagramInvalid("five lemma: square " + std::to_string(i) + " does not commute");
  }
  for (std::size_t i : {0u, 1u, 3u, 4u}) {
    if (!bijective(verticals[i])) throw DiagramInvalid("five lemma: vertical " + std::to_string(i) + " is not bijective");
  }

  FiveLemmaReport report;
  for (const auto& v : verticals) report.vertical_ranks.push_back(rank(v));
  report.top_dims = top.spaces();
  report.bottom_dims = bottom.spaces();
  report.middle_bijective = bijective(verticals[2]);
  return report;
}

// ---------------------------------------------------------------- random

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound = 2) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

std::size_t random_dim(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Unit lower times unit upper triangular: always invertible.
Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  Matrix lower = Matrix::identity(n);
  Matrix upper = Matrix::identity(n);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = entry(rng);
      upper(j, i) = entry(rng);
    }
  return lower * upper;
}

Subspace random_subspace(std::mt19937_64& rng, std::size_t ambient, std::size_t max_dim) {
  const std::size_t k = random_dim(rng, 0, std::min(ambient, max_dim));
  return Subspace::span(ambient, random_matrix(rng, k, ambient));
}

// T_to · m · T_from⁻¹.
LinearMap conjugate(const LinearMap& m, const Matrix& to, const Matrix& from_inverse) {
  return LinearMap(to * m.matrix() * from_inverse);
}

}  // namespace

SnakeDiagram random_snake_diagram(std::mt19937_64& rng, std::size_t max_dim) {
  const std::size_t nb = random_dim(rng, 0, max_dim);
  const std::size_t nb2 = random_dim(rng, 0, max_dim);
  const std::size_t r = random_dim(rng, std::min(nb, nb2) / 2, std::min(nb, nb2));
  const LinearMap g(nb, nb2, random_matrix(rng, nb2, r) * random_matrix(rng, r, nb));

  const Subspace a = random_subspace(rng, nb, (nb + 1) / 2);
  const QuotientSpace c = quotient(nb, a);
  // Part of A' inside g(B) beyond g(A) is what makes the connecting map nonzero.
  const Subspace a2 = sum(sum(map_subspace(g, a), map_subspace(g, random_subspace(rng, nb, 2))),
                          random_subspace(rng, nb2, 2));
  const QuotientSpace c2 = quotient(nb2, a2);
  const LinearMap f = compose(a2.coordinate_map(), compose(g, a.inclusion()));
  const LinearMap h = induced_map(g, c, c2);

  std::vector<Matrix> t, t_inv;
  for (std::size_t n : {a.dim(), nb, c.quotient_dim(), a2.dim(), nb2, c2.quotient_dim()}) {
    t.push_back(random_invertible(rng, n));
    t_inv.push_back(*inverse(t.back()));
  }
  return SnakeDiagram(conjugate(a.inclusion(), t[1], t_inv[0]), conjugate(c.projection(), t[2], t_inv[1]),
                      conjugate(a2.inclusion(), t[4], t_inv[3]), conjugate(c2.projection(), t[5], t_inv[4]),
                      conjugate(f, t[3], t_inv[0]), conjugate(g, t[4], t_inv[1]), conjugate(h, t[5], t_inv[2]));
}

FiveLadder random_five_ladder(std::mt19937_64& rng) {
  // A_i = (image of the previous map) ⊕ (part mapped isomorphically onward).
  std::vector<std::size_t> in(5), out(5);
  in[0] = random_dim(rng, 0, 1);
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = random_dim(rng, 0, 2);
    in[i + 1] = out[i];
  }
  out[4] = random_dim(rng, 0, 1);

  std::vector<std::size_t> dims(5);
  for (std::size_t i = 0; i < 5; ++i) dims[i] = in[i] + out[i];

  std::vector<Matrix> t(5), t_inv(5), s(5), s_inv(5);
  for (std::size_t i = 0; i < 5; ++i) {
    t[i] = random_invertible(rng, dims[i]);
    t_inv[i] = *inverse(t[i]);
    s[i] = random_invertible(rng, dims[i]);
    s_inv[i] = *inverse(s[i]);
  }

  std::vector<LinearMap> top_maps, bottom_maps;
  for (std::size_t i = 0; i < 4; ++i) {
    Matrix m(dims[i + 1], dims[i]);
    for (std::size_t k = 0; k < out[i]; ++k) m(k, in[i] + k) = 1;
    const LinearMap top = conjugate(LinearMap(m), t[i + 1], t_inv[i]);
    top_maps.push_back(top);
    bottom_maps.push_back(conjugate(top, s[i + 1], s_inv[i]));
  }
  FiveLadder ladder{MapChain(dims, top_maps), MapChain(dims, bottom_maps), {}};
  for (std::size_t i = 0; i < 5; ++i) ladder.verticals.emplace_back(s[i]);
  return ladder;
}

// ------------------------------------------------------------ diagram d2

D2Report build_d2(const CalculusPair& cp) {
  const UniversalCalculus& uc = cp.uc();
  SnakeDiagram d(cp.n_p_coords().inclusion(), cp.omega1_quotient().projection(), cp.p_v().inclusion(),
                 cp.codomain_quotient().projection(), cp.chi_bar(), uc.can_bar(), cp.chi());
  SnakeResult s = snake(d);
  D2Report report{std::move(d), std::move(s)};
  report.coker_chi_bar_zero = report.snake.coker_f.quotient_dim() == 0;
  report.coker_can_bar_zero = report.snake.coker_g.quotient_dim() == 0;
  return report;
}

FiveLadder horizontal_ladder(const CalculusPair& cp) {
  const UniversalCalculus& uc = cp.uc();
  const Subspace& horizontal_forms = uc.omega1B_coords();
  const Subspace meet = intersect(cp.n_p_coords(), horizontal_forms);
  const Subspace ker_can_bar = kernel(uc.can_bar());
  const Subspace& image_forms = cp.horizontal_image();
  const Subspace ker_chi = kernel(cp.chi());
  const LinearMap& pi = cp.omega1_quotient().projection();

  if (!contains(ker_can_bar, horizontal_forms)) throw DiagramInvalid("horizontal ladder: P(Ω¹B)P is not inside Ker can̄");
  if (!contains(horizontal_forms, meet) || !contains(ker_chi, image_forms))
    throw DiagramInvalid("horizontal ladder: inclusions between rows fail");

  const std::size_t m = meet.dim();
  const std::size_t hf = image_forms.dim();
  const std::size_t kc = ker_chi.dim();
  MapChain top({0, m, horizontal_forms.dim(), hf, 0},
               {LinearMap::zero(0, m), compose(horizontal_forms.coordinate_map(), meet.inclusion()),
                compose(image_forms.coordinate_map(), compose(pi, horizontal_forms.inclusion())), LinearMap::zero(hf, 0)});
  MapChain bottom({0, m, ker_can_bar.dim(), kc, 0},
                  {LinearMap::zero(0, m), compose(ker_can_bar.coordinate_map(), meet.inclusion()),
                   compose(ker_chi.coordinate_map(), compose(pi, ker_can_bar.inclusion())), LinearMap::zero(kc, 0)});
  std::vector<LinearMap> verticals{LinearMap::identity(0), LinearMap::identity(m),
                                   compose(ker_can_bar.coordinate_map(), horizontal_forms.inclusion()),
                                   compose(ker_chi.coordinate_map(), image_forms.inclusion()), LinearMap::identity(0)};
  return FiveLadder{std::move(top), std::move(bottom), std::move(verticals)};
}

}  // namespace qb
