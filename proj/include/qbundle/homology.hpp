#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "qbundle/calculus.hpp"
#include "qbundle/linalg.hpp"

namespace qb {

/// V_0 -> V_1 -> ... -> V_n with composable maps. Zero objects at the ends
/// are written out explicitly as dimension-0 nodes.
class MapChain {
 public:
  MapChain() = default;
  MapChain(std::vector<std::size_t> spaces, std::vector<LinearMap> maps);
  static MapChain from_maps(std::vector<LinearMap> maps);

  const std::vector<std::size_t>& spaces() const { return spaces_; }
  const std::vector<LinearMap>& maps() const { return maps_; }
  std::size_t nodes() const { return spaces_.size(); }

 private:
  std::vector<std::size_t> spaces_;
  std::vector<LinearMap> maps_;
};

/// image(map_{i-1}) = kernel(map_i) at an interior node. At node 0 this is
/// injectivity of the first map, at the last node surjectivity of the last
/// (as if the chain were padded by zero objects).
bool is_exact_at(const MapChain& chain, std::size_t i);
/// Exact at every interior node.
bool is_exact(const MapChain& chain);
/// Exact at every node including both ends.
bool is_exact_padded(const MapChain& chain);

/// Two short exact rows 0->A->B->C->0 and 0->A'->B'->C'->0 joined by
/// f: A->A', g: B->B', h: C->C' with both squares commuting. Construction
/// throws DiagramInvalid otherwise.
class SnakeDiagram {
 public:
  SnakeDiagram(LinearMap top_in, LinearMap top_out, LinearMap bottom_in, LinearMap bottom_out, LinearMap f,
               LinearMap g, LinearMap h);

  const LinearMap& top_in() const { return top_in_; }
  const LinearMap& top_out() const { return top_out_; }
  const LinearMap& bottom_in() const { return bottom_in_; }
  const LinearMap& bottom_out() const { return bottom_out_; }
  const LinearMap& f() const { return f_; }
  const LinearMap& g() const { return g_; }
  const LinearMap& h() const { return h_; }

 private:
  LinearMap top_in_, top_out_, bottom_in_, bottom_out_, f_, g_, h_;
};

struct SnakeResult {
  /// 0 -> Ker f -> Ker g -> Ker h -> Coker f -> Coker g -> Coker h -> 0,
  /// kernels in their RREF coordinates, cokernels in quotient coordinates.
  MapChain six_term;
  LinearMap connecting;
  Subspace ker_f, ker_g, ker_h;
  QuotientSpace coker_f, coker_g, coker_h;
};

/// Returns some c' ∈ B with top_out(c') = c.
using LiftRule = std::function<Vector(const Vector& c)>;

/// δ: Ker h -> Coker f. With no lift rule the particular solution of
/// top_out(b) = c with free variables zero is used.
LinearMap connecting_map(const SnakeDiagram& d, const LiftRule& lift = {});

/// The six-term exact sequence. Throws InternalError if it is not exact.
SnakeResult snake(const SnakeDiagram& d);

struct FiveLemmaReport {
  std::vector<std::size_t> vertical_ranks;
  std::vector<std::size_t> top_dims;
  std::vector<std::size_t> bottom_dims;
  bool middle_bijective = false;
};

/// Rows of five nodes, exact at the three interior nodes, five commuting
/// squares' worth of verticals with the outer four bijective. Throws
/// DiagramInvalid when any of that fails.
FiveLemmaReport five_lemma_check(const MapChain& top, const MapChain& bottom, const std::vector<LinearMap>& verticals);

struct FiveLadder {
  MapChain top;
  MapChain bottom;
  std::vector<LinearMap> verticals;
};

/// Random diagram with exact rows and commuting squares by construction:
/// random B, B', g; A ⊆ B random with C = B/A; A' ⊇ g(A) random with
/// C' = B'/A'; then a random change of basis in all six spaces. Every
/// dimension is at most max_dim.
SnakeDiagram random_snake_diagram(std::mt19937_64& rng, std::size_t max_dim = 6);
/// Exact five-node rows with bijective verticals.
FiveLadder random_five_ladder(std::mt19937_64& rng);

struct D2Report {
  SnakeDiagram diagram;
  SnakeResult snake;
  bool coker_chi_bar_zero = false;  // six-term sequence takes the compatible-equality shape
  bool coker_can_bar_zero = false;  // six-term sequence takes the surjective-can shape
};

/// Rows 0 -> N_P -> Ω¹P -> Ω¹(P) -> 0 and 0 -> P⊗V -> P⊗H⁺ -> P⊗(H⁺/V) -> 0
/// with verticals χ̄, can̄, χ, followed by the snake. Throws DiagramInvalid on
/// an invalid diagram.
D2Report build_d2(const CalculusPair& cp);

/// The ladder comparing 0 -> N_P∩P(Ω¹B)P -> P(Ω¹B)P -> PΩ¹(B)P -> 0 with
/// 0 -> N_P∩P(Ω¹B)P -> Ker can̄ -> Ker χ -> 0 through (id, id, ⊆, id, id).
/// Only valid when the latter row is exact and Ker χ = PΩ¹(B)P; throws
/// DiagramInvalid otherwise.
FiveLadder horizontal_ladder(const CalculusPair& cp);

}  // namespace qb
