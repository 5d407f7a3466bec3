#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "igusa/algebra/smith.hpp"
#include "igusa/reduction.hpp"
#include "igusa/zeta.hpp"

namespace igusa {

// A point of the zero locus at which monodromy is examined.
struct MonodromyBasePoint {
  enum class Kind { Blown, Crossing, Smooth };
  Kind kind = Kind::Smooth;
  std::string description;
  std::optional<RationalPoint> point;
  // Blown: exceptional divisors over the point. Crossing: strict components
  // through it. Smooth: the single strict component.
  std::vector<int> divisors;
};

std::vector<MonodromyBasePoint> monodromy_base_points(const ResolutionGraph& g);

// prod (t^N - 1)^e
struct MonodromyZeta {
  std::vector<std::pair<std::vector<int>, long>> factors;
  std::string base;
  std::string to_string() const;
};

MonodromyZeta sabbah_zeta(const ResolutionGraph& g, const MonodromyBasePoint& xi);

// Exponents in [0, 1); phi(gamma) = exp(2 pi i a . gamma).
struct FiniteOrderCharacter {
  std::vector<Rational> a;

  static FiniteOrderCharacter make(std::vector<Rational> a);
  // Image of a character tuple of F_p^*: a_j = e_j / (p - 1).
  static FiniteOrderCharacter from(const CharacterTuple& chi);
  BigInt order() const;
  std::string to_string() const;
};

// { phi : phi^N = exp(2 pi i tau) } with N primitive, tau in [0, 1).
struct TranslatedCotorus {
  std::vector<int> N;
  Rational tau;

  static TranslatedCotorus make(std::vector<int> N, Rational tau);
  bool contains(const FiniteOrderCharacter& phi) const;
  std::string to_string() const;
  friend auto operator<=>(const TranslatedCotorus&, const TranslatedCotorus&) = default;
};

struct HyperplaneCotori {
  std::vector<int> N;
  long content = 1;  // gcd of the entries of N
  Rational residue;  // -nu mod content, in [0, content)

  bool contains(const FiniteOrderCharacter& phi) const;
  std::vector<TranslatedCotorus> components() const;
};

HyperplaneCotori hyperplane_cotori(const Hyperplane& H);

std::vector<TranslatedCotorus> cotorus_closure(const TranslatedCotorus& Z);
std::vector<TranslatedCotorus> cotorus_closure(const std::vector<TranslatedCotorus>& Z);

// Divisors whose multiplicities bound the support at xi.
std::vector<int> support_divisors(const ResolutionGraph& g, const MonodromyBasePoint& xi);
std::set<TranslatedCotorus> alexander_support_bound(const ResolutionGraph& g, const MonodromyBasePoint& xi);

struct CotorusCertificate {
  TranslatedCotorus cotorus;
  long exponent = 0;
};
// Net exponent of the monodromy zeta along each cotorus it touches; only nonzero ones.
std::vector<CotorusCertificate> support_certificate(const ResolutionGraph& g, const MonodromyBasePoint& xi);
long net_exponent(const MonodromyZeta& zeta, const TranslatedCotorus& Z);

struct StalkData {
  std::size_t components_through = 0;
  std::size_t lattice_rank = 0;
  std::optional<BigInt> component_count;  // nullopt: infinitely many
  std::optional<BigInt> tame_count;       // prime-to-p part
  std::vector<BigInt> stalk_ranks;        // degree 0 .. lattice_rank
  BigInt gcd_product;                     // product over columns of the gcd of the column
};

// Columns are the divisors through the point, rows the functions.
StalkData local_stalk_data(const IntegerMatrix& N, long p);

enum class Verdict { Verified, Failed, Inconclusive };
std::string to_string(Verdict v);

struct WValue {
  int divisor = 0;
  std::vector<int> component;  // connected component of divisors with proportional N
  long w = 0;
};

struct HyperplaneVerdict {
  Hyperplane H;
  TranslatedCotorus cotorus;
  Verdict verdict = Verdict::Inconclusive;
  std::string base;       // certifying base point
  long exponent = 0;      // net exponent there
  std::vector<WValue> w;
  std::string note;
};

struct MonodromyReport {
  std::vector<HyperplaneVerdict> hyperplanes;
  bool all_verified() const;
  bool any_failed() const;
  std::string to_text() const;
  std::string to_json() const;
};

MonodromyReport check_monodromy_conjecture(const ResolutionGraph& g, const ZetaFunction& Z);

struct CharacterVerdict {
  CharacterTuple chi;
  FiniteOrderCharacter image;
  bool holomorphic = false;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<int> divisor;  // witness divisor
  std::optional<TranslatedCotorus> cotorus;
  std::string base;
  std::string note;
};

struct HolomorphyReport {
  std::vector<CharacterVerdict> characters;
  bool all_verified() const;
  bool any_failed() const;
  std::string to_text() const;
  std::string to_json() const;
};

HolomorphyReport check_holomorphy_conjecture(const ResolutionGraph& g, const std::vector<CharacterTuple>& chis, long p,
                                             const ResidualFunction& phi = ResidualFunction::unit_ball());

}  // namespace igusa
