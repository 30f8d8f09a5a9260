#pragma once

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "credal/algebra.hpp"
#include "credal/elementary.hpp"

namespace credal {

class MonotoneAffineMap;
struct BPartition;

enum class Side { Left, Right };
enum class EndKind { NegInf, PosInf, AmbientLeft, AmbientRight };

// A finitely additive credence on the elementary algebra of its ambient.
// Rule-based: normalized length, one-sided point germs, end germs, finite
// atom tables, convex mixtures, and images under monotone maps.
class Credence {
 public:
  struct Lebesgue {};
  struct PointMass {
    Rational x;
    Side side;
  };
  struct EndMass {
    EndKind end;
  };
  struct AtomTable {
    std::shared_ptr<const FiniteAlgebra> algebra;
    std::vector<Rational> weights;  // one per atom, nonnegative, sum 1
  };
  struct Mixture {
    std::vector<std::pair<Rational, Credence>> parts;  // positive weights, sum 1
  };
  struct Image {
    std::shared_ptr<const MonotoneAffineMap> map;
    std::shared_ptr<const Credence> base;
  };

  static Credence lebesgue(const Ambient& ambient);
  static Credence point_mass(const Ambient& ambient, const Rational& x, Side side);
  static Credence end_mass(const Ambient& ambient, EndKind end);
  static Credence atom_table(std::shared_ptr<const FiniteAlgebra> algebra, std::vector<Rational> weights);
  static Credence mixture(std::vector<std::pair<Rational, Credence>> parts);
  static Credence image(std::shared_ptr<const MonotoneAffineMap> map, Credence base);

  const Ambient& ambient() const { return ambient_; }

  bool is_lebesgue() const { return std::holds_alternative<Lebesgue>(rule_); }
  bool is_point_mass() const { return std::holds_alternative<PointMass>(rule_); }
  bool is_end_mass() const { return std::holds_alternative<EndMass>(rule_); }
  bool is_atom_table() const { return std::holds_alternative<AtomTable>(rule_); }
  bool is_mixture() const { return std::holds_alternative<Mixture>(rule_); }
  bool is_image() const { return std::holds_alternative<Image>(rule_); }

  const PointMass& as_point_mass() const { return std::get<PointMass>(rule_); }
  const EndMass& as_end_mass() const { return std::get<EndMass>(rule_); }
  const AtomTable& as_atom_table() const { return std::get<AtomTable>(rule_); }
  const Mixture& as_mixture() const { return std::get<Mixture>(rule_); }
  const Image& as_image() const { return std::get<Image>(rule_); }

 private:
  using Rule = std::variant<Lebesgue, PointMass, EndMass, AtomTable, Mixture, Image>;

  Credence(Ambient ambient, Rule rule) : ambient_(std::move(ambient)), rule_(std::move(rule)) {}

  Ambient ambient_;
  Rule rule_;
};

Rational eval(const Credence& mu, const ElementarySet& e);

// True iff the cell masses add up to the mass of the partition target.
bool check_additivity(const Credence& mu, const BPartition& partition);

// Extends an atom-table credence to a finer algebra: within each coarse
// atom the mass goes to the finer atoms in proportion to their lengths
// (uniformly when lengths are unusable).  The extension is not unique; this
// is one admissible choice.
Credence extend_to_refinement(const Credence& mu, std::shared_ptr<const FiniteAlgebra> finer);

}  // namespace credal
