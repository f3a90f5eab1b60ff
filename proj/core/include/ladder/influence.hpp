#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ladder/game.hpp"

namespace ladder {

/// Classification of an ordered player pair under the global influence
/// relation: Dominates means p beats q strictly, Equivalent means both
/// directions hold, Incomparable means neither does.
enum class PairClass { Dominates, Dominated, Equivalent, Incomparable };

const char* to_string(PairClass c);

struct LocalBeat {
  bool holds = false;
  /// A base profile (positions of p and q both at s) on which promoting q
  /// to r yields strictly more output than promoting p, when !holds.
  std::optional<Profile> witness;
};

/// p beats q between levels r > s: over every configuration of the other
/// players, promoting p from s to r never yields less output than
/// promoting q from s to r.
LocalBeat beats_local(const GameLadder& game, int p, int q, Pos r, Pos s);

/// Conjunction of beats_local over all level pairs r > s.
bool global_geq(const GameLadder& game, int p, int q);

/// Pairwise influence relation; geq(p, p) is true for every player.
class RelationMatrix {
public:
  explicit RelationMatrix(int players)
      : n_(players), geq_(static_cast<std::size_t>(players) * players, false) {
    for (int p = 0; p < players; ++p) set_geq(p, p, true);
  }

  int players() const { return n_; }
  bool geq(int p, int q) const { return geq_[index(p, q)]; }
  void set_geq(int p, int q, bool value) { geq_[index(p, q)] = value; }

  PairClass classify(int p, int q) const {
    bool pq = geq(p, q);
    bool qp = geq(q, p);
    if (pq && qp) return PairClass::Equivalent;
    if (pq) return PairClass::Dominates;
    if (qp) return PairClass::Dominated;
    return PairClass::Incomparable;
  }

private:
  std::size_t index(int p, int q) const {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(q);
  }
  int n_;
  std::vector<bool> geq_;
};

struct RelationOptions {
  int threads = 1;
  std::uint64_t cap = kDefaultEnumCap;
  /// Evaluate through a materialized output table instead of calling the
  /// representation per profile. Both paths produce identical matrices.
  enum class Backend { Auto, Direct, Table } backend = Backend::Auto;
};

RelationMatrix relation_matrix(const GameLadder& game, const RelationOptions& options = {});

struct LinearityReport {
  bool linear = false;
  std::optional<std::pair<int, int>> witness;  // an incomparable pair
};

LinearityReport is_linear(const RelationMatrix& m);
LinearityReport is_linear(const GameLadder& game);

/// All ordered triples (p, q, r) with p >= q, q >= r but not p >= r.
std::vector<std::array<int, 3>> transitivity_violations(const RelationMatrix& m);

/// Transitivity of the strict part: triples with p > q > r but not p > r.
std::vector<std::array<int, 3>> strict_transitivity_violations(const RelationMatrix& m);

/// Ordered partition of the players into equivalence layers, strongest
/// first: within a layer all pairs are Equivalent, and every player of an
/// earlier layer Dominates every player of a later one.
struct LayerDecomposition {
  std::vector<std::vector<int>> layers;
  std::vector<int> membership;  // player -> layer index

  int layer_of(int p) const { return membership[static_cast<std::size_t>(p)]; }
};

/// Throws NotLinear (with an incomparable witness pair) when the relation
/// is not complete, and InternalInconsistency if the induced quotient
/// relation fails to be a transitive tournament.
LayerDecomposition layers(const RelationMatrix& m);
LayerDecomposition layers(const GameLadder& game);

/// Axiom-by-axiom report on the symmetric part of the relation.
struct EquivalenceReport {
  bool reflexive = true;
  bool symmetric = true;
  bool transitive = true;
  std::vector<int> reflexivity_violations;
  std::vector<std::array<int, 2>> symmetry_violations;
  std::vector<std::array<int, 3>> transitivity_violations;

  bool all_hold() const { return reflexive && symmetric && transitive; }
};

EquivalenceReport check_equivalence(const RelationMatrix& m);

}  // namespace ladder
