#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "envop/scalar.hpp"

namespace envop {

/// A generator of a free ns operad (or, for algebras, a generator with a
/// weight; the operad arity of a shifted algebra generator is weight+1).
struct GeneratorInfo {
  std::string name;
  int arity = 2;   // number of inputs when used as an operad generator
  int weight = 1;  // weight grading (arity-1 for shifted algebra elements)
  int degree = 0;  // homological degree (0 for all user inputs)
};

/// A set of generators; ids are indices into the table.
class GeneratorSet {
public:
  int add(GeneratorInfo g);
  int size() const { return static_cast<int>(gens_.size()); }
  const GeneratorInfo& operator[](int id) const { return gens_.at(id); }
  int find(const std::string& name) const;  // -1 when absent

private:
  std::vector<GeneratorInfo> gens_;
  std::map<std::string, int> byname_;
};

/// A planar rooted tree with generator-labeled internal vertices, stored
/// in preorder. Leaves are implicitly numbered 1..arity left to right.
/// The vertexless one-leaf tree is the operad unit.
class TreeMonomial {
public:
  struct Node {
    int gen;     // generator id, or -1 for a leaf
    int nchild;  // input count (0 for a leaf)
    auto operator<=>(const Node&) const = default;
  };

  TreeMonomial() : nodes_{Node{-1, 0}} {}  // the unit
  static TreeMonomial unit() { return TreeMonomial(); }
  static TreeMonomial corolla(int gen, int arity);
  static TreeMonomial from_preorder(std::vector<Node> nodes);

  bool is_unit() const { return nodes_.size() == 1 && nodes_[0].gen < 0; }
  int arity() const;
  int weight() const;  // number of internal vertices
  const std::vector<Node>& nodes() const { return nodes_; }

  /// Total weight with respect to generator weights.
  int generator_weight(const GeneratorSet& gens) const;

  auto operator<=>(const TreeMonomial& o) const { return nodes_ <=> o.nodes_; }
  bool operator==(const TreeMonomial& o) const { return nodes_ == o.nodes_; }

  std::string to_string(const GeneratorSet& gens) const;

private:
  std::vector<Node> nodes_;
};

/// Partial composition: plug `inner` into the slot-th leaf (1-based) of
/// `outer`.
TreeMonomial graft(const TreeMonomial& outer, int slot, const TreeMonomial& inner);

/// Per-leaf root-to-leaf data used by the path-degree-lexicographic order.
struct PathData {
  std::vector<int> degrees;                // path length per leaf
  std::vector<std::vector<int>> words;     // label word per leaf (gen ids)
};
PathData path_sequence(const TreeMonomial& m);

/// Path-degree-lexicographic monomial order. Degrees are compared leaf by
/// leaf (longer path greater at the leftmost difference); ties fall back
/// to label words under the generator ranking, then to a structural
/// preorder tiebreak.
struct MonomialOrder {
  std::vector<int> generator_rank;  // rank[id]; smaller rank = larger generator

  int rank_of(int gen) const {
    if (generator_rank.empty()) return gen;
    return generator_rank.at(static_cast<std::size_t>(gen));
  }
  static MonomialOrder default_for(int ngens);
};

/// -1, 0, +1 for m1 < m2, m1 == m2, m1 > m2. Requires equal arity.
int compare(const TreeMonomial& m1, const TreeMonomial& m2,
            const MonomialOrder& ord);

/// One occurrence of a divisor pattern inside a monomial: vertex_of[j] is
/// the host preorder node index matched to the pattern's j-th internal
/// vertex (in pattern preorder).
struct Occurrence {
  std::vector<int> vertex_of;
};

/// All occurrences of d as a divisor of m (subtree embeddings closed
/// under the planar structure).
std::vector<Occurrence> divides(const TreeMonomial& d, const TreeMonomial& m);

/// Replaces an occurrence of pattern d inside m by a replacement tree r
/// of the same arity, keeping the surrounding context and the subtrees
/// hanging off the occurrence.
TreeMonomial replace_occurrence(const TreeMonomial& m, const TreeMonomial& d,
                                const Occurrence& occ, const TreeMonomial& r);

/// All tree monomials of the given arity over a generator set (generator
/// arities must be >= 2 so the enumeration is finite).
std::vector<TreeMonomial> enumerate_monomials(const GeneratorSet& gens, int arity);

/// Enumeration with a pruning predicate: subtrees for which `prune`
/// returns true (on a partially built monomial) are abandoned.
void enumerate_monomials_pruned(
    const GeneratorSet& gens, int arity,
    const std::function<bool(const TreeMonomial&)>& prune,
    const std::function<void(const TreeMonomial&)>& yield);

}  // namespace envop
