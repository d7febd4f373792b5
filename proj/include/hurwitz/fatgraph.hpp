#pragma once

#include <vector>

#include "hurwitz/oracle.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// A fatgraph on a set of oriented edges X: tau0 rotates the darts at each
// vertex, tau1 is the fixed-point-free edge involution.  Vertices are the
// orbits of tau0, edges those of tau1, boundary faces those of tau0*tau1.
struct Fatgraph {
  Permutation tau0;
  Permutation tau1;

  int darts() const { return tau0.degree(); }
  int vertices() const { return tau0.cycle_count(); }
  int edges() const { return darts() / 2; }
  std::vector<long> boundary_lengths() const;  // in boundary-orbit order
  int genus() const;
  bool connected() const;
  bool pruned() const;         // no valence-1 vertex
  bool valence3plus() const;   // every vertex valence >= 3
  // minimum encoding over breadth-first relabelings from every start dart
  std::vector<int> canonical_encoding() const;
};

enum class FatgraphMode { All, Pruned, Valence3Plus };

struct FatgraphClass {
  Fatgraph representative;  // BFS-canonically relabeled
  int genus = 0;
  std::vector<long> boundaries;
  Int aut = 1;  // label-preserving automorphisms
};

struct FatgraphCount {
  Rat weighted;  // sum over isomorphism classes of 1/|Aut|
  std::vector<FatgraphClass> classes;  // filled only when listing is asked
};

// Weighted count of genus-g fatgraphs with labeled boundary faces of
// lengths mu (so |X| = |mu|, which must be even).  Counts labeled
// (tau0, tau1) structures against a fixed boundary permutation and divides
// by the conjugation stabiliser.
FatgraphCount enumerate_fatgraphs(int g, const MuTuple& mu, FatgraphMode mode,
                                  const Budget& budget = {},
                                  bool list_graphs = false);

// N_{g,n}(mu) as a lattice-point count: sum over valence->=3 fatgraph cells
// of #(positive integer solutions of A x = mu) / |Aut|.
Rat lattice_count(int g, const MuTuple& mu, const Budget& budget = {});

// Evaluate the even-class quasi-polynomial of lattice_count at the origin.
// Degree bound 6g-6+2n per residue class mod 2, held-out verified.
Rat euler_characteristic(int g, int n, const Budget& budget = {});

// The quasi-polynomial (mod 2) that lattice_count fits on one residue
// class; exposed for the quasi-polynomiality property checks.
Poly lattice_count_branch(int g, int n, const std::vector<int>& residues,
                          const Budget& budget = {});

}  // namespace hurwitz
