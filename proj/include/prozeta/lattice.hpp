// The nilpotent Lie lattices L(m,n): basis x_e (|e| = m-1), y_f (|f| = m),
// z_1..z_n, with [x_e, y_f] = z_i exactly when f - e is the i-th unit vector
// and all other basis brackets zero.
#pragma once

#include "prozeta/multi_index.hpp"
#include "prozeta/numbers.hpp"

#include <map>
#include <utility>
#include <vector>

namespace prozeta {

enum class Layer { X, Y, Z };

struct BasisLabel {
    Layer layer;
    MultiIndex index;  // X/Y layers
    int z_index = 0;   // Z layer, 1..n
};

using RatVec = std::vector<Rat>;

class LieLattice {
  public:
    LieLattice(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int r1() const { return static_cast<int>(e_indices_.size()); }
    int r2() const { return static_cast<int>(f_indices_.size()); }
    int r3() const { return n_; }
    int dim() const { return r1() + r2() + r3(); }

    const std::vector<MultiIndex>& e_indices() const { return e_indices_; }
    const std::vector<MultiIndex>& f_indices() const { return f_indices_; }
    const std::vector<BasisLabel>& basis() const { return basis_; }

    // global basis positions
    int x_pos(int e) const { return e; }
    int y_pos(int f) const { return r1() + f; }
    int z_pos(int j) const { return r1() + r2() + j; }  // j zero-based

    int e_index_of(const MultiIndex& e) const;
    int f_index_of(const MultiIndex& f) const;

    // [basis_i, basis_j] as a d-vector (i, j global positions)
    RatVec bracket_basis(int i, int j) const;

    // bilinear antisymmetric extension to arbitrary coefficient vectors
    RatVec bracket(const RatVec& u, const RatVec& v) const;

    // zero-based z index of [x_e, y_f], or -1
    int structure_z(int e, int f) const;

    // nonzero (e_pos, f_pos) -> z (zero-based); the full sparse table
    const std::map<std::pair<int, int>, int>& xy_table() const { return xy_table_; }

    // test hook: overwrite one basis bracket with an arbitrary vector
    void corrupt_bracket(int i, int j, const RatVec& value);

  private:
    int m_, n_;
    std::vector<MultiIndex> e_indices_, f_indices_;
    std::vector<BasisLabel> basis_;
    std::map<MultiIndex, int> e_lookup_, f_lookup_;
    std::map<std::pair<int, int>, int> xy_table_;
    // corruptions: (i,j) with i<j -> explicit bracket vector
    std::map<std::pair<int, int>, RatVec> overrides_;
};

LieLattice build_lattice(int m, int n);

// antisymmetry on all basis pairs + every triple bracket [[u,v],w] vanishes
// on basis triples (class-2 check), with brackets confined to the Z layer
bool check_lie_axioms(const LieLattice& L);

}  // namespace prozeta
