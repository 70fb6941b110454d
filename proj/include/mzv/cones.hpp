#pragma once

#include <vector>

#include "mzv/forests.hpp"

namespace mzv {

using IntMatrix = std::vector<std::vector<long>>;
using BoolMatrix = std::vector<std::vector<bool>>;

// Square matrix of linear-form coefficients (row i is l_i) and decorations.
struct Cone {
    IntMatrix A;
    std::vector<long> s;

    std::size_t dim() const { return A.size(); }
    bool unimodular() const;
};

// throws unless A is square, of full rank, and s has matching length with entries >= 1
void validate(const Cone& c);

// le[i][j] iff l_i - l_j >= 0 componentwise
BoolMatrix poset_of_cone(const Cone& c);
bool is_poset_compatible(const Cone& c);
// b[i][j] iff j covers i
BoolMatrix second_representing_matrix(const Cone& c);
bool is_tree_like(const Cone& c);

Forest psi(const Cone& c);
Cone phi(const Forest& f);

enum class Route { A, B };

// Route A: combination of Nat words (stuffle MZVs). Route B: combination of {x,y} words (shuffle MZVs).
WordComb czv_reduce(const Cone& c, Route route = Route::A);

struct MTReduction {
    WordComb expr;                  // {x,y} words
    std::vector<std::size_t> perm;  // sorted position k holds original argument perm[k]
};

// MT(s_1,...,s_r | s0) = sum over n_i >= 1 of prod n_i^{-s_i} (n_1+...+n_r)^{-s0}
MTReduction mt_reduce(const std::vector<long>& s, long s0);
bool mt_convergent(std::vector<long> s, long s0);

}  // namespace mzv
