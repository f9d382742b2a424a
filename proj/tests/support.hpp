#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "forge/algebra.hpp"
#include "forge/leibniz_free.hpp"
#include "forge/systems.hpp"

namespace forge::props {

struct Tally {
  int trials = 0;
  int failures = 0;
  std::vector<std::string> first_failures;  // at most a few

  void record(bool ok, const std::string& what);
};

// u.(v.w) = (u.v).w - (u.w).v for random multilinear u, v, w with disjoint
// letters and total degree at most 6.
Tally leibniz_law_trials(int trials, std::uint32_t seed);

// Every degree-5 shape with every labelling by a..e: closes the orbits under
// X(YZ) -> X(ZY) at any node by union-find and checks that rc_straighten is
// constant on each orbit and separates different orbits.
struct OrbitReport {
  std::size_t labelled_trees = 0;
  std::size_t orbits = 0;
  std::size_t words = 0;
  Tally tally;
};
OrbitReport straightening_orbit_check();

// Left-normalized normal form by repeated rewriting x(yz) -> (xy)z - (xz)y,
// independent of the tensor recursion.
leibniz::TensorPolynomial rewrite_normal_form(const Monomial& m);

// Random multilinear binary tree on the given leaves, with the operation mul.
Monomial random_tree(std::vector<Variable> leaves, std::mt19937& rng);

// Same algebra in the basis rows of p (coordinates in the old basis).
systems::BinaryAlgebra change_basis(const systems::BinaryAlgebra& a,
                                    const std::vector<std::vector<Rational>>& p);
// Random invertible integer matrix with entries in [-2, 2].
std::vector<std::vector<Rational>> random_invertible(int n, std::mt19937& rng);

// Associator systems of matrix algebras in random bases are Lie triple and
// Leibniz triple systems.
Tally associator_closure_trials(int trials, std::uint32_t seed);

}  // namespace forge::props
