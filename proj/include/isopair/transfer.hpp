#pragma once

#include <string>
#include <vector>

#include "isopair/honeycomb.hpp"
#include "isopair/linalg.hpp"
#include "isopair/matrix.hpp"

namespace isopair {

/// E paths cross horizontal edges white-to-black and NE/SE edges
/// black-to-white. SW paths cross horizontal and SE edges black-to-white and
/// NE edges white-to-black (so an NE edge contributes its inverse weight).
enum class Orientation { E, SW };

/// A family of boundary-to-boundary paths in one triangle. Entry (i,j) of the
/// associated matrix sums over paths from source index j to target index i.
struct PathFamily {
  Orientation orientation;
  Side source;
  Side target;
  bool include_first;
  bool include_last;
};

PathFamily left_turn_family(Kind kind);
PathFamily right_turn_family(Kind kind);
PathFamily sw_family(Kind kind);

/// Directed acyclic graph of a triangle under one orientation. Nodes
/// 0..V-1 are the triangle's vertices; each stub adds one port node.
template <class R>
struct PathDag {
  struct Arc {
    int to;
    R weight;
    bool is_stub;
  };
  std::vector<std::vector<Arc>> out;
  std::vector<int> order;  // topological order
  std::vector<int> port;   // per stub of the piece, its port node
  Piece piece;
};

template <class R>
PathDag<R> path_dag(const TriangleNetwork<R>& t, Orientation o);

/// Weighted path sums by a topological sweep.
template <class R>
Matrix<R> path_matrix(const TriangleNetwork<R>& t, const PathFamily& f);

/// Explicit depth-first enumeration of every path; a test oracle.
template <class R>
Matrix<R> path_matrix_bruteforce(const TriangleNetwork<R>& t, const PathFamily& f);
/// Number of paths per entry, by enumeration.
std::vector<std::vector<long>> path_counts(Kind kind, int n, const PathFamily& f);

template <class R>
Matrix<R> left_turn_matrix(const TriangleNetwork<R>& t);
template <class R>
Matrix<R> right_turn_matrix(const TriangleNetwork<R>& t);

/// D = R L^{-1} for T and D' = R'^{-1} L' for T'.
template <class R>
Matrix<R> d_matrix_algebraic(const TriangleNetwork<R>& t);

/// Sign applied to the SW path sums. `Corrupted` uses a deliberately wrong
/// sign pattern and exists only to exercise failure reporting.
enum class SignConvention { Standard, Corrupted };

/// Signed SW path sums: (-1)^{j+n} for T (end edges included), (-1)^{i+1}
/// for T' (end edges excluded), 1-based i,j.
template <class R>
Matrix<R> d_matrix_combinatorial(const TriangleNetwork<R>& t, SignConvention sign = SignConvention::Standard);

/// A = R' L and B = L' R.
template <class R>
Matrix<R> assemble_A(const TriangleNetwork<R>& t, const TriangleNetwork<R>& tp);
template <class R>
Matrix<R> assemble_B(const TriangleNetwork<R>& t, const TriangleNetwork<R>& tp);

/// A or B by path enumeration across the union of T and T' joined along the
/// top-right/lower-left sides (A) or the bottom-right/upper-left sides (B).
template <class R>
Matrix<R> assemble_bruteforce(const TriangleNetwork<R>& t, const TriangleNetwork<R>& tp, bool for_A);

/// One checked claim with a short machine-readable id.
struct ClaimResult {
  std::string claim;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<ClaimResult> claims;
  bool passed() const;
  const ClaimResult* find(const std::string& claim) const;
};

/// Checks the zig-zag eigenvalue statements on a torus network:
/// thm1a diag(A) against NE monodromies, thm1b diag(B) against SE,
/// thm1c diag(D D') against (-1)^{n+1} times S (also as multisets), plus the
/// triangularity of A, B, D D' and the antitriangular D patterns. In float mode
/// comparisons use `tol`.
Report verify_theorem1(const TorusNetwork<Scalar>& net, double tol = 1e-8,
                       SignConvention sign = SignConvention::Standard);

/// One cell: combinatorial and algebraic D agree and the
/// antitriangular pattern holds.
ClaimResult check_lemma2(const TriangleNetwork<Scalar>& t, double tol = 1e-8,
                         SignConvention sign = SignConvention::Standard);

/// The four conjugation identities for A^{-1}B and BA^{-1}.
ClaimResult check_conjugation(const TriangleNetwork<Scalar>& t, const TriangleNetwork<Scalar>& tp, double tol = 1e-8);

std::string matrix_str(const Matrix<Laurent>& m);

}  // namespace isopair
