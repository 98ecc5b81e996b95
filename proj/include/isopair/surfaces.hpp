#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "isopair/honeycomb.hpp"
#include "isopair/linalg.hpp"
#include "isopair/ribbon.hpp"
#include "isopair/transfer.hpp"

namespace isopair {

/// A mirror-symmetric triangulation of the genus-g surface with k punctures.
/// Corners of each triangle are listed counterclockwise; side s runs from
/// corner s to corner s+1.
struct SurfaceTriangulation {
  struct Triangle {
    std::array<std::string, 3> point;  // polygon point names: c<j> or q<i>
    std::array<int, 3> puncture;       // vertex class after gluing
    Color color;
    bool upper;
  };
  int g = 0, k = 0;
  std::vector<Triangle> triangles;
  /// glue[t][s] = (t', s'): side s of triangle t is identified with side s' of
  /// t', reversing orientation.
  std::vector<std::array<std::pair<int, int>, 3>> glue;
  int num_punctures = 0;

  int num_triangles() const { return static_cast<int>(triangles.size()); }
};

/// Upper half: the polygon c_0..c_{2g} followed by the axis punctures
/// q_1..q_{k-1} (just q_1..q_k for g = 0), triangulated so that the mirror
/// image closes up with a bipartite dual. Throws PreconditionError unless
/// 2-2g-k < 0 and k >= 1.
SurfaceTriangulation build_triangulation(int g, int k);

/// Checks gluing symmetry, the colouring and the puncture count; returns
/// the first problem found or an empty string.
std::string validate_triangulation(const SurfaceTriangulation& tri);

/// The dual graph G_Sigma with the ribbon structure of the surface.
RibbonGraph dual_graph(const SurfaceTriangulation& tri);

struct SurfaceInvariants {
  int g_prime = 0, k_prime = 0;
  int euler = 0;  // 2 - 2g - k
};

/// Genus and puncture count of the conjugate surface S; throws InternalError
/// if the Euler characteristics disagree.
SurfaceInvariants conjugate_surface_invariants(const SurfaceTriangulation& tri);

/// Zig-zag monodromies of G_n as integer vectors over a basis of its cycle
/// space: all faces but the last, then 2g' cycles completing a basis.
struct ExponentMatrix {
  IntMatrix rows;                      // one per zig-zag of G_n
  std::vector<HalfEdgeCycle> zigzags;  // matching order
  std::vector<int> band;               // coarse zig-zag each row runs parallel to, or -1
  int faces = 0;                       // basis columns that are faces
  int homology = 0;                    // remaining basis columns
  int cycle_dim() const { return faces + homology; }
};

ExponentMatrix eigenvalue_exponent_matrix(const GnGraph& gn, const RibbonGraph& coarse);

struct IndependenceReport {
  std::size_t rank = 0;
  long cycle_dim = 0;
  long free_count = 0;
  bool product_relation = false;  // all-ones spans the left kernel
  std::vector<long> kernel_witness;
};

IndependenceReport verify_independence(const ExponentMatrix& em);

/// Builds (g,k,n) end to end and checks the census, band, rank and
/// parameter-count claims.
Report analyze_surface(int g, int k, int n);

std::string triangulation_to_json(const SurfaceTriangulation& tri);

}  // namespace isopair
