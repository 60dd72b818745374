#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "repstrata/linalg.hpp"
#include "repstrata/quaternion.hpp"

namespace repstrata {

/// Stabilizer conjugacy class of a representation: Z = center (irreducible,
/// top stratum), T = maximal torus, G = whole group (central images).
enum class Stratum { Z, T, G };

std::string to_string(Stratum s);
Stratum stratum_from_string(const std::string& s);

/// Standard surface-group presentation < x1,y1,...,xl,yl ; r > with
/// r = [x1,y1]...[xl,yl].  The relator is kept as a letter sequence and the
/// letter data needed by Fox derivatives is computed once.
class Presentation {
 public:
  explicit Presentation(int genus);

  int genus() const { return genus_; }
  int generator_count() const { return 2 * genus_; }

  struct Letter {
    int gen;   // generator index in [0, 2*genus)
    int sign;  // +1 or -1
  };
  const std::vector<Letter>& relator() const { return letters_; }

 private:
  int genus_;
  std::vector<Letter> letters_;
};

/// A point of Hom(pi, SU(2)): images (A1,B1,...,Al,Bl) of the generators.
struct Representation {
  int genus = 0;
  std::vector<Quaternion> images;

  int generator_count() const { return 2 * genus; }
};

/// The word map r: G^{2l} -> G evaluated at the representation.
Quaternion evaluate_relator(const Representation& rep);

/// |r(phi) - e| in quaternion norm.
double relator_residual(const Representation& rep);

/// Per-letter right-trivialized frame of the relator at a representation:
/// letter j contributes sign_j Ad(prefix_j) to the generator block it reads.
/// This single object drives the derivative, the cocycle condition, and the
/// cohomology pairing.
struct RelatorFrame {
  std::vector<int> gen;               // generator index per letter
  std::vector<double> sign;           // +-1 per letter
  std::vector<Eigen::Matrix3d> frame; // sign_j * Ad(translated prefix_j)
};

RelatorFrame relator_frame(const Representation& rep);

/// Right-trivialized differential of the word map, a 3 x 6l matrix:
/// dr(u) = sum_i Ad(rho(dr/dx_i)) u_i with dr/dx_i the Fox derivatives.
Matrix relator_derivative(const Representation& rep);

/// Conjugates every image by g.
Representation conjugate(const Representation& rep, const Quaternion& g);

/// All 2^{2l} assignments of +-identity to the generators; residual is
/// exactly zero for each.
std::vector<Representation> enumerate_central(int genus);

/// Orbit type of a representation with residual <= tol based on exact
/// commutation structure: G when every image is central, T when all images
/// commute pairwise but are not all central, Z otherwise.
Stratum orbit_type(const Representation& rep, double tol = 1e-8);

struct SolveOptions {
  double residual_tol = 1e-10;
  int max_steps = 100000;
};

/// Thrown when the solver exhausts its step budget.
struct SolverFailure : std::runtime_error {
  SolverFailure(const std::string& what, double residual)
      : std::runtime_error(what), final_residual(residual) {}
  double final_residual;
};

/// Produces a flat representation (a point of r^{-1}(e)) of the requested
/// orbit type.  Target G returns a central representation; target T draws
/// commuting images in a fixed maximal torus; target Z minimizes the
/// squared residual by projected gradient with backtracking from a random
/// start.  Targets T and Z require genus >= 2.
Representation solve_flat(int genus, Stratum target, std::uint64_t seed,
                          const SolveOptions& opts = {});

}  // namespace repstrata
