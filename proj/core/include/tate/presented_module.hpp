#pragma once

/**
 * @file presented_module.hpp
 * @brief Finitely presented Z^t-graded S-modules, accessed degree by degree.
 *
 * M = coker( (+)_j S(-colDeg_j) --R--> (+)_k S(-genDeg_k) ).  Nothing global
 * is ever computed: a graded piece M_d is the cokernel of the degree-d
 * realization of R, and the S-action is read off from those pieces.
 */

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "tate/linalg.hpp"
#include "tate/polynomial.hpp"

namespace tate {

struct RelationEntry {
  std::size_t row; // generator index
  std::size_t col; // relation column index
  SPolynomial poly;
};

/// Basis element of an ambient free module: generator k times a monomial.
struct GeneratorMonomial {
  std::size_t generator;
  Exponents exps;
};

/**
 * The graded piece M_d with an explicit basis.
 *
 * The ambient space is (+)_k S_{d - genDeg_k}; its coordinates are ordered by
 * generator, then by monomialBasis.  Basis vectors of M_d are the classes of
 * the ambient standard vectors on the non-pivot rows of the relation image.
 */
class GradedPiece {
public:
  GradedPiece(const ProductSpace& space, const Multidegree& d,
              const std::vector<Multidegree>& genDegrees,
              const SparseMatrix& relationImage);

  const Multidegree& degree() const { return degree_; }
  std::size_t dim() const { return cokernel_.dim(); }
  std::size_t ambientDim() const { return cokernel_.ambientDim(); }

  /// Ambient coordinate of generator k times monomial exps (or -1 when
  /// exps does not have degree d - genDeg_k).
  std::int64_t ambientIndex(std::size_t k, const Exponents& exps) const;
  std::size_t generatorOffset(std::size_t k) const { return offsets_[k]; }
  /// Lift of the j-th basis vector.
  const GeneratorMonomial& basisLift(std::size_t j) const { return lifts_[j]; }
  /// Coordinates in the basis of the class of an ambient vector.
  SparseVector project(const SparseVector& ambient) const { return cokernel_.project(ambient); }

private:
  Multidegree degree_;
  ProductSpace space_;
  std::vector<std::size_t> offsets_;
  std::vector<Multidegree> genDegrees_;
  CokernelProjection cokernel_;
  std::vector<GeneratorMonomial> lifts_;
};

class PresentedModule {
public:
  PresentedModule(ProductSpace space, std::vector<Multidegree> genDegrees,
                  std::vector<Multidegree> colDegrees, std::vector<RelationEntry> relations);

  /// (+)_k S(-degrees_k)
  static PresentedModule free(const ProductSpace& space, std::vector<Multidegree> degrees);

  const ProductSpace& space() const { return space_; }
  const std::vector<Multidegree>& generatorDegrees() const { return genDegrees_; }
  const std::vector<Multidegree>& relationDegrees() const { return colDegrees_; }
  const std::vector<RelationEntry>& relations() const { return relations_; }
  std::size_t numGenerators() const { return genDegrees_.size(); }
  std::size_t numRelations() const { return colDegrees_.size(); }

  /// Cached; safe to call from several threads.
  std::shared_ptr<const GradedPiece> gradedPiece(const Multidegree& d) const;
  std::size_t dim(const Multidegree& d) const { return gradedPiece(d)->dim(); }

  /// Matrix of M_d -> M_{d+e_i}, m |-> x_var * m, for var in group i.
  SparseMatrix variableAction(const Multidegree& d, std::size_t var) const;
  /// W_i (x) M_d -> M_{d+e_i}: column block j is multiplication by x_(i,j).
  SparseMatrix multiplicationMap(const Multidegree& d, std::size_t i) const;

  /// Degree-d realization of the relation matrix (ambient rows).
  SparseMatrix relationImage(const Multidegree& d) const;

  friend bool operator==(const PresentedModule& a, const PresentedModule& b);

private:
  struct Cache {
    std::mutex mutex;
    std::map<Multidegree, std::shared_ptr<const GradedPiece>, LexLess> pieces;
  };

  ProductSpace space_;
  std::vector<Multidegree> genDegrees_;
  std::vector<Multidegree> colDegrees_;
  std::vector<RelationEntry> relations_;
  std::vector<std::vector<std::size_t>> columnEntries_; // col -> indices into relations_
  std::shared_ptr<Cache> cache_;
};

/// twist(M, a)_d = M_{d+a}
PresentedModule twist(const PresentedModule& m, const Multidegree& a);
PresentedModule directSum(const PresentedModule& a, const PresentedModule& b);

/// coker of the row of all variables: the residue field k, concentrated in
/// degree 0.
PresentedModule residueFieldModule(const ProductSpace& space);

/// ker(vars S), presented by the Koszul complex:
/// generators Lambda^2 of the variables, relations the third Koszul map.
PresentedModule koszulKernelModule(const ProductSpace& space);

/// d |-> dim M_d for low <= d <= high
std::map<Multidegree, std::uint64_t, LexLess>
hilbertFunctionBox(const PresentedModule& m, const Multidegree& low, const Multidegree& high);

} // namespace tate
