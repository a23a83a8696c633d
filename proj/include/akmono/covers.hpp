#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "akmono/heisenberg.hpp"
#include "akmono/matrix.hpp"
#include "akmono/words.hpp"

namespace akmono {

// Finite deck group given by an explicit multiplication table. Elements are
// 0..n-1 with 0 the identity.
struct FinGroup {
  int n = 1;
  std::vector<int> mul_, inv_;
  std::vector<std::string> names;
  std::string label;

  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n + b]; }
  int inv(int a) const { return inv_[a]; }
  int order_of(int a) const;
  int pow(int a, long k) const;

  static std::shared_ptr<FinGroup> trivial();
  static std::shared_ptr<FinGroup> cyclic(int m, const std::string& gen);
  static std::shared_ptr<FinGroup> cyclic2(int m);
  static std::shared_ptr<FinGroup> heisenberg(int m);
};

// Classifying data of a regular cover of the punctured genus-g0 surface:
// images of the generators e_i, f_i; the puncture word maps to the product
// of commutators of the images. fill = pass to the closed (branched) cover.
struct CoverSpec {
  int g0 = 2;
  std::shared_ptr<FinGroup> G;
  std::vector<int> im_e, im_f;
  bool fill = false;
  std::string name;

  int im_c() const;
  bool surjective() const;

  // the tower over X: deck groups H, H^ab, <sigma>, 1
  static CoverSpec W(int g0, int m, bool fill);
  static CoverSpec V(int g0, int m, bool fill);
  static CoverSpec Y(int g0, int m, bool fill);
  static CoverSpec base(int g0, bool fill);
};

// Lifted boundary path of a 2-cell: list of (chain index, +-1).
using CellPath = std::vector<std::pair<int, int>>;

// H_1 of the cover as an exact Q-vector space with deck action, computed from
// the equivariant chain complex of the two-vertex cell structure
// (vertices v, w; edges a_i, b_i at v, arc e: v -> w, puncture loop c at w;
// one polygon per sheet). Filling attaches one disk per puncture.
class HomologyModule {
 public:
  explicit HomologyModule(const CoverSpec& spec);

  const CoverSpec& spec() const { return spec_; }
  int g0() const { return spec_.g0; }
  int group_order() const { return nG_; }
  int dim() const { return dimH1_; }
  int chain_dim() const { return nChain_; }
  int dim_h0() const { return dimH0_; }
  const std::vector<CellPath>& faces() const { return faces_; }
  int n_polygon_faces() const { return nG_; }

  // cell layout
  int edge_types() const { return 2 * spec_.g0 + 2; }
  int chain_index(int g, int edge) const { return g * edge_types() + edge; }
  int cell_c() const { return 2 * spec_.g0; }
  int cell_e() const { return 2 * spec_.g0 + 1; }
  int hol_edge(int edge) const { return hol_[edge]; }

  QVec boundary(const QVec& chain) const;   // d_1, vector over vertices
  bool is_cycle(const QVec& chain) const;

  QVec class_of_chain(const QVec& chain) const;  // coordinates in the H1 basis
  QVec chain_of_class(const QVec& cls) const;
  QVec basis_chain(int j) const;

  QVec permute_chain(int g, const QVec& chain) const;  // left deck action
  QVec act(int g, const QVec& cls) const;
  QVec act(const GrElem& x, const QVec& cls) const;    // requires Heisenberg deck
  const QMat& deck_matrix(int g) const;                // cached
  Rat deck_trace(int g) const;

  // chain of an edge-path word based at the vertex v of the given sheet;
  // the c letter expands to e * c * e^{-1}
  QVec chain_of_word(const Word& w, int base_sheet = 0) const;
  int hol_word(const Word& w) const;

  // class of the closed lift of w; throws std::domain_error naming the
  // obstructing deck element if the image of w is nontrivial
  QVec lift_class(const Word& w, int base_sheet = 0) const;

  // named generator classes: component of the preimage of E_i / F_i through
  // the identity sheet (lift of e_i^ord / f_i^ord)
  QVec class_E(int i) const;
  QVec class_F(int i) const;

  // classes of the G-curves across the branch cuts (requires fill)
  QVec class_Gh() const;
  QVec class_Gv() const;

  // puncture (kernel) classes: one cycle per puncture of the open cover
  std::vector<QVec> puncture_cycles() const;

 private:
  CoverSpec spec_;
  int nG_, nChain_, nVert_, dimH0_, dimH1_;
  std::vector<int> hol_;     // per edge type
  std::vector<CellPath> faces_;
  Rref Z1_;                  // cycle space rows (nZ x nChain)
  Rref rel_;                 // boundary(+puncture) relations in Z1 coords
  std::vector<int> hfree_;   // rel-free coordinates = H1 basis
  mutable std::map<int, QMat> deck_cache_;

  CellPath walk(const std::vector<int>& signed_edges, int base_sheet) const;
  QVec chain_of_path(const CellPath& p) const;
};

// true iff the left pushoff word maps to the identity in the deck group of
// the W cover (trivial (Z/m)^2 image and trivial residual central power)
bool clean_check(const CoverSpec& w_spec, const Word& w_l);

// Fox-calculus boundary row of the polygon: for each edge generator x of the
// presentation, the deck image of dr/dx. Used to cross-check the walked cell
// boundary.
std::vector<GrElem> fox_boundary_row_W(int g0, int m);

}  // namespace akmono
