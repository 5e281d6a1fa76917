#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torsam/graded_pieces.hpp"
#include "torsam/hilbert.hpp"
#include "torsam/resolution.hpp"

namespace torsam {

// ---- degreewise route: F (free complex) tensored with a finite-length module

// C_i(d) = sum_j X_{d - t_j} with the matrix of d_i (x) X between degree-d pieces
DenseMatrix tensor_differential(const GradedMatrix& d, const GradedPieces& X, int degree);
int tensor_dim(const FreeModule& F, const GradedPieces& X, int degree);

// Tor_i(M, X) by degree, from a resolution of M; throws Inconclusive when the
// resolution is not known far enough for the requested index
std::map<int, long long> tor_by_degree(const FreeComplex& F, const GradedPieces& X, int i);
long long tor_length_degreewise(const FreeComplex& F, const GradedPieces& X, int i);

// X must have finite length
long long tor_length(const ModulePresentation& M, const ModulePresentation& X, int i);

// ---- module route: homology of complexes of finitely presented modules,
// measured by Hilbert series; works for arbitrary arguments

HilbertSeries tor_series(const ModulePresentation& M, const ModulePresentation& N, int i);
// Ext^i(A, M) via Hom(F(A), M)
HilbertSeries ext_series(const ModulePresentation& A, const ModulePresentation& M, int i);
// nullopt when Tor_i(M, N) has positive dimension
std::optional<long long> tor_length_general(const ModulePresentation& M, const ModulePresentation& N, int i);
bool tor_vanishes(const ModulePresentation& M, const ModulePresentation& N, int i);

// Bass number mu_i(M) = length Ext^i(k, M)
long long ext_bass(const ModulePresentation& M, int i);

struct WindowResult {
  long long length = 0;
  bool certified = false;  // homology vanished at both window ends
  int lo = 0, hi = 0;
};
WindowResult ext_bass_window(const ModulePresentation& M, int i, int lo, int hi);

// length Hom(L, X) for finite-length X
long long hom_length(const ModulePresentation& L, const ModulePresentation& X);

int ring_depth(const RingPtr& R);
bool is_gorenstein(const RingPtr& R);
bool projdim_finite(const ModulePresentation& M);

struct InjdimVerdict {
  bool finite = false;
  std::string method;  // "gorenstein" or "gap-probe"
  bool heuristic = false;
  int gap = 0;
  std::vector<long long> bass;  // mu_i for i = depth R + 1 .. depth R + gap (as far as computed)
};
// gorenstein: pass a known answer for the ring to skip recomputing it
InjdimVerdict injdim_finite(const ModulePresentation& M, int gap, std::optional<bool> gorenstein = std::nullopt);

// ---- induced maps on Tor(k, -)

struct InducedMapBlock {
  int i = 0;
  int degree = 0;
  int source_dim = 0;
  int target_dim = 0;
  int rank = 0;
  DenseMatrix matrix;  // target coordinates per column
};

struct InducedMapReport {
  int n = 0;
  int i_max = 0;
  std::vector<InducedMapBlock> blocks;
  std::vector<char> injective;  // per i
  bool all_injective() const;
};

// Tor_i(k, N) -> Tor_i(k, N / m^{n+1} N) for i <= i_max
InducedMapReport induced_tor_map(const ModulePresentation& N, int n, int i_max);

// is Tor_i(k, m^s N) -> Tor_i(k, m^{s-1} N) zero for all i <= i_max
bool inclusion_map_vanishes(const ModulePresentation& N, int s, int i_max);

// ---- Tor tables over families

enum class FamilyKind { quotient_ring, quotient_module, power_module };

struct Family {
  FamilyKind kind = FamilyKind::quotient_ring;
  std::vector<Poly> ideal;  // quotient_ring only; empty = maximal ideal
  std::optional<ModulePresentation> module;
  std::string description;
};

Family residue_powers(const RingPtr& R);  // R / m^{n+1}
ModulePresentation family_member(const Family& fam, const RingPtr& R, int n);

struct TorTable {
  std::vector<int> i_values;
  int n_max = 0;
  std::vector<std::vector<long long>> lengths;  // [index of i][n]
  std::string family;
  int resolution_index = 0;  // how far the resolution of M was computed
  long long at(int i, int n) const;
};

TorTable tor_table(const ModulePresentation& M, const Family& fam, const std::vector<int>& i_values,
                   int n_max);

}  // namespace torsam
