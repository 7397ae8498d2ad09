#pragma once

#include <vector>

#include "qstir/bipoly.hpp"
#include "qstir/rgword.hpp"
#include "qstir/rookboard.hpp"
#include "qstir/stirling.hpp"

namespace qstir {

/// Element of C(n,m) = union over k of AR(n, n-k) x A(k, m): an allowable
/// placement of n-k rooks on the length-n board together with an allowable
/// word of length k and maximum letter m.  The level k is w.size().
struct PairC {
  RookPlacement T;
  RGWord w;
};

/// Element of D(n,m) = union over k of A(n, k) x AR(k, k-m): an allowable
/// word of length n and maximum letter k together with an allowable
/// placement of k-m rooks on the length-k board.  The level k is
/// w.max_letter().
struct PairD {
  RGWord w;
  RookPlacement T;
};

/// Signed weight (-1)^{n-k} wt_rook(T) wt'(w).
BiPoly weight(const PairC& p, int n);
/// Signed weight (-1)^{k-m} wt'(w) wt_rook(T).
BiPoly weight(const PairD& p, int m);

/// Membership checks for the component sets; throw std::invalid_argument
/// on violation.
void validate_member(const PairC& p, int n, int m);
void validate_member(const PairD& p, int n, int m);

/// The weight-negating involution on C(n,m), n > m: either the rightmost
/// rook becomes a letter inserted after position l1 of w, or the first
/// repeated letter becomes a rook in the right-to-left column l2.  Shifts
/// the level k by +-1; the result is membership-validated.
PairC involution_phi(const PairC& p, int n, int m);

/// The weight-negating involution on D(n,m), n > m: either the last
/// repeated letter is raised past the running maximum and a rook records
/// it, or the leftmost rook is folded back into the word and its column
/// deleted (re-coordinatized onto a fresh length k-1 board).
PairD involution_psi(const PairD& p, int n, int m);

std::vector<PairC> build_C(int n, int m);
std::vector<PairD> build_D(int n, int m);

/// Orthogonality: both delta identities from the recurrence
/// tables for all 0 <= m <= n <= n_max, and for n <= min(n_max, 7) the
/// bijective route: phi and psi are fixed-point-free weight-negating
/// involutions and the total signed weights of C(n,m), D(n,m) vanish.
Report verify_orthogonality(int n_max);

}  // namespace qstir
