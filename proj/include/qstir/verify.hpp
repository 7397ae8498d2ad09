#pragma once

#include "qstir/poset.hpp"
#include "qstir/stirling.hpp"

namespace qstir {

/// Enumeration/statistic identities against the recurrence tables, plus the
/// paper's count tables and closed forms.  Default sweep depth 9.
Report verify_statistics(int n_max = 9);

/// Poset construction, Morse matchings, acyclicity, unmatched generating
/// functions and Boolean decompositions over all instances with parameters
/// up to n_max (default 7).
Report verify_posets(int n_max = 7,
                     std::size_t max_elements = kDefaultMaxElements);

/// Chain complexes, Smith normal form homology, and the closed-form /
/// unmatched-count cross-checks, parameters up to n_max (default 7).
Report verify_homology(int n_max = 7,
                       std::size_t max_elements = kDefaultMaxElements);

/// (q,t)-layer identities: the q,t-integers, the two-variable recurrences
/// against the enumeration definitions, and the generating polynomials
/// (default 8).
Report verify_identities(int n_max = 8);

/// Everything above plus orthogonality, each at its default depth when
/// n_max < 0, otherwise at n_max.
Report verify_all(int n_max = -1,
                  std::size_t max_elements = kDefaultMaxElements);

}  // namespace qstir
