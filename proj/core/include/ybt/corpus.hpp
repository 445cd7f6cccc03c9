#pragma once

#include <vector>

#include "ybt/optable.hpp"
#include "ybt/sigma.hpp"

namespace ybt::corpus {

/// All 16 binary operations on {0,1}.
std::vector<OpTable> all_ops_on_2();

/// The self-distributive ones among them.
std::vector<OpTable> shelves_on_2();

/// Shelves on {0,1} with bijective right translations.
std::vector<OpTable> racks_on_2();

/// Trivial quandle, dihedral quandle, cyclic shifts and a transposition
/// rack on three elements.
std::vector<OpTable> curated_racks_on_3();

/// racks_on_2() together with curated_racks_on_3().
std::vector<OpTable> rack_corpus();

/// Exhaustive list of biracks on {0,1}.
std::vector<SigmaTable> all_biracks_on_2();

/// Flip, solutions from the curated racks, the mirrored dihedral solution
/// and commuting-permutation solutions on three elements.
std::vector<SigmaTable> curated_biracks_on_3();

/// all_biracks_on_2() together with curated_biracks_on_3().
std::vector<SigmaTable> birack_corpus();

/// Exhaustive list of braided sets on {0,1}, biracks or not.
std::vector<SigmaTable> all_braided_on_2();

/// birack_corpus() extended with non-invertible braided sets: monoid
/// solutions and solutions of non-rack shelves (Laver tables included).
std::vector<SigmaTable> braided_corpus();

}  // namespace ybt::corpus
