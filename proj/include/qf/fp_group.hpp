#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qf/permgroup.hpp"

namespace qf {

inline constexpr std::size_t kDefaultCosetCap = 100000;

/// Word in a free group: nonzero letters, +k for generator k-1, -k for its
/// inverse.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word inverse_word(const Word& w);

struct GroupPresentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;  // stored freely reduced

  int generator_count() const { return static_cast<int>(generator_names.size()); }
};

/// Relators are freely reduced and letters range-checked on construction.
GroupPresentation make_presentation(std::vector<std::string> names,
                                    std::vector<Word> relators);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<long long> torsion;  // each divides the next

  bool operator==(const AbelianInvariants&) const = default;
};

/// Invariant factors of the abelianized group, via Smith normal form of the
/// relator exponent matrix over arbitrary-precision integers.
AbelianInvariants abelianization(const GroupPresentation& P);

struct CosetTable {
  int cosets = 0;
  std::vector<std::vector<int>> action;      // per generator, coset permutation
  std::vector<std::vector<int>> inv_action;  // per generator
  std::vector<Word> subgroup_generators;
};

/// Todd-Coxeter coset enumeration (HLT strategy, immediate coincidence
/// processing, deterministic scan order). Throws CapExceeded when more than
/// max_cosets cosets would be needed.
CosetTable todd_coxeter(const GroupPresentation& P, const std::vector<Word>& subgens,
                        std::size_t max_cosets = kDefaultCosetCap);

PermutationGroup coset_table_to_permutation_rep(const CosetTable& t);

}  // namespace qf
