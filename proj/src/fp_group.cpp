#include "qf/fp_group.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <deque>

#include "qf/errors.hpp"

namespace qf {

using boost::multiprecision::cpp_int;

Word free_reduce(Word w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

GroupPresentation make_presentation(std::vector<std::string> names,
                                    std::vector<Word> relators) {
  int g = static_cast<int>(names.size());
  for (Word& r : relators) {
    for (int letter : r)
      if (letter == 0 || letter > g || letter < -g)
        throw MalformedInput("relator letter out of range");
    r = free_reduce(std::move(r));
  }
  return GroupPresentation{std::move(names), std::move(relators)};
}

namespace {

// Smith normal form diagonal of an integer matrix; nonzero entries form a
// divisibility chain d1 | d2 | ...
std::vector<cpp_int> smith_diagonal(std::vector<std::vector<cpp_int>> M) {
  std::size_t rows = M.size();
  std::size_t cols = rows ? M[0].size() : 0;
  std::vector<cpp_int> diag;
  std::size_t r = 0, c = 0;
  while (r < rows && c < cols) {
    // pivot: smallest nonzero absolute value in the submatrix
    std::size_t pr = rows, pc = cols;
    cpp_int best = 0;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = c; j < cols; ++j)
        if (M[i][j] != 0 && (best == 0 || abs(M[i][j]) < best)) {
          best = abs(M[i][j]);
          pr = i;
          pc = j;
        }
    if (pr == rows) break;  // submatrix is zero
    std::swap(M[r], M[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(M[i][c], M[i][pc]);

    bool clean = true;
    for (std::size_t i = r + 1; i < rows; ++i)
      if (M[i][c] != 0) {
        cpp_int q = M[i][c] / M[r][c];
        for (std::size_t j = c; j < cols; ++j) M[i][j] -= q * M[r][j];
        if (M[i][c] != 0) clean = false;
      }
    for (std::size_t j = c + 1; j < cols; ++j)
      if (M[r][j] != 0) {
        cpp_int q = M[r][j] / M[r][c];
        for (std::size_t i = r; i < rows; ++i) M[i][j] -= q * M[i][c];
        if (M[r][j] != 0) clean = false;
      }
    if (!clean) continue;  // repeat with a smaller pivot

    // pivot must divide every remaining entry for the invariant-factor chain
    bool divides_all = true;
    for (std::size_t i = r + 1; i < rows && divides_all; ++i)
      for (std::size_t j = c + 1; j < cols; ++j)
        if (M[i][j] % M[r][c] != 0) {
          for (std::size_t jj = c; jj < cols; ++jj) M[r][jj] += M[i][jj];
          divides_all = false;
          break;
        }
    if (!divides_all) continue;

    diag.push_back(abs(M[r][c]));
    ++r;
    ++c;
  }
  return diag;
}

}  // namespace

AbelianInvariants abelianization(const GroupPresentation& P) {
  int g = P.generator_count();
  std::vector<std::vector<cpp_int>> M;
  for (const Word& r : P.relators) {
    std::vector<cpp_int> row(g, 0);
    for (int letter : r) {
      if (letter > 0)
        row[letter - 1] += 1;
      else
        row[-letter - 1] -= 1;
    }
    M.push_back(std::move(row));
  }

  AbelianInvariants inv;
  if (M.empty()) {
    inv.free_rank = g;
    return inv;
  }
  std::vector<cpp_int> diag = smith_diagonal(std::move(M));
  inv.free_rank = g - static_cast<int>(diag.size());
  for (const cpp_int& d : diag)
    if (d > 1) inv.torsion.push_back(d.convert_to<long long>());
  return inv;
}

namespace {

// HLT enumerator. Cosets are rows; columns are 2*gen for the generator
// and 2*gen+1 for its inverse.
class Enumerator {
 public:
  Enumerator(const GroupPresentation& P, const std::vector<Word>& subgens,
             std::size_t max_cosets)
      : ngens_(P.generator_count()), cap_(max_cosets) {
    for (const Word& r : P.relators)
      if (!r.empty()) relators_.push_back(r);
    for (const Word& w : subgens) subgens_.push_back(free_reduce(w));
    new_coset();  // coset 0
  }

  CosetTable run() {
    for (const Word& w : subgens_) scan_and_fill(0, w);
    process_coincidences();
    // coincidences can undefine entries on cosets already passed, so sweep
    // until a pass changes nothing and the table is complete
    while (true) {
      bool changed = false;
      for (std::size_t alpha = 0; alpha < table_.size(); ++alpha) {
        if (!alive(alpha)) continue;
        for (const Word& r : relators_) {
          changed |= scan_and_fill(static_cast<int>(alpha), r);
          process_coincidences();
          if (!alive(alpha)) break;
        }
        if (!alive(alpha)) continue;
        for (int col = 0; col < 2 * ngens_; ++col)
          if (table_[alpha][col] < 0) {
            define(static_cast<int>(alpha), col);
            changed = true;
            process_coincidences();
            if (!alive(alpha)) break;
          }
      }
      if (!changed && complete()) break;
      if (!changed) throw CapExceeded("coset enumeration stalled");
    }
    return compress();
  }

  bool complete() const {
    for (std::size_t x = 0; x < table_.size(); ++x) {
      if (!alive(x)) continue;
      for (int col = 0; col < 2 * ngens_; ++col)
        if (table_[x][col] < 0) return false;
    }
    return true;
  }

 private:
  static int column(int letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
  }
  static int inverse_column(int col) { return col ^ 1; }

  bool alive(std::size_t x) const { return rep_[x] == static_cast<int>(x); }

  int find(int x) {
    while (rep_[x] != x) x = rep_[x] = rep_[rep_[x]];
    return x;
  }

  std::size_t new_coset() {
    if (table_.size() >= cap_)
      throw CapExceeded("coset enumeration exceeded the coset cap");
    table_.emplace_back(2 * ngens_, -1);
    rep_.push_back(static_cast<int>(rep_.size()));
    return table_.size() - 1;
  }

  void set(int alpha, int col, int beta) {
    table_[alpha][col] = beta;
    table_[beta][inverse_column(col)] = alpha;
  }

  void define(int alpha, int col) {
    int beta = static_cast<int>(new_coset());
    set(alpha, col, beta);
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep_[b] = a;
    queue_.push_back(b);
  }

  void process_coincidences() {
    while (!queue_.empty()) {
      int gamma = queue_.front();
      queue_.pop_front();
      for (int col = 0; col < 2 * ngens_; ++col) {
        int delta = table_[gamma][col];
        if (delta < 0) continue;
        table_[gamma][col] = -1;
        table_[delta][inverse_column(col)] = -1;
        int mu = find(gamma);
        int nu = find(delta);
        if (table_[mu][col] >= 0)
          merge(nu, find(table_[mu][col]));
        else if (table_[nu][inverse_column(col)] >= 0)
          merge(mu, find(table_[nu][inverse_column(col)]));
        else
          set(mu, col, nu);
      }
    }
  }

  bool scan_and_fill(int alpha, const Word& w) {
    alpha = find(alpha);
    int front = alpha, back = alpha;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    bool changed = false;
    while (true) {
      // scan forward as far as defined
      while (i <= j && table_[front][column(w[i])] >= 0)
        front = find(table_[front][column(w[i++])]);
      if (i > j) {
        if (front != back) {
          merge(front, back);
          changed = true;
        }
        return changed;
      }
      // scan backward as far as defined
      while (j >= i && table_[back][inverse_column(column(w[j]))] >= 0)
        back = find(table_[back][inverse_column(column(w[j--]))]);
      if (j < i) {
        if (front != back) {
          merge(front, back);
          changed = true;
        }
        return changed;
      }
      if (j == i) {  // one gap: close it (deduction)
        set(front, column(w[i]), back);
        return true;
      }
      define(front, column(w[i]));
      changed = true;
    }
  }

  CosetTable compress() {
    std::vector<int> index(table_.size(), -1);
    int count = 0;
    for (std::size_t x = 0; x < table_.size(); ++x)
      if (alive(x)) index[x] = count++;

    CosetTable result;
    result.cosets = count;
    result.action.assign(ngens_, std::vector<int>(count, -1));
    result.inv_action.assign(ngens_, std::vector<int>(count, -1));
    for (std::size_t x = 0; x < table_.size(); ++x) {
      if (!alive(x)) continue;
      for (int g = 0; g < ngens_; ++g) {
        int fwd = table_[x][2 * g];
        int bwd = table_[x][2 * g + 1];
        if (fwd < 0 || bwd < 0)
          throw CapExceeded("incomplete coset table after enumeration");
        result.action[g][index[x]] = index[find(fwd)];
        result.inv_action[g][index[x]] = index[find(bwd)];
      }
    }
    result.subgroup_generators = subgens_;
    return result;
  }

  int ngens_;
  std::size_t cap_;
  std::vector<Word> relators_;
  std::vector<Word> subgens_;
  std::vector<std::vector<int>> table_;
  std::vector<int> rep_;
  std::deque<int> queue_;
};

}  // namespace

CosetTable todd_coxeter(const GroupPresentation& P, const std::vector<Word>& subgens,
                        std::size_t max_cosets) {
  if (max_cosets < 1) throw MalformedInput("max_cosets must be at least 1");
  Enumerator e(P, subgens, max_cosets);
  return e.run();
}

PermutationGroup coset_table_to_permutation_rep(const CosetTable& t) {
  std::vector<Perm> gens;
  for (const auto& a : t.action) gens.push_back(a);
  return PermutationGroup(t.cosets, std::move(gens));
}

}  // namespace qf
