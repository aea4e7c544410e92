// gf2linear.hpp -- row reduction of small GF(2) systems whose variables are
// the bits of one machine word (n <= 32 columns, a handful of rows).

#ifndef DPC_GF2LINEAR_HPP
#define DPC_GF2LINEAR_HPP

#include <cstdint>
#include <vector>

namespace dpc {

// A w = t with A given by row masks over the n variable bits of w.
struct Gf2System {
  int nvars = 0;
  std::vector<std::uint32_t> reduced_rows;  // one per pivot, pivot bits ascending
  std::vector<std::uint32_t> row_combo;     // combination of original rows
  std::vector<int> pivot_vars;
  std::vector<int> free_vars;

  Gf2System(int n, const std::vector<std::uint32_t>& rows) : nvars(n) {
    std::vector<std::uint32_t> work = rows;
    std::vector<std::uint32_t> combo(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) combo[r] = 1u << r;
    std::vector<bool> used(rows.size(), false);
    for (int v = 0; v < n; ++v) {
      std::size_t pivot = rows.size();
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (!used[r] && ((work[r] >> v) & 1)) {
          pivot = r;
          break;
        }
      if (pivot == rows.size()) {
        free_vars.push_back(v);
        continue;
      }
      used[pivot] = true;
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (r != pivot && ((work[r] >> v) & 1)) {
          work[r] ^= work[pivot];
          combo[r] ^= combo[pivot];
        }
      pivot_vars.push_back(v);
      reduced_rows.push_back(0);  // placeholder, filled below
      row_combo.push_back(0);
      reduced_rows.back() = work[pivot];
      row_combo.back() = combo[pivot];
    }
  }

  int rank() const { return static_cast<int>(pivot_vars.size()); }

  // Solution with all free variables zero; rhs bit r is the target of row r.
  // Valid whenever the system has full row rank.
  std::uint32_t particular(std::uint32_t rhs) const {
    std::uint32_t w = 0;
    for (std::size_t r = 0; r < pivot_vars.size(); ++r)
      if (__builtin_parity(row_combo[r] & rhs)) w |= 1u << pivot_vars[r];
    return w;
  }

  // Kernel basis aligned with free_vars: basis[j] has free_vars[j] set and
  // every other free variable clear.
  std::vector<std::uint32_t> kernel_basis() const {
    std::vector<std::uint32_t> basis;
    basis.reserve(free_vars.size());
    for (int fv : free_vars) {
      std::uint32_t w = 1u << fv;
      for (std::size_t r = 0; r < pivot_vars.size(); ++r)
        if ((reduced_rows[r] >> fv) & 1) w |= 1u << pivot_vars[r];
      basis.push_back(w);
    }
    return basis;
  }
};

}  // namespace dpc

#endif
