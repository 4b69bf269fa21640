#pragma once

// Monomial matrices over the de-th roots of unity: the reflection group
// G(de,e,r), generator matrices, projection of words, closure by BFS,
// degrees, codegrees and regular numbers.
//
// Convention: column i has its unique nonzero entry zeta^{exps[i]} in row
// perm[i] (0-based). zeta is a primitive root of order `modulus`.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "deer_group.hpp"

namespace deer {

  class monomial_matrix {
   public:
    monomial_matrix() = default;

    static monomial_matrix identity(int size, int modulus) {
      monomial_matrix m;
      m._modulus = modulus;
      m._perm.resize(static_cast<std::size_t>(size));
      std::iota(m._perm.begin(), m._perm.end(), 0);
      m._exps.assign(static_cast<std::size_t>(size), 0);
      return m;
    }

    monomial_matrix(std::vector<int> perm, std::vector<int> exps, int modulus)
        : _perm(std::move(perm)), _exps(std::move(exps)), _modulus(modulus) {
      if (_perm.size() != _exps.size() || modulus < 1) {
        throw std::invalid_argument("monomial_matrix: inconsistent data");
      }
      std::vector<bool> seen(_perm.size(), false);
      for (int x : _perm) {
        if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)]) {
          throw std::invalid_argument("monomial_matrix: not a permutation");
        }
        seen[static_cast<std::size_t>(x)] = true;
      }
      for (auto& a : _exps) {
        a = static_cast<int>(mod(a, _modulus));
      }
    }

    [[nodiscard]] int size() const noexcept {
      return static_cast<int>(_perm.size());
    }
    [[nodiscard]] int modulus() const noexcept {
      return _modulus;
    }
    [[nodiscard]] std::vector<int> const& perm() const noexcept {
      return _perm;
    }
    [[nodiscard]] std::vector<int> const& exps() const noexcept {
      return _exps;
    }

    // Exponent of the (row, col) entry, or -1 for a zero entry.
    [[nodiscard]] int entry(int row, int col) const {
      return _perm.at(static_cast<std::size_t>(col)) == row
                 ? _exps[static_cast<std::size_t>(col)]
                 : -1;
    }

    [[nodiscard]] long exponent_sum() const noexcept {
      return mod(std::accumulate(_exps.begin(), _exps.end(), 0L), _modulus);
    }

    // Matrix product (*this) * n.
    friend monomial_matrix operator*(monomial_matrix const& m, monomial_matrix const& n) {
      if (m.size() != n.size() || m._modulus != n._modulus) {
        throw std::invalid_argument("monomial_matrix: shape mismatch");
      }
      monomial_matrix out;
      out._modulus = m._modulus;
      out._perm.resize(m._perm.size());
      out._exps.resize(m._exps.size());
      for (std::size_t i = 0; i < m._perm.size(); ++i) {
        auto const j = static_cast<std::size_t>(n._perm[i]);
        out._perm[i] = m._perm[j];
        out._exps[i] = static_cast<int>(mod(n._exps[i] + m._exps[j], m._modulus));
      }
      return out;
    }

    [[nodiscard]] monomial_matrix inverse() const {
      monomial_matrix out;
      out._modulus = _modulus;
      out._perm.resize(_perm.size());
      out._exps.resize(_exps.size());
      for (std::size_t i = 0; i < _perm.size(); ++i) {
        auto const pi = static_cast<std::size_t>(_perm[i]);
        out._perm[pi] = static_cast<int>(i);
        out._exps[pi] = static_cast<int>(mod(-_exps[i], _modulus));
      }
      return out;
    }

    [[nodiscard]] bool is_identity() const noexcept {
      for (std::size_t i = 0; i < _perm.size(); ++i) {
        if (_perm[i] != static_cast<int>(i) || _exps[i] != 0) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(monomial_matrix const&, monomial_matrix const&) = default;

    // Packs perm and exps into one integer key (base modulus*size digits).
    [[nodiscard]] std::uint64_t key() const noexcept {
      std::uint64_t k    = 0;
      auto const    base = static_cast<std::uint64_t>(_modulus) * _perm.size();
      for (std::size_t i = 0; i < _perm.size(); ++i) {
        k = k * base
            + static_cast<std::uint64_t>(_perm[i]) * static_cast<std::uint64_t>(_modulus)
            + static_cast<std::uint64_t>(_exps[i]);
      }
      return k;
    }

   private:
    std::vector<int> _perm;
    std::vector<int> _exps;
    int              _modulus = 1;
  };

  [[nodiscard]] inline std::string to_string(monomial_matrix const& m) {
    std::string out;
    for (int row = 0; row < m.size(); ++row) {
      out += row == 0 ? "[" : " ";
      for (int col = 0; col < m.size(); ++col) {
        int const a = m.entry(row, col);
        out += col == 0 ? "" : " ";
        out += a < 0 ? "0" : "z^" + std::to_string(a);
      }
      out += row + 1 == m.size() ? "]" : "\n";
    }
    return out;
  }

  // Generator matrices in G(de,e,r); with cyclic = true the modulus is e and
  // z is rejected (the group G(e,e,r)).
  [[nodiscard]] inline monomial_matrix gen_matrix(letter const& l, deer_params const& p,
                                                  bool cyclic = false) {
    validate(p);
    int const modulus = cyclic ? p.e : p.d * p.e;
    auto      m       = monomial_matrix::identity(p.r, modulus);
    auto      perm    = m.perm();
    auto      exps    = m.exps();
    switch (l.kind) {
      case gen_kind::z:
        if (cyclic) {
          throw std::invalid_argument("gen_matrix: no z in G(e,e,r)");
        }
        exps[0] = p.e;
        break;
      case gen_kind::t:
        std::swap(perm[0], perm[1]);
        exps[0] = l.index;
        exps[1] = -l.index;
        break;
      case gen_kind::s:
        if (l.index < 3 || l.index > p.r) {
          throw std::out_of_range("gen_matrix: s index out of range");
        }
        std::swap(perm[static_cast<std::size_t>(l.index - 2)],
                  perm[static_cast<std::size_t>(l.index - 1)]);
        break;
      case gen_kind::b:
        throw std::invalid_argument("gen_matrix: type B letter");
    }
    monomial_matrix g(perm, exps, modulus);
    return l.sign < 0 ? g.inverse() : g;
  }

  [[nodiscard]] inline monomial_matrix project(word const& w, deer_params const& p,
                                               bool cyclic = false) {
    auto m = monomial_matrix::identity(p.r, cyclic ? p.e : p.d * p.e);
    for (auto const& l : w) {
      m = m * gen_matrix(l, p, cyclic);
    }
    return m;
  }

  [[nodiscard]] inline monomial_matrix project(deer_word const& w) {
    return project(w.letters, w.params);
  }

  // (de)^r r! / e, the order of G(de,e,r).
  [[nodiscard]] inline long long expected_group_order(deer_params const& p) {
    long long n = 1;
    for (int k = 0; k < p.r; ++k) {
      n *= static_cast<long long>(p.d) * p.e;
    }
    for (int k = 2; k <= p.r; ++k) {
      n *= k;
    }
    return n / p.e;
  }

  // Size of the group generated by z, t_0, t_1, s_3..s_r.
  [[nodiscard]] inline long long group_order_bfs(deer_params const& p,
                                                 long long         cap = 10'000'000) {
    validate(p);
    std::vector<monomial_matrix> gens;
    for (auto const& l : group_generators(p.r)) {
      gens.push_back(gen_matrix(l, p));
    }
    auto                              id = monomial_matrix::identity(p.r, p.d * p.e);
    std::unordered_set<std::uint64_t> seen{id.key()};
    std::deque<monomial_matrix>       todo{id};
    while (!todo.empty()) {
      auto m = std::move(todo.front());
      todo.pop_front();
      for (auto const& g : gens) {
        auto n = m * g;
        if (seen.insert(n.key()).second) {
          if (static_cast<long long>(seen.size()) > cap) {
            throw std::length_error("group_order_bfs: cap of " + std::to_string(cap)
                                    + " elements exceeded");
          }
          todo.push_back(std::move(n));
        }
      }
    }
    return static_cast<long long>(seen.size());
  }

  struct degree_data {
    std::vector<int> degrees;
    std::vector<int> codegrees;
    int              coxeter_number = 0;
  };

  [[nodiscard]] inline degree_data degrees_codegrees(deer_params const& p) {
    if (p.d < 2 || p.e < 2 || p.r < 2) {
      throw std::invalid_argument("degrees_codegrees: need d, e, r >= 2");
    }
    degree_data out;
    for (int k = 1; k <= p.r - 1; ++k) {
      out.degrees.push_back(k * p.e);
    }
    out.degrees.push_back(p.r);
    for (int k = 0; k <= p.r - 1; ++k) {
      out.codegrees.push_back(k * p.e);
    }
    out.coxeter_number = p.e * (p.r - 1);
    return out;
  }

  struct regularity {
    bool regular = false;  // |A(p)| = |B(p)|
    int  a_count = 0;      // degrees divisible by p
    int  b_count = 0;      // codegrees divisible by p
    bool divides_r = false;
  };

  [[nodiscard]] inline regularity is_regular(int n, deer_params const& p) {
    if (n < 1) {
      throw std::invalid_argument("is_regular: p must be positive");
    }
    auto const  dc = degrees_codegrees(p);
    regularity  out;
    out.a_count = static_cast<int>(std::count_if(
        dc.degrees.begin(), dc.degrees.end(), [n](int x) { return x % n == 0; }));
    out.b_count = static_cast<int>(std::count_if(
        dc.codegrees.begin(), dc.codegrees.end(), [n](int x) { return x % n == 0; }));
    out.regular   = out.a_count == out.b_count;
    out.divides_r = p.r % n == 0;
    return out;
  }

}  // namespace deer
