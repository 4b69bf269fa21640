#pragma once

// Artin braid group B_n: words, permutations, left-greedy normal form,
// partial purity, strand removal and winding numbers around strand 1.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deer {

  // One letter sigma_index^sign, index in [1, n-1].
  struct artin_letter {
    int index = 1;
    int sign  = 1;

    friend bool operator==(artin_letter const&, artin_letter const&) = default;
    friend auto operator<=>(artin_letter const&, artin_letter const&) = default;
  };

  class braid_word {
   public:
    braid_word() = default;

    explicit braid_word(int strands) : _strands(strands) {
      if (strands < 2) {
        throw std::invalid_argument("braid_word: need at least 2 strands");
      }
    }

    braid_word(int strands, std::vector<artin_letter> letters)
        : braid_word(strands) {
      for (auto const& l : letters) {
        push_back(l);
      }
    }

    [[nodiscard]] int strands() const noexcept {
      return _strands;
    }
    [[nodiscard]] std::vector<artin_letter> const& letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }

    void push_back(artin_letter l) {
      if (l.index < 1 || l.index > _strands - 1) {
        throw std::out_of_range("braid_word: generator index "
                                + std::to_string(l.index) + " out of range [1, "
                                + std::to_string(_strands - 1) + "]");
      }
      if (l.sign != 1 && l.sign != -1) {
        throw std::invalid_argument("braid_word: sign must be +1 or -1");
      }
      _letters.push_back(l);
    }

    // sigma_index^power, |power| copies.
    braid_word& append_power(int index, long power) {
      int const s = power < 0 ? -1 : 1;
      for (long k = 0; k < (power < 0 ? -power : power); ++k) {
        push_back({index, s});
      }
      return *this;
    }

    braid_word& operator*=(braid_word const& other) {
      check_same_strands(other);
      _letters.insert(_letters.end(), other._letters.begin(),
                      other._letters.end());
      return *this;
    }

    friend braid_word operator*(braid_word lhs, braid_word const& rhs) {
      lhs *= rhs;
      return lhs;
    }

    [[nodiscard]] braid_word inverse() const {
      braid_word result(_strands);
      result._letters.reserve(_letters.size());
      for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
        result._letters.push_back({it->index, -it->sign});
      }
      return result;
    }

    [[nodiscard]] braid_word power(long k) const {
      braid_word base = k < 0 ? inverse() : *this;
      braid_word result(_strands);
      for (long i = 0; i < (k < 0 ? -k : k); ++i) {
        result *= base;
      }
      return result;
    }

    // Cancels adjacent x x^-1 pairs.
    [[nodiscard]] braid_word freely_reduced() const {
      braid_word result(_strands);
      for (auto const& l : _letters) {
        if (!result._letters.empty() && result._letters.back().index == l.index
            && result._letters.back().sign == -l.sign) {
          result._letters.pop_back();
        } else {
          result._letters.push_back(l);
        }
      }
      return result;
    }

    void check_same_strands(braid_word const& other) const {
      if (other._strands != _strands) {
        throw std::invalid_argument("braid words on different strand counts ("
                                    + std::to_string(_strands) + " vs "
                                    + std::to_string(other._strands) + ")");
      }
    }

    friend bool operator==(braid_word const&, braid_word const&) = default;

   private:
    int                       _strands = 2;
    std::vector<artin_letter> _letters;
  };

  ////////////////////////////////////////////////////////////////////////
  // Permutations
  ////////////////////////////////////////////////////////////////////////

  // Strand starting at position i ends at position (*this)(i); positions are
  // 1-based in the public interface.
  class permutation {
   public:
    permutation() = default;

    static permutation identity(int n) {
      permutation p;
      p._images.resize(static_cast<std::size_t>(n));
      std::iota(p._images.begin(), p._images.end(), 0);
      return p;
    }

    // From 1-based images.
    static permutation from_images(std::vector<int> const& images) {
      permutation p;
      int const   n = static_cast<int>(images.size());
      std::vector<bool> seen(images.size(), false);
      for (int x : images) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)]) {
          throw std::invalid_argument("permutation: images are not a bijection");
        }
        seen[static_cast<std::size_t>(x - 1)] = true;
        p._images.push_back(x - 1);
      }
      return p;
    }

    static permutation transposition(int n, int i, int j) {
      auto p = identity(n);
      std::swap(p._images[static_cast<std::size_t>(i - 1)],
                p._images[static_cast<std::size_t>(j - 1)]);
      return p;
    }

    [[nodiscard]] int size() const noexcept {
      return static_cast<int>(_images.size());
    }

    [[nodiscard]] int operator()(int i) const {
      return _images.at(static_cast<std::size_t>(i - 1)) + 1;
    }

    [[nodiscard]] std::vector<int> images() const {
      std::vector<int> out;
      out.reserve(_images.size());
      for (int x : _images) {
        out.push_back(x + 1);
      }
      return out;
    }

    // Positions i, i+1 (1-based) are swapped after the current braid.
    void swap_positions(int i) {
      for (auto& x : _images) {
        if (x == i - 1) {
          x = i;
        } else if (x == i) {
          x = i - 1;
        }
      }
    }

    // (*this) then other, i.e. the permutation of the braid product.
    [[nodiscard]] permutation then(permutation const& other) const {
      permutation out;
      out._images.reserve(_images.size());
      for (int x : _images) {
        out._images.push_back(other._images.at(static_cast<std::size_t>(x)));
      }
      return out;
    }

    [[nodiscard]] permutation inverse() const {
      permutation out;
      out._images.resize(_images.size());
      for (std::size_t i = 0; i < _images.size(); ++i) {
        out._images[static_cast<std::size_t>(_images[i])] = static_cast<int>(i);
      }
      return out;
    }

    [[nodiscard]] bool is_identity() const noexcept {
      for (std::size_t i = 0; i < _images.size(); ++i) {
        if (_images[i] != static_cast<int>(i)) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(permutation const&, permutation const&) = default;

   private:
    std::vector<int> _images;  // 0-based
  };

  [[nodiscard]] inline permutation induced_permutation(braid_word const& w) {
    auto p = permutation::identity(w.strands());
    for (auto const& l : w.letters()) {
      p.swap_positions(l.index);
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Left-greedy normal form
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // A permutation braid stored as 0-based images: strand starting at
    // position p ends at position perm[p].
    using simple = std::vector<int>;

    inline simple identity_simple(int n) {
      simple s(static_cast<std::size_t>(n));
      std::iota(s.begin(), s.end(), 0);
      return s;
    }

    inline simple delta_simple(int n) {
      simple s(static_cast<std::size_t>(n));
      for (int p = 0; p < n; ++p) {
        s[static_cast<std::size_t>(p)] = n - 1 - p;
      }
      return s;
    }

    inline bool is_identity(simple const& s) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != static_cast<int>(i)) {
          return false;
        }
      }
      return true;
    }

    inline bool is_delta(simple const& s) {
      int const n = static_cast<int>(s.size());
      for (int p = 0; p < n; ++p) {
        if (s[static_cast<std::size_t>(p)] != n - 1 - p) {
          return false;
        }
      }
      return true;
    }

    // Delta X Delta^-1.
    inline simple flip(simple const& s) {
      int const n = static_cast<int>(s.size());
      simple    out(s.size());
      for (int p = 0; p < n; ++p) {
        out[static_cast<std::size_t>(p)]
            = n - 1 - s[static_cast<std::size_t>(n - 1 - p)];
      }
      return out;
    }

    // sigma_i (0-based i) as a simple braid.
    inline simple sigma_simple(int n, int i) {
      auto s = identity_simple(n);
      std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i + 1)]);
      return s;
    }

    // Delta sigma_i^-1 (0-based i).
    inline simple delta_over_sigma(int n, int i) {
      simple s(static_cast<std::size_t>(n));
      for (int p = 0; p < n; ++p) {
        int q = n - 1 - p;
        if (q == i) {
          q = i + 1;
        } else if (q == i + 1) {
          q = i;
        }
        s[static_cast<std::size_t>(p)] = q;
      }
      return s;
    }

    // sigma_i is a left divisor: strands starting at i, i+1 cross.
    inline bool starts_with(simple const& s, int i) {
      return s[static_cast<std::size_t>(i)] > s[static_cast<std::size_t>(i + 1)];
    }

    // Moves letters from the front of b to the back of a until
    // starting set of b is contained in the finishing set of a.
    // Returns true if anything changed.
    inline bool make_left_weighted(simple& a, simple& b) {
      int const n       = static_cast<int>(a.size());
      bool      changed = false;
      simple    a_inv(a.size());
      for (;;) {
        for (int p = 0; p < n; ++p) {
          a_inv[static_cast<std::size_t>(a[static_cast<std::size_t>(p)])] = p;
        }
        int move = -1;
        for (int i = 0; i + 1 < n; ++i) {
          bool const a_finishes = a_inv[static_cast<std::size_t>(i)]
                                  > a_inv[static_cast<std::size_t>(i + 1)];
          if (starts_with(b, i) && !a_finishes) {
            move = i;
            break;
          }
        }
        if (move < 0) {
          return changed;
        }
        changed = true;
        // a := a sigma_move, b := sigma_move^-1 b
        for (auto& x : a) {
          if (x == move) {
            x = move + 1;
          } else if (x == move + 1) {
            x = move;
          }
        }
        std::swap(b[static_cast<std::size_t>(move)],
                  b[static_cast<std::size_t>(move + 1)]);
      }
    }

    inline void sweep_from(std::vector<simple>& factors, std::size_t last) {
      for (std::size_t j = last; j > 0; --j) {
        if (!make_left_weighted(factors[j - 1], factors[j])) {
          break;
        }
      }
    }
  }  // namespace detail

  // Delta^delta_power * factors[0] * ... ; every factor is a permutation braid
  // that is neither trivial nor Delta, consecutive factors left-weighted.
  struct normal_form {
    int                           strands      = 2;
    long                          delta_power  = 0;
    std::vector<std::vector<int>> factors;  // 0-based images

    friend bool operator==(normal_form const&, normal_form const&) = default;
    friend auto operator<=>(normal_form const&, normal_form const&) = default;

    [[nodiscard]] bool is_delta_power() const noexcept {
      return factors.empty();
    }

    // Length of the normal form as a positive word times Delta^p.
    [[nodiscard]] long canonical_length() const noexcept {
      long len = 0;
      for (auto const& f : factors) {
        for (std::size_t i = 0; i < f.size(); ++i) {
          for (std::size_t j = i + 1; j < f.size(); ++j) {
            len += f[i] > f[j] ? 1 : 0;
          }
        }
      }
      return len;
    }
  };

  // Cost is O(len^2 * n^2) in the worst case; usually close to linear in len.
  [[nodiscard]] inline normal_form compute_normal_form(braid_word const& w) {
    int const n = w.strands();
    // w = Delta^-k X_1 ... X_m; X_j must still be flipped (k_final - stamp_j)
    // times since each later Delta^-1 passes over it.
    long                                           k = 0;
    std::vector<std::pair<detail::simple, long>>   raw;
    raw.reserve(w.size());
    for (auto const& l : w.letters()) {
      if (l.sign > 0) {
        raw.emplace_back(detail::sigma_simple(n, l.index - 1), k);
      } else {
        ++k;
        raw.emplace_back(detail::delta_over_sigma(n, l.index - 1), k);
      }
    }

    std::vector<detail::simple> factors;
    factors.reserve(raw.size());
    for (auto& [s, stamp] : raw) {
      if ((k - stamp) % 2 != 0) {
        s = detail::flip(s);
      }
      factors.push_back(std::move(s));
      detail::sweep_from(factors, factors.size() - 1);
      while (!factors.empty() && detail::is_identity(factors.back())) {
        factors.pop_back();
      }
    }
    // A single sweep per insertion is sufficient in theory; confirm anyway.
    for (bool again = true; again;) {
      again = false;
      for (std::size_t j = factors.size(); j > 1; --j) {
        again = detail::make_left_weighted(factors[j - 2], factors[j - 1])
                || again;
      }
      while (!factors.empty() && detail::is_identity(factors.back())) {
        factors.pop_back();
      }
    }

    normal_form nf;
    nf.strands     = n;
    nf.delta_power = -k;
    std::size_t first = 0;
    while (first < factors.size() && detail::is_delta(factors[first])) {
      ++first;
      ++nf.delta_power;
    }
    for (std::size_t j = first; j < factors.size(); ++j) {
      if (!detail::is_identity(factors[j])) {
        nf.factors.push_back(std::move(factors[j]));
      }
    }
    return nf;
  }

  // Positive word for a permutation braid (0-based images).
  [[nodiscard]] inline braid_word simple_to_word(int                     n,
                                                 std::vector<int> const& perm) {
    braid_word out(n);
    auto       cur = perm;
    // Peel left divisors off until trivial.
    for (bool progress = true; progress;) {
      progress = false;
      for (int i = 0; i + 1 < n; ++i) {
        if (detail::starts_with(cur, i)) {
          out.push_back({i + 1, 1});
          std::swap(cur[static_cast<std::size_t>(i)],
                    cur[static_cast<std::size_t>(i + 1)]);
          progress = true;
          break;
        }
      }
    }
    return out;
  }

  [[nodiscard]] inline braid_word to_word(normal_form const& nf) {
    int const  n = nf.strands;
    braid_word delta(n);
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = i; j >= 1; --j) {
        delta.push_back({j, 1});
      }
    }
    braid_word out = delta.power(nf.delta_power);
    for (auto const& f : nf.factors) {
      out *= simple_to_word(n, f);
    }
    return out;
  }

  [[nodiscard]] inline bool equal(braid_word const& u, braid_word const& v) {
    u.check_same_strands(v);
    return compute_normal_form(u) == compute_normal_form(v);
  }

  [[nodiscard]] inline bool is_trivial(braid_word const& w) {
    return compute_normal_form(w) == normal_form{w.strands(), 0, {}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Purity, strand removal, winding
  ////////////////////////////////////////////////////////////////////////

  // P-pure: the induced permutation fixes every strand in P (1-based).
  [[nodiscard]] inline bool is_pure(braid_word const& w, std::set<int> const& P) {
    auto const perm = induced_permutation(w);
    for (int i : P) {
      if (i < 1 || i > w.strands()) {
        throw std::out_of_range("is_pure: strand " + std::to_string(i)
                                + " out of range");
      }
      if (perm(i) != i) {
        return false;
      }
    }
    return true;
  }

  // Keeps the strands that start at the positions in keep; every crossing
  // touching a deleted strand disappears. Output is freely reduced.
  [[nodiscard]] inline braid_word remove_strands(braid_word const&    w,
                                                 std::set<int> const& keep) {
    int const n = w.strands();
    if (keep.empty() || *keep.begin() < 1 || *keep.rbegin() > n) {
      throw std::out_of_range("remove_strands: keep set must be a nonempty "
                              "subset of the strands");
    }
    if (keep.size() < 2) {
      throw std::invalid_argument(
          "remove_strands: result needs at least 2 strands");
    }
    // at[p] = starting position of the strand currently at position p.
    std::vector<int> at(static_cast<std::size_t>(n));
    std::iota(at.begin(), at.end(), 1);
    braid_word out(static_cast<int>(keep.size()));
    for (auto const& l : w.letters()) {
      auto const i = static_cast<std::size_t>(l.index - 1);
      if (keep.contains(at[i]) && keep.contains(at[i + 1])) {
        int rank = 0;
        for (std::size_t p = 0; p < i; ++p) {
          rank += keep.contains(at[p]) ? 1 : 0;
        }
        out.push_back({rank + 1, l.sign});
      }
      std::swap(at[i], at[i + 1]);
    }
    return out.freely_reduced();
  }

  [[nodiscard]] inline bool is_straight(braid_word const&    w,
                                        std::set<int> const& P) {
    if (!is_pure(w, P)) {
      return false;
    }
    if (P.size() < 2) {
      return true;
    }
    return is_trivial(remove_strands(w, P));
  }

  // Winding number around the first strand of a 1-pure braid: half the signed
  // number of crossings involving the strand that starts at position 1.
  [[nodiscard]] inline long winding(braid_word const& w) {
    if (!is_pure(w, {1})) {
      throw std::domain_error("winding: braid is not 1-pure");
    }
    int  pos = 1;
    long sum = 0;
    for (auto const& l : w.letters()) {
      if (l.index == pos) {
        sum += l.sign;
        pos = pos + 1;
      } else if (l.index == pos - 1) {
        sum += l.sign;
        pos = pos - 1;
      }
    }
    return sum / 2;
  }

  ////////////////////////////////////////////////////////////////////////
  // Named braids on n = r + 1 strands
  ////////////////////////////////////////////////////////////////////////

  enum class named { delta, epsilon, epsilon1, half_twist, full_twist };

  [[nodiscard]] inline braid_word named_braid(named which, int n) {
    if (n < 3) {
      throw std::invalid_argument("named_braid: need n = r + 1 >= 3");
    }
    int const  r = n - 1;
    braid_word w(n);
    switch (which) {
      case named::delta:  // sigma_r ... sigma_1
        for (int j = r; j >= 1; --j) {
          w.push_back({j, 1});
        }
        break;
      case named::epsilon:  // delta sigma_1
        w = named_braid(named::delta, n);
        w.push_back({1, 1});
        break;
      case named::epsilon1:  // (sigma_r ... sigma_1) sigma_1 sigma_2
        w = named_braid(named::delta, n);
        w.push_back({1, 1});
        w.push_back({2, 1});
        break;
      case named::half_twist:  // sigma_1 (sigma_2 sigma_1) ... (sigma_r ... sigma_1)
        for (int i = 1; i <= r; ++i) {
          for (int j = i; j >= 1; --j) {
            w.push_back({j, 1});
          }
        }
        break;
      case named::full_twist:
        w = named_braid(named::half_twist, n).power(2);
        break;
    }
    return w;
  }

}  // namespace deer
