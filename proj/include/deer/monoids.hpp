#pragma once

// Positive presentations of B+(oo,oo,r), B+(e,e,r) and B+(de,e,r), the
// infinite t-families truncated to an index window.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <vector>

#include "deer_group.hpp"
#include "reversing.hpp"

namespace deer {

  using presentation = positive_presentation<letter>;

  namespace detail {
    inline void add_braid_relations_on_s(std::vector<presentation::relation>& rels,
                                         int                                  r) {
      for (int i = 3; i <= r; ++i) {
        for (int j = i + 1; j <= r; ++j) {
          if (j == i + 1) {
            rels.push_back({{S(i), S(j), S(i)}, {S(j), S(i), S(j)}});
          } else {
            rels.push_back({{S(i), S(j)}, {S(j), S(i)}});
          }
        }
      }
    }

    inline void add_t_s_relations(std::vector<presentation::relation>& rels,
                                  int ti, int r) {
      if (r >= 3) {
        rels.push_back({{S(3), T(ti), S(3)}, {T(ti), S(3), T(ti)}});
      }
      for (int j = 4; j <= r; ++j) {
        rels.push_back({{S(j), T(ti)}, {T(ti), S(j)}});
      }
    }
  }  // namespace detail

  // Generators t_{-N}..t_N, s_3..s_r; Q1 for all window pairs, Q2, Q3 and the
  // braid relations on S. With include_z, also z and the relations
  // z t_i = t_{i-e} z, z s_j = s_j z that stay inside the window.
  [[nodiscard]] inline presentation windowed_presentation(int r, int window,
                                                          bool include_z = false,
                                                          int  e         = 1) {
    if (r < 2 || window < 1 || e < 1) {
      throw std::invalid_argument("windowed_presentation: need r >= 2, window >= 1, "
                                  "e >= 1");
    }
    int const           N = window;
    std::vector<letter> gens;
    if (include_z) {
      gens.push_back(Z());
    }
    for (int i = -N; i <= N; ++i) {
      gens.push_back(T(i));
    }
    for (int j = 3; j <= r; ++j) {
      gens.push_back(S(j));
    }
    std::vector<presentation::relation> rels;
    for (int i = -N + 1; i <= N; ++i) {
      for (int j = i + 1; j <= N; ++j) {
        rels.push_back({{T(i), T(i - 1)}, {T(j), T(j - 1)}});
      }
    }
    for (int i = -N; i <= N; ++i) {
      detail::add_t_s_relations(rels, i, r);
    }
    detail::add_braid_relations_on_s(rels, r);
    std::set<letter> boundary{T(-N)};
    if (include_z) {
      for (int i = -N + e; i <= N; ++i) {
        rels.push_back({{Z(), T(i)}, {T(i - e), Z()}});
      }
      for (int j = 3; j <= r; ++j) {
        rels.push_back({{Z(), S(j)}, {S(j), Z()}});
      }
      for (int i = std::max(-N, N - e + 1); i <= N; ++i) {
        boundary.insert(T(i));
      }
    }
    return presentation(gens, rels, boundary);
  }

  // The finite presentation of B+(e,e,r): t_i for i in Z/e (stored 0..e-1).
  [[nodiscard]] inline presentation cyclic_presentation(int e, int r) {
    if (e < 2 || r < 2) {
      throw std::invalid_argument("cyclic_presentation: need e, r >= 2");
    }
    std::vector<letter> gens;
    for (int i = 0; i < e; ++i) {
      gens.push_back(T(i));
    }
    for (int j = 3; j <= r; ++j) {
      gens.push_back(S(j));
    }
    std::vector<presentation::relation> rels;
    for (int i = 0; i < e; ++i) {
      for (int j = i + 1; j < e; ++j) {
        rels.push_back({{T(i), T(static_cast<int>(mod(i - 1, e)))},
                        {T(j), T(static_cast<int>(mod(j - 1, e)))}});
      }
      detail::add_t_s_relations(rels, i, r);
    }
    detail::add_braid_relations_on_s(rels, r);
    return presentation(gens, rels);
  }

  [[nodiscard]] inline int max_t_index(word const& w) {
    int m = 0;
    for (auto const& l : w) {
      if (l.kind == gen_kind::t) {
        m = std::max(m, std::abs(l.index));
      }
    }
    return m;
  }

  // Reversing in B+(oo,oo,r) or B+(de,e,r) with a working window that grows
  // on demand; the cache keeps one presentation per window size.
  class windowed_monoid {
   public:
    static constexpr int max_window = 64;

    windowed_monoid(int r, bool include_z = false, int e = 1, int min_window = 1)
        : _r(r), _include_z(include_z), _e(e), _min_window(min_window) {}

    [[nodiscard]] int r() const noexcept {
      return _r;
    }

    [[nodiscard]] presentation const& at_window(int N) const {
      auto it = _cache.find(N);
      if (it == _cache.end()) {
        it = _cache
                 .emplace(N, std::make_unique<presentation>(
                                 windowed_presentation(_r, N, _include_z, _e)))
                 .first;
      }
      return *it->second;
    }

    [[nodiscard]] presentation const& mirror_at_window(int N) const {
      auto it = _mirror_cache.find(N);
      if (it == _mirror_cache.end()) {
        it = _mirror_cache
                 .emplace(N, std::make_unique<presentation>(at_window(N).mirrored()))
                 .first;
      }
      return *it->second;
    }

    [[nodiscard]] int initial_window(word const& u, word const& v) const {
      int const n = std::max(max_t_index(u), max_t_index(v))
                    + static_cast<int>(u.size() + v.size()) + 2 + _e;
      return std::clamp(n, _min_window, max_window);
    }

    [[nodiscard]] reversal_outcome<letter> reverse(word const& u, word const& v,
                                                   reversal_options const& opt = {},
                                                   int* used_window = nullptr) const {
      return run(u, v, opt, used_window, false);
    }

    [[nodiscard]] reversal_outcome<letter> reverse_left(word const& u, word const& v,
                                                        reversal_options const& opt = {},
                                                        int* used_window = nullptr) const {
      return run(u, v, opt, used_window, true);
    }

    [[nodiscard]] verdict equal(word const& u, word const& v,
                                reversal_options const& opt = {}) const {
      if (u.size() != v.size()) {
        return verdict::not_equal;
      }
      auto o = reverse(u, v, opt);
      switch (o.status) {
        case reversal_status::completed:
          return o.trivial() ? verdict::equal : verdict::not_equal;
        case reversal_status::stuck:
          return verdict::not_equal;
        default:
          return verdict::inconclusive;
      }
    }

   private:
    reversal_outcome<letter> run(word const& u, word const& v,
                                 reversal_options const& opt, int* used_window,
                                 bool left) const {
      int N = initial_window(u, v);
      for (;;) {
        auto o = left ? left_reverse(u, v, mirror_at_window(N), opt)
                      : right_reverse(u, v, at_window(N), opt);
        if (o.status != reversal_status::window_exhausted || N >= max_window) {
          if (used_window != nullptr) {
            *used_window = N;
          }
          return o;
        }
        N = std::min(2 * N, max_window);
      }
    }

    int                                                   _r;
    bool                                                  _include_z;
    int                                                   _e;
    int                                                   _min_window;
    mutable std::map<int, std::unique_ptr<presentation>> _cache;
    mutable std::map<int, std::unique_ptr<presentation>> _mirror_cache;
  };

}  // namespace deer
