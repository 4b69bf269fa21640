#pragma once

// Word reversing over positive homogeneous presentations, generic in the
// letter type L (needs ==, < and copy).

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deer {

  inline constexpr std::size_t default_fuel = 10000;

  // DEER_FUEL overrides the default when set to a positive integer.
  [[nodiscard]] inline std::size_t fuel_from_env(std::size_t fallback = default_fuel) {
    if (char const* s = std::getenv("DEER_FUEL")) {
      char*               end = nullptr;
      unsigned long long  v   = std::strtoull(s, &end, 10);
      if (end != s && *end == '\0' && v > 0) {
        return static_cast<std::size_t>(v);
      }
    }
    return fallback;
  }

  template <typename L>
  class positive_presentation {
   public:
    using word_type = std::vector<L>;
    using relation  = std::pair<word_type, word_type>;

    positive_presentation() = default;

    // Letters in boundary mark the edge of a truncated infinite family: a
    // missing relation involving them is reported as window exhaustion.
    positive_presentation(std::vector<L> generators, std::vector<relation> relations,
                          std::set<L> boundary = {})
        : _generators(std::move(generators)),
          _relations(std::move(relations)),
          _boundary(std::move(boundary)) {
      std::set<L> gens(_generators.begin(), _generators.end());
      if (gens.size() != _generators.size()) {
        throw std::invalid_argument("presentation: repeated generator");
      }
      for (auto const& [u, v] : _relations) {
        if (u.empty() || v.empty()) {
          throw std::invalid_argument("presentation: empty relation side");
        }
        if (u.size() != v.size()) {
          throw std::invalid_argument("presentation: relation is not homogeneous");
        }
        for (auto const* side : {&u, &v}) {
          for (auto const& x : *side) {
            if (!gens.contains(x)) {
              throw std::invalid_argument("presentation: relation uses a letter "
                                          "outside the generators");
            }
          }
        }
        if (u.front() == v.front()) {
          _complemented = false;
          continue;
        }
        auto key  = std::pair{u.front(), v.front()};
        auto rkey = std::pair{v.front(), u.front()};
        if (_complement.contains(key)) {
          _complemented = false;
          continue;
        }
        _complement.emplace(key, word_type(u.begin() + 1, u.end()));
        _complement.emplace(rkey, word_type(v.begin() + 1, v.end()));
      }
    }

    [[nodiscard]] std::vector<L> const& generators() const noexcept {
      return _generators;
    }
    [[nodiscard]] std::vector<relation> const& relations() const noexcept {
      return _relations;
    }
    [[nodiscard]] std::set<L> const& boundary() const noexcept {
      return _boundary;
    }

    // At most one relation x... = y... per pair and none of the form x... = x....
    [[nodiscard]] bool is_right_complemented() const noexcept {
      return _complemented;
    }

    // f(x, y) with x f(x,y) = y f(y,x) a defining relation, if any.
    [[nodiscard]] word_type const* complement(L const& x, L const& y) const {
      auto it = _complement.find({x, y});
      return it == _complement.end() ? nullptr : &it->second;
    }

    [[nodiscard]] bool is_boundary(L const& x) const {
      return _boundary.contains(x);
    }

    // Same generators, every relation word reversed.
    [[nodiscard]] positive_presentation mirrored() const {
      std::vector<relation> rels;
      rels.reserve(_relations.size());
      for (auto const& [u, v] : _relations) {
        rels.emplace_back(word_type(u.rbegin(), u.rend()),
                          word_type(v.rbegin(), v.rend()));
      }
      return positive_presentation(_generators, std::move(rels), _boundary);
    }

   private:
    std::vector<L>                         _generators;
    std::vector<relation>                  _relations;
    std::set<L>                            _boundary;
    std::map<std::pair<L, L>, word_type>   _complement;
    bool                                   _complemented = true;
  };

  enum class reversal_status { completed, stuck, window_exhausted, fuel_exhausted };

  [[nodiscard]] inline char const* to_string(reversal_status s) noexcept {
    switch (s) {
      case reversal_status::completed:
        return "completed";
      case reversal_status::stuck:
        return "stuck";
      case reversal_status::window_exhausted:
        return "window_exhausted";
      case reversal_status::fuel_exhausted:
        return "fuel_exhausted";
    }
    return "?";
  }

  // A letter with a sign flag, as appearing in a mixed word u^-1 v.
  template <typename L>
  struct signed_letter {
    L    letter;
    bool inverted = false;

    friend bool operator==(signed_letter const&, signed_letter const&) = default;
  };

  // For input (u, v): Completed carries (v', u') with u v' = v u' in the monoid.
  template <typename L>
  struct reversal_outcome {
    reversal_status                           status = reversal_status::completed;
    std::vector<L>                            left_complement;   // v'
    std::vector<L>                            right_complement;  // u'
    std::size_t                               position = 0;      // stuck position
    std::size_t                               steps    = 0;
    std::vector<std::vector<signed_letter<L>>> trace;

    [[nodiscard]] bool completed() const noexcept {
      return status == reversal_status::completed;
    }
    [[nodiscard]] bool trivial() const noexcept {
      return completed() && left_complement.empty() && right_complement.empty();
    }
  };

  struct reversal_options {
    std::size_t fuel         = default_fuel;
    bool        record_trace = false;
  };

  // Rewrites u^-1 v, always at the leftmost x^-1 y factor.
  template <typename L>
  [[nodiscard]] reversal_outcome<L> right_reverse(std::vector<L> const&          u,
                                                  std::vector<L> const&          v,
                                                  positive_presentation<L> const& p,
                                                  reversal_options const& opt = {}) {
    using sl = signed_letter<L>;
    std::vector<sl> w;
    w.reserve(u.size() + v.size());
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
      w.push_back({*it, true});
    }
    for (auto const& x : v) {
      w.push_back({x, false});
    }
    reversal_outcome<L> out;
    if (opt.record_trace) {
      out.trace.push_back(w);
    }
    std::size_t i = 0;
    for (;;) {
      while (i + 1 < w.size() && !(w[i].inverted && !w[i + 1].inverted)) {
        ++i;
      }
      if (i + 1 >= w.size()) {
        break;
      }
      if (out.steps >= opt.fuel) {
        out.status = reversal_status::fuel_exhausted;
        return out;
      }
      L const x = w[i].letter;
      L const y = w[i + 1].letter;
      std::vector<sl> repl;
      if (!(x == y)) {
        auto const* fxy = p.complement(x, y);
        auto const* fyx = p.complement(y, x);
        if (fxy == nullptr || fyx == nullptr) {
          out.status   = (p.is_boundary(x) || p.is_boundary(y))
                             ? reversal_status::window_exhausted
                             : reversal_status::stuck;
          out.position = i;
          return out;
        }
        for (auto const& a : *fxy) {
          repl.push_back({a, false});
        }
        for (auto it = fyx->rbegin(); it != fyx->rend(); ++it) {
          repl.push_back({*it, true});
        }
      }
      w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + 2));
      w.insert(w.begin() + static_cast<long>(i), repl.begin(), repl.end());
      ++out.steps;
      if (opt.record_trace) {
        out.trace.push_back(w);
      }
      i = i == 0 ? 0 : i - 1;
    }
    for (auto const& s : w) {
      if (!s.inverted) {
        out.left_complement.push_back(s.letter);
      }
    }
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (it->inverted) {
        out.right_complement.push_back(it->letter);
      }
    }
    return out;
  }

  // Rewrites u v^-1 into v''^-1 u'' with v'' u = u'' v; returned as
  // (left_complement = v'', right_complement = u'').
  template <typename L>
  [[nodiscard]] reversal_outcome<L> left_reverse(std::vector<L> const&          u,
                                                 std::vector<L> const&          v,
                                                 positive_presentation<L> const& mirror,
                                                 reversal_options const& opt = {}) {
    auto out = right_reverse(std::vector<L>(u.rbegin(), u.rend()),
                             std::vector<L>(v.rbegin(), v.rend()), mirror, opt);
    std::reverse(out.left_complement.begin(), out.left_complement.end());
    std::reverse(out.right_complement.begin(), out.right_complement.end());
    return out;
  }

  enum class verdict { equal, not_equal, inconclusive };

  [[nodiscard]] inline char const* to_string(verdict v) noexcept {
    switch (v) {
      case verdict::equal:
        return "equal";
      case verdict::not_equal:
        return "not_equal";
      case verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
  }

  // Decides equality in the monoid; sound for complemented presentations,
  // complete for complete ones.
  template <typename L>
  [[nodiscard]] verdict monoid_equal(std::vector<L> const&          u,
                                     std::vector<L> const&          v,
                                     positive_presentation<L> const& p,
                                     reversal_options const&        opt = {}) {
    if (u.size() != v.size()) {
      return verdict::not_equal;
    }
    auto out = right_reverse(u, v, p, opt);
    switch (out.status) {
      case reversal_status::completed:
        return out.trivial() ? verdict::equal : verdict::not_equal;
      case reversal_status::stuck:
        return verdict::not_equal;
      default:
        return verdict::inconclusive;
    }
  }

  template <typename L>
  struct lcm_result {
    reversal_status status = reversal_status::completed;
    std::vector<L>  lcm;
    std::vector<L>  complement_u;  // u complement_u = lcm
    std::vector<L>  complement_v;  // v complement_v = lcm
  };

  template <typename L>
  [[nodiscard]] lcm_result<L> right_lcm(std::vector<L> const&          u,
                                        std::vector<L> const&          v,
                                        positive_presentation<L> const& p,
                                        reversal_options const&        opt = {}) {
    auto          out = right_reverse(u, v, p, opt);
    lcm_result<L> res;
    res.status = out.status;
    if (out.completed()) {
      res.complement_u = out.left_complement;
      res.complement_v = out.right_complement;
      res.lcm          = u;
      res.lcm.insert(res.lcm.end(), res.complement_u.begin(), res.complement_u.end());
    }
    return res;
  }

  template <typename L>
  struct cube_entry {
    L           x, y, z;
    std::string detail;
  };

  template <typename L>
  struct cube_report {
    std::vector<cube_entry<L>> failures;
    std::vector<cube_entry<L>> inconclusive;
    std::size_t                triples_checked = 0;
    std::size_t                vacuous         = 0;

    [[nodiscard]] bool passes() const noexcept {
      return failures.empty() && inconclusive.empty();
    }
  };

  // For every ordered triple of distinct letters, U = (x\y)\(x\z) and
  // V = (y\x)\(y\z) must satisfy U^-1 V ~> empty, where a\b is the left
  // complement produced by reversing a^-1 b. Triples where a complement does
  // not exist on either side are vacuous.
  template <typename L>
  [[nodiscard]] cube_report<L> cube_condition(positive_presentation<L> const& p,
                                              std::vector<L> const&          letters,
                                              reversal_options const&        opt = {}) {
    if (!p.is_right_complemented()) {
      throw std::invalid_argument("cube_condition: presentation is not "
                                  "right-complemented");
    }
    cube_report<L> rep;
    enum class cstate { ok, undefined, exhausted };
    auto under = [&](std::vector<L> const& a, std::vector<L> const& b,
                     std::vector<L>& res) {
      auto o = right_reverse(a, b, p, opt);
      if (o.completed()) {
        res = std::move(o.left_complement);
        return cstate::ok;
      }
      return o.status == reversal_status::stuck ? cstate::undefined
                                                : cstate::exhausted;
    };
    for (auto const& x : letters) {
      for (auto const& y : letters) {
        for (auto const& z : letters) {
          if (x == y || y == z || x == z) {
            continue;
          }
          ++rep.triples_checked;
          std::vector<L> xy, xz, yx, yz, U, V;
          cstate         st[6];
          st[0] = under({x}, {y}, xy);
          st[1] = under({x}, {z}, xz);
          st[2] = under({y}, {x}, yx);
          st[3] = under({y}, {z}, yz);
          bool exhausted = false, undefined = false;
          for (int k = 0; k < 4; ++k) {
            exhausted = exhausted || st[k] == cstate::exhausted;
            undefined = undefined || st[k] == cstate::undefined;
          }
          if (exhausted) {
            rep.inconclusive.push_back({x, y, z, "complement of letters exhausted"});
            continue;
          }
          if (undefined) {
            ++rep.vacuous;
            continue;
          }
          st[4] = under(xy, xz, U);
          st[5] = under(yx, yz, V);
          if (st[4] == cstate::exhausted || st[5] == cstate::exhausted) {
            rep.inconclusive.push_back({x, y, z, "iterated complement exhausted"});
            continue;
          }
          if (st[4] == cstate::undefined && st[5] == cstate::undefined) {
            ++rep.vacuous;
            continue;
          }
          if (st[4] != st[5]) {
            rep.failures.push_back({x, y, z, "iterated complement defined on one "
                                             "side only"});
            continue;
          }
          auto o = right_reverse(U, V, p, opt);
          if (o.status == reversal_status::window_exhausted
              || o.status == reversal_status::fuel_exhausted) {
            rep.inconclusive.push_back({x, y, z, "final reversal exhausted"});
          } else if (!o.trivial()) {
            rep.failures.push_back({x, y, z, "U^-1 V does not reverse to empty"});
          }
        }
      }
    }
    return rep;
  }

}  // namespace deer
