#pragma once

// The Garside element Lambda = (A t_1 t_0)^{r-1} of B+(oo,oo,r), the
// elements z^p Lambda^q of B+(de,e,r), divisor enumeration inside an index
// window, and doubly checked structural identities.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "deer_group.hpp"
#include "monoids.hpp"

namespace deer {

  [[nodiscard]] inline word lambda_element(int r) {
    if (r < 2) {
      throw std::invalid_argument("lambda_element: need r >= 2");
    }
    return at1t0_power(r, r - 1);
  }

  [[nodiscard]] inline bool has_z(word const& w) {
    return std::any_of(w.begin(), w.end(),
                       [](letter const& l) { return l.kind == gen_kind::z; });
  }

  // Shortlex order on words.
  [[nodiscard]] inline bool shortlex_less(word const& a, word const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  // Embedding normal form; equal keys iff equal group elements.
  [[nodiscard]] inline normal_form element_key(deer_params const& p, word const& w) {
    return compute_normal_form(embed(deer_word{p, w}));
  }

  struct identity_check {
    std::string label;
    word        lhs;
    word        rhs;
    verdict     monoid    = verdict::inconclusive;
    bool        embedding = false;

    [[nodiscard]] bool passed() const noexcept {
      return monoid == verdict::equal && embedding;
    }
  };

  // Checks lhs = rhs by reversing in the positive monoid and by the embedding.
  [[nodiscard]] inline identity_check double_check(std::string label, word lhs,
                                                   word rhs, deer_params const& p,
                                                   windowed_monoid const&  m,
                                                   reversal_options const& opt = {}) {
    identity_check c{std::move(label), std::move(lhs), std::move(rhs)};
    c.monoid    = m.equal(c.lhs, c.rhs, opt);
    c.embedding = equal(embed(deer_word{p, c.lhs}), embed(deer_word{p, c.rhs}));
    return c;
  }

  enum class garside_identity {
    alt_factorization,
    twist_commutation,
    local_shift_t,
    local_shift_s,
    psi_embedding
  };

  inline std::optional<garside_identity> garside_identity_from(std::string const& s) {
    static std::map<std::string, garside_identity> const names{
        {"alt_factorization", garside_identity::alt_factorization},
        {"twist_commutation", garside_identity::twist_commutation},
        {"local_shift_t", garside_identity::local_shift_t},
        {"local_shift_s", garside_identity::local_shift_s},
        {"psi_embedding", garside_identity::psi_embedding}};
    auto it = names.find(s);
    return it == names.end() ? std::nullopt : std::optional(it->second);
  }

  struct garside_args {
    std::vector<letter> generators;  // twist_commutation; empty = window generators
    int                 window = 3;
    int                 i      = 0;  // t index for local shifts
    int                 j      = 3;  // s index for local_shift_s
  };

  struct garside_report {
    std::vector<identity_check> checks;

    [[nodiscard]] bool passed() const noexcept {
      return std::all_of(checks.begin(), checks.end(),
                         [](identity_check const& c) { return c.passed(); });
    }
    [[nodiscard]] bool inconclusive() const noexcept {
      return std::any_of(checks.begin(), checks.end(), [](identity_check const& c) {
        return c.monoid == verdict::inconclusive;
      });
    }
  };

  // t_{-N}..t_N, s_3..s_r
  [[nodiscard]] inline std::vector<letter> window_generators(int r, int N,
                                                             bool with_z = false) {
    std::vector<letter> out;
    if (with_z) {
      out.push_back(Z());
    }
    for (int i = -N; i <= N; ++i) {
      out.push_back(T(i));
    }
    for (int j = 3; j <= r; ++j) {
      out.push_back(S(j));
    }
    return out;
  }

  namespace detail {
    // psi: b_1 -> t_1 t_0, b_k -> s_{k+1}
    inline word psi_image(int k) {
      return k == 1 ? word{T(1), T(0)} : word{S(k + 1)};
    }
  }  // namespace detail

  [[nodiscard]] inline garside_report
  verify_garside_identity(garside_identity id, int r, garside_args const& args = {},
                          reversal_options const& opt = {}) {
    if (r < 2) {
      throw std::invalid_argument("verify_garside_identity: need r >= 2");
    }
    deer_params const p{2, 1, r};
    windowed_monoid   m(r);
    garside_report    rep;
    auto const        lam = lambda_element(r);
    auto add = [&](std::string label, word lhs, word rhs) {
      rep.checks.push_back(double_check(std::move(label), std::move(lhs),
                                        std::move(rhs), p, m, opt));
    };
    switch (id) {
      case garside_identity::alt_factorization: {
        word rhs;
        for (int i = r; i >= 1; --i) {
          rhs = concat(rhs, at_block(r, i));
        }
        add("Lambda = (A t_r)...(A t_1)", lam, rhs);
        break;
      }
      case garside_identity::twist_commutation: {
        auto gens = args.generators.empty() ? window_generators(r, args.window)
                                            : args.generators;
        for (auto const& g : gens) {
          letter shifted = g;
          if (g.kind == gen_kind::t) {
            shifted.index += r;
          }
          add("Lambda " + to_string(g) + " = " + to_string(shifted) + " Lambda",
              concat(lam, {g}), concat({shifted}, lam));
        }
        break;
      }
      case garside_identity::local_shift_t: {
        if (r < 3) {
          throw std::invalid_argument("local_shift_t needs r >= 3");
        }
        auto at = at_block(r, args.i);
        add("t_i (A t_i) = (A t_i) s_3 [i=" + std::to_string(args.i) + "]",
            concat({T(args.i)}, at), concat(at, {S(3)}));
        break;
      }
      case garside_identity::local_shift_s: {
        if (args.j < 3 || args.j > r - 1) {
          throw std::invalid_argument("local_shift_s needs 3 <= j <= r-1");
        }
        auto at = at_block(r, args.i);
        add("s_j (A t_i) = (A t_i) s_{j+1} [i=" + std::to_string(args.i)
                + ", j=" + std::to_string(args.j) + "]",
            concat({S(args.j)}, at), concat(at, {S(args.j + 1)}));
        break;
      }
      case garside_identity::psi_embedding: {
        int const n = r - 1;  // type B rank
        for (int a = 1; a <= n; ++a) {
          for (int b = a + 1; b <= n; ++b) {
            auto       x = detail::psi_image(a);
            auto       y = detail::psi_image(b);
            auto const tag = "[b" + std::to_string(a) + ",b" + std::to_string(b) + "]";
            if (a == 1 && b == 2) {
              add("psi b1b2b1b2 = b2b1b2b1", concat(concat(x, y), concat(x, y)),
                  concat(concat(y, x), concat(y, x)));
            } else if (b == a + 1) {
              add("psi braid " + tag, concat(concat(x, y), x), concat(concat(y, x), y));
            } else {
              add("psi commute " + tag, concat(x, y), concat(y, x));
            }
          }
        }
        // psi of the type B Garside element (b_n ... b_1)^n is Lambda.
        word delta_b;
        for (int a = n; a >= 1; --a) {
          delta_b = concat(delta_b, detail::psi_image(a));
        }
        add("psi(Delta_B) = Lambda", power(delta_b, n), lam);
        break;
      }
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Divisors within a window
  ////////////////////////////////////////////////////////////////////////

  struct divisor_report {
    deer_params       params;
    word              element;
    int               window      = 0;
    std::size_t       length_cap  = 0;
    std::vector<word> left_divisors;   // shortlex order, canonical words
    std::vector<word> right_divisors;
    bool              equal_within_window = false;
    std::vector<std::string> exhausted;  // candidates left undecided
  };

  namespace detail {
    // Breadth-first search over divisors of w; each state is (divisor, cofactor).
    inline std::vector<word> divisor_search(deer_params const& p, word const& w,
                                            std::vector<letter> const& letters,
                                            std::size_t cap, windowed_monoid const& m,
                                            bool left, reversal_options const& opt,
                                            std::vector<std::string>& exhausted) {
      struct state {
        word d, c;
      };
      std::vector<word>      found{word{}};
      std::set<normal_form>  seen{element_key(p, {})};
      std::vector<state>     level{{{}, w}};
      for (std::size_t len = 1; len <= cap && !level.empty(); ++len) {
        std::vector<state> next;
        auto try_extend = [&](state const& s, letter const& x) {
          auto o = left ? m.reverse(word{x}, s.c, opt) : m.reverse_left(s.c, word{x}, opt);
          word d = left ? concat(s.d, {x}) : concat({x}, s.d);
          if (o.status == reversal_status::window_exhausted
              || o.status == reversal_status::fuel_exhausted) {
            exhausted.push_back(std::string(left ? "left " : "right ") + to_string(d)
                                + ": " + to_string(o.status));
            return;
          }
          bool const divides = o.completed()
                               && (left ? o.right_complement.empty()
                                        : o.left_complement.empty());
          if (!divides) {
            return;
          }
          if (seen.insert(element_key(p, d)).second) {
            next.push_back({d, left ? o.left_complement : o.right_complement});
          }
        };
        // Loop order makes the first word found for each element shortlex-minimal.
        if (left) {
          for (auto const& s : level) {
            for (auto const& x : letters) {
              try_extend(s, x);
            }
          }
        } else {
          for (auto const& x : letters) {
            for (auto const& s : level) {
              try_extend(s, x);
            }
          }
        }
        std::sort(next.begin(), next.end(),
                  [](state const& a, state const& b) { return a.d < b.d; });
        for (auto const& s : next) {
          found.push_back(s.d);
        }
        level = std::move(next);
      }
      return found;
    }
  }  // namespace detail

  // Left and right divisors of a positive word whose letters lie in the window
  // [-N, N]; exhaustive only relative to that window and the length cap.
  [[nodiscard]] inline divisor_report divisors(deer_params const& p, word const& w,
                                               int N, std::size_t length_cap,
                                               reversal_options const& opt = {}) {
    validate(p);
    if (!is_positive(w)) {
      throw std::invalid_argument("divisors: word must be positive");
    }
    for (auto const& l : w) {
      check_deer_letter(l, p);
    }
    bool const      z = has_z(w);
    windowed_monoid m(p.r, z, p.e, N + 1);
    auto const      letters = window_generators(p.r, N, z);
    divisor_report  rep{p, w, N, length_cap, {}, {}, false, {}};
    rep.left_divisors  = detail::divisor_search(p, w, letters, length_cap, m, true, opt,
                                                rep.exhausted);
    rep.right_divisors = detail::divisor_search(p, w, letters, length_cap, m, false,
                                                opt, rep.exhausted);
    std::set<normal_form> lk, rk;
    for (auto const& d : rep.left_divisors) {
      lk.insert(element_key(p, d));
    }
    for (auto const& d : rep.right_divisors) {
      rk.insert(element_key(p, d));
    }
    rep.equal_within_window = lk == rk;
    return rep;
  }

  struct garside_element_result {
    word lambda_power;
    deer_word element;
    bool      central          = false;
    bool      expected_central = false;  // p e = q r
  };

  [[nodiscard]] inline garside_element_result garside_element_deer(deer_params const& p,
                                                                   int zp, int q) {
    validate(p);
    if (zp < 1 || q < 1) {
      throw std::invalid_argument("garside_element_deer: exponents must be positive");
    }
    word w(static_cast<std::size_t>(zp), Z());
    auto lq = power(lambda_element(p.r), q);
    w       = concat(w, lq);
    garside_element_result res{lq, {p, w}};
    res.central          = is_central(res.element);
    res.expected_central = static_cast<long>(zp) * p.e == static_cast<long>(q) * p.r;
    return res;
  }

}  // namespace deer
