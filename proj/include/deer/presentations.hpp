#pragma once

// Relation catalogs for every presentation used in the library, instantiated
// over an index window, and a verifier that checks each relation in a model:
// the braid embedding (exact), the monomial matrices of G(de,e,r) (exact for
// the reflection group), or the matrices of G(e,e,r) (necessary condition only
// for the braid group B(e,e,r)).

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin.hpp"
#include "deer_group.hpp"
#include "reflection.hpp"

namespace deer {

  enum class presentation_id {
    cp_eer,        // B(e,e,r), t_i for i in Z/e
    shi_inf,       // B(oo,oo,r) on t_0, t_1, S
    new_inf,       // B(oo,oo,r) on all t_i
    bmr_deer,      // B(de,e,r) on z, t_0, t_1, S
    new_deer,      // B(de,e,r) on z, all t_i, S
    g_deer,        // G(de,e,r) as a semidirect product
    atilde_deer,   // B(de,e,r) on z, s_1..s_r
    type_b,        // Artin group of type B_r
    atilde_artin   // Artin group of affine type A_{r-1}
  };

  inline std::vector<presentation_id> const& all_presentations() {
    static std::vector<presentation_id> const ids{
        presentation_id::cp_eer,   presentation_id::shi_inf,     presentation_id::new_inf,
        presentation_id::bmr_deer, presentation_id::new_deer,    presentation_id::g_deer,
        presentation_id::atilde_deer, presentation_id::type_b, presentation_id::atilde_artin};
    return ids;
  }

  [[nodiscard]] inline std::string to_string(presentation_id id) {
    switch (id) {
      case presentation_id::cp_eer:
        return "cp_eer";
      case presentation_id::shi_inf:
        return "shi_inf";
      case presentation_id::new_inf:
        return "new_inf";
      case presentation_id::bmr_deer:
        return "bmr_deer";
      case presentation_id::new_deer:
        return "new_deer";
      case presentation_id::g_deer:
        return "g_deer";
      case presentation_id::atilde_deer:
        return "atilde_deer";
      case presentation_id::type_b:
        return "type_b";
      case presentation_id::atilde_artin:
        return "atilde_artin";
    }
    return "?";
  }

  // Case-insensitive; underscores optional ("TypeB", "type_b", "CP_eer").
  inline std::optional<presentation_id> presentation_from(std::string s) {
    auto squash = [](std::string x) {
      std::string out;
      for (char c : x) {
        if (c != '_' && c != '-') {
          out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
      }
      return out;
    };
    s = squash(s);
    for (auto id : all_presentations()) {
      if (squash(to_string(id)) == s) {
        return id;
      }
    }
    return std::nullopt;
  }

  // Alphabet of the relation words: deer letters (z, t_i, s_j), affine
  // letters (z, s_1..s_r) or type B letters (b_1..b_r).
  enum class alphabet { deer, atilde, type_b };

  struct relation_instance {
    std::string label;
    word        lhs;
    word        rhs;
  };

  struct presentation_catalog {
    presentation_id                id;
    deer_params                    params;
    int                            window = 0;
    alphabet                       alpha  = alphabet::deer;
    std::vector<relation_instance> relations;
  };

  [[nodiscard]] inline int default_window(deer_params const& p) {
    return std::max(6, p.e + 2);
  }

  // <w>^k: the first k letters of w repeated cyclically.
  [[nodiscard]] inline word cyclic_power(word const& w, long k) {
    if (k < 0) {
      throw std::invalid_argument("cyclic_power: k must be non-negative");
    }
    if (k > 0 && w.empty()) {
      throw std::invalid_argument("cyclic_power: empty word");
    }
    word out;
    for (long n = 0; n < k; ++n) {
      out.push_back(w[static_cast<std::size_t>(n) % w.size()]);
    }
    return out;
  }

  namespace detail {
    inline std::string tag(std::string const& name, std::string const& k, long v) {
      return name + "[" + k + "=" + std::to_string(v) + "]";
    }
    inline std::string tag(std::string const& name, std::string const& k1, long v1,
                           std::string const& k2, long v2) {
      return name + "[" + k1 + "=" + std::to_string(v1) + "," + k2 + "="
             + std::to_string(v2) + "]";
    }

    inline void s_braid(std::vector<relation_instance>& out, int r) {
      for (int i = 3; i <= r; ++i) {
        for (int j = i + 1; j <= r; ++j) {
          if (j == i + 1) {
            out.push_back({tag("S", "i", i, "j", j), {S(i), S(j), S(i)}, {S(j), S(i), S(j)}});
          } else {
            out.push_back({tag("S", "i", i, "j", j), {S(i), S(j)}, {S(j), S(i)}});
          }
        }
      }
    }

    // Q1, Q2, Q3 with t indices taken from `indices` and t_{i-1} reduced by
    // `reduce` (identity over Z, mod m over Z/m).
    template <typename Reduce>
    void q123(std::vector<relation_instance>& out, std::vector<int> const& indices, int r,
              Reduce reduce) {
      for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
          int const i = indices[a], j = indices[b];
          out.push_back({tag("Q1", "i", i, "j", j), {T(i), T(reduce(i - 1))},
                         {T(j), T(reduce(j - 1))}});
        }
      }
      for (int i : indices) {
        if (r >= 3) {
          out.push_back({tag("Q2", "i", i), {S(3), T(i), S(3)}, {T(i), S(3), T(i)}});
        }
        for (int j = 4; j <= r; ++j) {
          out.push_back({tag("Q3", "i", i, "j", j), {S(j), T(i)}, {T(i), S(j)}});
        }
      }
    }

    inline std::vector<int> range(int lo, int hi) {
      std::vector<int> v;
      for (int i = lo; i <= hi; ++i) {
        v.push_back(i);
      }
      return v;
    }

    // P2, P3, P4 (shared by the Shi and BMR presentations under other names).
    inline void shi_relations(std::vector<relation_instance>& out, int r,
                              std::string const& p2, std::string const& p3,
                              std::string const& p4) {
      if (r >= 3) {
        for (int i = 0; i <= 1; ++i) {
          out.push_back({tag(p2, "i", i), {S(3), T(i), S(3)}, {T(i), S(3), T(i)}});
        }
      }
      for (int i = 0; i <= 1; ++i) {
        for (int j = 4; j <= r; ++j) {
          out.push_back({tag(p3, "i", i, "j", j), {S(j), T(i)}, {T(i), S(j)}});
        }
      }
      if (r >= 3) {
        word const tt{T(1), T(0)};
        out.push_back({p4, concat(concat({S(3)}, tt), concat({S(3)}, tt)),
                       concat(concat(tt, {S(3)}), concat(tt, {S(3)}))});
      }
    }

    // s_1 s_r s_{r-1} ... s_2 in the affine alphabet.
    inline word s1b(int r) {
      return concat({S(1)}, b_block(r));
    }
  }  // namespace detail

  [[nodiscard]] inline presentation_catalog catalog(presentation_id id, deer_params const& p,
                                                    int window) {
    validate(p);
    if (window < 1) {
      throw std::invalid_argument("catalog: window must be positive");
    }
    presentation_catalog c{id, p, window, alphabet::deer, {}};
    auto&                out = c.relations;
    int const            r   = p.r;
    int const            N   = window;
    auto const           Zi  = [](int x) { return x; };
    using detail::tag;
    switch (id) {
      case presentation_id::cp_eer: {
        if (p.e < 2) {
          throw std::invalid_argument("cp_eer needs e >= 2");
        }
        int const e = p.e;
        detail::q123(out, detail::range(0, e - 1), r,
                     [e](int x) { return static_cast<int>(mod(x, e)); });
        detail::s_braid(out, r);
        break;
      }
      case presentation_id::shi_inf:
        detail::shi_relations(out, r, "P2", "P3", "P4");
        detail::s_braid(out, r);
        break;
      case presentation_id::new_inf:
        detail::q123(out, detail::range(-N, N), r, Zi);
        detail::s_braid(out, r);
        break;
      case presentation_id::bmr_deer: {
        word const tt{T(1), T(0)};
        out.push_back({"R1", concat({Z()}, tt), concat(tt, {Z()})});
        out.push_back({"R2", concat({Z()}, cyclic_power(tt, p.e)),
                       concat({T(0), Z()}, cyclic_power(tt, p.e - 1L))});
        for (int j = 3; j <= r; ++j) {
          out.push_back({tag("R3", "j", j), {Z(), S(j)}, {S(j), Z()}});
        }
        detail::shi_relations(out, r, "R4", "R6", "R5");
        detail::s_braid(out, r);
        break;
      }
      case presentation_id::new_deer:
        detail::q123(out, detail::range(-N, N), r, Zi);
        for (int i = -N; i <= N; ++i) {
          out.push_back({tag("Q4", "i", i), {Z(), T(i)}, {T(i - p.e), Z()}});
        }
        for (int j = 3; j <= r; ++j) {
          out.push_back({tag("Q5", "j", j), {Z(), S(j)}, {S(j), Z()}});
        }
        detail::s_braid(out, r);
        break;
      case presentation_id::g_deer: {
        int const m = p.d * p.e;
        auto      red = [m](int x) { return static_cast<int>(mod(x, m)); };
        detail::q123(out, detail::range(0, m - 1), r, red);
        detail::s_braid(out, r);
        for (int i = 0; i < m; ++i) {
          out.push_back({tag("Z-T", "i", i), {Z(), T(i)}, {T(red(i - p.e)), Z()}});
        }
        for (int j = 3; j <= r; ++j) {
          out.push_back({tag("Z-S", "j", j), {Z(), S(j)}, {S(j), Z()}});
        }
        out.push_back({"order-z", word(static_cast<std::size_t>(p.d), Z()), {}});
        for (int i = 0; i < m; ++i) {
          out.push_back({tag("order-t", "i", i), {T(i), T(i)}, {}});
        }
        for (int j = 3; j <= r; ++j) {
          out.push_back({tag("order-s", "j", j), {S(j), S(j)}, {}});
        }
        break;
      }
      case presentation_id::atilde_deer:
      case presentation_id::atilde_artin: {
        require_atilde(p);
        c.alpha = alphabet::atilde;
        bool const deer = id == presentation_id::atilde_deer;
        for (int i = 1; i <= r; ++i) {
          for (int j = i + 1; j <= r; ++j) {
            long const diff = mod(i - j, r);
            bool const adjacent = diff == 1 || diff == r - 1;
            if (!adjacent) {
              out.push_back({tag(deer ? "A1" : "commute", "i", i, "j", j), {S(i), S(j)},
                             {S(j), S(i)}});
            } else if (!deer) {
              out.push_back({tag("braid", "i", i, "j", j), {S(i), S(j), S(i)},
                             {S(j), S(i), S(j)}});
            }
          }
        }
        if (!deer) {
          break;
        }
        for (int i = 1; i <= r; ++i) {
          int const n = i % r + 1;
          out.push_back({tag("A2", "i", i), {S(i), S(n), S(i)}, {S(n), S(i), S(n)}});
        }
        for (int i = 3; i <= r; ++i) {
          out.push_back({tag("A3", "i", i), {Z(), S(i)}, {S(i), Z()}});
        }
        auto const sb = detail::s1b(r);
        out.push_back({"A4", concat({Z()}, sb), concat(sb, {Z()})});
        long const h = static_cast<long>(p.e) * (r - 1);
        out.push_back({"A5", concat({Z()}, cyclic_power(sb, h)),
                       concat({S(2), Z()}, cyclic_power(sb, h - 1))});
        break;
      }
      case presentation_id::type_b:
        c.alpha = alphabet::type_b;
        for (int i = 1; i <= r; ++i) {
          for (int j = i + 1; j <= r; ++j) {
            if (i == 1 && j == 2) {
              out.push_back({"B[1,2]", {Bgen(1), Bgen(2), Bgen(1), Bgen(2)},
                             {Bgen(2), Bgen(1), Bgen(2), Bgen(1)}});
            } else if (j == i + 1) {
              out.push_back({tag("B", "i", i, "j", j), {Bgen(i), Bgen(j), Bgen(i)},
                             {Bgen(j), Bgen(i), Bgen(j)}});
            } else {
              out.push_back({tag("B", "i", i, "j", j), {Bgen(i), Bgen(j)},
                             {Bgen(j), Bgen(i)}});
            }
          }
        }
        break;
    }
    return c;
  }

  // b_1 -> sigma_1^2, b_i -> sigma_i in B_{r+1}.
  [[nodiscard]] inline braid_word embed_type_b(word const& w, int r) {
    braid_word out(r + 1);
    for (auto const& l : w) {
      if (l.kind != gen_kind::b || l.index < 1 || l.index > r) {
        throw std::invalid_argument("embed_type_b: letter " + to_string(l)
                                    + " is not a type B generator");
      }
      if (l.index == 1) {
        out.append_power(1, 2L * l.sign);
      } else {
        out.push_back({l.index, l.sign});
      }
    }
    return out;
  }

  enum class model { embedding, reflection_matrices, cyclic_matrices };

  [[nodiscard]] inline std::string to_string(model m) {
    switch (m) {
      case model::embedding:
        return "embedding";
      case model::reflection_matrices:
        return "matrices";
      case model::cyclic_matrices:
        return "quotient-matrices";
    }
    return "?";
  }

  [[nodiscard]] inline model model_for(presentation_id id) {
    switch (id) {
      case presentation_id::g_deer:
        return model::reflection_matrices;
      case presentation_id::cp_eer:
        return model::cyclic_matrices;
      default:
        return model::embedding;
    }
  }

  struct relation_result {
    std::string label;
    word        lhs;
    word        rhs;
    bool        holds = false;
    model       checked_in = model::embedding;
  };

  struct presentation_report {
    presentation_id              id;
    deer_params                  params;
    int                          window = 0;
    alphabet                     alpha  = alphabet::deer;
    std::vector<relation_result> relations;
    // True when the model is a proper quotient, so passing proves nothing
    // about the braid group itself.
    bool necessary_only = false;

    [[nodiscard]] bool passed() const noexcept {
      return std::all_of(relations.begin(), relations.end(),
                         [](relation_result const& r) { return r.holds; });
    }
  };

  [[nodiscard]] inline bool holds_in(model m, alphabet a, deer_params const& p,
                                     word const& lhs, word const& rhs) {
    switch (m) {
      case model::reflection_matrices:
        return project(lhs, p) == project(rhs, p);
      case model::cyclic_matrices:
        return project(lhs, p, true) == project(rhs, p, true);
      case model::embedding:
        break;
    }
    switch (a) {
      case alphabet::deer:
        return equal(embed(deer_word{p, lhs}), embed(deer_word{p, rhs}));
      case alphabet::atilde:
        return equal(embed(make_atilde_word(p, lhs)), embed(make_atilde_word(p, rhs)));
      case alphabet::type_b:
        return equal(embed_type_b(lhs, p.r), embed_type_b(rhs, p.r));
    }
    return false;
  }

  [[nodiscard]] inline presentation_report verify_presentation(presentation_id id,
                                                               deer_params const& p,
                                                               int window) {
    auto const          cat = catalog(id, p, window);
    presentation_report rep{id, p, window, cat.alpha, {}, false};
    auto const          m = model_for(id);
    rep.necessary_only    = m == model::cyclic_matrices;
    for (auto const& rel : cat.relations) {
      rep.relations.push_back(
          {rel.label, rel.lhs, rel.rhs, holds_in(m, cat.alpha, p, rel.lhs, rel.rhs), m});
    }
    return rep;
  }

  [[nodiscard]] inline presentation_report verify_presentation(presentation_id     id,
                                                               deer_params const& p) {
    return verify_presentation(id, p, default_window(p));
  }

  ////////////////////////////////////////////////////////////////////////
  // Affine generators against sigma_1
  ////////////////////////////////////////////////////////////////////////

  enum class affine_identity { commute_sigma1, tau_power };

  inline std::optional<affine_identity> affine_identity_from(std::string const& s) {
    if (s == "commute_sigma1") {
      return affine_identity::commute_sigma1;
    }
    if (s == "tau_power") {
      return affine_identity::tau_power;
    }
    return std::nullopt;
  }

  struct affine_check {
    std::string label;
    braid_word  lhs;
    braid_word  rhs;
    bool        holds = false;
  };

  // commute_sigma1: s_1B and s_j (3 <= j <= r) commute with sigma_1.
  // tau_power: tau^k(s_2) = <s_1B>^{k(r-1)} (<s_1B>^{k(r-1)-1})^-1, tau being
  // conjugation by sigma_1^2 (g -> sigma_1^-2 g sigma_1^2).
  [[nodiscard]] inline std::vector<affine_check> verify_affine_identity(affine_identity which,
                                                                        deer_params const& p,
                                                                        long k = 1) {
    require_atilde(p);
    int const                 n = p.r + 1;
    std::vector<affine_check> out;
    braid_word                s1(n);
    s1.push_back({1, 1});
    auto add = [&](std::string label, braid_word lhs, braid_word rhs) {
      bool const h = equal(lhs, rhs);
      out.push_back({std::move(label), std::move(lhs), std::move(rhs), h});
    };
    if (which == affine_identity::commute_sigma1) {
      std::vector<std::pair<std::string, word>> gens{{"s1B", detail::s1b(p.r)}};
      for (int j = 3; j <= p.r; ++j) {
        gens.push_back({"s" + std::to_string(j), {S(j)}});
      }
      for (auto const& [name, w] : gens) {
        auto g = embed(make_atilde_word(p, w));
        add(name + " sigma1 = sigma1 " + name, g * s1, s1 * g);
      }
      return out;
    }
    if (k < 1) {
      throw std::invalid_argument("tau_power identity needs k >= 1");
    }
    long const h   = k * (p.r - 1);
    auto const sb  = detail::s1b(p.r);
    auto const rhs = concat(cyclic_power(sb, h), inverse(cyclic_power(sb, h - 1)));
    braid_word conj(n);
    conj.append_power(1, -2 * k);
    conj *= embed(make_atilde_word(p, {S(2)}));
    conj.append_power(1, 2 * k);
    add("tau^" + std::to_string(k) + "(s2)", conj, embed(make_atilde_word(p, rhs)));
    add("tau^" + std::to_string(k) + "(s2) = t[" + std::to_string(k) + "]", conj,
        embed(deer_word{p, {T(static_cast<int>(k))}}));
    return out;
  }

}  // namespace deer
