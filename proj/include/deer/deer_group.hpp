#pragma once

// B(de,e,r) and B(oo,oo,r) as words over {z, t_i, s_j}, realised inside
// B_{r+1} through the faithful embedding
//   z -> sigma_1^{2e},  t_i -> sigma_1^{-2i} sigma_2 sigma_1^{2i},  s_j -> sigma_j.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "artin.hpp"

namespace deer {

  struct deer_params {
    int d = 2;
    int e = 1;
    int r = 2;

    friend bool operator==(deer_params const&, deer_params const&) = default;
  };

  inline void validate(deer_params const& p) {
    if (p.d < 2 || p.e < 1 || p.r < 2) {
      throw std::invalid_argument("invalid parameters d=" + std::to_string(p.d)
                                  + " e=" + std::to_string(p.e) + " r="
                                  + std::to_string(p.r)
                                  + " (need d >= 2, e >= 1, r >= 2)");
    }
  }

  // Floor-mod, result in [0, m).
  [[nodiscard]] constexpr long mod(long a, long m) noexcept {
    long x = a % m;
    return x < 0 ? x + m : x;
  }

  // Generator families. Type B letters b_k only occur in relation catalogs.
  enum class gen_kind : std::uint8_t { z, t, s, b };

  struct letter {
    gen_kind kind  = gen_kind::z;
    int      index = 0;
    int      sign  = 1;

    friend bool operator==(letter const&, letter const&) = default;
    friend auto operator<=>(letter const&, letter const&) = default;

    [[nodiscard]] letter inverse() const noexcept {
      return {kind, index, -sign};
    }
    [[nodiscard]] letter positive() const noexcept {
      return {kind, index, 1};
    }
  };

  using word = std::vector<letter>;

  inline letter Z(int sign = 1) {
    return {gen_kind::z, 0, sign};
  }
  inline letter T(int i, int sign = 1) {
    return {gen_kind::t, i, sign};
  }
  inline letter S(int j, int sign = 1) {
    return {gen_kind::s, j, sign};
  }
  inline letter Bgen(int k, int sign = 1) {
    return {gen_kind::b, k, sign};
  }

  [[nodiscard]] inline std::string to_string(letter const& l) {
    std::string s;
    switch (l.kind) {
      case gen_kind::z:
        s = "z";
        break;
      case gen_kind::t:
        s = "t[" + std::to_string(l.index) + "]";
        break;
      case gen_kind::s:
        s = "s" + std::to_string(l.index);
        break;
      case gen_kind::b:
        s = "b" + std::to_string(l.index);
        break;
    }
    return l.sign < 0 ? s + "^-1" : s;
  }

  [[nodiscard]] inline std::string to_string(word const& w) {
    std::string out;
    for (auto const& l : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += to_string(l);
    }
    return out;
  }

  [[nodiscard]] inline word inverse(word const& w) {
    word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(it->inverse());
    }
    return out;
  }

  [[nodiscard]] inline word concat(word a, word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  [[nodiscard]] inline word power(word const& w, long k) {
    word const base = k < 0 ? inverse(w) : w;
    word       out;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) {
      out.insert(out.end(), base.begin(), base.end());
    }
    return out;
  }

  [[nodiscard]] inline word freely_reduced(word const& w) {
    word out;
    for (auto const& l : w) {
      if (!out.empty() && out.back() == l.inverse()) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  [[nodiscard]] inline bool is_positive(word const& w) {
    for (auto const& l : w) {
      if (l.sign < 0) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words of B(de,e,r)
  ////////////////////////////////////////////////////////////////////////

  struct deer_word {
    deer_params params;
    word        letters;

    friend bool operator==(deer_word const&, deer_word const&) = default;
  };

  inline void check_deer_letter(letter const& l, deer_params const& p) {
    bool ok = l.sign == 1 || l.sign == -1;
    switch (l.kind) {
      case gen_kind::z:
      case gen_kind::t:
        break;
      case gen_kind::s:
        ok = ok && l.index >= 3 && l.index <= p.r;
        break;
      case gen_kind::b:
        ok = false;
        break;
    }
    if (!ok) {
      throw std::out_of_range("letter " + to_string(l)
                              + " is not a generator of B(de,e,r) with r="
                              + std::to_string(p.r));
    }
  }

  [[nodiscard]] inline deer_word make_deer_word(deer_params const& p, word w) {
    validate(p);
    for (auto const& l : w) {
      check_deer_letter(l, p);
    }
    return {p, std::move(w)};
  }

  // A = s_r ... s_3, empty when r = 2.
  [[nodiscard]] inline word a_block(int r) {
    word w;
    for (int j = r; j >= 3; --j) {
      w.push_back(S(j));
    }
    return w;
  }

  // A t_i
  [[nodiscard]] inline word at_block(int r, int i) {
    auto w = a_block(r);
    w.push_back(T(i));
    return w;
  }

  // (A t_1 t_0)^k
  [[nodiscard]] inline word at1t0_power(int r, long k) {
    auto w = at_block(r, 1);
    w.push_back(T(0));
    return power(w, k);
  }

  [[nodiscard]] inline braid_word embed_letter(letter const& l,
                                               deer_params const& p) {
    braid_word out(p.r + 1);
    switch (l.kind) {
      case gen_kind::z:
        out.append_power(1, 2L * p.e * l.sign);
        break;
      case gen_kind::t:
        out.append_power(1, -2L * l.index);
        out.push_back({2, l.sign});
        out.append_power(1, 2L * l.index);
        break;
      case gen_kind::s:
        out.push_back({l.index, l.sign});
        break;
      case gen_kind::b:
        throw std::invalid_argument("embed: type B letter in a deer word");
    }
    return out;
  }

  [[nodiscard]] inline braid_word embed(deer_word const& w) {
    braid_word out(w.params.r + 1);
    for (auto const& l : w.letters) {
      out *= embed_letter(l, w.params);
    }
    return out.freely_reduced();
  }

  [[nodiscard]] inline bool deer_equal(deer_word const& u, deer_word const& v) {
    if (!(u.params == v.params)) {
      throw std::invalid_argument("deer_equal: parameter mismatch");
    }
    return equal(embed(u), embed(v));
  }

  [[nodiscard]] inline bool is_member(braid_word const& w, deer_params const& p) {
    if (w.strands() != p.r + 1) {
      throw std::invalid_argument("is_member: braid has "
                                  + std::to_string(w.strands())
                                  + " strands, expected r+1="
                                  + std::to_string(p.r + 1));
    }
    return is_pure(w, {1}) && mod(winding(w), p.e) == 0;
  }

  namespace detail {
    // Pushes every z_step letter to the front; t_i z = z t_{i+step}.
    // Returns the net z count and the z-free tail.
    inline std::pair<long, word> push_z_left(word const& w, int step) {
      long net_right = 0;
      word tail;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->kind == gen_kind::z) {
          net_right += it->sign;
        } else if (it->kind == gen_kind::t) {
          tail.push_back(T(static_cast<int>(it->index + step * net_right),
                           it->sign));
        } else {
          tail.push_back(*it);
        }
      }
      std::reverse(tail.begin(), tail.end());
      return {net_right, tail};
    }
  }  // namespace detail

  // Schreier rewriting of a member braid through the cosets of the 1-pure
  // subgroup, indexed by the current position of strand 1.
  [[nodiscard]] inline deer_word rewrite_to_deer(braid_word const&  w,
                                                 deer_params const& p) {
    validate(p);
    if (!is_member(w, p)) {
      throw std::domain_error("rewrite_to_deer: braid is not in B(de,e,r)");
    }
    // Intermediate letters: Z means sigma_1^2, T(0) means sigma_2, S(j) sigma_j.
    word mid;
    auto emit = [&mid](int i, int sign) {
      if (i == 1) {
        mid.push_back(Z(sign));
      } else if (i == 2) {
        mid.push_back(T(0, sign));
      } else {
        mid.push_back(S(i, sign));
      }
    };
    // u_p sigma_p^{2 sign} u_p^{-1} = sigma_p^-1..sigma_2^-1 sigma_1^{2 sign} sigma_2..sigma_p
    auto emit_loop = [&emit](int p_, int sign) {
      for (int j = p_; j >= 2; --j) {
        emit(j, -1);
      }
      emit(1, sign);
      for (int j = 2; j <= p_; ++j) {
        emit(j, 1);
      }
    };
    int pos = 1;
    for (auto const& l : w.letters()) {
      int const i = l.index;
      if (i >= pos + 1) {
        emit(i, l.sign);
      } else if (i <= pos - 2) {
        emit(i + 1, l.sign);
      } else if (i == pos) {
        if (l.sign < 0) {
          emit_loop(pos, -1);
        }
        pos += 1;
      } else {  // i == pos - 1
        if (l.sign > 0) {
          emit_loop(pos - 1, 1);
        }
        pos -= 1;
      }
    }
    auto [m, tail] = detail::push_z_left(freely_reduced(mid), 1);
    word out(static_cast<std::size_t>(m < 0 ? -m : m) / static_cast<std::size_t>(p.e),
             Z(m < 0 ? -1 : 1));
    out.insert(out.end(), tail.begin(), tail.end());
    return {p, freely_reduced(out)};
  }

  struct semidirect_form {
    long      z_exponent = 0;
    deer_word tail;

    [[nodiscard]] deer_word reassemble() const {
      word w(static_cast<std::size_t>(z_exponent < 0 ? -z_exponent : z_exponent),
             Z(z_exponent < 0 ? -1 : 1));
      w.insert(w.end(), tail.letters.begin(), tail.letters.end());
      return {tail.params, w};
    }
  };

  [[nodiscard]] inline semidirect_form to_semidirect(deer_word const& w) {
    auto [m, tail] = detail::push_z_left(w.letters, w.params.e);
    return {m, {w.params, tail}};
  }

  [[nodiscard]] inline deer_word tau(deer_word const& w, long k = 1) {
    deer_word out = w;
    for (auto& l : out.letters) {
      if (l.kind == gen_kind::t) {
        l.index = static_cast<int>(l.index + k);
      }
    }
    return out;
  }

  struct inner_witness {
    long       k = 0;
    braid_word x;
  };

  // Conjugator realising tau inside B(de,e,r) when gcd(e, r) = 1.
  [[nodiscard]] inline std::optional<inner_witness>
  tau_inner_witness(deer_params const& p) {
    validate(p);
    if (std::gcd(p.e, p.r) != 1) {
      return std::nullopt;
    }
    long k = 0;
    while (mod(k * p.r + 1, p.e) != 0) {
      ++k;
    }
    braid_word x(p.r + 1);
    x.append_power(1, 2);
    x *= named_braid(named::full_twist, p.r + 1).power(k);
    return inner_witness{k, x};
  }

  struct transfer_result {
    long       k = 0;
    braid_word y;
  };

  // Given x in B_{r+1,1} conjugating g to h, produce a conjugator in
  // B(de,e,r) from g to tau^k(h).
  [[nodiscard]] inline transfer_result transfer_conjugation(deer_word const&  g,
                                                            deer_word const&  h,
                                                            braid_word const& x) {
    if (!(g.params == h.params)) {
      throw std::invalid_argument("transfer_conjugation: parameter mismatch");
    }
    auto const& p = g.params;
    if (x.strands() != p.r + 1 || !is_pure(x, {1})) {
      throw std::domain_error("transfer_conjugation: x is not a 1-pure braid on "
                              "r+1 strands");
    }
    if (!equal(x.inverse() * embed(g) * x, embed(h))) {
      throw std::domain_error("transfer_conjugation: x^-1 g x != h");
    }
    long const k = mod(-winding(x), p.e);
    braid_word y = x;
    y.append_power(1, 2 * k);
    if (!is_member(y, p)
        || !equal(y.inverse() * embed(g) * y, embed(tau(h, k)))) {
      throw std::logic_error("transfer_conjugation: postcondition failed");
    }
    return {k, y};
  }

  // t_i -> t_{i mod e}, s_j fixed.
  [[nodiscard]] inline word nu_project(word const& w, int e) {
    if (e < 1) {
      throw std::invalid_argument("nu_project: e must be positive");
    }
    word out;
    out.reserve(w.size());
    for (auto const& l : w) {
      if (l.kind == gen_kind::z) {
        throw std::domain_error("nu_project: z letter present");
      }
      out.push_back(l.kind == gen_kind::t
                        ? T(static_cast<int>(mod(l.index, e)), l.sign)
                        : l);
    }
    return out;
  }

  // B(de',e',r) -> B(de,e,r) for e | e': z -> z^{e'/e}.
  [[nodiscard]] inline deer_word iota_include(deer_word const& w, int e) {
    int const big = w.params.e;
    if (e < 1 || big % e != 0) {
      throw std::invalid_argument("iota_include: " + std::to_string(e)
                                  + " does not divide " + std::to_string(big));
    }
    deer_word out{{w.params.d, e, w.params.r}, {}};
    for (auto const& l : w.letters) {
      if (l.kind == gen_kind::z) {
        out.letters.insert(out.letters.end(),
                           static_cast<std::size_t>(big / e), l);
      } else {
        out.letters.push_back(l);
      }
    }
    return out;
  }

  // z^{r/g} (A t_1 t_0)^{e(r-1)/g}, g = gcd(e, r): generates the center.
  [[nodiscard]] inline deer_word center_element(deer_params const& p) {
    validate(p);
    int const g = std::gcd(p.e, p.r);
    word      w(static_cast<std::size_t>(p.r / g), Z());
    auto      tail = at1t0_power(p.r, static_cast<long>(p.e) * (p.r - 1) / g);
    w.insert(w.end(), tail.begin(), tail.end());
    return {p, w};
  }

  // z, t_0, t_1, s_3..s_r
  [[nodiscard]] inline std::vector<letter> group_generators(int r) {
    std::vector<letter> out{Z(), T(0), T(1)};
    for (int j = 3; j <= r; ++j) {
      out.push_back(S(j));
    }
    return out;
  }

  [[nodiscard]] inline bool commutes(deer_word const& u, deer_word const& v) {
    return deer_equal({u.params, concat(u.letters, v.letters)},
                      {u.params, concat(v.letters, u.letters)});
  }

  [[nodiscard]] inline bool is_central(deer_word const& w) {
    for (auto const& g : group_generators(w.params.r)) {
      if (!commutes(w, {w.params, {g}})) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Affine type A generators s_1, ..., s_r (r >= 3)
  ////////////////////////////////////////////////////////////////////////

  // Letters: Z and S(1..r).
  struct atilde_word {
    deer_params params;
    word        letters;

    friend bool operator==(atilde_word const&, atilde_word const&) = default;
  };

  inline void require_atilde(deer_params const& p) {
    validate(p);
    if (p.r < 3) {
      throw std::invalid_argument("affine generators need r >= 3");
    }
  }

  [[nodiscard]] inline atilde_word make_atilde_word(deer_params const& p, word w) {
    require_atilde(p);
    for (auto const& l : w) {
      bool const ok = (l.kind == gen_kind::z)
                      || (l.kind == gen_kind::s && l.index >= 1 && l.index <= p.r);
      if (!ok) {
        throw std::out_of_range("letter " + to_string(l)
                                + " is not an affine generator for r="
                                + std::to_string(p.r));
      }
    }
    return {p, std::move(w)};
  }

  // s_1 = A t_1 A^-1, s_2 = t_0, s_j = s_j.
  [[nodiscard]] inline deer_word atilde_generator(deer_params const& p, int i) {
    require_atilde(p);
    if (i < 1 || i > p.r) {
      throw std::out_of_range("atilde_generator: index out of range");
    }
    if (i == 1) {
      auto const a = a_block(p.r);
      word       w = a;
      w.push_back(T(1));
      w = concat(w, inverse(a));
      return {p, w};
    }
    if (i == 2) {
      return {p, {T(0)}};
    }
    return {p, {S(i)}};
  }

  [[nodiscard]] inline deer_word to_deer(atilde_word const& w) {
    deer_word out{w.params, {}};
    for (auto const& l : w.letters) {
      if (l.kind == gen_kind::z) {
        out.letters.push_back(l);
        continue;
      }
      auto g = atilde_generator(w.params, l.index).letters;
      if (l.sign < 0) {
        g = inverse(g);
      }
      out.letters.insert(out.letters.end(), g.begin(), g.end());
    }
    return out;
  }

  [[nodiscard]] inline braid_word embed(atilde_word const& w) {
    return embed(to_deer(w));
  }

  // s_j -> s_{j+1 mod r}
  [[nodiscard]] inline atilde_word kappa(atilde_word const& w) {
    atilde_word out = w;
    for (auto& l : out.letters) {
      if (l.kind == gen_kind::z) {
        throw std::domain_error("kappa: z letter present");
      }
      l.index = l.index % w.params.r + 1;
    }
    return out;
  }

  // B = s_r ... s_2 in the affine alphabet.
  [[nodiscard]] inline word b_block(int r) {
    word w;
    for (int j = r; j >= 2; --j) {
      w.push_back(S(j));
    }
    return w;
  }

}  // namespace deer
