#pragma once

// Periodic elements of B(de,e,r): the rotation lambda, the central element
// mu, the r-th power periodicity test and the block identities relating
// A t_k ... A t_1 to powers of epsilon.

#include <optional>
#include <stdexcept>
#include <string>

#include "artin.hpp"
#include "deer_group.hpp"

namespace deer {

  // z (A t_e)(A t_{e-1}) ... (A t_1); embeds to epsilon^e.
  [[nodiscard]] inline deer_word lambda_periodic(deer_params const& p) {
    validate(p);
    word w{Z()};
    for (int i = p.e; i >= 1; --i) {
      w = concat(w, at_block(p.r, i));
    }
    return {p, w};
  }

  // z^r (A t_1 t_0)^{e(r-1)}; central.
  [[nodiscard]] inline deer_word mu_element(deer_params const& p) {
    validate(p);
    word w(static_cast<std::size_t>(p.r), Z());
    return {p, concat(w, at1t0_power(p.r, static_cast<long>(p.e) * (p.r - 1)))};
  }

  struct periodic_verdict {
    bool                periodic = false;
    std::optional<long> epsilon_power;  // p with embed(g)^r = Delta^{2p}
    std::optional<long> lambda_power;   // q = p / e

    friend bool operator==(periodic_verdict const&, periodic_verdict const&) = default;
  };

  // Every 1-pure periodic braid is conjugate to a power of epsilon and
  // epsilon^r = Delta^2, so g is periodic iff embed(g)^r is a power of Delta^2.
  [[nodiscard]] inline periodic_verdict is_periodic(deer_word const& g) {
    validate(g.params);
    auto const nf = compute_normal_form(embed(g).power(g.params.r));
    periodic_verdict out;
    if (!nf.is_delta_power() || nf.delta_power % 2 != 0) {
      return out;
    }
    long const p = nf.delta_power / 2;
    if (p % g.params.e != 0) {
      throw std::logic_error("is_periodic: epsilon power not divisible by e");
    }
    out.periodic      = true;
    out.epsilon_power = p;
    out.lambda_power  = p / g.params.e;
    return out;
  }

  enum class block_identity { prefix_power, twist, shifted };

  inline std::optional<block_identity> block_identity_from(std::string const& s) {
    if (s == "i" || s == "prefix_power") {
      return block_identity::prefix_power;
    }
    if (s == "ii" || s == "twist") {
      return block_identity::twist;
    }
    if (s == "iii" || s == "shifted") {
      return block_identity::shifted;
    }
    return std::nullopt;
  }

  struct block_check {
    braid_word lhs;
    braid_word rhs;
    bool       holds = false;
  };

  // prefix_power: (A t_k)...(A t_1) = sigma_1^{-2k} epsilon^k, k >= 1
  // twist:        (A t_1 t_0)^{r-1} = sigma_1^{-2r} Delta^2
  // shifted:      (A t_1 t_0)^{r-1} = (A t_{j+r})...(A t_{j+1}), any j
  [[nodiscard]] inline block_check verify_block_identity(block_identity which, int r,
                                                         long k_or_j = 1) {
    if (r < 2) {
      throw std::invalid_argument("verify_block_identity: need r >= 2");
    }
    deer_params const p{2, 1, r};
    int const         n = r + 1;
    block_check       c;
    switch (which) {
      case block_identity::prefix_power: {
        if (k_or_j < 1) {
          throw std::invalid_argument("prefix_power identity implemented for k >= 1 only");
        }
        word w;
        for (long i = k_or_j; i >= 1; --i) {
          w = concat(w, at_block(r, static_cast<int>(i)));
        }
        c.lhs = embed(deer_word{p, w});
        c.rhs = braid_word(n).append_power(1, -2 * k_or_j)
                * named_braid(named::epsilon, n).power(k_or_j);
        break;
      }
      case block_identity::twist:
        c.lhs = embed(deer_word{p, at1t0_power(r, r - 1)});
        c.rhs = braid_word(n).append_power(1, -2L * r) * named_braid(named::full_twist, n);
        break;
      case block_identity::shifted: {
        word w;
        for (long i = k_or_j + r; i >= k_or_j + 1; --i) {
          w = concat(w, at_block(r, static_cast<int>(i)));
        }
        c.lhs = embed(deer_word{p, at1t0_power(r, r - 1)});
        c.rhs = embed(deer_word{p, w});
        break;
      }
    }
    c.holds = equal(c.lhs, c.rhs);
    return c;
  }

}  // namespace deer
