#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes to the given streams, so the tests can drive it in-process.
//
// Exit status: 0 success, 1 verification failure (or a predicate that came
// out false: eq, member, central), 2 usage error.

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "deer/artin.hpp"
#include "deer/deer_group.hpp"
#include "deer/monoids.hpp"
#include "deer/periodic.hpp"
#include "deer/presentations.hpp"
#include "deer/quasi_garside.hpp"
#include "deer/reflection.hpp"
#include "deer/reversing.hpp"
#include "deer/text.hpp"
#include "report_json.hpp"

namespace deer::cli {

  using report::json;

  struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

  struct command {
    std::string              name;
    deer_params              params{2, 1, 3};
    std::optional<int>       window;
    std::optional<long>      fuel;
    bool                     as_json = false;
    std::string              alpha;  // artin | deer | atilde; empty = command default
    std::vector<std::string> words;

    long                       k = 1;
    int                        j = 3;
    std::optional<std::size_t> cap;
    std::optional<int>         p;
    std::string                pres;
    std::string                pres_file;
    std::string                name_arg;
    bool                       left    = false;
    bool                       trace   = false;
    bool                       cyclic  = false;
    bool                       with_z  = false;
  };

  namespace detail {
    struct io {
      std::ostream& out;
      std::ostream& err;
      bool          as_json;

      void emit(json const& j, std::string const& text) const {
        if (as_json) {
          out << j.dump(2) << "\n";
        } else {
          out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
        }
      }
    };

    inline reversal_options options(command const& c) {
      reversal_options o;
      o.fuel = c.fuel ? static_cast<std::size_t>(*c.fuel) : fuel_from_env();
      o.record_trace = c.trace;
      return o;
    }

    inline void need_words(command const& c, std::size_t n) {
      if (c.words.size() != n) {
        throw usage_error("expected " + std::to_string(n) + " word argument"
                          + (n == 1 ? "" : "s") + ", got " + std::to_string(c.words.size()));
      }
    }

    inline std::string alphabet_of(command const& c, std::string const& fallback) {
      auto a = c.alpha.empty() ? fallback : c.alpha;
      if (a != "artin" && a != "deer" && a != "atilde") {
        throw usage_error("unknown alphabet '" + a + "' (artin, deer, atilde)");
      }
      return a;
    }

    // Any alphabet, as a braid on r+1 strands.
    inline braid_word braid_of(command const& c, std::string const& text,
                               std::string const& fallback) {
      auto a = alphabet_of(c, fallback);
      if (a == "artin") {
        return parse_artin(text, c.params.r + 1);
      }
      if (a == "atilde") {
        return embed(parse_atilde(text, c.params));
      }
      return embed(parse_deer(text, c.params));
    }

    inline word positive_deer(command const& c, std::string const& text) {
      auto w = parse_deer(text, c.params).letters;
      if (!is_positive(w)) {
        throw usage_error("'" + text + "' is not a positive word");
      }
      return w;
    }

    inline std::string nf_text(normal_form const& nf) {
      std::ostringstream s;
      s << "Delta^" << nf.delta_power;
      for (auto const& f : nf.factors) {
        s << " [";
        for (std::size_t i = 0; i < f.size(); ++i) {
          s << (i ? " " : "") << f[i] + 1;
        }
        s << "]";
      }
      return s.str();
    }

    inline std::string bool_word(bool b) {
      return b ? "true" : "false";
    }

    // Right reversing that widens the window on exhaustion.
    inline std::pair<reversal_outcome<letter>, int>
    reverse_with(command const& c, word const& u, word const& v) {
      auto const opt = options(c);
      if (!c.pres_file.empty()) {
        auto p  = load_presentation(c.pres_file);
        auto o  = c.left ? left_reverse(u, v, p.mirrored(), opt) : right_reverse(u, v, p, opt);
        return {o, 0};
      }
      bool const      z = has_z(u) || has_z(v);
      windowed_monoid m(c.params.r, z, c.params.e, c.window.value_or(1));
      int             used = 0;
      auto o = c.left ? m.reverse_left(u, v, opt, &used) : m.reverse(u, v, opt, &used);
      return {o, used};
    }

    inline int cmd_nf(command const& c, io const& o) {
      need_words(c, 1);
      auto nf = compute_normal_form(braid_of(c, c.words[0], "deer"));
      o.emit(report::normal_form_json(nf), nf_text(nf));
      return 0;
    }

    inline int cmd_eq(command const& c, io const& o) {
      need_words(c, 2);
      bool const e = equal(braid_of(c, c.words[0], "deer"), braid_of(c, c.words[1], "deer"));
      o.emit({{"equal", e}}, e ? "equal" : "not equal");
      return e ? 0 : 1;
    }

    inline int cmd_embed(command const& c, io const& o) {
      need_words(c, 1);
      auto b = braid_of(c, c.words[0], "deer");
      o.emit({{"input", c.words[0]}, {"strands", b.strands()}, {"braid", to_string(b)}},
             to_string(b));
      return 0;
    }

    inline int cmd_wd(command const& c, io const& o) {
      need_words(c, 1);
      long const w = winding(braid_of(c, c.words[0], "artin"));
      o.emit({{"winding", w}}, std::to_string(w));
      return 0;
    }

    inline int cmd_member(command const& c, io const& o) {
      need_words(c, 1);
      bool const m = is_member(braid_of(c, c.words[0], "artin"), c.params);
      o.emit({{"params", report::params(c.params)}, {"member", m}},
             m ? "member" : "not a member");
      return m ? 0 : 1;
    }

    inline int cmd_rewrite(command const& c, io const& o) {
      need_words(c, 1);
      auto b = braid_of(c, c.words[0], "artin");
      auto w = rewrite_to_deer(b, c.params);
      o.emit({{"braid", to_string(b)}, {"word", print(w.letters)}}, print(w.letters));
      return 0;
    }

    inline int cmd_semidirect(command const& c, io const& o) {
      need_words(c, 1);
      auto s = to_semidirect(parse_deer(c.words[0], c.params));
      o.emit({{"zExponent", s.z_exponent}, {"tail", print(s.tail.letters)}},
             "z^" + std::to_string(s.z_exponent) + " . " + print(s.tail.letters));
      return 0;
    }

    inline int cmd_tau(command const& c, io const& o) {
      need_words(c, 1);
      auto img = tau(parse_deer(c.words[0], c.params), c.k);
      o.emit({{"input", c.words[0]}, {"k", c.k}, {"image", print(img.letters)}},
             print(img.letters));
      return 0;
    }

    inline int element_report(command const& c, io const& o, deer_word const& w) {
      need_words(c, 0);
      auto nf = compute_normal_form(embed(w));
      o.emit({{"params", report::params(c.params)},
              {"element", print(w.letters)},
              {"normalForm", report::normal_form_json(nf)}},
             print(w.letters) + "\nembedding: " + nf_text(nf));
      return 0;
    }

    inline int cmd_central(command const& c, io const& o) {
      need_words(c, 1);
      bool const z = is_central(parse_deer(c.words[0], c.params));
      o.emit({{"central", z}}, z ? "central" : "not central");
      return z ? 0 : 1;
    }

    inline int cmd_periodic(command const& c, io const& o) {
      need_words(c, 1);
      auto v = is_periodic(parse_deer(c.words[0], c.params));
      o.emit(report::periodic_json(v),
             v.periodic ? "periodic p=" + std::to_string(*v.epsilon_power)
                              + " q=" + std::to_string(*v.lambda_power)
                        : "not periodic");
      return 0;
    }

    inline int cmd_divisors(command const& c, io const& o) {
      need_words(c, 1);
      auto       w   = positive_deer(c, c.words[0]);
      auto       rep = divisors(c.params, w, c.window.value_or(3), c.cap.value_or(w.size()),
                                options(c));
      std::string text = "left:  " + std::to_string(rep.left_divisors.size())
                         + " divisors\nright: " + std::to_string(rep.right_divisors.size())
                         + " divisors\nequal within window: "
                         + bool_word(rep.equal_within_window);
      if (!rep.exhausted.empty()) {
        text += "\nundecided: " + std::to_string(rep.exhausted.size());
      }
      o.emit(report::divisors_json(rep), text);
      return 0;
    }

    inline int cmd_lcm(command const& c, io const& o) {
      need_words(c, 2);
      auto u       = positive_deer(c, c.words[0]);
      auto v       = positive_deer(c, c.words[1]);
      auto [r, N]  = reverse_with(c, u, v);
      json j{{"status", to_string(r.status)}, {"window", N}};
      std::string text = to_string(r.status);
      if (r.completed()) {
        auto l = concat(u, r.left_complement);
        j["lcm"]         = print(l);
        j["complementU"] = print(r.left_complement);
        j["complementV"] = print(r.right_complement);
        text             = print(l);
      }
      o.emit(j, text);
      return r.completed() ? 0 : 1;
    }

    inline int cmd_reverse(command const& c, io const& o) {
      need_words(c, 2);
      auto u      = positive_deer(c, c.words[0]);
      auto v      = positive_deer(c, c.words[1]);
      auto [r, N] = reverse_with(c, u, v);
      json j      = report::outcome(r);
      j["direction"] = c.left ? "left" : "right";
      j["window"]    = N;
      std::string text = to_string(r.status);
      if (r.completed()) {
        text += c.left ? "\nv'' = " : "\nv' = ";
        text += print(r.left_complement);
        text += c.left ? "\nu'' = " : "\nu' = ";
        text += print(r.right_complement);
      }
      o.emit(j, text);
      return r.completed() ? 0 : 1;
    }

    inline int cmd_cube(command const& c, io const& o) {
      need_words(c, 0);
      positive_presentation<letter> p;
      std::vector<letter>           letters;
      if (!c.pres_file.empty()) {
        p       = load_presentation(c.pres_file);
        letters = p.generators();
      } else if (c.cyclic) {
        p       = cyclic_presentation(c.params.e, c.params.r);
        letters = p.generators();
      } else {
        int const N = c.window.value_or(4);
        // Extra room so complements of window letters stay inside.
        p       = windowed_presentation(c.params.r, N + 6, c.with_z, c.params.e);
        letters = window_generators(c.params.r, N, c.with_z);
      }
      json j{{"complemented", p.is_right_complemented()}};
      if (!p.is_right_complemented()) {
        o.emit(j, "presentation is not right-complemented");
        return 1;
      }
      auto rep = cube_condition(p, letters, options(c));
      j.update(report::cube_json(rep));
      o.emit(j, std::string(rep.passes() ? "cube condition holds" : "cube condition fails")
                    + " (" + std::to_string(rep.triples_checked) + " triples, "
                    + std::to_string(rep.failures.size()) + " failures, "
                    + std::to_string(rep.inconclusive.size()) + " inconclusive)");
      return rep.passes() ? 0 : 1;
    }

    inline int cmd_order(command const& c, io const& o) {
      need_words(c, 0);
      long long const n   = c.cap ? group_order_bfs(c.params, static_cast<long long>(*c.cap))
                                  : group_order_bfs(c.params);
      long long const exp = expected_group_order(c.params);
      o.emit({{"params", report::params(c.params)},
              {"order", n},
              {"expected", exp},
              {"matches", n == exp}},
             std::to_string(n) + (n == exp ? "" : " (expected " + std::to_string(exp) + ")"));
      return n == exp ? 0 : 1;
    }

    inline std::string join(std::vector<int> const& v) {
      std::string s;
      for (int x : v) {
        s += (s.empty() ? "" : " ") + std::to_string(x);
      }
      return s;
    }

    inline int cmd_degrees(command const& c, io const& o) {
      need_words(c, 0);
      auto dc = degrees_codegrees(c.params);
      o.emit({{"params", report::params(c.params)},
              {"degrees", dc.degrees},
              {"codegrees", dc.codegrees},
              {"coxeterNumber", dc.coxeter_number}},
             "degrees: " + join(dc.degrees) + "\ncodegrees: " + join(dc.codegrees)
                 + "\nh: " + std::to_string(dc.coxeter_number));
      return 0;
    }

    inline int cmd_regular(command const& c, io const& o) {
      std::vector<int> ps;
      if (c.p) {
        ps.push_back(*c.p);
      } else if (c.words.size() == 1) {
        try {
          ps.push_back(std::stoi(c.words[0]));
        } catch (std::exception const&) {
          throw usage_error("regular: '" + c.words[0] + "' is not an integer");
        }
      } else {
        need_words(c, 0);
        for (int n = 1; n <= 2 * c.params.e * c.params.r; ++n) {
          ps.push_back(n);
        }
      }
      json        rows = json::array();
      std::string text;
      bool        consistent = true;
      for (int n : ps) {
        auto v = is_regular(n, c.params);
        consistent = consistent && v.regular == v.divides_r && v.a_count <= v.b_count;
        rows.push_back({{"p", n},
                        {"regular", v.regular},
                        {"A", v.a_count},
                        {"B", v.b_count},
                        {"dividesR", v.divides_r}});
        text += "p=" + std::to_string(n) + " " + (v.regular ? "regular" : "not regular")
                + " |A|=" + std::to_string(v.a_count) + " |B|=" + std::to_string(v.b_count)
                + "\n";
      }
      o.emit(ps.size() == 1 ? rows[0] : rows, text);
      return consistent ? 0 : 1;
    }

    inline presentation_id pres_of(command const& c) {
      auto id = presentation_from(c.pres);
      if (!id) {
        std::string names;
        for (auto x : all_presentations()) {
          names += (names.empty() ? "" : ", ") + to_string(x);
        }
        throw usage_error("unknown presentation '" + c.pres + "' (" + names + ")");
      }
      return *id;
    }

    inline int cmd_catalog(command const& c, io const& o) {
      need_words(c, 0);
      auto cat = catalog(pres_of(c), c.params, c.window.value_or(default_window(c.params)));
      std::string text;
      for (auto const& r : cat.relations) {
        text += r.label + ": " + print(r.lhs) + " = " + print(r.rhs) + "\n";
      }
      o.emit(report::catalog_json(cat), text);
      return 0;
    }

    inline bool applicable(presentation_id id, deer_params const& p) {
      if (id == presentation_id::cp_eer) {
        return p.e >= 2;
      }
      if (id == presentation_id::atilde_deer || id == presentation_id::atilde_artin) {
        return p.r >= 3;
      }
      return true;
    }

    inline int cmd_verify(command const& c, io const& o) {
      need_words(c, 0);
      int const                    N = c.window.value_or(default_window(c.params));
      std::vector<presentation_id> ids;
      if (!c.pres.empty()) {
        ids.push_back(pres_of(c));
      } else {
        for (auto id : all_presentations()) {
          if (applicable(id, c.params)) {
            ids.push_back(id);
          }
        }
      }
      json        all = json::array();
      std::string text;
      bool        ok = true;
      for (auto id : ids) {
        auto rep = verify_presentation(id, c.params, N);
        ok       = ok && rep.passed();
        all.push_back(report::presentation_json(rep));
        std::size_t failed = 0;
        for (auto const& r : rep.relations) {
          if (!r.holds) {
            ++failed;
            text += to_string(id) + " " + r.label + ": FAIL\n";
          }
        }
        text += to_string(id) + ": " + std::to_string(rep.relations.size() - failed) + "/"
                + std::to_string(rep.relations.size()) + " relations hold"
                + (rep.necessary_only ? " (quotient model, necessary condition only)" : "")
                + "\n";
      }
      o.emit(ids.size() == 1 ? all[0] : all, text);
      return ok ? 0 : 1;
    }

    inline int cmd_lemma(command const& c, io const& o) {
      need_words(c, 0);
      struct row {
        std::string label;
        bool        holds;
      };
      std::vector<row> rows;
      auto const&      n = c.name_arg;
      if (auto b = block_identity_from(n)) {
        long const arg = c.k;
        auto       r   = verify_block_identity(*b, c.params.r, arg);
        rows.push_back({n + "[" + std::to_string(arg) + "]", r.holds});
      } else if (auto a = affine_identity_from(n)) {
        for (auto const& r : verify_affine_identity(*a, c.params, c.k)) {
          rows.push_back({r.label, r.holds});
        }
      } else if (auto g = garside_identity_from(n)) {
        garside_args args;
        args.window = c.window.value_or(3);
        args.i      = static_cast<int>(c.k);
        args.j      = c.j;
        for (auto const& r : verify_garside_identity(*g, c.params.r, args, options(c)).checks) {
          rows.push_back({r.label, r.passed()});
        }
      } else {
        throw usage_error("unknown identity '" + n
                          + "' (prefix_power, twist, shifted, commute_sigma1, tau_power, "
                            "alt_factorization, twist_commutation, local_shift_t, "
                            "local_shift_s, psi_embedding)");
      }
      json        checks = json::array();
      std::string text;
      bool        ok = true;
      for (auto const& r : rows) {
        ok = ok && r.holds;
        checks.push_back({{"label", r.label}, {"holds", r.holds}});
        text += r.label + ": " + (r.holds ? "holds" : "FAILS") + "\n";
      }
      o.emit({{"identity", n}, {"params", report::params(c.params)}, {"checks", checks},
              {"holds", ok}},
             text);
      return ok ? 0 : 1;
    }

    // "d:e:r" as a leading word sets the parameters.
    inline void take_param_prefix(command& c) {
      static std::regex const pat(R"(^(\d+):(\d+):(\d+)$)");
      std::smatch             m;
      if (!c.words.empty() && std::regex_match(c.words[0], m, pat)) {
        c.params = {std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])};
        c.words.erase(c.words.begin());
      }
    }
  }  // namespace detail

  using handler = std::function<int(command const&, detail::io const&)>;

  inline std::vector<std::tuple<std::string, std::string, handler>> const& commands() {
    using namespace detail;
    static std::vector<std::tuple<std::string, std::string, handler>> const table{
        {"nf", "normal form of the embedded braid", cmd_nf},
        {"eq", "equality of two words", cmd_eq},
        {"embed", "image in the Artin braid group on r+1 strands", cmd_embed},
        {"wd", "winding number of a 1-pure braid", cmd_wd},
        {"member", "membership of a braid in B(de,e,r)", cmd_member},
        {"rewrite", "rewrite a member braid over z, t_i, s_j", cmd_rewrite},
        {"semidirect", "split a word as z^m times a z-free word", cmd_semidirect},
        {"tau", "apply the shift automorphism t_i -> t_{i+k}", cmd_tau},
        {"center", "generator of the center",
         [](command const& c, io const& o) { return element_report(c, o, center_element(c.params)); }},
        {"central", "whether a word is central", cmd_central},
        {"lambda", "the periodic element lambda",
         [](command const& c, io const& o) { return element_report(c, o, lambda_periodic(c.params)); }},
        {"mu", "the central element mu",
         [](command const& c, io const& o) { return element_report(c, o, mu_element(c.params)); }},
        {"periodic", "periodicity test", cmd_periodic},
        {"divisors", "left and right divisors inside an index window", cmd_divisors},
        {"lcm", "right lcm of two positive words", cmd_lcm},
        {"reverse", "right (or --left) word reversing", cmd_reverse},
        {"cube", "complementedness and cube condition", cmd_cube},
        {"order", "order of G(de,e,r) by closure", cmd_order},
        {"degrees", "degrees, codegrees and Coxeter number", cmd_degrees},
        {"regular", "regular numbers", cmd_regular},
        {"catalog", "relations of a presentation", cmd_catalog},
        {"verify", "check a presentation in its model", cmd_verify},
        {"lemma", "check a named structural identity", cmd_lemma}};
    return table;
  }

  inline int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Braid groups B(de,e,r): normal forms, reversing, presentations", "deer"};
    app.require_subcommand(1);
    app.fallthrough(false);
    command                                  c;
    std::map<CLI::App*, handler>             handlers;
    for (auto const& [name, desc, h] : commands()) {
      auto* sub = app.add_subcommand(name, desc);
      sub->add_option("--d", c.params.d, "d (only matters for G(de,e,r))");
      sub->add_option("--e", c.params.e, "e");
      sub->add_option("--r", c.params.r, "r (braids have r+1 strands)");
      sub->add_option("--window", c.window, "index window N");
      sub->add_option("--fuel", c.fuel, "reversing step limit (default: $DEER_FUEL or 10000)");
      sub->add_flag("--json", c.as_json, "JSON output");
      sub->add_option("--alphabet", c.alpha, "input alphabet: artin, deer, atilde");
      sub->add_option("words", c.words, "words, optionally preceded by d:e:r");
      if (name == "tau" || name == "lemma") {
        sub->add_option("--k", c.k, "power / index argument");
      }
      if (name == "lemma") {
        sub->add_option("--name", c.name_arg, "identity name")->required();
        sub->add_option("--j", c.j, "s index for local_shift_s");
      }
      if (name == "divisors" || name == "order") {
        sub->add_option("--cap", c.cap, name == "order" ? "element cap" : "length cap");
      }
      if (name == "regular") {
        sub->add_option("--p", c.p, "candidate regular number");
      }
      if (name == "catalog" || name == "verify") {
        auto* opt = sub->add_option("--pres", c.pres, "presentation id");
        if (name == "catalog") {
          opt->required();
        }
      }
      if (name == "reverse" || name == "lcm" || name == "cube") {
        sub->add_option("--pres-file", c.pres_file, "positive presentation file");
      }
      if (name == "reverse") {
        sub->add_flag("--left", c.left, "left reversing");
        sub->add_flag("--trace", c.trace, "record every step");
      }
      if (name == "cube") {
        sub->add_flag("--cyclic", c.cyclic, "use the finite presentation of B+(e,e,r)");
        sub->add_flag("--z", c.with_z, "include z in the windowed presentation");
      }
      handlers[sub] = h;
    }
    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }
    auto* sub = app.get_subcommands().front();
    c.name    = sub->get_name();
    detail::io o{out, err, c.as_json};
    try {
      detail::take_param_prefix(c);
      validate(c.params);
      return handlers.at(sub)(c, o);
    } catch (parse_error const& e) {
      err << "deer " << c.name << ": " << e.what() << "\n";
      return 2;
    } catch (usage_error const& e) {
      err << "deer " << c.name << ": " << e.what() << "\n";
      return 2;
    } catch (std::invalid_argument const& e) {
      err << "deer " << c.name << ": " << e.what() << "\n";
      return 2;
    } catch (std::out_of_range const& e) {
      err << "deer " << c.name << ": " << e.what() << "\n";
      return 2;
    } catch (std::exception const& e) {
      err << "deer " << c.name << ": " << e.what() << "\n";
      return 1;
    }
  }

}  // namespace deer::cli
