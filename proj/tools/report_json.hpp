#pragma once

// JSON views of library results. Keys keep insertion order so output is
// stable for golden files.

#include <string>
#include <vector>

#include "deer/deer_group.hpp"
#include "deer/periodic.hpp"
#include "deer/presentations.hpp"
#include "deer/quasi_garside.hpp"
#include "deer/reflection.hpp"
#include "deer/reversing.hpp"
#include "deer/text.hpp"
#include "json.hpp"

namespace deer::report {

  using json = nlohmann::ordered_json;

  inline json params(deer_params const& p) {
    return {{"d", p.d}, {"e", p.e}, {"r", p.r}};
  }

  inline json words(std::vector<word> const& ws) {
    json a = json::array();
    for (auto const& w : ws) {
      a.push_back(print(w));
    }
    return a;
  }

  inline json normal_form_json(normal_form const& nf) {
    json factors = json::array();
    for (auto const& f : nf.factors) {
      json img = json::array();
      for (int x : f) {
        img.push_back(x + 1);
      }
      factors.push_back(img);
    }
    return {{"strands", nf.strands},
            {"deltaPower", nf.delta_power},
            {"factors", factors},
            {"word", to_string(to_word(nf))}};
  }

  inline json outcome(reversal_outcome<letter> const& o) {
    json j{{"status", to_string(o.status)}, {"steps", o.steps}};
    if (o.completed()) {
      j["leftComplement"]  = print(o.left_complement);
      j["rightComplement"] = print(o.right_complement);
    } else if (o.status == reversal_status::stuck) {
      j["position"] = o.position;
    }
    if (!o.trace.empty()) {
      json t = json::array();
      for (auto const& row : o.trace) {
        std::string s;
        for (auto const& x : row) {
          s += (s.empty() ? "" : " ") + to_string(x.inverted ? x.letter.inverse() : x.letter);
        }
        t.push_back(s.empty() ? "1" : s);
      }
      j["trace"] = t;
    }
    return j;
  }

  inline json divisors_json(divisor_report const& d) {
    return {{"params", params(d.params)},
            {"element", print(d.element)},
            {"window", d.window},
            {"lengthCap", d.length_cap},
            {"leftDivisors", words(d.left_divisors)},
            {"rightDivisors", words(d.right_divisors)},
            {"equalWithinWindow", d.equal_within_window},
            {"exhaustedFlags", d.exhausted}};
  }

  inline json periodic_json(periodic_verdict const& v) {
    json j{{"periodic", v.periodic}};
    j["p"] = v.epsilon_power ? json(*v.epsilon_power) : json(nullptr);
    j["q"] = v.lambda_power ? json(*v.lambda_power) : json(nullptr);
    return j;
  }

  inline json presentation_json(presentation_report const& rep) {
    json rels = json::array();
    for (auto const& r : rep.relations) {
      rels.push_back({{"label", r.label},
                      {"lhs", print(r.lhs)},
                      {"rhs", print(r.rhs)},
                      {"verdict", r.holds ? "pass" : "fail"},
                      {"model", to_string(r.checked_in)}});
    }
    return {{"presentation", to_string(rep.id)},
            {"params", params(rep.params)},
            {"window", rep.window},
            {"necessaryConditionOnly", rep.necessary_only},
            {"passed", rep.passed()},
            {"relations", rels}};
  }

  inline json catalog_json(presentation_catalog const& c) {
    json rels = json::array();
    for (auto const& r : c.relations) {
      rels.push_back({{"label", r.label}, {"lhs", print(r.lhs)}, {"rhs", print(r.rhs)}});
    }
    return {{"presentation", to_string(c.id)},
            {"params", params(c.params)},
            {"window", c.window},
            {"relations", rels}};
  }

  inline json cube_json(cube_report<letter> const& c) {
    auto entries = [](std::vector<cube_entry<letter>> const& v) {
      json a = json::array();
      for (auto const& e : v) {
        a.push_back({{"x", to_string(e.x)},
                     {"y", to_string(e.y)},
                     {"z", to_string(e.z)},
                     {"detail", e.detail}});
      }
      return a;
    };
    return {{"triplesChecked", c.triples_checked},
            {"vacuous", c.vacuous},
            {"failures", entries(c.failures)},
            {"inconclusive", entries(c.inconclusive)},
            {"passes", c.passes()}};
  }

}  // namespace deer::report
