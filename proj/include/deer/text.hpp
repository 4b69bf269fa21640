#pragma once

// Text syntax for words and positive presentations.
//
//   artin:  a1 a2^-1 a3^2          (sigma_k written a<k>)
//   deer:   z t[-3] s4^-1 t[2]^3
//   atilde: z s1 s3^-1             (affine generators s_1..s_r)
//
// Letters are separated by blanks (or '*' / '.'); "1" or an empty string is
// the empty word. Errors carry the byte offset of the offending character.

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "artin.hpp"
#include "deer_group.hpp"
#include "reversing.hpp"

namespace deer {

  class parse_error : public std::invalid_argument {
   public:
    parse_error(std::size_t offset, std::string const& what)
        : std::invalid_argument("syntax error at offset " + std::to_string(offset) + ": "
                                + what),
          _offset(offset) {}

    [[nodiscard]] std::size_t offset() const noexcept {
      return _offset;
    }

   private:
    std::size_t _offset;
  };

  enum class word_syntax { artin, deer, atilde };

  namespace detail {
    class scanner {
     public:
      explicit scanner(std::string const& s, std::size_t base = 0) : _s(s), _base(base) {}

      void skip_separators() {
        while (_i < _s.size()
               && (std::isspace(static_cast<unsigned char>(_s[_i])) != 0 || _s[_i] == '*'
                   || _s[_i] == '.' || _s[_i] == ',')) {
          ++_i;
        }
      }
      [[nodiscard]] bool done() const noexcept {
        return _i >= _s.size();
      }
      [[nodiscard]] char peek() const noexcept {
        return _i < _s.size() ? _s[_i] : '\0';
      }
      [[nodiscard]] std::size_t offset() const noexcept {
        return _base + _i;
      }
      [[nodiscard]] std::size_t pos() const noexcept {
        return _i;
      }
      void advance() {
        ++_i;
      }
      bool accept(char c) {
        if (peek() == c) {
          ++_i;
          return true;
        }
        return false;
      }
      void expect(char c) {
        if (!accept(c)) {
          fail(std::string("expected '") + c + "'");
        }
      }
      [[noreturn]] void fail(std::string const& what) const {
        throw parse_error(offset(), what);
      }

      long integer(bool allow_sign = true) {
        std::size_t const start = _i;
        if (allow_sign && (peek() == '-' || peek() == '+')) {
          ++_i;
        }
        if (std::isdigit(static_cast<unsigned char>(peek())) == 0) {
          _i = start;
          fail("expected an integer");
        }
        while (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
          ++_i;
        }
        try {
          return std::stol(_s.substr(start, _i - start));
        } catch (std::out_of_range const&) {
          throw parse_error(_base + start, "integer out of range");
        }
      }

      // Optional "^<int>" suffix.
      long exponent() {
        if (!accept('^')) {
          return 1;
        }
        return integer();
      }

     private:
      std::string const& _s;
      std::size_t        _base;
      std::size_t        _i = 0;
    };

    inline bool is_identity_text(std::string const& s) {
      std::size_t a = s.find_first_not_of(" \t\n\r");
      if (a == std::string::npos) {
        return true;
      }
      std::size_t b = s.find_last_not_of(" \t\n\r");
      return s.substr(a, b - a + 1) == "1";
    }

    inline void push_power(word& w, letter l, long k) {
      if (k < 0) {
        l.sign = -l.sign;
        k      = -k;
      }
      w.insert(w.end(), static_cast<std::size_t>(k), l);
    }

    inline int narrow(scanner const& sc, long v) {
      if (v < -1'000'000'000L || v > 1'000'000'000L) {
        sc.fail("index out of range");
      }
      return static_cast<int>(v);
    }

    // One letter of the deer or atilde alphabet at the scanner position.
    inline letter scan_letter(scanner& sc, word_syntax syn) {
      char const c = sc.peek();
      if (c == 'z') {
        sc.advance();
        return Z();
      }
      if (c == 't' && syn == word_syntax::deer) {
        sc.advance();
        sc.expect('[');
        auto i = narrow(sc, sc.integer());
        sc.expect(']');
        return T(i);
      }
      if (c == 's') {
        sc.advance();
        return S(narrow(sc, sc.integer(false)));
      }
      if (c == 'b') {
        sc.advance();
        return Bgen(narrow(sc, sc.integer(false)));
      }
      sc.fail(std::string("unexpected character '") + c + "'");
    }
  }  // namespace detail

  // Parses a deer or affine word without range checks; `base` shifts the
  // reported offsets (used when the text is a slice of a longer line).
  [[nodiscard]] inline word parse_letters(std::string const& text, word_syntax syn,
                                          std::size_t base = 0) {
    word out;
    if (detail::is_identity_text(text)) {
      return out;
    }
    detail::scanner sc(text, base);
    sc.skip_separators();
    while (!sc.done()) {
      auto l = detail::scan_letter(sc, syn);
      detail::push_power(out, l, sc.exponent());
      sc.skip_separators();
    }
    return out;
  }

  [[nodiscard]] inline deer_word parse_deer(std::string const& text, deer_params const& p) {
    validate(p);
    word out;
    if (detail::is_identity_text(text)) {
      return {p, out};
    }
    detail::scanner sc(text);
    sc.skip_separators();
    while (!sc.done()) {
      std::size_t const at = sc.offset();
      auto              l  = detail::scan_letter(sc, word_syntax::deer);
      try {
        check_deer_letter(l, p);
      } catch (std::out_of_range const& e) {
        throw parse_error(at, e.what());
      }
      detail::push_power(out, l, sc.exponent());
      sc.skip_separators();
    }
    return {p, out};
  }

  [[nodiscard]] inline atilde_word parse_atilde(std::string const& text, deer_params const& p) {
    require_atilde(p);
    word out;
    if (detail::is_identity_text(text)) {
      return {p, out};
    }
    detail::scanner sc(text);
    sc.skip_separators();
    while (!sc.done()) {
      std::size_t const at = sc.offset();
      auto              l  = detail::scan_letter(sc, word_syntax::atilde);
      if (l.kind == gen_kind::s && (l.index < 1 || l.index > p.r)) {
        throw parse_error(at, "affine generator s" + std::to_string(l.index)
                                  + " out of range [1, " + std::to_string(p.r) + "]");
      }
      if (l.kind == gen_kind::b) {
        throw parse_error(at, "type B letter in an affine word");
      }
      detail::push_power(out, l, sc.exponent());
      sc.skip_separators();
    }
    return {p, out};
  }

  [[nodiscard]] inline braid_word parse_artin(std::string const& text, int strands) {
    braid_word out(strands);
    if (detail::is_identity_text(text)) {
      return out;
    }
    detail::scanner sc(text);
    sc.skip_separators();
    while (!sc.done()) {
      std::size_t const at = sc.offset();
      if (!sc.accept('a')) {
        sc.fail(std::string("unexpected character '") + sc.peek() + "'");
      }
      long const k = sc.integer(false);
      if (k < 1 || k > strands - 1) {
        throw parse_error(at, "generator a" + std::to_string(k) + " out of range [1, "
                                  + std::to_string(strands - 1) + "]");
      }
      out.append_power(static_cast<int>(k), sc.exponent());
      sc.skip_separators();
    }
    return out;
  }

  [[nodiscard]] inline std::string to_string(braid_word const& w) {
    std::string out;
    for (auto const& l : w.letters()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += "a" + std::to_string(l.index);
      if (l.sign < 0) {
        out += "^-1";
      }
    }
    return out.empty() ? "1" : out;
  }

  [[nodiscard]] inline std::string print(word const& w) {
    return w.empty() ? "1" : to_string(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation files
  ////////////////////////////////////////////////////////////////////////
  //
  //   # comment
  //   generators t[-4..4] s3..s5 z
  //   boundary t[-4]
  //   s3 t[0] s3 = t[0] s3 t[0]

  namespace detail {
    inline std::string trim(std::string const& s) {
      auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) {
        return {};
      }
      auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    }

    inline bool starts_with_keyword(std::string const& s, std::string const& kw) {
      return s.size() > kw.size() && s.compare(0, kw.size(), kw) == 0
             && std::isspace(static_cast<unsigned char>(s[kw.size()])) != 0;
    }

    // "t[a..b]", "s<a>..s<b>" or a single letter.
    inline std::vector<letter> scan_generator_item(scanner& sc) {
      char const c = sc.peek();
      if (c == 't') {
        sc.advance();
        sc.expect('[');
        auto lo = narrow(sc, sc.integer());
        int  hi = lo;
        if (sc.accept('.')) {
          sc.expect('.');
          hi = narrow(sc, sc.integer());
        }
        sc.expect(']');
        std::vector<letter> out;
        for (int i = lo; i <= hi; ++i) {
          out.push_back(T(i));
        }
        return out;
      }
      if (c == 's' || c == 'b') {
        sc.advance();
        auto lo = narrow(sc, sc.integer(false));
        int  hi = lo;
        if (sc.accept('.')) {
          sc.expect('.');
          sc.accept(c);
          hi = narrow(sc, sc.integer(false));
        }
        std::vector<letter> out;
        for (int i = lo; i <= hi; ++i) {
          out.push_back(c == 's' ? S(i) : Bgen(i));
        }
        return out;
      }
      if (c == 'z') {
        sc.advance();
        return {Z()};
      }
      sc.fail(std::string("unexpected character '") + c + "' in generator list");
    }

    inline std::vector<letter> scan_generator_list(std::string const& s, std::size_t base) {
      std::vector<letter> out;
      scanner             sc(s, base);
      auto                skip_blank = [&] {
        while (!sc.done() && (std::isspace(static_cast<unsigned char>(sc.peek())) != 0
                              || sc.peek() == ',')) {
          sc.advance();
        }
      };
      skip_blank();
      while (!sc.done()) {
        auto items = scan_generator_item(sc);
        out.insert(out.end(), items.begin(), items.end());
        if (!sc.done() && std::isspace(static_cast<unsigned char>(sc.peek())) == 0
            && sc.peek() != ',') {
          sc.fail("expected a blank between generators");
        }
        skip_blank();
      }
      return out;
    }
  }  // namespace detail

  // Errors report "line L: ..." with the byte offset inside the line.
  [[nodiscard]] inline positive_presentation<letter> parse_presentation(std::string const& text) {
    std::vector<letter>                                 gens;
    std::set<letter>                                    boundary;
    std::vector<positive_presentation<letter>::relation> rels;
    bool                                                have_gens = false;
    std::istringstream                                  in(text);
    std::string                                         raw;
    int                                                 lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      auto const hash = raw.find('#');
      auto const body = hash == std::string::npos ? raw : raw.substr(0, hash);
      auto const line = detail::trim(body);
      if (line.empty()) {
        continue;
      }
      std::size_t const lead = body.find_first_not_of(" \t\r");
      try {
        if (detail::starts_with_keyword(line, "generators")) {
          auto g = detail::scan_generator_list(line.substr(10), lead + 10);
          gens.insert(gens.end(), g.begin(), g.end());
          have_gens = true;
        } else if (detail::starts_with_keyword(line, "boundary")) {
          for (auto const& l : detail::scan_generator_list(line.substr(8), lead + 8)) {
            boundary.insert(l);
          }
        } else {
          auto const eq = line.find('=');
          if (eq == std::string::npos) {
            throw parse_error(lead, "expected 'u = v'");
          }
          auto lhs = parse_letters(line.substr(0, eq), word_syntax::deer, lead);
          auto rhs = parse_letters(line.substr(eq + 1), word_syntax::deer, lead + eq + 1);
          for (auto const& l : concat(lhs, rhs)) {
            if (l.sign < 0) {
              throw parse_error(lead, "relations must be positive");
            }
          }
          rels.push_back({std::move(lhs), std::move(rhs)});
        }
      } catch (parse_error const& e) {
        throw parse_error(e.offset(), "line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (!have_gens) {
      throw parse_error(0, "missing 'generators' line");
    }
    return {gens, rels, boundary};
  }

  [[nodiscard]] inline positive_presentation<letter> load_presentation(std::string const& path) {
    std::ifstream f(path);
    if (!f) {
      throw std::runtime_error("cannot open presentation file " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_presentation(ss.str());
  }

  // Inverse of parse_presentation (boundary and relations in stored order).
  [[nodiscard]] inline std::string print_presentation(positive_presentation<letter> const& p) {
    std::string out = "generators";
    for (auto const& g : p.generators()) {
      out += " " + to_string(g);
    }
    out += "\n";
    if (!p.boundary().empty()) {
      out += "boundary";
      for (auto const& g : p.boundary()) {
        out += " " + to_string(g);
      }
      out += "\n";
    }
    for (auto const& [l, r] : p.relations()) {
      out += to_string(l) + " = " + to_string(r) + "\n";
    }
    return out;
  }

}  // namespace deer
