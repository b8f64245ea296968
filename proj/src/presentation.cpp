#include "cayley/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "cayley/error.hpp"

namespace cayley {

namespace {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  Presentation parse() {
    expect('<');
    skip_space();
    if (peek() != '|' && peek() != '>') {
      for (;;) {
        const std::size_t at = skip_space();
        std::string name = identifier();
        if (std::find(out_.generators.begin(), out_.generators.end(), name) != out_.generators.end()) {
          throw ParseError(at, "duplicate generator '" + name + "'");
        }
        out_.generators.push_back(std::move(name));
        skip_space();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    skip_space();
    if (peek() == '|') {
      ++pos_;
      skip_space();
      if (peek() != '>') {
        for (;;) {
          out_.relators.push_back(relation());
          skip_space();
          if (peek() != ',') break;
          ++pos_;
        }
      }
    }
    expect('>');
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return std::move(out_);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::size_t skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      throw ParseError(pos_, std::string("expected '") + c + "'" + (pos_ >= text_.size() ? " before end of input" : ""));
    }
    ++pos_;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) throw ParseError(pos_, "expected a generator name");
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected an integer exponent");
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 100000) throw ParseError(start, "exponent too large");
    }
    return negative ? -value : value;
  }

  static Word power(const Word& w, long e) {
    Word base = e < 0 ? inverse(w) : w;
    Word out;
    for (long i = 0; i < std::labs(e); ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  static Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) l = -l;
    return out;
  }

  // Juxtaposition of factors; '*' separators are accepted.
  Word word() {
    Word out;
    for (;;) {
      skip_space();
      char c = peek();
      if (c == '*') {
        ++pos_;
        continue;
      }
      Word factor;
      if (c == '(') {
        ++pos_;
        factor = word();
        expect(')');
      } else if (c == '1' && !std::isdigit(static_cast<unsigned char>(pos_ + 1 < text_.size() ? text_[pos_ + 1] : ' '))) {
        ++pos_;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t at = pos_;
        std::string name = identifier();
        auto it = std::find(out_.generators.begin(), out_.generators.end(), name);
        if (it == out_.generators.end()) throw ParseError(at, "unknown generator '" + name + "'");
        factor = {static_cast<Letter>(it - out_.generators.begin()) + 1};
      } else {
        break;
      }
      skip_space();
      factor = power(factor, exponent());
      out.insert(out.end(), factor.begin(), factor.end());
    }
    return out;
  }

  Word relation() {
    const std::size_t start = skip_space();
    Word lhs = word();
    skip_space();
    if (peek() == '=') {
      ++pos_;
      Word rhs = inverse(word());
      lhs.insert(lhs.end(), rhs.begin(), rhs.end());
    } else if (pos_ == start) {
      throw ParseError(pos_, "expected a relator");
    }
    return lhs;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Presentation out_;
};

constexpr std::size_t kUndefined = std::numeric_limits<std::size_t>::max();

inline std::size_t column(Letter l) { return l > 0 ? 2 * static_cast<std::size_t>(l - 1) : 2 * static_cast<std::size_t>(-l - 1) + 1; }

// HLT enumeration with coincidence processing (union-find on coset numbers).
class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t cap) : cols_(2 * p.generators.size()), cap_(cap), p_(p) {
    for (const auto& r : p.relators) {
      Word w;
      for (Letter l : r) {
        // free reduction keeps scans short
        if (!w.empty() && w.back() == -l) w.pop_back();
        else w.push_back(l);
      }
      while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
      }
      if (!w.empty()) relators_.push_back(std::move(w));
    }
  }

  CosetTable run() {
    add_row();
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      for (const auto& r : relators_) {
        scan_and_fill(c, r);
        if (!alive(c)) break;
      }
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x)
        if (at(c, x) == kUndefined) define(c, x);
      if (parent_.size() > 2 * live_ + 1024) c = compact(c);
    }
    compact(0);
    return normalize();
  }

 private:
  std::size_t& at(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }
  bool alive(std::size_t c) const { return parent_[c] == c; }

  std::size_t add_row() {
    if (live_ >= cap_) {
      fail(ErrorKind::ResourceLimit, "coset enumeration exceeded " + std::to_string(cap_) +
                                         " cosets (group may be infinite or the limit too small)");
    }
    const std::size_t idx = parent_.size();
    table_.resize(table_.size() + cols_, kUndefined);
    parent_.push_back(idx);
    ++live_;
    return idx;
  }

  void define(std::size_t c, std::size_t x) {
    const std::size_t d = add_row();
    at(c, x) = d;
    at(d, x ^ 1u) = c;
  }

  std::size_t rep(std::size_t k) {
    std::size_t r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      std::size_t next = parent_[k];
      parent_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
    --live_;
  }

  void coincidence(std::size_t a, std::size_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::size_t e = queue_[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::size_t f = at(e, x);
        if (f == kUndefined) continue;
        at(f, x ^ 1u) = kUndefined;
        const std::size_t e1 = rep(e), f1 = rep(f);
        if (at(e1, x) != kUndefined) {
          merge(f1, at(e1, x));
        } else if (at(f1, x ^ 1u) != kUndefined) {
          merge(e1, at(f1, x ^ 1u));
        } else {
          at(e1, x) = f1;
          at(f1, x ^ 1u) = e1;
        }
      }
    }
  }

  void scan_and_fill(std::size_t c, const Word& w) {
    std::size_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, column(w[i])) != kUndefined) f = at(f, column(w[i++]));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, column(w[j]) ^ 1u) != kUndefined) b = at(b, column(w[j--]) ^ 1u);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, column(w[i])) = b;
        at(b, column(w[i]) ^ 1u) = f;
        return;
      }
      define(f, column(w[i]));
    }
  }

  // Drops dead rows; returns the new index of the last live row at or before `current`.
  std::size_t compact(std::size_t current) {
    std::vector<std::size_t> remap(parent_.size(), kUndefined);
    std::size_t next = 0, keep_upto = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      remap[c] = next++;
      if (c <= current) keep_upto = next;
    }
    std::vector<std::size_t> table(next * cols_, kUndefined);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::size_t t = at(c, x);
        if (t != kUndefined) table[remap[c] * cols_ + x] = remap[rep(t)];
      }
    }
    table_ = std::move(table);
    parent_.resize(next);
    for (std::size_t c = 0; c < next; ++c) parent_[c] = c;
    return keep_upto - 1;
  }

  CosetTable normalize() {
    const std::size_t n = parent_.size();
    std::vector<std::size_t> order{0}, number(n, kUndefined);
    number[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::size_t t = at(order[i], x);
        if (t == kUndefined) fail(ErrorKind::ResourceLimit, "coset table incomplete after enumeration");
        if (number[t] == kUndefined) {
          number[t] = order.size();
          order.push_back(t);
        }
      }
    }
    CosetTable out;
    out.generator_count = p_.generators.size();
    out.rows.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      out.rows[i].resize(cols_);
      for (std::size_t x = 0; x < cols_; ++x) out.rows[i][x] = number[at(order[i], x)];
    }
    return out;
  }

  std::size_t cols_;
  std::size_t cap_;
  const Presentation& p_;
  std::vector<Word> relators_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> queue_;
  std::size_t live_ = 0;
};

std::string word_name(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t run = 1;
    while (i + run < w.size() && w[i + run] == w[i]) ++run;
    if (!out.empty()) out += " ";
    out += p.generators[static_cast<std::size_t>(std::abs(w[i])) - 1];
    const long e = static_cast<long>(run) * (w[i] < 0 ? -1 : 1);
    if (e != 1) out += "^" + std::to_string(e);
    i += run;
  }
  return out;
}

}  // namespace

std::string Presentation::to_string() const {
  std::string out = "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i];
  out += " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) out += ", ";
    std::string r;
    for (Letter l : relators[i]) {
      if (!r.empty()) r += " ";
      r += generators[static_cast<std::size_t>(std::abs(l)) - 1];
      if (l < 0) r += "^-1";
    }
    out += r.empty() ? "1" : r;
  }
  return out + " >";
}

Presentation parse_presentation(std::string_view text) { return PresentationParser(text).parse(); }

std::size_t CosetTable::act(std::size_t coset, Letter letter) const { return rows.at(coset).at(column(letter)); }

std::size_t CosetTable::act(std::size_t coset, const Word& word) const {
  for (Letter l : word) coset = act(coset, l);
  return coset;
}

Enumeration todd_coxeter(const Presentation& presentation, std::size_t max_cosets) {
  if (max_cosets == 0) fail(ErrorKind::MalformedInput, "max_cosets must be >= 1");
  CosetTable table = Enumerator(presentation, max_cosets).run();
  const std::size_t n = table.count();

  for (const auto& r : presentation.relators)
    for (std::size_t c = 0; c < n; ++c)
      if (table.act(c, r) != c) fail(ErrorKind::ResourceLimit, "enumeration produced an inconsistent coset table");

  // Spanning tree of the breadth-first numbering: coset d = parent[d] * letter[d].
  std::vector<std::size_t> parent(n, 0);
  std::vector<Letter> letter(n, 0);
  std::vector<Word> words(n);
  std::vector<bool> seen(n);
  seen[0] = true;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t x = 0; x < 2 * table.generator_count; ++x) {
      const std::size_t t = table.rows[c][x];
      if (seen[t]) continue;
      seen[t] = true;
      parent[t] = c;
      letter[t] = x % 2 == 0 ? static_cast<Letter>(x / 2 + 1) : -static_cast<Letter>(x / 2 + 1);
      words[t] = words[c];
      words[t].push_back(letter[t]);
    }
  }

  std::vector<Element> mult(n * n);
  std::vector<std::string> names(n);
  for (std::size_t c = 0; c < n; ++c) {
    names[c] = word_name(presentation, words[c]);
    mult[c * n] = static_cast<Element>(c);
    for (std::size_t d = 1; d < n; ++d) mult[c * n + d] = static_cast<Element>(table.act(mult[c * n + parent[d]], letter[d]));
  }
  return {FiniteGroup(std::move(mult), std::move(names)), std::move(table)};
}

Element evaluate(const Enumeration& enumeration, const Word& word) {
  return static_cast<Element>(enumeration.table.act(0, word));
}

std::string h_group_presentation(std::size_t n) {
  std::string out = "<";
  for (std::size_t i = 1; i <= n; ++i) out += (i > 1 ? ", s" : " s") + std::to_string(i);
  out += " |";
  bool first = true;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      const std::string si = "s" + std::to_string(i), sj = "s" + std::to_string(j);
      out += (first ? " " : ", ") + si + " " + sj + " " + si + "^-1 = " + sj + "^-1";
      first = false;
    }
  }
  return out + " >";
}

HGroup h_group(std::size_t n) {
  if (n < 2 || n > 8) fail(ErrorKind::MalformedInput, "h_group needs 2 <= n <= 8");
  const Presentation p = parse_presentation(h_group_presentation(n));
  const std::size_t expected = std::size_t{1} << (n + 1);
  Enumeration e = todd_coxeter(p, 64 * expected);
  if (e.group.order() != expected) {
    fail(ErrorKind::PreconditionViolation, "H_" + std::to_string(n) + " enumerated to order " +
                                               std::to_string(e.group.order()) + ", expected " + std::to_string(expected));
  }
  std::vector<Element> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(evaluate(e, {static_cast<Letter>(i + 1)}));
  const Element epsilon = evaluate(e, {1, 1});
  GroupPtr group = share(std::move(e.group));
  GeneratingSet genset = make_genset(group, s, true);
  return {group, std::move(genset), std::move(s), epsilon};
}

}  // namespace cayley
