#pragma once

#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dnalg {

/// A single letter of a generator word: a braid crossing sigma_i^{+-1},
/// a turn-back generator e_i, or the affine generator X_1^{+-1}.
struct Generator {
  enum class Kind { Sigma, SigmaInv, E, X1, X1Inv };

  Kind kind = Kind::Sigma;
  int index = 1; // strand position i, unused for X1/X1Inv

  static Generator sigma(int i) { return {Kind::Sigma, i}; }
  static Generator sigma_inv(int i) { return {Kind::SigmaInv, i}; }
  static Generator e(int i) { return {Kind::E, i}; }
  static Generator x1() { return {Kind::X1, 0}; }
  static Generator x1_inv() { return {Kind::X1Inv, 0}; }

  bool is_crossing() const { return kind == Kind::Sigma || kind == Kind::SigmaInv; }
  bool is_affine() const { return kind == Kind::X1 || kind == Kind::X1Inv; }

  bool operator==(const Generator &o) const { return kind == o.kind && index == o.index; }
  bool operator!=(const Generator &o) const { return !(*this == o); }

  /// True when the letters are mutually inverse crossings or X1 letters.
  bool cancels_with(const Generator &o) const {
    switch (kind) {
    case Kind::Sigma: return o.kind == Kind::SigmaInv && o.index == index;
    case Kind::SigmaInv: return o.kind == Kind::Sigma && o.index == index;
    case Kind::X1: return o.kind == Kind::X1Inv;
    case Kind::X1Inv: return o.kind == Kind::X1;
    case Kind::E: return false;
    }
    return false;
  }

  std::string str() const {
    switch (kind) {
    case Kind::Sigma: return "s" + std::to_string(index);
    case Kind::SigmaInv: return "s" + std::to_string(index) + "^-1";
    case Kind::E: return "e" + std::to_string(index);
    case Kind::X1: return "x1";
    case Kind::X1Inv: return "x1^-1";
    }
    return "?";
  }
};

class WordError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A word in braid / BMW / affine-braid generators on a fixed number of
/// strands.  Letters read left to right stack top to bottom in the diagram.
/// Immutable after construction; all operations return new words.
class GenWord {
public:
  GenWord(int strand_count, std::vector<Generator> letters, bool affine = false)
      : n_(strand_count), letters_(std::move(letters)), affine_(affine) {
    if (n_ < 1) throw WordError("strand count must be positive");
    for (const auto &g : letters_) {
      if (g.is_affine()) {
        if (!affine_) throw WordError("affine letter x1 in a non-affine word");
      } else if (g.index < 1 || g.index > n_ - 1) {
        throw WordError("generator index " + std::to_string(g.index) +
                        " out of range for " + std::to_string(n_) + " strands");
      }
    }
  }

  static GenWord empty(int strand_count, bool affine = false) {
    return GenWord(strand_count, {}, affine);
  }

  int strand_count() const { return n_; }
  bool affine() const { return affine_; }
  const std::vector<Generator> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  bool has_e() const {
    for (const auto &g : letters_)
      if (g.kind == Generator::Kind::E) return true;
    return false;
  }
  bool has_affine_letter() const {
    for (const auto &g : letters_)
      if (g.is_affine()) return true;
    return false;
  }

  bool operator==(const GenWord &o) const {
    return n_ == o.n_ && affine_ == o.affine_ && letters_ == o.letters_;
  }
  bool operator!=(const GenWord &o) const { return !(*this == o); }

  /// Stack this word above `o` (diagram product, top to bottom).
  GenWord compose(const GenWord &o) const {
    if (n_ != o.n_ || affine_ != o.affine_)
      throw WordError("cannot compose words: strand count or affine flag mismatch");
    std::vector<Generator> ls = letters_;
    ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
    return GenWord(n_, std::move(ls), affine_);
  }

  /// Cancel adjacent mutually-inverse pairs until none remain.  E letters
  /// never cancel.  The result is independent of cancellation order.
  GenWord free_reduce() const {
    std::vector<Generator> stack;
    for (const auto &g : letters_) {
      if (!stack.empty() && stack.back().cancels_with(g))
        stack.pop_back();
      else
        stack.push_back(g);
    }
    return GenWord(n_, std::move(stack), affine_);
  }

  /// Reflection below the diagram: reversed letters, crossing signs flipped.
  GenWord invert() const {
    if (has_e()) throw WordError("word contains e letters and is not invertible");
    std::vector<Generator> ls;
    ls.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      ls.push_back(flip(*it));
    return GenWord(n_, std::move(ls), affine_);
  }

  /// Flip every crossing sign in place; e letters are unchanged.
  GenWord mirror() const {
    std::vector<Generator> ls;
    ls.reserve(letters_.size());
    for (const auto &g : letters_)
      ls.push_back(g.kind == Generator::Kind::E ? g : flip(g));
    return GenWord(n_, std::move(ls), affine_);
  }

  enum class EditMode { Swap, Smooth };

  /// Single-crossing edit: Swap flips the crossing sign, Smooth replaces a
  /// crossing by the turn-back generator at the same position.
  GenWord edit_crossing(std::size_t pos, EditMode mode) const {
    if (pos >= letters_.size()) throw WordError("edit position out of range");
    if (!letters_[pos].is_crossing()) throw WordError("letter at position is not a crossing");
    std::vector<Generator> ls = letters_;
    if (mode == EditMode::Swap)
      ls[pos] = flip(ls[pos]);
    else
      ls[pos] = Generator::e(ls[pos].index);
    return GenWord(n_, std::move(ls), affine_);
  }

  /// Text form: letters separated by single spaces, e.g. "s1 s2^-1 e4 x1".
  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) os << ' ';
      os << letters_[i].str();
    }
    return os.str();
  }

  static GenWord parse(const std::string &text, int strand_count, bool affine = false) {
    std::vector<Generator> ls;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) ls.push_back(parse_letter(tok));
    return GenWord(strand_count, std::move(ls), affine);
  }

  static Generator parse_letter(const std::string &tok) {
    if (tok == "x1") return Generator::x1();
    if (tok == "x1^-1") return Generator::x1_inv();
    if (tok.size() < 2) throw WordError("bad letter '" + tok + "'");
    char c = tok[0];
    if (c != 's' && c != 'e') throw WordError("bad letter '" + tok + "'");
    std::size_t caret = tok.find('^');
    std::string num = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    for (char d : num)
      if (!std::isdigit(static_cast<unsigned char>(d))) throw WordError("bad letter '" + tok + "'");
    if (num.empty()) throw WordError("bad letter '" + tok + "'");
    int idx = std::atoi(num.c_str());
    bool inv = false;
    if (caret != std::string::npos) {
      if (tok.substr(caret) != "^-1") throw WordError("bad exponent in '" + tok + "'");
      inv = true;
    }
    if (c == 'e') {
      if (inv) throw WordError("e letters have no inverse: '" + tok + "'");
      return Generator::e(idx);
    }
    return inv ? Generator::sigma_inv(idx) : Generator::sigma(idx);
  }

private:
  static Generator flip(const Generator &g) {
    switch (g.kind) {
    case Generator::Kind::Sigma: return Generator::sigma_inv(g.index);
    case Generator::Kind::SigmaInv: return Generator::sigma(g.index);
    case Generator::Kind::X1: return Generator::x1_inv();
    case Generator::Kind::X1Inv: return Generator::x1();
    case Generator::Kind::E: break;
    }
    return g;
  }

  int n_;
  std::vector<Generator> letters_;
  bool affine_;
};

/// Convenience: sigma_i^k as a word (k may be negative), on n strands.
inline GenWord sigma_power(int n, int i, int k) {
  std::vector<Generator> ls;
  for (int j = 0; j < (k < 0 ? -k : k); ++j)
    ls.push_back(k > 0 ? Generator::sigma(i) : Generator::sigma_inv(i));
  return GenWord(n, std::move(ls));
}

} // namespace dnalg
