#include "rhorep/braid.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cache.hpp"

namespace rhorep {

BraidWord::BraidWord(int n_, std::vector<int> letters_) : n(n_), letters(std::move(letters_)) {
  if (n < 1) throw std::invalid_argument("braid word needs n >= 1");
  for (int g : letters)
    if (g == 0 || std::abs(g) > n - 1)
      throw std::invalid_argument("letter " + std::to_string(g) + " out of range for " + std::to_string(n) + " strands");
}

BraidWord BraidWord::parse(int n, const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t"), b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) {
      if (text.find_first_not_of(" \t") == std::string::npos) continue;
      throw std::invalid_argument("empty letter in braid word '" + text + "'");
    }
    tok = tok.substr(a, b - a + 1);
    size_t used = 0;
    int g = 0;
    try {
      g = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad letter '" + tok + "' in braid word");
    }
    if (used != tok.size()) throw std::invalid_argument("bad letter '" + tok + "' in braid word");
    out.push_back(g);
  }
  return BraidWord(n, out);
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters.rbegin(), letters.rend());
  for (int& g : out) g = -g;
  return BraidWord(n, out);
}

BraidWord BraidWord::pow(int k) const {
  BraidWord base = k < 0 ? inverse() : *this;
  BraidWord out(n, {});
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (o.n != n) throw std::invalid_argument("product of braid words on different strand counts");
  std::vector<int> out = letters;
  out.insert(out.end(), o.letters.begin(), o.letters.end());
  return BraidWord(n, out);
}

BraidWord BraidWord::shifted(int k, int new_n) const {
  std::vector<int> out;
  for (int g : letters) out.push_back(g > 0 ? g + k : g - k);
  return BraidWord(new_n, out);
}

std::string BraidWord::to_string() const {
  std::string s;
  for (size_t i = 0; i < letters.size(); ++i) s += (i ? "," : "") + std::to_string(letters[i]);
  return s;
}

BraidWord delta_word(int n, int i) {
  std::vector<int> out;
  for (int g = 1; g < i; ++g) out.push_back(g);
  return BraidWord(n, out);
}

BraidWord half_twist_word(int n) {
  if (n < 2) throw std::invalid_argument("half twist needs n >= 2");
  BraidWord out(n, {});
  for (int i = n; i >= 2; --i) out = out * delta_word(n, i);
  return out;
}

BraidWord full_twist_word(int n) { return delta_word(n, n).pow(n); }

CMatrix rhat_pair(int r) {
  const auto& f = CycField::get(r);
  CMatrix m = zero_matrix(r, static_cast<size_t>(r * r), static_cast<size_t>(r * r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      CycNum pre = f.s_pow(-(i + j));
      for (int k = 0; k <= std::min(i, r - j - 1); ++k) {
        CycNum c = pre * f.q_pow(2 * (i - k) * (j + k) + k * (k - 1) / 2) * f.qbinom(k + j, j);
        for (int m2 = 0; m2 < k; ++m2) c *= f.qnum(m2 + j + 1);
        m((j + k) * r + (i - k), i * r + j) += c;
      }
    }
  return m;
}

CMatrix rhat_pair_inverse(int r) {
  static KeyedCache<int, std::shared_ptr<const CMatrix>> cache;
  return *cache.get_or_make(r, [&] { return std::make_shared<const CMatrix>(inverse(rhat_pair(r))); });
}

namespace {

// Lift a two-slot operator to slots (i, i+1) of V_{n,l}.
CMatrix lift_pair(const CMatrix& pair, int n, int l, int r, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
  auto basis = enumerate_basis(n, l, r);
  CMatrix m = zero_matrix(r, basis->dim(), basis->dim());
  for (size_t k = 0; k < basis->dim(); ++k) {
    Composition c = basis->at(k);
    const int a = c[i - 1], b = c[i];
    const size_t col = static_cast<size_t>(a * r + b);
    for (int a2 = 0; a2 < r; ++a2) {
      int b2 = a + b - a2;
      if (b2 < 0 || b2 >= r) continue;
      const CycNum& v = pair(static_cast<size_t>(a2 * r + b2), col);
      if (v.is_zero()) continue;
      c[i - 1] = a2;
      c[i] = b2;
      m(basis->require_index(c), k) = v;
    }
  }
  return m;
}

using GenKey = std::tuple<int, int, int, int>;

}  // namespace

const CMatrix& sigma_matrix(int n, int l, int r, int i) {
  static KeyedCache<GenKey, std::shared_ptr<const CMatrix>> cache;
  return *cache.get_or_make({n, l, r, i}, [&] { return std::make_shared<const CMatrix>(lift_pair(rhat_pair(r), n, l, r, i)); });
}

const CMatrix& sigma_inverse(int n, int l, int r, int i) {
  static KeyedCache<GenKey, std::shared_ptr<const CMatrix>> cache;
  return *cache.get_or_make(
      {n, l, r, i}, [&] { return std::make_shared<const CMatrix>(lift_pair(rhat_pair_inverse(r), n, l, r, i)); });
}

GeneratorSet<CycNum> tensor_generators(int n, int l, int r) {
  GeneratorSet<CycNum> g;
  g.n = n;
  for (int i = 1; i < n; ++i) {
    g.sigma.push_back(sigma_matrix(n, l, r, i));
    g.sigma_inv.push_back(sigma_inverse(n, l, r, i));
  }
  return g;
}

CMatrix eval_word(const BraidWord& w, int n, int l, int r) {
  if (w.n != n) throw std::invalid_argument("braid word strand count differs from n");
  auto basis = enumerate_basis(n, l, r);
  CMatrix out = identity_matrix(r, basis->dim());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out = (*it > 0 ? sigma_matrix(n, l, r, *it) : sigma_inverse(n, l, r, -*it)) * out;
  return out;
}

}  // namespace rhorep
