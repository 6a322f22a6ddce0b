#include "seedkit/laurent.hpp"

#include <algorithm>
#include <cctype>

#include "seedkit/error.hpp"

namespace seedkit {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

int natural_compare(std::string_view a, std::string_view b) noexcept {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t i0 = i, j0 = j;
      while (i0 < a.size() && a[i0] == '0') ++i0;
      while (j0 < b.size() && b[j0] == '0') ++j0;
      std::size_t i1 = i0, j1 = j0;
      while (i1 < a.size() && is_digit(a[i1])) ++i1;
      while (j1 < b.size() && is_digit(b[j1])) ++j1;
      if (i1 - i0 != j1 - j0) return i1 - i0 < j1 - j0 ? -1 : 1;
      int c = a.substr(i0, i1 - i0).compare(b.substr(j0, j1 - j0));
      if (c != 0) return c < 0 ? -1 : 1;
      i = i1;
      j = j1;
      continue;
    }
    if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]) ? -1 : 1;
    ++i;
    ++j;
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

bool is_valid_identifier(std::string_view s) noexcept {
  if (s.empty()) return false;
  auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto tail = [&](char c) { return head(c) || is_digit(c) || c == '@' || c == '~'; };
  if (!head(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), tail);
}

std::strong_ordering operator<=>(const VarId& a, const VarId& b) {
  int c = natural_compare(a.id_, b.id_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string VarId::base() const {
  auto at = id_.rfind('@');
  if (at == std::string::npos) return id_;
  for (std::size_t i = at + 1; i < id_.size(); ++i)
    if (!is_digit(id_[i])) return id_;
  return at + 1 < id_.size() ? id_.substr(0, at) : id_;
}

unsigned VarId::generation() const {
  auto b = base();
  if (b.size() == id_.size()) return 0;
  return static_cast<unsigned>(std::stoul(id_.substr(b.size() + 1)));
}

std::string VarId::display_name() const { return base() + std::string(generation(), '\''); }

VarId VarId::next_generation() const { return VarId(base() + "@" + std::to_string(generation() + 1)); }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (auto& [v, e] : factors) {
    if (!f_.empty() && f_.back().first == v)
      f_.back().second += e;
    else
      f_.emplace_back(std::move(v), e);
    if (f_.back().second == 0) f_.pop_back();
  }
}

Monomial Monomial::var(const VarId& v, int exp) {
  Monomial m;
  if (exp != 0) m.f_.emplace_back(v, exp);
  return m;
}

int Monomial::exponent(const VarId& v) const {
  auto it = std::lower_bound(f_.begin(), f_.end(), v, [](const Factor& f, const VarId& x) { return f.first < x; });
  return it != f_.end() && it->first == v ? it->second : 0;
}

long Monomial::degree() const noexcept {
  long d = 0;
  for (const auto& f : f_) d += f.second;
  return d;
}

bool Monomial::nonnegative() const noexcept {
  return std::all_of(f_.begin(), f_.end(), [](const Factor& f) { return f.second > 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end() || b != o.f_.end()) {
    if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
      r.f_.push_back(*a++);
    } else if (a == f_.end() || b->first < a->first) {
      r.f_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) r.f_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  if (k == 0) return r;
  r.f_ = f_;
  for (auto& f : r.f_) f.second *= k;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (const auto& [v, e] : f_)
    if (o.exponent(v) < e) return false;
  for (const auto& [v, e] : o.f_)
    if (e < 0 && exponent(v) > e) return false;
  return true;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  long da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto i = fa.begin(), j = fb.begin();
  while (i != fa.end() || j != fb.end()) {
    if (j == fb.end() || (i != fa.end() && i->first < j->first)) return i->second > 0 ? 1 : -1;
    if (i == fa.end() || j->first < i->first) return j->second > 0 ? -1 : 1;
    if (i->second != j->second) return i->second < j->second ? -1 : 1;
    ++i;
    ++j;
  }
  return 0;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) t_.emplace(Monomial{}, mpz_class(c));
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) t_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::variable(const VarId& v) { return term(1, Monomial::var(v)); }

LaurentPoly LaurentPoly::term(const mpz_class& c, Monomial m) {
  LaurentPoly p;
  if (c != 0) p.t_.emplace(std::move(m), c);
  return p;
}

std::optional<mpz_class> LaurentPoly::as_constant() const {
  if (t_.empty()) return mpz_class(0);
  if (t_.size() == 1 && t_.begin()->first.is_one()) return t_.begin()->second;
  return std::nullopt;
}

std::optional<VarId> LaurentPoly::as_variable() const {
  if (t_.size() != 1) return std::nullopt;
  const auto& [m, c] = *t_.begin();
  if (c != 1 || m.factors().size() != 1 || m.factors()[0].second != 1) return std::nullopt;
  return m.factors()[0].first;
}

std::set<VarId> LaurentPoly::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : t_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

Monomial LaurentPoly::min_exponents() const {
  std::vector<Monomial::Factor> out;
  for (const auto& v : variables()) {
    int lo = t_.begin()->first.exponent(v);
    for (const auto& [m, c] : t_) lo = std::min(lo, m.exponent(v));
    if (lo != 0) out.emplace_back(v, lo);
  }
  return Monomial(std::move(out));
}

void LaurentPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.size() > b.size()) return b * a;
  LaurentPoly r;
  mpz_class prod;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      prod = ca * cb;
      r.add_term(ma * mb, prod);
    }
  return r;
}

LaurentPoly LaurentPoly::times(const Monomial& m) const {
  if (m.is_one()) return *this;
  LaurentPoly r;
  for (const auto& [mm, c] : t_) r.t_.emplace_hint(r.t_.end(), mm * m, c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool neg = c < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    mpz_class a = abs(c);
    if (m.is_one()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      bool lead = true;
      for (const auto& [v, e] : m.factors()) {
        if (!lead) out += "*";
        out += v.str();
        if (e != 1) out += "^" + std::to_string(e);
        lead = false;
      }
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- arithmetic

LaurentPoly pow(const LaurentPoly& p, unsigned k) {
  if (p.is_term()) {
    const auto& [m, c] = *p.terms().begin();
    mpz_class ck;
    mpz_pow_ui(ck.get_mpz_t(), c.get_mpz_t(), k);
    return LaurentPoly::term(ck, m.pow(static_cast<int>(k)));
  }
  LaurentPoly result(1), base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error(Errc::NotDivisible, "division by zero");
  if (p.is_zero()) return p;
  if (q.is_term()) {
    const auto& [qm, qc] = *q.terms().begin();
    Monomial inv = qm.inverse();
    LaurentPoly r;
    for (const auto& [m, c] : p.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), qc.get_mpz_t()))
        throw Error(Errc::NotDivisible, p.to_string() + " is not divisible by " + q.to_string());
      mpz_class quot;
      mpz_divexact(quot.get_mpz_t(), c.get_mpz_t(), qc.get_mpz_t());
      r += LaurentPoly::term(quot, m * inv);
    }
    return r;
  }

  // Strip monomial content; the quotient of content-free polynomials is
  // a polynomial whenever the Laurent quotient exists.
  Monomial sp = p.min_exponents(), sq = q.min_exponents();
  LaurentPoly rem = p.times(sp.inverse());
  LaurentPoly d = q.times(sq.inverse());
  const auto& [dm, dc] = *d.terms().rbegin();
  LaurentPoly quotient;
  mpz_class qc;
  while (!rem.is_zero()) {
    const auto& [lm, lc] = *rem.terms().rbegin();
    if (!dm.divides(lm) || !mpz_divisible_p(lc.get_mpz_t(), dc.get_mpz_t()))
      throw Error(Errc::NotDivisible, p.to_string() + " is not divisible by " + q.to_string());
    mpz_divexact(qc.get_mpz_t(), lc.get_mpz_t(), dc.get_mpz_t());
    Monomial tm = lm * dm.inverse();
    LaurentPoly t = LaurentPoly::term(qc, tm);
    rem -= d * t;
    quotient += t;
  }
  return quotient.times(sp * sq.inverse());
}

LaurentPoly specialize_one(const LaurentPoly& p, const VarId& v) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> f;
    for (const auto& x : m.factors())
      if (x.first != v) f.push_back(x);
    r += LaurentPoly::term(c, Monomial(std::move(f)));
  }
  return r;
}

SubstResult substitute(const LaurentPoly& p, const std::map<VarId, LaurentPoly>& images) {
  std::map<Monomial, mpq_class, GrlexLess> acc;
  for (const auto& [m, c] : p.terms()) {
    mpq_class coef(c);
    LaurentPoly factor(1);
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = images.find(v);
      if (it == images.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      const LaurentPoly& img = it->second;
      if (auto k = img.as_constant()) {
        if (*k == 0) {
          if (e < 0) return {SubstStatus::ZeroDivision, {}};
          coef = 0;
          continue;
        }
        mpz_class kp;
        mpz_pow_ui(kp.get_mpz_t(), k->get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        if (e > 0)
          coef *= kp;
        else
          coef /= kp;
        continue;
      }
      if (e < 0) {
        if (!img.is_term()) return {SubstStatus::NotInvertible, {}};
        const auto& [im, ic] = *img.terms().begin();
        mpz_class icp;
        mpz_pow_ui(icp.get_mpz_t(), ic.get_mpz_t(), static_cast<unsigned long>(-e));
        coef /= icp;
        factor = factor.times(im.pow(e));
      } else {
        factor = factor * pow(img, static_cast<unsigned>(e));
      }
    }
    if (coef == 0) continue;
    Monomial rest(std::move(kept));
    for (const auto& [fm, fc] : factor.terms()) {
      auto [slot, fresh] = acc.try_emplace(fm * rest, 0);
      slot->second += coef * fc;
    }
  }
  SubstResult out;
  for (auto& [m, q] : acc) {
    if (q == 0) continue;
    q.canonicalize();
    if (q.get_den() != 1) return {SubstStatus::NonIntegral, {}};
    out.value += LaurentPoly::term(q.get_num(), m);
  }
  return out;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  LaurentPoly run() {
    LaurentPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, "laurent: " + why + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly acc;
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    acc = product();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += product();
      else if (eat('-'))
        acc -= product();
      else
        return acc;
    }
  }

  LaurentPoly product() {
    LaurentPoly acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  LaurentPoly power() {
    LaurentPoly b = primary();
    if (!eat('^')) return b;
    skip();
    bool paren = eat('(');
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    if (start == pos_) fail("expected exponent");
    long e = std::stol(s_.substr(start, pos_ - start));
    if (paren && !eat(')')) fail("expected ')'");
    if (!neg) return seedkit::pow(b, static_cast<unsigned>(e));
    if (!b.is_term()) fail("negative power of a non-monomial");
    const auto& [m, c] = *b.terms().begin();
    if (c != 1 && c != -1) fail("negative power of a non-unit");
    return LaurentPoly::term(e % 2 ? c : mpz_class(1), m.pow(static_cast<int>(-e)));
  }

  LaurentPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (is_digit(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
      return LaurentPoly(mpz_class(s_.substr(start, pos_ - start)));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           std::string_view("+-*^()").find(s_[pos_]) == std::string_view::npos)
      ++pos_;
    std::string id = s_.substr(start, pos_ - start);
    if (!is_valid_identifier(id)) fail("bad identifier '" + id + "'");
    return LaurentPoly::variable(VarId(id));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN
    if (text.substr(i, 3) == "\xE2\x88\x92") {
      out += '-';
      i += 2;
    } else {
      out += text[i];
    }
  }
  return out;
}

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return Parser(normalize_minus(text)).run(); }

}  // namespace seedkit
