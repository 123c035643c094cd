// Copyright 2026 The ybpoisson Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ybp/linfty.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ybp/error.hpp"
#include "ybp/linalg.hpp"

namespace ybp {

namespace {

int parity(int d) { return ((d % 2) + 2) % 2; }
int pow_m1(int e) { return parity(e) == 0 ? 1 : -1; }

int block_sign(const std::vector<int>& sizes, const Permutation& sigma) {
  // a_k moves to slot sigma^{-1}(k)
  return block_permutation_expand(sigma.inverse(), sizes).sign();
}

}  // namespace

int sign_odd(std::span<const int> degrees, const Permutation& sigma) {
  if (static_cast<int>(degrees.size()) != sigma.size()) throw InputError("sign_odd: size mismatch");
  std::vector<int> sizes;
  for (int d : degrees) sizes.push_back(parity(d + 1));
  return block_sign(sizes, sigma);
}

int koszul_sign(std::span<const int> degrees, const Permutation& sigma) {
  if (static_cast<int>(degrees.size()) != sigma.size()) throw InputError("koszul_sign: size mismatch");
  std::vector<int> sizes;
  for (int d : degrees) sizes.push_back(parity(d));
  return block_sign(sizes, sigma);
}

std::vector<Permutation> shuffles(int i, int j) {
  if (i < 0 || j < 0) throw InputError("shuffles: negative size");
  std::vector<Permutation> out;
  for (const auto& p : all_permutations(i + j)) {
    bool ok = true;
    for (int k = 0; k + 1 < i && ok; ++k) ok = p(k) < p(k + 1);
    for (int k = i; k + 1 < i + j && ok; ++k) ok = p(k) < p(k + 1);
    if (ok) out.push_back(p);
  }
  return out;
}

int skew_sign(SkewSign s, std::span<const int> degrees, const Permutation& sigma) {
  if (s == SkewSign::kSignOdd) return sign_odd(degrees, sigma);
  return sigma.sign() * koszul_sign(degrees, sigma);
}

int jacobi_sign(JacobiSign s, int i, int j) {
  switch (s) {
    case JacobiSign::kMinusOneToI: return pow_m1(i);
    case JacobiSign::kIJMinusOne: return pow_m1(i * (j - 1));
    case JacobiSign::kPlus: return 1;
  }
  return 1;
}

std::string LinftyConvention::describe() const {
  std::string s = "skew=";
  s += skew == SkewSign::kSignOdd ? "sign_odd" : "koszul";
  s += " leibniz=";
  s += leibniz == LeibnizSign::kLiteral ? "literal" : leibniz == LeibnizSign::kShifted ? "shifted" : "operator";
  s += " jacobi=";
  switch (jacobi) {
    case JacobiSign::kMinusOneToI: s += "(-1)^i"; break;
    case JacobiSign::kIJMinusOne: s += "(-1)^(i(j-1))"; break;
    case JacobiSign::kPlus: s += "+1"; break;
  }
  s += shuffles ? " sum=shuffles" : " sum=all";
  return s;
}

std::vector<LinftyConvention> all_conventions() {
  std::vector<LinftyConvention> out;
  for (SkewSign sk : {SkewSign::kSignOdd, SkewSign::kKoszul})
    for (LeibnizSign lb : {LeibnizSign::kLiteral, LeibnizSign::kShifted, LeibnizSign::kOperator})
      for (JacobiSign js : {JacobiSign::kMinusOneToI, JacobiSign::kIJMinusOne, JacobiSign::kPlus})
        for (bool sh : {false, true}) out.push_back({sk, lb, js, sh});
  return out;
}

LinftyConvention default_convention() {
  return {SkewSign::kKoszul, LeibnizSign::kOperator, JacobiSign::kIJMinusOne, true};
}

std::string GradedBasis::name(int i) const {
  if (i >= 0 && i < static_cast<int>(names.size()) && !names[static_cast<size_t>(i)].empty())
    return names[static_cast<size_t>(i)];
  return "v" + std::to_string(i + 1);
}

int word_degree(const GradedBasis& b, const Word& w) {
  int d = 0;
  for (int x : w) {
    if (x < 0 || x >= b.size()) throw InputError("generator index out of range");
    d += b.degrees[static_cast<size_t>(x)];
  }
  return d;
}

namespace {

// Sorts a word in place by adjacent swaps; returns the Koszul sign, or 0 when
// an odd letter repeats.
template <class T, class Deg>
int koszul_sort(std::vector<T>& w, Deg deg) {
  int sign = 1;
  for (size_t i = 1; i < w.size(); ++i) {
    for (size_t j = i; j > 0 && w[j] < w[j - 1]; --j) {
      if (parity(deg(w[j])) && parity(deg(w[j - 1]))) sign = -sign;
      std::swap(w[j], w[j - 1]);
    }
  }
  for (size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1] && parity(deg(w[i]))) return 0;
  }
  return sign;
}

}  // namespace

GradedTensor supersym_normalize(const GradedBasis& b, const GradedTensor& t) {
  GradedTensor out;
  for (const auto& [w, c] : t.terms()) {
    Word s = w;
    const int sign = koszul_sort(s, [&](int x) { return word_degree(b, {x}); });
    if (sign != 0) out.add_term(s, c * sign);
  }
  return out;
}

GradedTensor supersym_multiply(const GradedBasis& b, const GradedTensor& x, const GradedTensor& y) {
  return supersym_normalize(b, tensor_product(x, y));
}

namespace {
std::string format_args(const GradedBasis& b, const std::vector<int>& args);
}  // namespace

void MultiBracketFamily::set(const std::vector<int>& args, const GradedTensor& value) {
  if (args.empty()) throw InputError("bracket: arity must be at least 1");
  for (int a : args) {
    if (a < 0 || a >= basis_.size()) throw InputError("bracket: generator index out of range");
  }
  GradedTensor v = supersym_normalize(basis_, value);
  const int want = word_degree(basis_, args) + 2 - static_cast<int>(args.size());
  for (const auto& [w, c] : v.terms()) {
    if (word_degree(basis_, w) != want)
      throw InputError("bracket " + format_args(basis_, args) + " must have degree " + std::to_string(want));
  }
  if (v.is_zero()) table_.erase(args);
  else table_[args] = v;
}

void MultiBracketFamily::set_skew(const std::vector<int>& args, const GradedTensor& value, SkewSign s) {
  std::vector<int> degs;
  for (int a : args) degs.push_back(word_degree(basis_, {a}));
  const int n = static_cast<int>(args.size());
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (args[static_cast<size_t>(p)] == args[static_cast<size_t>(q)] &&
          skew_sign(s, degs, Permutation::transposition(n, p, q)) == -1 && !supersym_normalize(basis_, value).is_zero())
        throw InputError("bracket " + format_args(basis_, args) + " must vanish by skew-symmetry");
    }
  }
  for (const auto& sigma : all_permutations(n)) {
    std::vector<int> permuted;
    for (int k = 0; k < sigma.size(); ++k) permuted.push_back(args[static_cast<size_t>(sigma(k))]);
    set(permuted, Scalar(skew_sign(s, degs, sigma)) * value);
  }
}

GradedTensor MultiBracketFamily::get(const std::vector<int>& args) const {
  const auto it = table_.find(args);
  return it == table_.end() ? GradedTensor{} : it->second;
}

std::vector<int> MultiBracketFamily::arities() const {
  std::vector<int> out;
  for (const auto& [args, v] : table_) out.push_back(static_cast<int>(args.size()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int MultiBracketFamily::max_arity() const {
  const auto a = arities();
  return a.empty() ? 0 : a.back();
}

namespace {

std::string format_args(const GradedBasis& b, const std::vector<int>& args) {
  std::string s = "{";
  for (size_t k = 0; k < args.size(); ++k) {
    if (k) s += ", ";
    s += b.name(args[k]);
  }
  return s + "}";
}

std::string format_super(const GradedBasis& b, const GradedTensor& t) {
  if (t.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : t.terms()) {
    if (!s.empty()) s += " + ";
    s += format_scalar(c);
    for (int x : w) s += "*" + b.name(x);
  }
  return s;
}

}  // namespace

CheckResult MultiBracketFamily::check_degrees() const {
  CheckResult r("bracket degrees");
  for (const auto& [args, v] : table_) {
    ++r.cases;
    const int want = word_degree(basis_, args) + 2 - static_cast<int>(args.size());
    for (const auto& [w, c] : v.terms()) {
      if (word_degree(basis_, w) != want) {
        r.fail(format_args(basis_, args) + " has a term of degree " + std::to_string(word_degree(basis_, w)) +
               ", expected " + std::to_string(want));
        break;
      }
    }
  }
  return r;
}

CheckResult MultiBracketFamily::check_skew(SkewSign s) const {
  CheckResult r("graded skew-symmetry");
  std::vector<std::vector<int>> keys;
  for (const auto& [args, v] : table_) keys.push_back(args);
  for (const auto& args : keys) {
    std::vector<int> degs;
    for (int a : args) degs.push_back(word_degree(basis_, {a}));
    const GradedTensor v = get(args);
    for (const auto& sigma : all_permutations(static_cast<int>(args.size()))) {
      ++r.cases;
      std::vector<int> permuted;
      for (int k = 0; k < sigma.size(); ++k) permuted.push_back(args[static_cast<size_t>(sigma(k))]);
      const GradedTensor want = Scalar(skew_sign(s, degs, sigma)) * v;
      if (get(permuted) != want) {
        r.fail(format_args(basis_, permuted) + " = " + format_super(basis_, get(permuted)) + ", expected " +
               format_super(basis_, want));
      }
    }
  }
  return r;
}

namespace {

// Supersymmetric polynomials in named factors of known degree. Generator k is
// the factor "g" + zero-padded k so string order matches index order.
using Mono = std::vector<std::string>;
using Poly = std::map<Mono, Scalar>;

void add_to(Poly& p, const Mono& m, const Scalar& c) {
  if (is_zero(c)) return;
  Scalar& slot = p[m];
  slot += c;
  if (is_zero(slot)) p.erase(m);
}

void add_poly(Poly& p, const Poly& q, const Scalar& s = 1) {
  for (const auto& [m, c] : q) add_to(p, m, c * s);
}

std::string gen_factor(int k) {
  std::string n = std::to_string(k);
  return "g" + std::string(n.size() < 4 ? 4 - n.size() : 0, '0') + n;
}

class Engine {
 public:
  // fam == nullptr: brackets of factors stay formal symbols.
  Engine(const MultiBracketFamily* fam, LinftyConvention conv) : fam_(fam), conv_(conv) {
    if (fam_) {
      for (int k = 0; k < fam_->basis().size(); ++k) declare(gen_factor(k), fam_->basis().degrees[static_cast<size_t>(k)]);
    }
  }

  void declare(const std::string& f, int deg) { deg_[f] = deg; }
  int degree(const std::string& f) const { return deg_.at(f); }
  int degree(const Mono& m) const {
    int d = 0;
    for (const auto& f : m) d += degree(f);
    return d;
  }
  static bool is_symbol(const std::string& f) { return !f.empty() && f[0] == '{'; }

  // Normal form of a product of factors in the given order.
  Poly monomial(Mono m, const Scalar& c = 1) const {
    const int s = koszul_sort(m, [&](const std::string& f) { return degree(f); });
    Poly p;
    if (s != 0) add_to(p, m, c * s);
    return p;
  }

  Poly mul(const Poly& x, const Poly& y) const {
    Poly out;
    for (const auto& [a, ca] : x) {
      for (const auto& [b, cb] : y) {
        Mono m = a;
        m.insert(m.end(), b.begin(), b.end());
        add_poly(out, monomial(std::move(m), ca * cb));
      }
    }
    return out;
  }

  Poly from_tensor(const GradedTensor& t) const {
    Poly p;
    for (const auto& [w, c] : t.terms()) {
      Mono m;
      for (int x : w) m.push_back(gen_factor(x));
      add_poly(p, monomial(std::move(m), c));
    }
    return p;
  }

  GradedTensor to_tensor(const Poly& p) const {
    GradedTensor t;
    for (const auto& [m, c] : p) {
      Word w;
      for (const auto& f : m) {
        if (f.empty() || f[0] != 'g') throw InputError("internal: formal factor in a concrete result");
        w.push_back(std::stoi(f.substr(1)));
      }
      t.add_term(w, c);
    }
    return supersym_normalize(fam_->basis(), t);
  }

  Poly bracket(const std::vector<Poly>& args) {
    Poly out;
    std::vector<Mono> pick(args.size());
    std::function<void(size_t, Scalar)> rec = [&](size_t k, Scalar c) {
      if (k == args.size()) {
        add_poly(out, bracket_mono(pick), c);
        return;
      }
      for (const auto& [m, cm] : args[k]) {
        pick[k] = m;
        rec(k + 1, c * cm);
      }
    };
    rec(0, 1);
    return out;
  }

  Poly bracket_mono(const std::vector<Mono>& args) {
    for (const auto& a : args) {
      if (a.empty()) return {};  // {.., 1, ..} = 0 by the Leibniz rule
    }
    for (size_t k = 0; k < args.size(); ++k) {
      if (args[k].size() < 2) continue;
      const Mono first{args[k].front()};
      const Mono rest(args[k].begin() + 1, args[k].end());
      int before = conv_.leibniz == LeibnizSign::kOperator ? 2 - static_cast<int>(args.size()) : 0;
      for (size_t i = 0; i < k; ++i) {
        before += degree(args[i]);
        if (conv_.leibniz == LeibnizSign::kShifted) before += 1;
      }
      const int d1 = degree(first);
      const int d2 = degree(rest);
      std::vector<Mono> with_rest = args;
      with_rest[k] = rest;
      std::vector<Mono> with_first = args;
      with_first[k] = first;
      Poly out = mul(monomial(first, pow_m1(d1 * before)), bracket_mono(with_rest));
      add_poly(out, mul(monomial(rest, pow_m1(d2 * (before + d1))), bracket_mono(with_first)));
      return out;
    }
    std::vector<std::string> atoms;
    for (const auto& a : args) atoms.push_back(a.front());
    return atom_bracket(atoms);
  }

  Poly atom_bracket(const std::vector<std::string>& atoms) {
    if (fam_) {
      std::vector<int> idx;
      for (const auto& f : atoms) {
        if (f.empty() || f[0] != 'g') throw InputError("internal: formal factor in a concrete bracket");
        idx.push_back(std::stoi(f.substr(1)));
      }
      return from_tensor(fam_->get(idx));
    }
    // {atoms} = skew_sign(sorted degrees, sigma) {sorted} with atoms[j] = sorted[sigma(j)]
    const int n = static_cast<int>(atoms.size());
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return atoms[static_cast<size_t>(a)] < atoms[static_cast<size_t>(b)]; });
    std::vector<std::string> sorted;
    std::vector<int> degs;
    std::vector<int> images(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) {
      sorted.push_back(atoms[static_cast<size_t>(order[static_cast<size_t>(p)])]);
      degs.push_back(degree(sorted.back()));
      images[static_cast<size_t>(order[static_cast<size_t>(p)])] = p;
    }
    for (int p = 0; p + 1 < n; ++p) {
      if (sorted[static_cast<size_t>(p)] != sorted[static_cast<size_t>(p) + 1]) continue;
      if (skew_sign(conv_.skew, degs, Permutation::transposition(n, p, p + 1)) == -1) return {};
    }
    const int s = skew_sign(conv_.skew, degs, Permutation(images));
    std::string sym = "{" + std::to_string(n) + ":";
    int d = 2 - n;
    for (int p = 0; p < n; ++p) {
      if (p) sym += ",";
      sym += sorted[static_cast<size_t>(p)];
      d += degs[static_cast<size_t>(p)];
    }
    sym += "}";
    declare(sym, d);
    return monomial({sym}, s);
  }

  // Summand (i, j) of the Jacobi sum at monomial arguments, or the whole sum
  // when only_i == 0.
  Poly jacobi(const std::vector<Mono>& args, int only_i = 0) {
    const int m = static_cast<int>(args.size());
    std::vector<int> degs;
    for (const auto& a : args) degs.push_back(degree(a));
    Poly out;
    for (int i = 1; i <= m; ++i) {
      if (only_i != 0 && i != only_i) continue;
      const int j = m + 1 - i;
      const auto perms = conv_.shuffles ? shuffles(i, j - 1) : all_permutations(m);
            for (const auto& sigma : perms) {
        const Scalar c = Scalar(1) * jacobi_sign(conv_.jacobi, i, j) * skew_sign(conv_.skew, degs, sigma);
        std::vector<Poly> inner;
        for (int k = 0; k < i; ++k) inner.push_back(monomial(args[static_cast<size_t>(sigma(k))]));
        std::vector<Poly> outer{bracket(inner)};
        if (outer.front().empty()) continue;
        for (int k = i; k < m; ++k) outer.push_back(monomial(args[static_cast<size_t>(sigma(k))]));
        add_poly(out, bracket(outer), c);
      }
    }
    return out;
  }

  Poly jacobi(const std::vector<Poly>& args) {
    Poly out;
    std::vector<Mono> pick(args.size());
    std::function<void(size_t, Scalar)> rec = [&](size_t k, Scalar c) {
      if (k == args.size()) {
        add_poly(out, jacobi(pick), c);
        return;
      }
      for (const auto& [mm, cm] : args[k]) {
        pick[k] = mm;
        rec(k + 1, c * cm);
      }
    };
    rec(0, 1);
    return out;
  }

 private:
  const MultiBracketFamily* fam_;
  LinftyConvention conv_;
  std::map<std::string, int> deg_;
};

void require_arguments(const MultiBracketFamily& fam, const std::vector<SuperElement>& args) {
  if (args.empty()) throw InputError("at least one argument is required");
  for (const auto& a : args) {
    for (const auto& [w, c] : a.terms()) word_degree(fam.basis(), w);
  }
}

std::string format_tuple(const GradedBasis& b, const std::vector<SuperElement>& args) {
  std::string s = "(";
  for (size_t k = 0; k < args.size(); ++k) {
    if (k) s += ", ";
    s += format_super(b, args[k]);
  }
  return s + ")";
}

CheckResult jacobi_over(const MultiBracketFamily& fam, const std::vector<SuperElement>& elements, int max_m,
                        const LinftyConvention& conv, const std::string& name) {
  CheckResult r(name);
  Engine e(&fam, conv);
  const int n = static_cast<int>(elements.size());
  for (int m = 1; m <= max_m; ++m) {
    std::vector<int> idx(static_cast<size_t>(m), 0);
    while (true) {
      ++r.cases;
      std::vector<Poly> args;
      for (int k : idx) args.push_back(e.from_tensor(elements[static_cast<size_t>(k)]));
      const Poly j = e.jacobi(args);
      if (!j.empty()) {
        std::vector<SuperElement> shown;
        for (int k : idx) shown.push_back(elements[static_cast<size_t>(k)]);
        r.fail("m = " + std::to_string(m) + " at " + format_tuple(fam.basis(), shown) + ": " +
               format_super(fam.basis(), e.to_tensor(j)));
      }
      int p = m - 1;
      while (p >= 0 && ++idx[static_cast<size_t>(p)] == n) idx[static_cast<size_t>(p--)] = 0;
      if (p < 0) break;
    }
  }
  return r;
}

}  // namespace

SuperElement extended_bracket(const MultiBracketFamily& fam, const std::vector<SuperElement>& args,
                              const LinftyConvention& conv) {
  require_arguments(fam, args);
  Engine e(&fam, conv);
  std::vector<Poly> ps;
  for (const auto& a : args) ps.push_back(e.from_tensor(a));
  return e.to_tensor(e.bracket(ps));
}

SuperElement linfty_residual(const MultiBracketFamily& fam, const std::vector<SuperElement>& args,
                             const LinftyConvention& conv) {
  require_arguments(fam, args);
  Engine e(&fam, conv);
  std::vector<Poly> ps;
  for (const auto& a : args) ps.push_back(e.from_tensor(a));
  return e.to_tensor(e.jacobi(ps));
}

SuperElement linfty_summand(const MultiBracketFamily& fam, const std::vector<SuperElement>& args, int i,
                            const LinftyConvention& conv) {
  require_arguments(fam, args);
  if (i < 1 || i > static_cast<int>(args.size())) throw InputError("summand index out of range");
  Engine e(&fam, conv);
  Poly out;
  std::vector<Mono> pick(args.size());
  std::vector<Poly> ps;
  for (const auto& a : args) ps.push_back(e.from_tensor(a));
  std::function<void(size_t, Scalar)> rec = [&](size_t k, Scalar c) {
    if (k == ps.size()) {
      add_poly(out, e.jacobi(pick, i), c);
      return;
    }
    for (const auto& [mm, cm] : ps[k]) {
      pick[k] = mm;
      rec(k + 1, c * cm);
    }
  };
  rec(0, 1);
  return e.to_tensor(out);
}

CheckResult check_linfty_axioms(const MultiBracketFamily& fam, int max_m, const LinftyConvention& conv) {
  std::vector<SuperElement> gens;
  for (int k = 0; k < fam.basis().size(); ++k) gens.push_back(GradedTensor::basis({k}));
  return jacobi_over(fam, gens, max_m, conv, "L-infinity relations on generators");
}

CheckResult theorem3_check(const MultiBracketFamily& fam, int max_m, const LinftyConvention& conv) {
  std::vector<SuperElement> elems;
  const int n = fam.basis().size();
  for (int k = 0; k < n; ++k) elems.push_back(GradedTensor::basis({k}));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const GradedTensor p = supersym_normalize(fam.basis(), GradedTensor::basis({a, b}));
      if (!p.is_zero()) elems.push_back(p);
    }
  }
  return jacobi_over(fam, elems, max_m, conv, "L-infinity relations on products of two generators");
}

CancellationReport theorem3_cancellation(const std::vector<int>& degrees, const LinftyConvention& conv) {
  if (degrees.size() < 2) throw InputError("theorem3_cancellation: need degrees of a', a'' and the rest");
  CancellationReport rep;
  rep.m = static_cast<int>(degrees.size()) - 1;
  rep.degrees = degrees;
  Engine e(nullptr, conv);
  std::vector<std::string> names;
  for (size_t k = 0; k < degrees.size(); ++k) {
    names.push_back("a" + std::to_string(k));
    e.declare(names.back(), degrees[k]);
  }
  const Mono a1{names[0]};
  const Mono a2{names[1]};
  std::vector<Mono> args{{names[0], names[1]}};
  for (size_t k = 2; k < names.size(); ++k) args.push_back({names[k]});

  const auto is_product_term = [&](const Mono& m) {
    return m.size() == 2 && Engine::is_symbol(m[0]) && Engine::is_symbol(m[1]);
  };
  // (monomial, unordered {i, j}) -> sum of coefficients
  std::map<std::pair<Mono, std::pair<int, int>>, Scalar> pairs;
  Poly rest_part;
  for (int i = 1; i <= rep.m; ++i) {
    const int j = rep.m + 1 - i;
    const Poly part = e.jacobi(args, i);
    for (const auto& [mono, c] : part) {
      if (is_product_term(mono)) {
        ++rep.product_terms;
        pairs[{mono, {std::min(i, j), std::max(i, j)}}] += c;
      } else {
        add_to(rest_part, mono, c);
      }
    }
  }
  for (const auto& [key, c] : pairs) {
    if (!is_zero(c)) ++rep.unmatched;
  }
  std::vector<Mono> with2 = args;
  with2[0] = a2;
  std::vector<Mono> with1 = args;
  with1[0] = a1;
  const int op = conv.leibniz == LeibnizSign::kOperator ? 3 - rep.m : 0;
  Poly derivation = e.mul(e.monomial(a1, pow_m1(degrees[0] * op)), e.jacobi(with2));
  add_poly(derivation, e.mul(e.monomial(a2), e.jacobi(with1)), pow_m1(degrees[1] * (op + degrees[0])));
  rep.derivation_part_ok = derivation == rest_part;
  return rep;
}

bool cancellation_holds(const LinftyConvention& conv, int max_m) {
  for (int m = 1; m <= max_m; ++m) {
    const int n = m + 1;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> degs;
      for (int k = 0; k < n; ++k) degs.push_back((mask >> k) & 1);
      if (!theorem3_cancellation(degs, conv).cancels()) return false;
    }
  }
  return true;
}

MultiBracketFamily homotopy_fixture(const LinftyConvention& conv) {
  const GradedBasis basis{{0, 0, 1}, {"x", "y", "z"}};
  const auto gen = [](int k) { return GradedTensor::basis({k}); };
  const int n = basis.size();

  // unknowns of {}_3: (sorted tuple, output generator)
  std::vector<std::pair<std::vector<int>, int>> unknowns;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c) {
        const std::vector<int> t{a, b, c};
        bool forced_zero = false;
        for (int p = 0; p < 2; ++p) {
          if (t[static_cast<size_t>(p)] == t[static_cast<size_t>(p) + 1] &&
              skew_sign(conv.skew, std::vector<int>{basis.degrees[static_cast<size_t>(t[static_cast<size_t>(p)])],
                                                    basis.degrees[static_cast<size_t>(t[static_cast<size_t>(p)])]},
                        Permutation::transposition(2, 0, 1)) == -1)
            forced_zero = true;
        }
        if (forced_zero) continue;
        const int d = word_degree(basis, t) - 1;
        for (int o = 0; o < n; ++o) {
          if (basis.degrees[static_cast<size_t>(o)] == d) unknowns.push_back({t, o});
        }
      }
  std::vector<std::vector<int>> triples;
  for (const auto& w : all_words(n, 3)) triples.push_back(w);

  const auto m3_vector = [&](const MultiBracketFamily& f) {
    // J_3 on every generator triple, flattened to one sparse vector
    SparseVector v;
    int offset = 0;
    for (const auto& t : triples) {
      const GradedTensor j = linfty_residual(f, {gen(t[0]), gen(t[1]), gen(t[2])}, conv);
      for (const auto& [w, c] : j.terms()) {
        int code = 0;
        for (int x : w) code = code * (n + 1) + x + 1;
        v[offset + code] += c;
      }
      offset += 1 << 12;
    }
    for (auto it = v.begin(); it != v.end();) it = is_zero(it->second) ? v.erase(it) : std::next(it);
    return v;
  };

  const int vals[3] = {0, 1, -1};
  for (int code = 0; code < 729; ++code) {
    int c = code;
    Scalar p[6];
    for (auto& x : p) {
      x = vals[c % 3];
      c /= 3;
    }
    MultiBracketFamily f(basis);
    f.set({0}, p[0] * gen(2));
    f.set({1}, p[1] * gen(2));
    f.set_skew({0, 1}, p[2] * gen(0) + p[3] * gen(1), conv.skew);
    f.set_skew({0, 2}, p[4] * gen(2), conv.skew);
    f.set_skew({1, 2}, p[5] * gen(2), conv.skew);
    if (!check_linfty_axioms(f, 2, conv).passed) continue;
    bool jacobiator = false;
    {
      Engine e(&f, conv);
      for (const auto& t : triples) {
        std::vector<Mono> args;
        for (int x : t) args.push_back({gen_factor(x)});
        if (!e.jacobi(args, 2).empty()) jacobiator = true;
      }
    }
    if (!jacobiator) continue;

    // J_3 is affine in the {}_3 unknowns: columns 0..U-1 linear part, U constant
    const int u = static_cast<int>(unknowns.size());
    const SparseVector constant = m3_vector(f);
    std::map<int, SparseVector> rows;  // equation index -> row
    const auto put = [&](const SparseVector& v, int col) {
      for (const auto& [eq, x] : v) rows[eq][col] += x;
    };
    for (int k = 0; k < u; ++k) {
      MultiBracketFamily g = f;
      g.set_skew(unknowns[static_cast<size_t>(k)].first, gen(unknowns[static_cast<size_t>(k)].second), conv.skew);
      SparseVector lin = m3_vector(g);
      axpy(lin, -1, constant);
      put(lin, k);
    }
    put(constant, u);
    RowReducer rr(u + 1);
    for (auto& [eq, row] : rows) {
      for (auto it = row.begin(); it != row.end();) it = is_zero(it->second) ? row.erase(it) : std::next(it);
      rr.add_row(row);
    }
    if (rr.rows().count(u)) continue;  // inconsistent
    MultiBracketFamily g = f;
    std::map<std::vector<int>, GradedTensor> values;
    for (const auto& [pivot, row] : rr.rows()) {
      // x_pivot + sum_free a_k x_k + a_u = 0 with free unknowns set to zero
      const auto it = row.find(u);
      if (it == row.end()) continue;
      values[unknowns[static_cast<size_t>(pivot)].first] +=
          Scalar(-it->second) * gen(unknowns[static_cast<size_t>(pivot)].second);
    }
    for (const auto& [t, v] : values) g.set_skew(t, v, conv.skew);
    if (g.max_arity() < 3) continue;
    if (!check_linfty_axioms(g, 5, conv).passed) continue;
    return g;
  }
  throw PreconditionError("no homotopy fixture found under " + conv.describe());
}

}  // namespace ybp
