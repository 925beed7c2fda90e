// SPDX-License-Identifier: Apache-2.0
#include "killing/residual.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <unordered_map>

#include "killing/errors.hpp"
#include "killing/permutation.hpp"

namespace killing {

namespace {

using Int = mpz_class;

std::uint64_t encode(const Index& sorted, std::size_t n) {
  std::uint64_t c = 0;
  for (std::size_t v : sorted) c = c * n + v;
  return c;
}

// Homogeneous monomials of one degree in n variables, as sorted index tuples.
struct MonomialTable {
  std::size_t n = 0;
  std::size_t deg = 0;
  std::vector<Index> monos;
  std::unordered_map<std::uint64_t, int> rank;

  int rank_of_sorted(const Index& sorted) const { return rank.at(encode(sorted, n)); }
};

const MonomialTable& monomials(std::size_t n, std::size_t deg) {
  static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<MonomialTable>> cache;
  auto& slot = cache[{n, deg}];
  if (!slot) {
    slot = std::make_unique<MonomialTable>();
    slot->n = n;
    slot->deg = deg;
    slot->monos = canonical_tuples(n, deg, false);
    for (std::size_t r = 0; r < slot->monos.size(); ++r) slot->rank[encode(slot->monos[r], n)] = static_cast<int>(r);
  }
  return *slot;
}

const std::vector<int>& product_table(std::size_t n, std::size_t d1, std::size_t d2) {
  static std::map<std::array<std::size_t, 3>, std::vector<int>> cache;
  auto [it, inserted] = cache.try_emplace({n, d1, d2});
  if (inserted) {
    const auto& m1 = monomials(n, d1);
    const auto& m2 = monomials(n, d2);
    const auto& m = monomials(n, d1 + d2);
    it->second.resize(m1.monos.size() * m2.monos.size());
    Index merged(d1 + d2);
    for (std::size_t i = 0; i < m1.monos.size(); ++i)
      for (std::size_t j = 0; j < m2.monos.size(); ++j) {
        std::merge(m1.monos[i].begin(), m1.monos[i].end(), m2.monos[j].begin(), m2.monos[j].end(), merged.begin());
        it->second[i * m2.monos.size() + j] = m.rank_of_sorted(merged);
      }
  }
  return it->second;
}

struct Poly {
  std::size_t deg = 0;
  std::vector<Int> c;

  static Poly zero(std::size_t n, std::size_t deg) { return {deg, std::vector<Int>(monomials(n, deg).monos.size())}; }
  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Int& v) { return sgn(v) == 0; });
  }
};

Poly multiply(const Poly& a, const Poly& b, std::size_t n) {
  if (a.deg == 0) {
    Poly r = b;
    for (auto& v : r.c) v *= a.c[0];
    return r;
  }
  if (b.deg == 0) return multiply(b, a, n);
  const auto& table = product_table(n, a.deg, b.deg);
  Poly r = Poly::zero(n, a.deg + b.deg);
  const std::size_t nb = b.c.size();
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (sgn(a.c[i]) == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      if (sgn(b.c[j]) == 0) continue;
      mpz_addmul(r.c[static_cast<std::size_t>(table[i * nb + j])].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
  }
  return r;
}

void add_scaled(Poly& acc, const Poly& p, const Int& k) {
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (sgn(p.c[i]) != 0) mpz_addmul(acc.c[i].get_mpz_t(), p.c[i].get_mpz_t(), k.get_mpz_t());
  }
}

Int lcm_of_denominators(const Tensor& t) {
  Int l = 1;
  for (std::size_t k = 0; k < t.size(); ++k) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t[k].get_den_mpz_t());
  return l;
}

std::vector<Int> scaled_integers(const Tensor& t, const Int& scale) {
  std::vector<Int> out(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) out[k] = t[k].get_num() * (scale / t[k].get_den());
  return out;
}

Int multiset_factorial(const Index& sorted) {
  Int f = 1;
  std::size_t run = 1;
  for (std::size_t k = 1; k <= sorted.size(); ++k) {
    if (k < sorted.size() && sorted[k] == sorted[k - 1]) {
      ++run;
    } else {
      Int g;
      mpz_fac_ui(g.get_mpz_t(), run);
      f *= g;
      run = 1;
    }
  }
  return f;
}

constexpr int kX = -1;  // free slot evaluated against the polynomial variable

class Engine {
 public:
  Engine(const ContractionExpr& expr, const SlotOperator& op, const std::vector<const Tensor*>& bases,
         const Tensor& gbar);
  Residual run();

 private:
  struct Slot {
    bool label;
    int id;
  };
  struct Factor {
    const std::vector<Int>* data;
    std::array<Slot, 4> slots;
  };
  struct Term {
    Int multiplier;
    std::vector<Factor> factors;
    int num_labels = 0;
  };

  const std::vector<Int>& raised(std::size_t base, unsigned mask);
  Poly factor_poly(const Factor& f, const std::vector<int>& label_values, const std::vector<int>& assign) const;
  Poly eval_term(const Term& t, const std::vector<int>& assign) const;
  Poly eval(const std::vector<int>& assign) const;
  Index full_index(const std::vector<int>& assign_values) const;

  std::size_t n_;
  std::vector<std::string> free_;
  SlotOperator op_;
  std::vector<std::vector<Int>> base_ints_;
  std::vector<Int> base_scale_;
  std::vector<Int> gbar_int_;
  Int gbar_scale_;
  std::map<std::pair<std::size_t, unsigned>, std::vector<Int>> raised_cache_;
  std::vector<Term> terms_;
  Int common_scale_;
};

Engine::Engine(const ContractionExpr& expr, const SlotOperator& op, const std::vector<const Tensor*>& bases,
               const Tensor& gbar)
    : n_(gbar.dim()), free_(expr.free), op_(op) {
  if (gbar.order() != 2) throw InvalidArgument("contraction form must have order 2");
  for (const Tensor* b : bases) {
    if (b->order() != 4 || b->dim() != n_) throw InvalidArgument("base tensors must have order 4 and match gbar");
    base_scale_.push_back(lcm_of_denominators(*b));
    base_ints_.push_back(scaled_integers(*b, base_scale_.back()));
  }
  gbar_scale_ = lcm_of_denominators(gbar);
  gbar_int_ = scaled_integers(gbar, gbar_scale_);

  std::map<std::string, int> free_id;
  for (std::size_t k = 0; k < free_.size(); ++k) {
    if (!free_id.emplace(free_[k], static_cast<int>(k)).second) throw InvalidArgument("repeated free name " + free_[k]);
  }
  std::vector<Int> term_scale;
  for (const auto& ts : expr.terms) {
    Term term;
    std::vector<int> seen_free(free_.size(), 0);
    // Locate both ends of every contraction; the first end is raised.
    std::vector<unsigned> masks(ts.factors.size(), 0);
    std::vector<std::array<Slot, 4>> slots(ts.factors.size());
    for (std::size_t f = 0; f < ts.factors.size(); ++f) {
      for (std::size_t s = 0; s < 4; ++s) {
        const std::string& name = ts.factors[f].slots[s];
        if (auto it = free_id.find(name); it != free_id.end()) {
          slots[f][s] = {false, it->second};
          ++seen_free[static_cast<std::size_t>(it->second)];
          continue;
        }
        bool found = false;
        for (std::size_t p = 0; p < expr.pairs.size(); ++p) {
          if (name == expr.pairs[p].first) {
            slots[f][s] = {true, static_cast<int>(p)};
            masks[f] |= 1u << s;
            found = true;
          } else if (name == expr.pairs[p].second) {
            slots[f][s] = {true, static_cast<int>(p)};
            found = true;
          }
        }
        if (!found) throw InvalidArgument("index name " + name + " is neither free nor contracted");
      }
    }
    if (std::any_of(seen_free.begin(), seen_free.end(), [](int c) { return c != 1; })) {
      throw InvalidArgument("every free name must occur exactly once per term");
    }
    Int scale = 1;
    for (std::size_t p = 0; p < expr.pairs.size(); ++p) scale *= gbar_scale_;
    for (std::size_t f = 0; f < ts.factors.size(); ++f) {
      const std::size_t b = ts.factors[f].base;
      if (b >= bases.size()) throw InvalidArgument("factor refers to a missing base tensor");
      scale *= base_scale_[b];
      term.factors.push_back({&raised(b, masks[f]), slots[f]});
    }
    term.num_labels = static_cast<int>(expr.pairs.size());
    term.multiplier = ts.coeff;
    term_scale.push_back(scale);
    terms_.push_back(std::move(term));
  }
  common_scale_ = 1;
  for (const auto& s : term_scale) mpz_lcm(common_scale_.get_mpz_t(), common_scale_.get_mpz_t(), s.get_mpz_t());
  for (std::size_t t = 0; t < terms_.size(); ++t) terms_[t].multiplier *= common_scale_ / term_scale[t];

  for (const auto& name : op_.sym) {
    if (!free_id.count(name)) throw InvalidArgument("symmetrised name " + name + " is not free");
  }
  for (const auto& name : op_.anti) {
    if (!free_id.count(name)) throw InvalidArgument("antisymmetrised name " + name + " is not free");
  }
}

const std::vector<Int>& Engine::raised(std::size_t base, unsigned mask) {
  auto key = std::make_pair(base, mask);
  if (auto it = raised_cache_.find(key); it != raised_cache_.end()) return it->second;
  std::vector<Int> cur = base_ints_[base];
  const std::size_t n = n_;
  const std::size_t strides[4] = {n * n * n, n * n, n, 1};
  for (std::size_t s = 0; s < 4; ++s) {
    if (!(mask & (1u << s))) continue;
    std::vector<Int> next(cur.size());
    for (std::size_t flat = 0; flat < cur.size(); ++flat) {
      const std::size_t p = (flat / strides[s]) % n;
      const std::size_t rest = flat - p * strides[s];
      Int acc = 0;
      for (std::size_t a = 0; a < n; ++a) {
        const Int& w = gbar_int_[p * n + a];
        if (sgn(w) != 0) mpz_addmul(acc.get_mpz_t(), w.get_mpz_t(), cur[rest + a * strides[s]].get_mpz_t());
      }
      next[flat] = acc;
    }
    cur = std::move(next);
  }
  return raised_cache_.emplace(key, std::move(cur)).first->second;
}

Poly Engine::factor_poly(const Factor& f, const std::vector<int>& label_values, const std::vector<int>& assign) const {
  const std::size_t n = n_;
  std::size_t fixed_offset = 0;
  std::size_t x_strides[4];
  std::size_t k = 0;
  const std::size_t strides[4] = {n * n * n, n * n, n, 1};
  for (std::size_t s = 0; s < 4; ++s) {
    const Slot& sl = f.slots[s];
    const int v = sl.label ? label_values[static_cast<std::size_t>(sl.id)] : assign[static_cast<std::size_t>(sl.id)];
    if (v == kX) {
      x_strides[k++] = strides[s];
    } else {
      fixed_offset += static_cast<std::size_t>(v) * strides[s];
    }
  }
  Poly p = Poly::zero(n, k);
  if (k == 0) {
    p.c[0] = (*f.data)[fixed_offset];
    return p;
  }
  const auto& table = monomials(n, k);
  Index vals(k, 0);
  Index sorted(k);
  while (true) {
    std::size_t off = fixed_offset;
    for (std::size_t j = 0; j < k; ++j) off += vals[j] * x_strides[j];
    const Int& c = (*f.data)[off];
    if (sgn(c) != 0) {
      sorted = vals;
      std::sort(sorted.begin(), sorted.end());
      p.c[static_cast<std::size_t>(table.rank_of_sorted(sorted))] += c;
    }
    std::size_t j = k;
    while (j > 0) {
      --j;
      if (++vals[j] < n) break;
      vals[j] = 0;
      if (j == 0) return p;
    }
  }
}

Poly Engine::eval_term(const Term& t, const std::vector<int>& assign) const {
  std::size_t deg = 0;
  for (int v : assign) deg += v == kX ? 1 : 0;
  Poly acc = Poly::zero(n_, deg);
  std::vector<int> labels(static_cast<std::size_t>(t.num_labels), 0);
  while (true) {
    Poly prod = Poly::zero(n_, 0);
    prod.c[0] = 1;
    bool zero = false;
    for (const auto& f : t.factors) {
      Poly fp = factor_poly(f, labels, assign);
      if (fp.is_zero()) {
        zero = true;
        break;
      }
      prod = multiply(prod, fp, n_);
    }
    if (!zero) add_scaled(acc, prod, t.multiplier);
    std::size_t j = labels.size();
    bool done = true;
    while (j > 0) {
      --j;
      if (++labels[j] < static_cast<int>(n_)) {
        done = false;
        break;
      }
      labels[j] = 0;
    }
    if (done) break;
  }
  return acc;
}

Poly Engine::eval(const std::vector<int>& assign) const {
  std::size_t deg = 0;
  for (int v : assign) deg += v == kX ? 1 : 0;
  Poly acc = Poly::zero(n_, deg);
  for (const auto& t : terms_) {
    Poly p = eval_term(t, assign);
    for (std::size_t i = 0; i < p.c.size(); ++i) acc.c[i] += p.c[i];
  }
  return acc;
}

Residual Engine::run() {
  const std::size_t nf = free_.size();
  auto id_of = [&](const std::string& name) {
    return static_cast<int>(std::find(free_.begin(), free_.end(), name) - free_.begin());
  };
  std::vector<int> anti, sym;
  for (const auto& s : op_.anti) anti.push_back(id_of(s));
  for (const auto& s : op_.sym) sym.push_back(id_of(s));
  int overlap = -1;
  for (int a : anti) {
    if (std::find(sym.begin(), sym.end(), a) != sym.end()) {
      if (overlap >= 0) throw InvalidArgument("symmetric and antisymmetric groups share more than one name");
      overlap = a;
    }
  }
  std::vector<int> plain;
  for (int k = 0; k < static_cast<int>(nf); ++k) {
    if (std::find(anti.begin(), anti.end(), k) == anti.end() && std::find(sym.begin(), sym.end(), k) == sym.end()) {
      plain.push_back(k);
    }
  }
  const bool sym_first_hook = overlap >= 0 && op_.order == OperatorOrder::SymFirst;
  // Output groups: strictly increasing on out_strict, non-decreasing on out_sym.
  std::vector<int> out_strict, out_sym;
  for (int a : anti) {
    if (sym_first_hook || a != overlap) out_strict.push_back(a);
  }
  for (int s : sym) {
    if (!sym_first_hook || s != overlap) out_sym.push_back(s);
  }
  const std::size_t k = anti.size();
  const std::size_t jo = overlap >= 0 ? static_cast<std::size_t>(std::find(anti.begin(), anti.end(), overlap) - anti.begin()) : k;
  const auto perms = all_permutations(k);

  Residual res;
  res.slots = free_;
  std::vector<Index> plains;
  {
    for_each_index(n_, plain.size(), [&](const Index& idx) { plains.push_back(idx); });
  }
  const auto strict_tuples = canonical_tuples(n_, out_strict.size(), true);
  const auto sym_tuples = canonical_tuples(n_, out_sym.size(), false);

  auto emit = [&](const Index& pv, const Index& sv, const Index& mv, const Int& value) {
    ++res.canonical_count;
    if (sgn(value) == 0) return;
    Index full(nf);
    for (std::size_t j = 0; j < plain.size(); ++j) full[static_cast<std::size_t>(plain[j])] = pv[j];
    for (std::size_t j = 0; j < out_strict.size(); ++j) full[static_cast<std::size_t>(out_strict[j])] = sv[j];
    for (std::size_t j = 0; j < out_sym.size(); ++j) full[static_cast<std::size_t>(out_sym[j])] = mv[j];
    Scalar v(value, common_scale_);
    v.canonicalize();
    res.nonzero.emplace_back(std::move(full), std::move(v));
  };

  std::vector<int> assign(nf, kX);
  for (const auto& pv : plains) {
    for (std::size_t j = 0; j < plain.size(); ++j) assign[static_cast<std::size_t>(plain[j])] = static_cast<int>(pv[j]);
    for (const auto& sv : strict_tuples) {
      if (sym_first_hook) {
        // Anti(Sym T): the overlap slot's value moves with the permutation.
        std::vector<Int> acc(sym_tuples.size());
        for (const auto& pi : perms) {
          for (std::size_t j = 0; j < k; ++j) {
            const int target = anti[j];
            const std::size_t src = static_cast<std::size_t>(pi(static_cast<int>(j + 1)) - 1);
            assign[static_cast<std::size_t>(target)] = j == jo ? kX : static_cast<int>(sv[src]);
          }
          const std::size_t ov = sv[static_cast<std::size_t>(pi(static_cast<int>(jo + 1)) - 1)];
          for (int s : sym) assign[static_cast<std::size_t>(s)] = kX;
          const Poly p = eval(assign);
          const auto& table = monomials(n_, p.deg);
          Index beta;
          for (std::size_t m = 0; m < sym_tuples.size(); ++m) {
            beta = sym_tuples[m];
            beta.insert(std::upper_bound(beta.begin(), beta.end(), ov), ov);
            const Int& c = p.c[static_cast<std::size_t>(table.rank_of_sorted(beta))];
            if (sgn(c) == 0) continue;
            Int term = c * multiset_factorial(beta);
            if (pi.sign() < 0) {
              acc[m] -= term;
            } else {
              acc[m] += term;
            }
          }
        }
        for (std::size_t m = 0; m < sym_tuples.size(); ++m) emit(pv, sv, sym_tuples[m], acc[m]);
      } else {
        // Sym(Anti T), or disjoint groups: antisymmetrise first, read the
        // symmetrised components off the polynomial.
        std::vector<int> w(k);
        std::size_t next = 0;
        for (std::size_t j = 0; j < k; ++j) w[j] = j == jo ? kX : static_cast<int>(sv[next++]);
        Poly q;
        bool first = true;
        for (const auto& pi : perms) {
          for (int s : sym) assign[static_cast<std::size_t>(s)] = kX;
          for (std::size_t j = 0; j < k; ++j) {
            assign[static_cast<std::size_t>(anti[j])] = w[static_cast<std::size_t>(pi(static_cast<int>(j + 1)) - 1)];
          }
          Poly p = eval(assign);
          if (first) {
            q = Poly::zero(n_, p.deg);
            first = false;
          }
          add_scaled(q, p, Int(pi.sign()));
        }
        const auto& table = monomials(n_, q.deg);
        for (const auto& mv : sym_tuples) {
          const Int& c = q.c[static_cast<std::size_t>(table.rank_of_sorted(mv))];
          emit(pv, sv, mv, sgn(c) == 0 ? Int(0) : Int(c * multiset_factorial(mv)));
        }
      }
    }
  }
  return res;
}

}  // namespace

std::vector<Index> canonical_tuples(std::size_t n, std::size_t k, bool strict) {
  std::vector<Index> out;
  Index cur(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t lo) {
    if (pos == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = lo; v < n; ++v) {
      cur[pos] = v;
      rec(pos + 1, strict ? v + 1 : v);
    }
  };
  rec(0, 0);
  return out;
}

Residual evaluate_residual(const ContractionExpr& expr, const SlotOperator& op, const std::vector<const Tensor*>& bases,
                           const Tensor& gbar) {
  Engine engine(expr, op, bases, gbar);
  return engine.run();
}

}  // namespace killing
