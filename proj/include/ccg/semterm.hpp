#pragma once

// Applicative semantic terms with generalized composition combinators.
// Comp(n, f, g) denotes B^n f g, satisfying  B^n f g z1..zn = f (g z1..zn).
//
// Equivalence is decided by saturating a term with fresh variables and
// exhaustively reducing. Two reductions apply anywhere in a term:
//
//   (B^1 f g) x  ->  f (g x)
//   (B^n f g) x  ->  B^(n-1) f (g x)            n >= 2
//
// plus a right-nesting canonicalization for composition combinators that end
// up in argument position (and so never meet enough applications):
//
//   B^n (B^m a b) c  ->  B^(m+n-1) a (B^n b c)
//
// The system is terminating and confluent, so reduced forms are canonical
// and structural equality decides equivalence.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccg/errors.hpp"
#include "ccg/rules.hpp"

namespace ccg {

class SemTerm {
public:
  enum class Kind { constant, variable, app, comp };

  static SemTerm constant(std::string name) {
    auto rep = std::make_shared<Rep>();
    rep->kind = Kind::constant;
    rep->name = std::move(name);
    return SemTerm(std::move(rep));
  }

  static SemTerm var(std::size_t index) {
    auto rep = std::make_shared<Rep>();
    rep->kind = Kind::variable;
    rep->index = index;
    return SemTerm(std::move(rep));
  }

  static SemTerm app(SemTerm fun, SemTerm arg) {
    auto rep = std::make_shared<Rep>();
    rep->kind = Kind::app;
    rep->fun = std::move(fun.rep_);
    rep->arg = std::move(arg.rep_);
    return SemTerm(std::move(rep));
  }

  static SemTerm comp(std::size_t degree, SemTerm f, SemTerm g) {
    if (degree < 1)
      throw DerivationError("composition combinator degree must be >= 1");
    auto rep = std::make_shared<Rep>();
    rep->kind = Kind::comp;
    rep->index = degree;
    rep->fun = std::move(f.rep_);
    rep->arg = std::move(g.rep_);
    return SemTerm(std::move(rep));
  }

  Kind kind() const { return rep_->kind; }
  const std::string& name() const { return rep_->name; }
  std::size_t var_index() const { return rep_->index; }
  std::size_t degree() const { return rep_->index; }
  SemTerm fun() const { return SemTerm(rep_->fun); }
  SemTerm arg() const { return SemTerm(rep_->arg); }

  friend bool operator==(const SemTerm& a, const SemTerm& b) {
    return equal(a.rep_.get(), b.rep_.get());
  }
  friend bool operator!=(const SemTerm& a, const SemTerm& b) {
    return !(a == b);
  }

private:
  struct Rep {
    Kind kind = Kind::constant;
    std::string name;
    std::size_t index = 0;  // variable index or composition degree
    std::shared_ptr<const Rep> fun;
    std::shared_ptr<const Rep> arg;
  };

  explicit SemTerm(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  static bool equal(const Rep* a, const Rep* b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
      case Kind::constant:
        return a->name == b->name;
      case Kind::variable:
        return a->index == b->index;
      case Kind::comp:
        if (a->index != b->index) return false;
        [[fallthrough]];
      case Kind::app:
        return equal(a->fun.get(), b->fun.get()) &&
               equal(a->arg.get(), b->arg.get());
    }
    return false;
  }

  std::shared_ptr<const Rep> rep_;
};

// Prefix notation for traces: (john (loves mary)), (B^1 did fred).
inline std::string format_semterm(const SemTerm& t) {
  switch (t.kind()) {
    case SemTerm::Kind::constant:
      return t.name();
    case SemTerm::Kind::variable:
      return "v" + std::to_string(t.var_index());
    case SemTerm::Kind::app:
      return "(" + format_semterm(t.fun()) + " " + format_semterm(t.arg()) +
             ")";
    case SemTerm::Kind::comp:
      return "(B^" + std::to_string(t.degree()) + " " +
             format_semterm(t.fun()) + " " + format_semterm(t.arg()) + ")";
  }
  return {};
}

// The semantics of one rule application. The functor argument is the
// semantics of the X/Y (or X\Y) constituent regardless of linear position;
// direction plays no role in the term.
inline SemTerm sem_of_combination(const RuleUse& rule, SemTerm functor_sem,
                                  SemTerm argument_sem) {
  if (rule.degree == 0)
    return SemTerm::app(std::move(functor_sem), std::move(argument_sem));
  return SemTerm::comp(rule.degree, std::move(functor_sem),
                       std::move(argument_sem));
}

// Total composition weight: sum of Comp degrees over the whole term.
inline std::size_t composition_weight(const SemTerm& t) {
  switch (t.kind()) {
    case SemTerm::Kind::constant:
    case SemTerm::Kind::variable:
      return 0;
    case SemTerm::Kind::app:
      return composition_weight(t.fun()) + composition_weight(t.arg());
    case SemTerm::Kind::comp:
      return t.degree() + composition_weight(t.fun()) +
             composition_weight(t.arg());
  }
  return 0;
}

namespace detail {

// One leftmost-outermost reduction step, or nullopt at normal form.
inline std::optional<SemTerm> sem_step(const SemTerm& t) {
  switch (t.kind()) {
    case SemTerm::Kind::constant:
    case SemTerm::Kind::variable:
      return std::nullopt;
    case SemTerm::Kind::app: {
      const SemTerm f = t.fun();
      if (f.kind() == SemTerm::Kind::comp) {
        const SemTerm inner = SemTerm::app(f.arg(), t.arg());
        if (f.degree() == 1) return SemTerm::app(f.fun(), inner);
        return SemTerm::comp(f.degree() - 1, f.fun(), inner);
      }
      if (auto r = sem_step(f)) return SemTerm::app(*r, t.arg());
      if (auto r = sem_step(t.arg())) return SemTerm::app(f, *r);
      return std::nullopt;
    }
    case SemTerm::Kind::comp: {
      const SemTerm f = t.fun();
      if (f.kind() == SemTerm::Kind::comp) {
        const std::size_t m = f.degree();
        const std::size_t n = t.degree();
        return SemTerm::comp(m + n - 1, f.fun(),
                             SemTerm::comp(n, f.arg(), t.arg()));
      }
      if (auto r = sem_step(f)) return SemTerm::comp(t.degree(), *r, t.arg());
      if (auto r = sem_step(t.arg()))
        return SemTerm::comp(t.degree(), f, *r);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

struct SaturateTrace {
  SemTerm result;
  std::vector<std::size_t> weights;  // composition weight before each state
  std::size_t steps() const { return weights.empty() ? 0 : weights.size() - 1; }
};

// Applies t to `arity` fresh variables v1..v_arity and reduces to normal
// form. Throws SemArityError when the arity cannot discharge the term's own
// pending compositions (the reduced term is still headed by a combinator).
inline SaturateTrace saturate_reduce_trace(const SemTerm& t,
                                           std::size_t arity) {
  SemTerm cur = t;
  for (std::size_t i = 1; i <= arity; ++i)
    cur = SemTerm::app(cur, SemTerm::var(i));
  SaturateTrace trace{cur, {composition_weight(cur)}};
  while (auto next = detail::sem_step(trace.result)) {
    trace.result = *next;
    trace.weights.push_back(composition_weight(trace.result));
  }
  if (trace.result.kind() == SemTerm::Kind::comp)
    throw SemArityError("arity " + std::to_string(arity) +
                        " cannot saturate term " + format_semterm(t));
  return trace;
}

inline SemTerm saturate_reduce(const SemTerm& t, std::size_t arity) {
  return saturate_reduce_trace(t, arity).result;
}

// True iff both terms reduce to the same canonical form under the same fresh
// variable sequence. Both must inhabit the same category (same arity).
inline bool sem_equiv(const SemTerm& t1, const SemTerm& t2,
                      std::size_t arity) {
  return saturate_reduce(t1, arity) == saturate_reduce(t2, arity);
}

}  // namespace ccg
