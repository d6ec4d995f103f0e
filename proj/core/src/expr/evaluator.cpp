#include "transcert/expr/evaluator.hpp"

#include <algorithm>

#include "transcert/elementary.hpp"
#include "transcert/errors.hpp"
#include "transcert/expr/parser.hpp"

namespace transcert::expr {

namespace {

// Small non-negative integer literal such as the "2" in pi^2.
std::optional<unsigned long> integer_literal(const Expr& e) {
  const auto* lit = std::get_if<NumberLiteral>(&e.node);
  if (!lit || lit->text.empty() || lit->text.size() > 6) return std::nullopt;
  if (!std::all_of(lit->text.begin(), lit->text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  return std::stoul(lit->text);
}

CInterval power(const Expr& base_expr, const Expr& exponent_expr, long w);

CInterval eval_at(const Expr& e, long w) {
  return std::visit(
      [w](const auto& n) -> CInterval {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberLiteral>) {
          return CInterval(RInterval::from_decimal(n.text, w));
        } else if constexpr (std::is_same_v<T, ConstantRef>) {
          switch (n.constant) {
            case Constant::Pi:
              return CInterval(const_pi(w));
            case Constant::E:
              return CInterval(const_e(w));
            case Constant::I:
              break;
          }
          return CInterval::imaginary_unit(w);
        } else if constexpr (std::is_same_v<T, Negate>) {
          return -eval_at(*n.operand, w);
        } else if constexpr (std::is_same_v<T, Binary>) {
          if (n.op == BinaryOp::Pow) return power(*n.lhs, *n.rhs, w);
          const CInterval a = eval_at(*n.lhs, w);
          const CInterval b = eval_at(*n.rhs, w);
          switch (n.op) {
            case BinaryOp::Add:
              return add(a, b, w);
            case BinaryOp::Sub:
              return sub(a, b, w);
            case BinaryOp::Mul:
              return mul(a, b, w);
            default:
              return div(a, b, w);
          }
        } else if constexpr (std::is_same_v<T, Call>) {
          const CInterval z = eval_at(*n.argument, w);
          switch (n.function) {
            case Function::Exp:
              return cexp(z);
            case Function::Ln:
              return cln(z);
            case Function::Sin:
              return csin(z);
            case Function::Cos:
              return ccos(z);
            case Function::Sqrt:
              if (z.is_real() && z.re().hi().sign() <= 0)
                return {RInterval::from_int(0, w), sqrt(neg(z.re()))};  // sqrt(-x) = i sqrt(x)
              return csqrt(z);
            case Function::Abs:
              return CInterval(cabs(z));
            case Function::Re:
              return CInterval(z.re());
            case Function::Im:
              return CInterval(z.im());
            case Function::Conj:
              break;
          }
          return conj(z);
        } else {
          throw Error("a comparison has no value; certify it instead");
        }
      },
      e.node);
}

CInterval power(const Expr& base_expr, const Expr& exponent_expr, long w) {
  const CInterval base = eval_at(base_expr, w);
  if (auto n = integer_literal(exponent_expr)) return pow(base, *n);
  const CInterval exponent = eval_at(exponent_expr, w);
  if (base.is_real() && exponent.is_real() && base.re().is_positive())
    return CInterval(pow(base.re(), exponent.re()).with_precision(w));
  return cpow(base, exponent);
}

void require_real(const CInterval& z, long precision, const char* side) {
  const BigFloat limit = BigFloat::power_of_two(-precision / 2);
  if (!z.im().contains_zero() || z.im().width() > limit)
    throw NonRealComparand(std::string("NonRealComparand: ") + side + " has imaginary enclosure " +
                           z.im().to_string(12));
}

}  // namespace

CInterval eval(const Expr& e, long precision) {
  if (precision < 24) throw Error("precision must be at least 24 bits");
  return eval_at(e, precision + kGuardBits).rounded(precision);
}

CInterval eval(std::string_view source, long precision) { return eval(parse(source), precision); }

Verdict certify(const Expr& claim, const CertifyOptions& options) {
  const auto* cmp = std::get_if<Comparison>(&claim.node);
  if (!cmp) throw Error("certify needs a top-level comparison (<, > or ~=)");
  if (options.start_precision < 24) throw Error("precision must be at least 24 bits");

  const long p_max = std::max(options.start_precision, options.max_precision);
  RInterval tolerance;
  if (options.tolerance) {
    tolerance = *options.tolerance;
  } else if (cmp->tolerance) {
    tolerance = RInterval::from_decimal(*cmp->tolerance, 64);
  } else {
    tolerance = RInterval::point(BigFloat::power_of_two(-options.start_precision / 2), 64);
  }

  for (long p = options.start_precision;; p = std::min(2 * p, p_max)) {
    Verdict v;
    v.lhs = eval(*cmp->lhs, p);
    v.rhs = eval(*cmp->rhs, p);
    v.precision_used = p;
    require_real(*v.lhs, p, "left-hand side");
    require_real(*v.rhs, p, "right-hand side");
    const RInterval& l = v.lhs->re();
    const RInterval& r = v.rhs->re();

    std::optional<VerdictKind> decided;
    switch (cmp->op) {
      case CompareOp::Less:
        if (l.hi() < r.lo()) decided = VerdictKind::CertifiedTrue;
        else if (l.lo() >= r.hi()) decided = VerdictKind::CertifiedFalse;
        break;
      case CompareOp::Greater:
        if (l.lo() > r.hi()) decided = VerdictKind::CertifiedTrue;
        else if (l.hi() <= r.lo()) decided = VerdictKind::CertifiedFalse;
        break;
      case CompareOp::Approx: {
        v.within = tolerance.lo();
        const RInterval diff = sub(l, r, p);
        if (neg(tolerance.lo()) < diff.lo() && diff.hi() < tolerance.lo()) decided = VerdictKind::CertifiedTrue;
        else if (diff.mig() >= tolerance.hi()) decided = VerdictKind::CertifiedFalse;
        break;
      }
    }
    if (decided) {
      v.kind = *decided;
      return v;
    }
    if (p >= p_max) {
      v.kind = VerdictKind::Undecided;
      return v;
    }
  }
}

Verdict certify(std::string_view source, const CertifyOptions& options) { return certify(parse(source), options); }

}  // namespace transcert::expr
