#include "cliffq/cli/eval.hpp"

#include "cliffq/fast_product.hpp"
#include "cliffq/format.hpp"
#include "cliffq/structure.hpp"

namespace cliffq::cli {

namespace {

Rational scalar_arg(const MV& m, const std::string& fn) {
  if (m.size() > 1 || (m.size() == 1 && m.terms().begin()->first.bits != 0)) {
    throw EvalError(fn + "() expects a scalar argument");
  }
  return m.scalar_part();
}

MV eval_call(const Call& c, const Context& ctx) {
  std::vector<MV> args;
  args.reserve(c.args.size());
  for (const auto& a : c.args) args.push_back(eval(*a, ctx));
  const std::string& f = c.name;
  if (f == "rev") return reverse(args[0]);
  if (f == "invol") return involute(args[0]);
  if (f == "conj") return clifford_conjugate(args[0]);
  if (f == "even") return grades_z2(args[0]).even;
  if (f == "odd") return grades_z2(args[0]).odd;
  if (f == "grade") {
    const Rational k = scalar_arg(args[1], f);
    if (!k.is_integer() || k.sign() < 0) {
      throw EvalError("grade() needs a non-negative integer grade, got " + k.str());
    }
    if (k > Rational(static_cast<long>(ctx.algebra.dim()))) return ctx.algebra.zero();
    return args[0].grade(static_cast<unsigned>(k.numerator().get_ui()));
  }
  if (f == "sp") return ctx.algebra.product(args[0], args[1]).grade(0);
  if (f == "inv") {
    const MV r = reverse(args[0]);
    const MV norm = ctx.algebra.product(args[0], r);
    if (norm.is_zero() || norm.size() != 1 || norm.terms().begin()->first.bits != 0) {
      throw NotInvertible("inv: x*rev(x) is not a nonzero scalar");
    }
    return (Rational(1) / norm.scalar_part()) * r;
  }
  if (f == "up") {
    if (!ctx.conformal_dim) {
      throw EvalError("up() is only available in conformal presets (cga2, cga3)");
    }
    if (args.size() != *ctx.conformal_dim) {
      throw EvalError("up() takes " + std::to_string(*ctx.conformal_dim) + " coordinates in " +
                      ctx.name + ", got " + std::to_string(args.size()));
    }
    Vec x(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) x[i] = scalar_arg(args[i], f);
    return MV::vector(conformal_coords(up(x)));
  }
  throw EvalError("unknown function '" + f + "'");
}

}  // namespace

Context context_from_signature(const Signature& s, Engine engine) {
  if (s.dim() > kMaxDimension) {
    throw Error("signature dimension " + std::to_string(s.dim()) + " exceeds " +
                std::to_string(kMaxDimension));
  }
  return {"signature " + std::to_string(s.p) + "," + std::to_string(s.q) + "," +
              std::to_string(s.r),
          Algebra<Rational>(Form::from_signature(s), engine), default_labels(s.dim()), std::nullopt};
}

Context context_from_preset(const std::string& name, Engine engine) {
  Preset p = preset(name);
  return {"preset " + p.name, Algebra<Rational>(p.form, engine), p.labels, p.conformal_dim};
}

Context context_from_metric(const Form& q, const std::string& source, Engine engine) {
  return {"metric " + source, Algebra<Rational>(q, engine), default_labels(q.dim()), std::nullopt};
}

MV eval(const Expr& e, const Context& ctx) {
  struct Visitor {
    const Context& ctx;
    MV operator()(const Literal& l) const { return ctx.algebra.scalar(l.value); }
    MV operator()(const BasisWord& w) const {
      MV acc = ctx.algebra.one();
      for (std::size_t i : w.factors) acc = ctx.algebra.product(acc, ctx.algebra.basis_vector(i));
      return acc;
    }
    MV operator()(const Negate& n) const { return -eval(*n.operand, ctx); }
    MV operator()(const Binary& b) const {
      const MV lhs = eval(*b.lhs, ctx);
      const MV rhs = eval(*b.rhs, ctx);
      switch (b.op) {
        case BinaryOp::Add: return lhs + rhs;
        case BinaryOp::Sub: return lhs - rhs;
        case BinaryOp::Mul: return ctx.algebra.product(lhs, rhs);
        case BinaryOp::Wedge: return wedge_product(lhs, rhs);
        case BinaryOp::LeftContract: return ctx.algebra.left_contraction(lhs, rhs);
      }
      return lhs;
    }
    MV operator()(const Call& c) const { return eval_call(c, ctx); }
  };
  return std::visit(Visitor{ctx}, e.node);
}

MV evaluate(const std::string& source, const Context& ctx) {
  return eval(*parse(source, ctx.tokens()), ctx);
}

CayleyListing cayley_table(const Context& ctx) {
  const std::size_t n = ctx.algebra.dim();
  if (n > 8) {
    throw Error("dimension " + std::to_string(n) +
                " is too large for --table (max 8); use the library API for larger algebras");
  }
  CayleyListing out;
  const auto blades = all_blades(n);
  for (Blade b : blades) out.basis.push_back(blade_label(b, ctx.labels));
  for (Blade a : blades) {
    std::vector<MV> row;
    row.reserve(blades.size());
    for (Blade b : blades) {
      row.push_back(ctx.algebra.product(MV::blade(n, a), MV::blade(n, b)));
    }
    out.products.push_back(std::move(row));
  }
  return out;
}

}  // namespace cliffq::cli
