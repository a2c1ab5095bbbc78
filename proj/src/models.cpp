#include "cliffq/models.hpp"

#include "cliffq/errors.hpp"

namespace cliffq {

namespace {

void require_dim(const MV& a, std::size_t n, const char* what) {
  if (a.dim() != n) {
    throw Error(std::string(what) + " needs a " + std::to_string(n) +
                "-dimensional multivector, got dimension " + std::to_string(a.dim()));
  }
}

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

}  // namespace

Form complex_Q() { return Form::diagonal({Rational(-1)}); }

ComplexPair to_complex(const MV& a) {
  require_dim(a, 1, "to_complex");
  return {a.coefficient(Blade::scalar()), a.coefficient(Blade::vector(0))};
}

MV from_complex(const ComplexPair& z) {
  MV m(1);
  m.add_term(Blade::scalar(), z.re);
  m.add_term(Blade::vector(0), z.im);
  return m;
}

Form quaternion_Q() { return Form::diagonal({Rational(-1), Rational(-1)}); }

QuaternionQuad to_quaternion(const MV& a) {
  require_dim(a, 2, "to_quaternion");
  return {a.coefficient(Blade::scalar()), a.coefficient(Blade::of({1})),
          a.coefficient(Blade::of({2})), a.coefficient(Blade::of({1, 2}))};
}

MV from_quaternion(const QuaternionQuad& q) {
  MV m(2);
  m.add_term(Blade::scalar(), q.r);
  m.add_term(Blade::of({1}), q.i);
  m.add_term(Blade::of({2}), q.j);
  m.add_term(Blade::of({1, 2}), q.k);
  return m;
}

ConformalParts conformal_parts(const ConformalVector& x) {
  return {x.direction, x.c_n0, x.c_ni};
}

ConformalVector of_v(const Vec& x) { return {x, Rational(0), Rational(0)}; }
ConformalVector n0(std::size_t n) { return {Vec(n), Rational(1), Rational(0)}; }
ConformalVector ni(std::size_t n) { return {Vec(n), Rational(0), Rational(1)}; }

Rational norm_sq(const Vec& x) {
  Rational acc;
  for (const auto& c : x.coords()) acc += c * c;
  return acc;
}

ConformalVector up(const Vec& x) {
  return n0(x.dim()) + of_v(x) + (Rational(1, 2) * norm_sq(x)) * ni(x.dim());
}

Vec conformal_coords(const ConformalVector& x) {
  std::vector<Rational> c = x.direction.coords();
  c.push_back(x.c_n0);
  c.push_back(x.c_ni);
  return Vec(std::move(c));
}

Form cga_Q(std::size_t n) {
  const std::size_t d = n + 2;
  std::vector<Rational> m(d * d);
  for (std::size_t i = 0; i < n; ++i) m[i * d + i] = Rational(1);
  m[n * d + (n + 1)] = Rational(-1);
  m[(n + 1) * d + n] = Rational(-1);
  return Form(d, std::move(m));
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"complex", "quaternion", "cga2", "cga3",
                                              "pga3",    "euclid2",    "euclid3"};
  return names;
}

Preset preset(std::string_view name) {
  auto euclid = [](std::size_t n) { return Form::from_signature({n, 0, 0}); };
  auto conformal = [&](std::size_t n) {
    auto labels = numbered(n);
    labels.push_back("n0");
    labels.push_back("ni");
    return Preset{std::string(name), cga_Q(n), labels, n};
  };
  if (name == "complex") return {"complex", complex_Q(), numbered(1), std::nullopt};
  if (name == "quaternion") return {"quaternion", quaternion_Q(), numbered(2), std::nullopt};
  if (name == "cga2") return conformal(2);
  if (name == "cga3") return conformal(3);
  if (name == "pga3") return {"pga3", Form::from_signature({3, 0, 1}), numbered(4), std::nullopt};
  if (name == "euclid2") return {"euclid2", euclid(2), numbered(2), std::nullopt};
  if (name == "euclid3") return {"euclid3", euclid(3), numbered(3), std::nullopt};
  std::string valid;
  for (const auto& n : preset_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw Error("unknown preset '" + std::string(name) + "' (valid presets: " + valid + ")");
}

}  // namespace cliffq
